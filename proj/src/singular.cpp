#include "twosq/singular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "twosq/constants.hpp"
#include "twosq/errors.hpp"
#include "twosq/primes.hpp"

namespace twosq {

TupleConfig::TupleConfig(std::vector<std::int64_t> d) {
    std::sort(d.begin(), d.end());
    if (std::adjacent_find(d.begin(), d.end()) != d.end()) throw ArgumentError("tuple offsets must be distinct");
    if (!d.empty()) {
        std::int64_t m = d.front();
        for (auto& x : d) x -= m;
    }
    offsets = std::move(d);
}

boost::rational<std::int64_t> W2(std::int64_t h) {
    if (h <= 0) throw ArgumentError("W2: h must be >= 1");
    if (h & 1) return 1;
    int v = __builtin_ctzll(static_cast<std::uint64_t>(h));
    return boost::rational<std::int64_t>(2) - boost::rational<std::int64_t>(3, std::int64_t(1) << v);
}

double ck_singular_series(std::int64_t h, double K) {
    auto w = W2(h);
    double prod = double(w.numerator()) / double(w.denominator());
    std::int64_t m = h;
    while (m % 2 == 0) m /= 2;
    for (std::int64_t p = 3; p * p <= m; p += 2) {
        if (m % p) continue;
        int v = 0;
        while (m % p == 0) m /= p, ++v;
        if (p % 4 == 3) prod *= (1 - std::pow(double(p), -v - 1)) / (1 - 1.0 / p);
    }
    if (m > 1 && m % 4 == 3) prod *= 1 + 1.0 / m;
    return prod / (2 * K * K);
}

namespace {

Rational closed_form_ratio(std::uint64_t p, std::size_t k) {
    // (1 + 1/p)^(k-1) (1 - (k-1)/p)
    Rational r(BigInt(p + 1 - k), BigInt(p));
    for (std::size_t i = 1; i < k; ++i) r *= Rational(BigInt(p + 1), BigInt(p));
    return r;
}

bool divides_some_difference(std::uint64_t p, const TupleConfig& D) {
    for (std::size_t i = 0; i < D.k(); ++i)
        for (std::size_t j = i + 1; j < D.k(); ++j)
            if ((D.offsets[j] - D.offsets[i]) % static_cast<std::int64_t>(p) == 0) return true;
    return false;
}

struct LocalRatio {
    Rational ratio;
    int alpha;
};

LocalRatio local_ratio(std::uint64_t p, const TupleConfig& D) {
    auto sd = stabilized_density(p, D);
    auto s0 = stabilized_density(p, TupleConfig({0}));
    Rational denom = 1;
    for (std::size_t i = 0; i < D.k(); ++i) denom *= s0.value;
    return {sd.value / denom, std::max(sd.alpha, s0.alpha)};
}

// checks the closed-form factor against the exact density at the first prime past the cutoff
void validate_tail(std::uint64_t cutoff, const TupleConfig& D) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::size_t>, bool> done;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (done.count({cutoff, D.k()})) return;
    }
    std::uint64_t p = cutoff + 1;
    while (!(p % 4 == 3 && is_prime(p) && !divides_some_difference(p, D))) ++p;
    if (local_ratio(p, D).ratio != closed_form_ratio(p, D.k()))
        throw AccuracyError("closed-form tail factor disagrees with the exact local density at p=" +
                            std::to_string(p));
    std::lock_guard<std::mutex> lock(mu);
    done[{cutoff, D.k()}] = true;
}

}  // namespace

SingularValue singular_series_general(const TupleConfig& D, std::uint64_t prime_cutoff) {
    const std::size_t k = D.k();
    if (k <= 1) return {1.0, SingularMethod::local_density_product, prime_cutoff, 0.0, 0};
    if (k > 4 || D.spread() > 64)
        throw ArgumentError("singular_series_general supports k <= 4 and spread <= 64");
    if (prime_cutoff < 3) throw ArgumentError("prime_cutoff must be >= 3");

    static std::mutex mu;
    static std::map<std::pair<TupleConfig, std::uint64_t>, SingularValue> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({D, prime_cutoff}); it != cache.end()) return it->second;
    }
    validate_tail(prime_cutoff, D);

    const std::uint64_t explicit_bound = std::max<std::uint64_t>(prime_cutoff, D.spread());
    double log_prod = 0;
    int max_alpha = 0;
    bool zero = false;
    auto exact = [&](std::uint64_t p) {
        auto lr = local_ratio(p, D);
        max_alpha = std::max(max_alpha, lr.alpha);
        if (lr.ratio == 0)
            zero = true;
        else
            log_prod += std::log(static_cast<double>(lr.ratio));
    };
    exact(2);
    for (auto p : primes_3mod4(kTailPrimeLimit)) {
        if (p <= explicit_bound && (p <= prime_cutoff || divides_some_difference(p, D))) {
            exact(p);
        } else {
            double x = 1.0 / p;
            log_prod += double(k - 1) * std::log1p(x) + std::log1p(-double(k - 1) * x);
        }
    }
    // sum_{p > P, p = 3 mod 4} p^-2 ~ E1(log P)/2
    double T = -0.5 * std::expint(-std::log(double(kTailPrimeLimit)));
    double tail = 0.5 * double(k * (k - 1)) * T;
    log_prod -= tail;
    SingularValue v{zero ? 0.0 : std::exp(log_prod), SingularMethod::local_density_product, prime_cutoff, tail,
                    max_alpha};
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(D, prime_cutoff), v);
    return v;
}

double s0(const TupleConfig& D, std::uint64_t prime_cutoff) {
    const std::size_t k = D.k();
    if (k > 4) throw ArgumentError("s0 supports k <= 4");
    double sum = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<std::int64_t> sub;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) sub.push_back(D.offsets[i]);
        int sign = ((k - sub.size()) % 2) ? -1 : 1;
        sum += sign * singular_series_general(TupleConfig(sub), prime_cutoff).value;
    }
    return sum;
}

double ms_sum(std::int64_t h, int k) {
    if (h < 1 || k < 1) throw ArgumentError("ms_sum needs h >= 1, k >= 1");
    if (k > 4) throw ArgumentError("ms_sum supports k <= 4");
    double binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * double(h - i) / double(i + 1);
    if (binom > 1e4) throw ResourceError("ms_sum: binomial(h, k) exceeds 1e4");
    if (k > h) return 0;
    std::vector<std::int64_t> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    double sum = 0;
    while (true) {
        sum += s0(TupleConfig(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == h - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return sum;
}

}  // namespace twosq
