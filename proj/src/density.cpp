#include <omp.h>

#include <map>
#include <mutex>
#include <tuple>

#include "twosq/errors.hpp"
#include "twosq/primes.hpp"
#include "twosq/singular.hpp"

namespace twosq {

namespace {

constexpr std::uint64_t kDensityBudget = 10'000'000;

void check_prime(std::uint64_t p) {
    if (!is_prime(p) || p % 4 == 1) throw ArgumentError("local density needs a prime p = 2 or p = 3 mod 4");
}

std::uint64_t checked_power(std::uint64_t p, int alpha) {
    if (alpha < 2 || alpha % 2) throw ArgumentError("local density level alpha must be even and >= 2");
    std::uint64_t n = 1;
    for (int i = 0; i < alpha; ++i) {
        if (n > kDensityBudget / p)
            throw ResourceError("p^alpha exceeds the local-density budget of 1e7");
        n *= p;
    }
    return n;
}

std::vector<std::uint8_t> membership(std::uint64_t p, int alpha, std::uint64_t N) {
    std::vector<std::uint8_t> in(N, 0);
    for (std::uint64_t n = 1; n < N; ++n) {
        if (p == 2) {
            int b = __builtin_ctzll(n);
            in[n] = b < alpha - 1 && ((n >> b) & 3) == 1;
        } else {
            int v = 0;
            std::uint64_t m = n;
            while (m % p == 0) m /= p, ++v;
            in[n] = (v % 2) == 0;
        }
    }
    return in;
}

template <bool Parallel>
Rational brute_density(std::uint64_t p, const TupleConfig& D, int alpha) {
    check_prime(p);
    const std::uint64_t N = checked_power(p, alpha);
    auto in = membership(p, alpha, N);
    std::vector<std::uint64_t> off;
    for (auto d : D.offsets) off.push_back(static_cast<std::uint64_t>(d) % N);
    const std::int64_t n = static_cast<std::int64_t>(N);
    std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static) if (Parallel)
    for (std::int64_t a = 0; a < n; ++a) {
        bool ok = true;
        for (auto d : off) {
            std::uint64_t r = static_cast<std::uint64_t>(a) + d;
            if (r >= N) r -= N;
            if (!in[r]) {
                ok = false;
                break;
            }
        }
        count += ok;
    }
    return Rational(BigInt(count), BigInt(N));
}

BigInt big_pow(std::uint64_t p, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

// number of a mod p^alpha with every a + d nonzero mod p^alpha and v_p(a + d) = e mod 2
class DigitCounter {
public:
    explicit DigitCounter(std::uint64_t p) : p_(p) {}

    BigInt count(std::vector<std::int64_t> D, int alpha, int e) {
        if (D.empty()) return big_pow(p_, alpha);
        if (alpha == 0) return 0;
        normalize(D, alpha);
        auto key = std::make_tuple(D, alpha, e);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt total = 0;
        const std::int64_t p = static_cast<std::int64_t>(p_);
        for (std::int64_t c = 0; c < p; ++c) {
            std::vector<std::int64_t> Z;
            for (auto d : D)
                if ((c + d) % p == 0) Z.push_back((c + d) / p);
            bool units = Z.size() < D.size();
            if (units && e != 0) continue;
            if (Z.empty())
                total += big_pow(p_, alpha - 1);
            else
                total += count(Z, alpha - 1, 1 - e);
        }
        memo_.emplace(key, total);
        return total;
    }

private:
    void normalize(std::vector<std::int64_t>& D, int alpha) {
        // reduce mod p^alpha when it is small enough to matter
        std::uint64_t N = 1;
        bool small = true;
        for (int i = 0; i < alpha && small; ++i) {
            if (N > (std::uint64_t(1) << 40) / p_) small = false;
            N *= p_;
        }
        if (small)
            for (auto& d : D) d = static_cast<std::int64_t>(static_cast<std::uint64_t>(d) % N);
        std::sort(D.begin(), D.end());
        D.erase(std::unique(D.begin(), D.end()), D.end());
        std::int64_t m = D.front();
        for (auto& d : D) d -= m;
    }

    std::uint64_t p_;
    std::map<std::tuple<std::vector<std::int64_t>, int, int>, BigInt> memo_;
};

}  // namespace

Rational local_density(std::uint64_t p, const TupleConfig& D, int alpha) {
    return brute_density<true>(p, D, alpha);
}

Rational local_density_serial(std::uint64_t p, const TupleConfig& D, int alpha) {
    return brute_density<false>(p, D, alpha);
}

Rational local_density_recursive(std::uint64_t p, const TupleConfig& D, int alpha) {
    check_prime(p);
    if (p == 2) throw ArgumentError("local_density_recursive handles odd p only");
    if (alpha < 1) throw ArgumentError("alpha must be >= 1");
    DigitCounter dc(p);
    return Rational(dc.count(D.offsets, alpha, 0), big_pow(p, alpha));
}

StabilizedDensity stabilized_density(std::uint64_t p, const TupleConfig& D, int max_alpha) {
    check_prime(p);
    auto delta = [&](int a) {
        return p == 2 ? local_density_serial(p, D, a) : local_density_recursive(p, D, a);
    };
    const Rational ratio(BigInt(p * p - 1));
    Rational d0 = delta(2), d1 = delta(4);
    Rational prev = d1 + (d1 - d0) / ratio;
    for (int a = 6; a <= max_alpha; a += 2) {
        Rational d2;
        try {
            d2 = delta(a);
        } catch (const ResourceError&) {
            throw AccuracyError("local density at p=" + std::to_string(p) +
                                " not stabilized within budget; partial value " +
                                std::to_string(static_cast<double>(prev)));
        }
        Rational cur = d2 + (d2 - d1) / ratio;
        if (cur == prev) return {cur, a};
        prev = cur;
        d1 = d2;
    }
    throw AccuracyError("local density at p=" + std::to_string(p) + " not stabilized by alpha=" +
                        std::to_string(max_alpha) + "; partial value " +
                        std::to_string(static_cast<double>(prev)));
}

}  // namespace twosq
