#include <omp.h>

#include <cmath>

#include "twosq/constants.hpp"
#include "twosq/errors.hpp"
#include "twosq/primes.hpp"
#include "twosq/singular.hpp"

namespace twosq {

double E_H(double H) {
    if (!(H > 0)) throw ArgumentError("H must be > 0");
    return 1 / std::expm1(1 / H);
}

double E_qv(std::uint64_t q, std::int64_t v, double H) {
    if (!(H > 0)) throw ArgumentError("H must be > 0");
    const std::int64_t Q = static_cast<std::int64_t>(q);
    v = ((v % Q) + Q) % Q;
    double first = v == 0 ? double(q) : double(v);
    return std::exp(-first / H) / -std::expm1(-double(q) / H);
}

double f_vq(std::int64_t v, std::uint64_t q) {
    const std::int64_t Q = static_cast<std::int64_t>(q);
    v = ((v % Q) + Q) % Q;
    if (v == 0) return -0.5;
    return double(Q - 2 * v) / double(2 * Q);
}

ExpSums exp_sums(std::uint64_t q, std::int64_t v, double H) { return {E_H(H), E_qv(q, v, H), f_vq(v, q)}; }

std::uint64_t weighted_sum_cutoff(double H, int k, double rel_tol) {
    if (!(H > 0) || !(rel_tol > 0)) throw ArgumentError("weighted sum needs H > 0 and rel_tol > 0");
    double base = std::log(3 * H / rel_tol);
    double t = std::max(base, 1.0);
    for (int i = 0; i < 8; ++i) t = base + k * std::log(std::max(t, 1.0));
    return static_cast<std::uint64_t>(std::ceil(H * t));
}

namespace {

constexpr std::uint64_t kBlock = std::uint64_t(1) << 18;

struct Plan {
    std::uint64_t T;
    std::uint64_t q;
    std::uint64_t v;
    double H, inv2K2, shift;
    int k;
    std::vector<std::uint32_t> primes;  // odd primes up to sqrt(T)
};

Plan make_plan(const WeightedSumSpec& s) {
    if (s.q == 0) throw ArgumentError("q must be >= 1");
    if (s.k < 0) throw ArgumentError("k must be >= 0");
    Plan p;
    p.T = weighted_sum_cutoff(s.H, s.k, s.rel_tol);
    if (p.T > kWeightedSumBudget)
        throw ResourceError("weighted sum needs h up to " + std::to_string(p.T) + ", above budget " +
                            std::to_string(kWeightedSumBudget));
    p.q = s.q;
    const std::int64_t Q = static_cast<std::int64_t>(s.q);
    p.v = static_cast<std::uint64_t>(((s.v % Q) + Q) % Q);
    p.H = s.H;
    double K = fundamentals().K;
    p.inv2K2 = 1 / (2 * K * K);
    p.shift = s.centered ? 1.0 : 0.0;
    p.k = s.k;
    for (auto pr : primes_up_to(static_cast<std::uint32_t>(isqrt(p.T) + 1)))
        if (pr > 2) p.primes.push_back(pr);
    return p;
}

// sum over h in [lo, hi] of the requested terms
long double block_sum(const Plan& P, std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& rem,
                      std::vector<double>& mult) {
    const std::uint64_t n = hi - lo + 1;
    rem.resize(n);
    mult.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t h = lo + i;
        int b = __builtin_ctzll(h);
        rem[i] = h >> b;
        mult[i] = b == 0 ? 1.0 : 2.0 - 3.0 / double(std::uint64_t(1) << b);
    }
    for (auto p32 : P.primes) {
        const std::uint64_t p = p32;
        std::uint64_t first = (lo + p - 1) / p * p;
        const bool three = p % 4 == 3;
        const double inv = 1.0 / double(p);
        for (std::uint64_t m = first; m <= hi; m += p) {
            std::uint64_t i = m - lo;
            int v = 0;
            while (rem[i] % p == 0) rem[i] /= p, ++v;
            if (three) mult[i] *= (1 - std::pow(inv, v + 1)) / (1 - inv);
        }
    }
    long double acc = 0;
    std::uint64_t start = lo;
    if (P.q > 1) start = lo + (P.v + P.q - lo % P.q) % P.q;
    for (std::uint64_t h = start; h <= hi; h += P.q) {
        std::uint64_t i = h - lo;
        double m = mult[i];
        if (rem[i] > 1 && rem[i] % 4 == 3) m *= 1 + 1.0 / double(rem[i]);
        double term = (m * P.inv2K2 - P.shift) * std::exp(-double(h) / P.H);
        if (P.k) term *= std::pow(double(h), P.k);
        acc += term;
    }
    return acc;
}

}  // namespace

double weighted_sum(const WeightedSumSpec& s) {
    Plan P = make_plan(s);
    const std::int64_t nblocks = static_cast<std::int64_t>((P.T + kBlock - 1) / kBlock);
    std::vector<long double> partial(nblocks, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> rem;
        std::vector<double> mult;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < nblocks; ++b) {
            std::uint64_t lo = 1 + std::uint64_t(b) * kBlock;
            std::uint64_t hi = std::min(P.T, lo + kBlock - 1);
            partial[b] = block_sum(P, lo, hi, rem, mult);
        }
    }
    long double total = 0;
    for (auto x : partial) total += x;
    return static_cast<double>(total);
}

double weighted_sum_serial(const WeightedSumSpec& s) {
    Plan P = make_plan(s);
    std::vector<std::uint64_t> rem;
    std::vector<double> mult;
    long double total = 0;
    for (std::uint64_t lo = 1; lo <= P.T; lo += kBlock)
        total += block_sum(P, lo, std::min(P.T, lo + kBlock - 1), rem, mult);
    return static_cast<double>(total);
}

double weighted_sum_S(std::uint64_t q, std::int64_t v, double H, double rel_tol) {
    WeightedSumSpec s;
    s.q = q;
    s.v = v;
    s.H = H;
    s.rel_tol = rel_tol;
    return weighted_sum(s);
}

double weighted_sum_S0(std::uint64_t q, std::int64_t v, double H, double rel_tol) {
    return weighted_sum_S(q, v, H, rel_tol) - E_qv(q, v, H);
}

double weighted_sum_total(double H, double rel_tol) {
    WeightedSumSpec s;
    s.H = H;
    s.rel_tol = rel_tol;
    return weighted_sum(s);
}

}  // namespace twosq
