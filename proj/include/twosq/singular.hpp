#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

namespace twosq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct TupleConfig {
    std::vector<std::int64_t> offsets;  // sorted, distinct, min 0

    TupleConfig() = default;
    explicit TupleConfig(std::vector<std::int64_t> d);  // validates and normalizes
    std::size_t k() const { return offsets.size(); }
    std::int64_t spread() const { return offsets.empty() ? 0 : offsets.back(); }
    auto operator<=>(const TupleConfig&) const = default;
};

enum class SingularMethod { connors_keating, local_density_product };

struct SingularValue {
    double value;
    SingularMethod method;
    std::uint64_t prime_cutoff;
    double tail_bound;  // relative size of the analytic tail estimate beyond the explicit product
    int max_alpha;      // largest alpha needed for stabilization over all primes used
};

boost::rational<std::int64_t> W2(std::int64_t h);
double ck_singular_series(std::int64_t h, double K);

// exact count over a in [0, p^alpha) of {(a + d) mod p^alpha in S_{p,alpha} for all d}, / p^alpha
Rational local_density(std::uint64_t p, const TupleConfig& D, int alpha);
Rational local_density_serial(std::uint64_t p, const TupleConfig& D, int alpha);
// same quantity by p-adic digit recursion (odd p), no size budget
Rational local_density_recursive(std::uint64_t p, const TupleConfig& D, int alpha);

struct StabilizedDensity {
    Rational value;  // limit as alpha -> infinity
    int alpha;       // level at which the extrapolated value repeated exactly
};
// delta_alpha approaches its limit geometrically with ratio p^-2 per two levels;
// the extrapolant delta_{a+2} + (delta_{a+2} - delta_a)/(p^2 - 1) is exact once it repeats
StabilizedDensity stabilized_density(std::uint64_t p, const TupleConfig& D, int max_alpha = 40);

inline constexpr std::uint64_t kDefaultPrimeCutoff = 50;
inline constexpr std::uint32_t kTailPrimeLimit = 2'000'000;

SingularValue singular_series_general(const TupleConfig& D,
                                      std::uint64_t prime_cutoff = kDefaultPrimeCutoff);
double s0(const TupleConfig& D, std::uint64_t prime_cutoff = kDefaultPrimeCutoff);
double ms_sum(std::int64_t h, int k);

struct ExpSums {
    double E, E_qv, f;
};
ExpSums exp_sums(std::uint64_t q, std::int64_t v, double H);
double E_H(double H);
double E_qv(std::uint64_t q, std::int64_t v, double H);
double f_vq(std::int64_t v, std::uint64_t q);

// sum over h >= 1 with h = v mod q (all h when q == 1) of (S({0,h}) - shift) h^k e^{-h/H}
struct WeightedSumSpec {
    std::uint64_t q = 1;
    std::int64_t v = 0;
    double H = 1;
    int k = 0;
    bool centered = false;  // subtract 1 from the singular series (S_0 variants)
    double rel_tol = 1e-10;
};
double weighted_sum(const WeightedSumSpec& s);
double weighted_sum_serial(const WeightedSumSpec& s);
std::uint64_t weighted_sum_cutoff(double H, int k, double rel_tol);

inline constexpr std::uint64_t kWeightedSumBudget = 600'000'000;

// convenience forms
double weighted_sum_S(std::uint64_t q, std::int64_t v, double H, double rel_tol = 1e-10);
double weighted_sum_S0(std::uint64_t q, std::int64_t v, double H, double rel_tol = 1e-10);
double weighted_sum_total(double H, double rel_tol = 1e-10);

}  // namespace twosq
