#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twosq/analytic.hpp"

namespace twosq {

enum class Substitution { sqrt_endpoint };

struct QuadratureConfig {
    // unset: 0 for integrals of F and G, 0.02 where F' appears
    std::optional<double> epsilon;
    int nodes = 40;  // per piece; checked against 2 * nodes
    Substitution substitution = Substitution::sqrt_endpoint;
    int derivative_steps = 4;  // Richardson levels for F'
    double derivative_h0 = 1e-3;
    double split = 0.75;  // sigma = 1 - u^2 above, sigma = 1/2 + eps + t^4 below
    double rel_target = 1e-8;
    bool parallel = true;
};

struct IntegralResult {
    double value;
    double excess;          // value minus the leading H/q, H^k (0 for the count)
    double doubling_delta;  // |I(2n) - I(n)| / |I(2n)|
    double epsilon;
    int nodes;
};

IntegralResult integral_count(double x, const QuadratureConfig& cfg = {});
IntegralResult integral_S(std::uint64_t q, std::int64_t v, double H, const QuadratureConfig& cfg = {});
IntegralResult integral_ktuple_average(int k, double H, const QuadratureConfig& cfg = {});

// Gauss-Legendre rule on [-1, 1]
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss_rule(int n);

}  // namespace twosq
