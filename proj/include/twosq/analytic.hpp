#pragma once

#include <cstdint>

namespace twosq {

// Real-axis generating-function factors used by the integral forms and the Taylor oracle.

// (1 - 2^-s + 2^-2s) L(s+1, chi_4)^-1/2 (1 - 2^-(s+1))^-1/2 P(s+1)^-1/2, s > -1/2
double M_fn(double s);
// sqrt((s-1) zeta(s)) sqrt(L(s, chi_4)) (1 - 2^-s)^-1/2 P(s)^-1/2, s > 1/2
double G_fn(double s);

enum class FVariant { gamma, inverse_s };
// zeta(s-1) M(s-1) sqrt((s-1) zeta(s)) times Gamma(s) or 1/s, s > 1/2
double F_fn(double s, FVariant v = FVariant::gamma);
// (1 - q^-(s-1))/(s-1), log q at s = 1
double A_q(double s, std::uint64_t q);

// Richardson-extrapolated central difference; throws AccuracyError if levels disagree
struct Derivative {
    double value;
    double error;
};
template <class Fn>
Derivative richardson_derivative(Fn&& f, double x, int order, double h0, int levels);

}  // namespace twosq

#include "twosq/analytic_impl.hpp"
