#pragma once

#include "twosq/dual.hpp"

namespace twosq {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

// zeta(s), s > 0, s != 1; with regularized = true returns (s-1) zeta(s), finite at 1
double zeta_real(double s, bool regularized = false);

// digamma for x > 0
double digamma(double x);

namespace detail {

// Euler-Maclaurin with N direct terms and K Bernoulli corrections; any real s != 1.
// shifted = true drops the alpha-independent pole -1/(s-1) (finite at s = 1);
// only meaningful inside character sums with zero total weight.
template <class T>
T hurwitz_em(T s, double alpha, bool shifted, int N = 16, int K = 12);

// (s-1) zeta(s), any real s
template <class T>
T zeta_regularized(T s, int N = 16, int K = 12);

// zeta(s) for any real s != 1 (used internally near s = 0)
template <class T>
T zeta_any(T s, int N = 16, int K = 12);

}  // namespace detail

}  // namespace twosq
