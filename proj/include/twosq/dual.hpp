#pragma once

#include <cmath>

namespace twosq {

// first-order forward-mode value: v + d*eps
struct Dual {
    double v = 0;
    double d = 0;
    constexpr Dual() = default;
    constexpr Dual(double v_, double d_ = 0) : v(v_), d(d_) {}
    static constexpr Dual variable(double x) { return {x, 1.0}; }

    Dual& operator+=(Dual o) { v += o.v; d += o.d; return *this; }
    Dual& operator-=(Dual o) { v -= o.v; d -= o.d; return *this; }
    Dual& operator*=(Dual o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
    Dual& operator/=(Dual o) { d = (d * o.v - v * o.d) / (o.v * o.v); v /= o.v; return *this; }
};

inline Dual operator+(Dual a, Dual b) { return a += b; }
inline Dual operator-(Dual a, Dual b) { return a -= b; }
inline Dual operator*(Dual a, Dual b) { return a *= b; }
inline Dual operator/(Dual a, Dual b) { return a /= b; }
inline Dual operator-(Dual a) { return {-a.v, -a.d}; }

// keep double calls inside twosq from converting to Dual
using std::exp;
using std::log;
using std::sqrt;
using std::log1p;
using std::expm1;

inline Dual exp(Dual a) { double e = std::exp(a.v); return {e, e * a.d}; }
inline Dual log(Dual a) { return {std::log(a.v), a.d / a.v}; }
inline Dual sqrt(Dual a) { double r = std::sqrt(a.v); return {r, a.d / (2 * r)}; }
inline Dual log1p(Dual a) { return {std::log1p(a.v), a.d / (1 + a.v)}; }
inline Dual expm1(Dual a) { return {std::expm1(a.v), std::exp(a.v) * a.d}; }

inline double value_of(double x) { return x; }
inline double value_of(Dual x) { return x.v; }

// (e^u - 1)/u, finite at u = 0
inline double phi1(double u) {
    if (std::abs(u) < 1e-5) return 1 + u / 2 + u * u / 6;
    return std::expm1(u) / u;
}
inline Dual phi1(Dual u) {
    double x = u.v, dphi;
    if (std::abs(x) < 1e-5)
        dphi = 0.5 + x / 3 + x * x / 8;
    else
        dphi = (std::exp(x) * (x - 1) + 1) / (x * x);
    return {phi1(x), dphi * u.d};
}

}  // namespace twosq
