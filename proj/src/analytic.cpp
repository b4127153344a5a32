#include "twosq/analytic.hpp"

#include <cmath>

#include "twosq/characters.hpp"
#include "twosq/errors.hpp"
#include "twosq/euler.hpp"
#include "twosq/special.hpp"

namespace twosq {

namespace {

const Character& chi4_ref() {
    static const Character c = chi4();
    return c;
}

double inv_sqrt_positive(double v, const char* what) {
    if (!(v > 0)) throw AccuracyError(std::string("non-positive factor under square root: ") + what);
    return 1 / std::sqrt(v);
}

}  // namespace

double M_fn(double s) {
    if (!(s > -0.5)) throw ArgumentError("M: s must exceed -1/2");
    double two = 1 - std::exp2(-s) + std::exp2(-2 * s);
    double L = dirichlet_L_real(s + 1, chi4_ref());
    return two * inv_sqrt_positive(L, "L(s+1, chi_4)") *
           inv_sqrt_positive(1 - std::exp2(-(s + 1)), "1 - 2^-(s+1)") * std::exp(-0.5 * log_P(s + 1));
}

double G_fn(double s) {
    if (!(s > 0.5)) throw ArgumentError("G: s must exceed 1/2");
    double reg = detail::zeta_regularized(s);
    double L = dirichlet_L_real(s, chi4_ref());
    if (!(reg > 0 && L > 0)) throw AccuracyError("G: non-positive factor under square root");
    return std::sqrt(reg * L) * inv_sqrt_positive(1 - std::exp2(-s), "1 - 2^-s") *
           std::exp(-0.5 * log_P(s));
}

double F_fn(double s, FVariant v) {
    if (!(s > 0.5)) throw ArgumentError("F: s must exceed 1/2");
    double reg = detail::zeta_regularized(s);
    if (!(reg > 0)) throw AccuracyError("F: (s-1) zeta(s) not positive");
    double base = detail::zeta_any(s - 1) * M_fn(s - 1) * std::sqrt(reg);
    return base * (v == FVariant::gamma ? std::tgamma(s) : 1 / s);
}

double A_q(double s, std::uint64_t q) {
    double lq = std::log(double(q));
    double u = s - 1;
    if (u == 0) return lq;
    return -std::expm1(-u * lq) / u;
}

}  // namespace twosq
