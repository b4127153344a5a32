#include <cmath>

#include "twosq/analytic.hpp"
#include "twosq/constants.hpp"
#include "twosq/errors.hpp"
#include "twosq/progressions.hpp"
#include "twosq/special.hpp"

namespace twosq {

namespace {

// Gamma(1+s) zeta(s) sqrt(s zeta(1+s)) M(s): s^{3/2} D(s) Gamma(s) up to the 2K^2 normalization
double g_fn(double s) {
    return std::tgamma(1 + s) * detail::zeta_any(s) * std::sqrt(detail::zeta_regularized(1 + s)) * M_fn(s);
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

std::vector<HigherCoeff> higher_coeffs_numeric(std::uint64_t q, int j_max) {
    require_prime_1mod4(q);
    if (j_max < 1 || j_max > 4) throw ArgumentError("higher_coeffs_numeric: j_max must be in [1, 4]");
    const double K = fundamentals().K;
    const double lq = std::log(double(q)), phi = double(q - 1);
    auto g = [](double s) { return g_fn(s); };
    auto h = [&](double s) { return A_q(s + 1, q) * g_fn(s); };
    auto u = [&](double s) { return std::exp(-s * lq) * g_fn(s); };
    auto coeff = [](auto&& f, int n, double& err) {
        if (n == 0) return f(0.0);
        auto d = richardson_derivative(f, 0.0, n, 0.1, 5);
        double fac = factorial(n);
        err = std::max(err, d.error / fac);
        return d.value / fac;
    };
    std::vector<HigherCoeff> out;
    for (int j = 1; j <= j_max; ++j) {
        double err = 0;
        double norm = 2 * K * K * std::tgamma(1.5 - j);
        double gj = coeff(g, j, err), hj = coeff(h, j - 1, err), uj = coeff(u, j, err);
        HigherCoeff c;
        c.j = j;
        c.c = gj / norm;
        double cchi0 = hj / norm;
        c.c1 = cchi0 / phi;
        c.c0 = c.c - cchi0;
        c.c0_alt = uj / norm;
        c.err = err / std::abs(norm);
        if (c.err > 1e-6)
            throw AccuracyError("higher_coeffs_numeric: Richardson estimate " + std::to_string(c.err) +
                                " exceeds 1e-6 at j=" + std::to_string(j));
        out.push_back(c);
    }
    return out;
}

}  // namespace twosq
