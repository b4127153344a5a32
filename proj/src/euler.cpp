#include "twosq/euler.hpp"

#include <cmath>

#include "twosq/errors.hpp"
#include "twosq/primes.hpp"

namespace twosq {

namespace {

Character trivial() { return principal_character(1); }

}  // namespace

template <class T>
T log_euler_3mod4_real(T t, const Character& psi, int J, std::uint32_t B) {
    if (!(value_of(t) > 1)) throw ArgumentError("log_euler_3mod4: t must exceed 1");
    if (!psi.is_real()) throw ArgumentError("log_euler_3mod4_real: character not real");
    T acc = 0.0;
    double w = 1.0;
    Character c = psi;
    T tt = t;
    for (int j = 0; j < J; ++j) {
        Character cx = product(c, chi4());
        T l1 = dirichlet_L_real(tt, cx);
        T l0 = dirichlet_L_real(tt, c);
        T two = T(1.0) - exp(-tt * std::log(2.0)) * c(2).real();
        if (!(value_of(l1) > 0 && value_of(l0) > 0 && value_of(two) > 0))
            throw AccuracyError("log_euler_3mod4: non-positive factor");
        acc += (log(l1) - log(l0) - log(two)) * (0.5 * w);
        w *= 0.5;
        c = square(c);
        if (c.principal) c = principal_character(c.modulus);
        tt = tt * 2.0;
    }
    T tail = 0.0;
    for (auto p : primes_3mod4(B)) {
        double cp = c(p).real();
        if (cp == 0) continue;
        tail += log1p(-exp(-tt * std::log(double(p))) * cp);
    }
    return acc + tail * w;
}

template double log_euler_3mod4_real<double>(double, const Character&, int, std::uint32_t);
template Dual log_euler_3mod4_real<Dual>(Dual, const Character&, int, std::uint32_t);

cplx log_euler_3mod4(double t, const Character& psi, int J, std::uint32_t B) {
    if (!(t > 1)) throw ArgumentError("log_euler_3mod4: t must exceed 1");
    cplx acc = 0.0;
    double w = 1.0;
    Character c = psi;
    for (int j = 0; j < J; ++j) {
        Character cx = product(c, chi4());
        cplx l1 = dirichlet_L(t, cx);
        cplx l0 = dirichlet_L(t, c);
        cplx two = 1.0 - c(2) * std::pow(2.0, -t);
        acc += 0.5 * w * (std::log(l1) - std::log(l0) - std::log(two));
        w *= 0.5;
        c = square(c);
        t *= 2;
    }
    cplx tail = 0.0;
    for (auto p : primes_3mod4(B)) {
        cplx cp = c(p);
        if (cp == cplx(0)) continue;
        tail += std::log(1.0 - cp * std::pow(double(p), -t));
    }
    return acc + w * tail;
}

template <class T>
T log_P(T s, int J, std::uint32_t B) {
    return log_euler_3mod4_real(s * 2.0, trivial(), J, B);
}

template double log_P<double>(double, int, std::uint32_t);
template Dual log_P<Dual>(Dual, int, std::uint32_t);

}  // namespace twosq
