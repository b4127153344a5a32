#include "twosq/characters.hpp"

#include <cmath>
#include <numeric>

#include "twosq/errors.hpp"
#include "twosq/primes.hpp"
#include "twosq/special.hpp"

namespace twosq {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        f.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) f.push_back(n);
    return f;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

bool is_unit_one(const Character& c) {
    for (std::uint64_t n = 0; n < c.modulus; ++n)
        if (std::gcd(n, c.modulus) == 1 && std::abs(c.values[n] - cplx(1)) > 1e-12) return false;
    return true;
}

void require_nonprincipal(const Character& chi, const char* who) {
    if (chi.principal) throw ArgumentError(std::string(who) + ": principal character");
}

}  // namespace

bool Character::is_real(double tol) const {
    for (auto v : values)
        if (std::abs(v.imag()) > tol) return false;
    return true;
}

std::uint64_t primitive_root(std::uint64_t q) {
    if (!is_prime(q)) throw ArgumentError("primitive_root: modulus must be prime");
    if (q == 2) return 1;
    auto f = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool ok = true;
        for (auto p : f)
            if (powmod(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw AccuracyError("primitive_root: none found");
}

CharacterTable character_table(std::uint64_t q) {
    if (!is_prime(q)) throw ArgumentError("character_table: q = " + std::to_string(q) + " is not prime");
    CharacterTable t;
    t.q = q;
    t.generator = primitive_root(q);
    const std::uint64_t phi = q - 1;
    t.index.assign(q, 0);
    std::uint64_t g = 1;
    for (std::uint64_t m = 0; m < phi; ++m) {
        t.index[g] = m;
        g = g * t.generator % q;
    }
    for (std::uint64_t k = 0; k < phi; ++k) {
        Character c;
        c.modulus = q;
        c.values.assign(q, 0.0);
        for (std::uint64_t a = 1; a < q; ++a) {
            std::uint64_t e = (k * t.index[a]) % phi;
            double th = 2 * kPi * double(e) / double(phi);
            c.values[a] = {std::cos(th), std::sin(th)};
            // exact quarter turns
            if (4 * e % phi == 0) {
                std::uint64_t quarter = 4 * e / phi;
                static const cplx unit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
                c.values[a] = unit[quarter];
            }
        }
        c.principal = (k == 0);
        c.parity = (q == 2 || k % 2 == 0) ? 1 : -1;
        c.label = "chi_" + std::to_string(k);
        t.chars.push_back(std::move(c));
    }
    return t;
}

Character chi4() {
    Character c;
    c.modulus = 4;
    c.values = {0.0, 1.0, 0.0, -1.0};
    c.parity = -1;
    c.label = "chi_4";
    return c;
}

Character principal_character(std::uint64_t m) {
    Character c;
    c.modulus = m;
    c.values.assign(m, 0.0);
    for (std::uint64_t n = 0; n < m; ++n)
        if (std::gcd(n, m) == 1) c.values[n] = 1.0;
    c.principal = true;
    c.label = "chi_0 mod " + std::to_string(m);
    return c;
}

Character product(const Character& a, const Character& b) {
    if (std::gcd(a.modulus, b.modulus) != 1) throw ArgumentError("product: moduli not coprime");
    Character c;
    c.modulus = a.modulus * b.modulus;
    c.values.resize(c.modulus);
    for (std::uint64_t n = 0; n < c.modulus; ++n)
        c.values[n] = a.values[n % a.modulus] * b.values[n % b.modulus];
    c.principal = a.principal && b.principal;
    c.parity = a.parity * b.parity;
    c.label = a.label + "*" + b.label;
    return c;
}

Character square(const Character& a) {
    Character c = a;
    for (auto& v : c.values) v *= v;
    c.parity = 1;
    c.principal = is_unit_one(c);
    c.label = a.label + "^2";
    return c;
}

Character conj(const Character& a) {
    Character c = a;
    for (auto& v : c.values) v = std::conj(v);
    c.label = "conj " + a.label;
    return c;
}

template <class T>
T dirichlet_L_real(T s, const Character& chi) {
    const std::uint64_t m = chi.modulus;
    if (chi.principal) {
        T z = detail::zeta_any(s);
        for (std::uint64_t p = 2; p <= m; ++p)
            if (m % p == 0 && is_prime(p)) z = z * (T(1.0) - exp(-s * std::log(double(p))));
        return z;
    }
    T sum = 0.0;
    for (std::uint64_t a = 1; a < m; ++a) {
        double c = chi.values[a].real();
        if (c == 0) continue;
        sum += detail::hurwitz_em(s, double(a) / double(m), true) * c;
    }
    return sum * exp(-s * std::log(double(m)));
}

template double dirichlet_L_real<double>(double, const Character&);
template Dual dirichlet_L_real<Dual>(Dual, const Character&);

cplx dirichlet_L(double s, const Character& chi) {
    if (s < 0) throw ArgumentError("dirichlet_L: s must be >= 0");
    if (chi.principal) {
        if (s == 1) throw ArgumentError("dirichlet_L: principal character has a pole at s = 1");
        if (s == 0) throw ArgumentError("dirichlet_L: principal character needs s > 0");
        return dirichlet_L_real(s, chi);
    }
    cplx sum = 0.0;
    const std::uint64_t m = chi.modulus;
    for (std::uint64_t a = 1; a < m; ++a) {
        if (chi.values[a] == cplx(0)) continue;
        sum += chi.values[a] * detail::hurwitz_em(s, double(a) / double(m), true);
    }
    return sum * std::exp(-s * std::log(double(m)));
}

std::pair<cplx, cplx> dirichlet_L_deriv(double s, const Character& chi) {
    require_nonprincipal(chi, "dirichlet_L_deriv");
    if (s < 0) throw ArgumentError("dirichlet_L_deriv: s must be >= 0");
    const std::uint64_t m = chi.modulus;
    cplx v = 0.0, d = 0.0;
    for (std::uint64_t a = 1; a < m; ++a) {
        if (chi.values[a] == cplx(0)) continue;
        Dual h = detail::hurwitz_em(Dual::variable(s), double(a) / double(m), true);
        v += chi.values[a] * h.v;
        d += chi.values[a] * h.d;
    }
    double lm = std::log(double(m)), f = std::exp(-s * lm);
    return {f * v, f * (d - lm * v)};
}

std::pair<cplx, cplx> L_special(const Character& chi) {
    require_nonprincipal(chi, "L_special");
    const std::uint64_t q = chi.modulus;
    cplx L0 = 0.0, L1 = 0.0;
    for (std::uint64_t a = 1; a < q; ++a) {
        L0 += double(a) * chi.values[a];
        L1 += chi.values[a] * digamma(double(a) / double(q));
    }
    return {-L0 / double(q), -L1 / double(q)};
}

}  // namespace twosq
