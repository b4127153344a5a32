#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twosq/dual.hpp"

namespace twosq {

using cplx = std::complex<double>;

struct Character {
    std::uint64_t modulus = 1;
    std::vector<cplx> values;  // indexed by residue, 0 off the units
    bool principal = false;
    int parity = 1;  // chi(-1)
    std::string label;

    cplx operator()(std::int64_t n) const {
        std::int64_t m = static_cast<std::int64_t>(modulus);
        return values[static_cast<std::size_t>(((n % m) + m) % m)];
    }
    bool is_real(double tol = 1e-14) const;
};

struct CharacterTable {
    std::uint64_t q = 0;
    std::uint64_t generator = 0;
    std::vector<std::uint64_t> index;  // discrete log base generator, units only
    std::vector<Character> chars;      // chars[k](g^m) = exp(2 pi i k m / (q-1))
};

CharacterTable character_table(std::uint64_t q);
std::uint64_t primitive_root(std::uint64_t q);

Character chi4();
Character principal_character(std::uint64_t m);
// product of characters to coprime moduli, as a character mod m1*m2 (CRT)
Character product(const Character& a, const Character& b);
Character square(const Character& a);
Character conj(const Character& a);

// L(s, chi) for s >= 0 (s > 0 for principal chi; principal at s = 1 is a pole)
cplx dirichlet_L(double s, const Character& chi);
// (L, dL/ds) at s, non-principal chi
std::pair<cplx, cplx> dirichlet_L_deriv(double s, const Character& chi);
// real characters only, T = double or Dual
template <class T>
T dirichlet_L_real(T s, const Character& chi);

// L(0, chi) by the finite sum, L(1, chi) by digamma; chi non-principal
std::pair<cplx, cplx> L_special(const Character& chi);

}  // namespace twosq
