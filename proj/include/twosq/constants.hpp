#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twosq/characters.hpp"

namespace twosq {

struct Fundamentals {
    double K;            // Landau-Ramanujan
    double K_depth_gap;  // |K(J) - K(J+1)|
    double gamma;
    double L1_chi4;      // pi/4
    double L1p_chi4;     // L'(1, chi_4)
    double alpha1;       // L'/L(1, chi_4)
    double beta1;        // 2 sum_{p = 3 mod 4} log p/(p^2 - 1)
    double omega;
    double z_prime_0;
};

// computed once per process
const Fundamentals& fundamentals();

double landau_ramanujan(int depth_J = 6, std::uint32_t tail_prime_bound = 1000);

struct OmegaParts {
    double alpha1, beta1, omega;
};
OmegaParts omega_constant();
double z_prime_0();

struct SDCoeffs {
    double c, c0, c1;  // c(1), c0(1), c1(1)
};
SDCoeffs selberg_delange_coeffs(std::uint64_t q);

// D_chi(0) for non-principal chi mod q
cplx C_q_chi(std::uint64_t q, const Character& chi);
double C_ab(std::uint64_t q, std::int64_t a, std::int64_t b, double K);
// same, from the difference v = b - a and precomputed C_{q,chi}
double C_v(const CharacterTable& t, const std::vector<cplx>& C, std::int64_t v, double K);

double pair_conjecture_C1(std::uint64_t q);

// Taylor coefficients of the S(q, v; H) expansions
struct HigherCoeff {
    int j;
    double c, c0, c1;
    double c0_alt;  // from the q^-s g(s) expansion, independent of the c - c(chi_0) split
    double err;     // Richardson error estimate (largest of the three)
};
std::vector<HigherCoeff> higher_coeffs_numeric(std::uint64_t q, int j_max);

// published nine-digit values (q = 5)
struct PublishedCoeffs {
    static constexpr double c0[4] = {0, 0.604541230, 0.696827721, 1.185903185};
    static constexpr double c1[4] = {0, -0.167588374, -0.054190676, -0.328019051};
    static constexpr double c1_landau = 0.581948659;
};

enum class CoeffSource { published, numeric };

struct ConstantsBundle {
    std::uint64_t q;
    double K, gamma, omega, z_prime_0, c1_landau, C1;
    std::map<int, double> c_j, c0_j, c1_j;  // j = 1..3
    std::vector<cplx> C_q_chi;              // indexed like character_table(q).chars
    std::map<int, double> C_ab;             // v = 1..q-1
    std::map<std::string, std::string> method_tags;
    CoeffSource source;
};

// published j = 2, 3 coefficients are available for q = 5 only; other q fall back to numeric
ConstantsBundle build_constants(std::uint64_t q, CoeffSource source = CoeffSource::published);

}  // namespace twosq
