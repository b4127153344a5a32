#pragma once

#include <cstdint>

#include "twosq/characters.hpp"

namespace twosq {

inline constexpr int kDefaultEulerDepth = 6;
inline constexpr std::uint32_t kDefaultEulerPrimes = 10000;

// sum over p = 3 mod 4 of log(1 - psi(p) p^-t), t > 1, psi real (T = double or Dual).
// Each level trades the sum for L(t, psi chi_4), L(t, psi), the p = 2 factor and the
// same sum at (psi^2, 2t); after J levels the remainder is summed directly up to B.
template <class T>
T log_euler_3mod4_real(T t, const Character& psi, int J = kDefaultEulerDepth,
                       std::uint32_t B = kDefaultEulerPrimes);
cplx log_euler_3mod4(double t, const Character& psi, int J = kDefaultEulerDepth,
                     std::uint32_t B = kDefaultEulerPrimes);

// log P(s), P(s) = prod_{p = 3 mod 4} (1 - p^-2s), s > 1/2
template <class T>
T log_P(T s, int J = kDefaultEulerDepth, std::uint32_t B = kDefaultEulerPrimes);

}  // namespace twosq
