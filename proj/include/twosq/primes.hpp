#pragma once

#include <cstdint>
#include <vector>

namespace twosq {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);
bool is_prime(std::uint64_t n);
std::uint64_t isqrt(std::uint64_t n);
std::uint64_t ipow(std::uint64_t b, unsigned e);

// primes p = 3 mod 4 up to n, cached per process for the default bound
const std::vector<std::uint32_t>& primes_3mod4(std::uint32_t n);

}  // namespace twosq
