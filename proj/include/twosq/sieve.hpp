#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace twosq {

inline constexpr std::uint64_t kDefaultSegmentBits = std::uint64_t(1) << 26;
inline constexpr std::uint64_t kDefaultOvershoot = 1'000'000;

// Bitset over [lo, hi]; bit i set iff lo + i = a^2 + b^2.
struct SieveSegment {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> words;

    std::uint64_t size() const { return hi - lo + 1; }
    bool test(std::uint64_t n) const {
        std::uint64_t i = n - lo;
        return (words[i >> 6] >> (i & 63)) & 1;
    }
    std::uint64_t popcount() const;
    std::uint64_t popcount(std::uint64_t from, std::uint64_t to) const;  // inclusive values
    bool operator==(const SieveSegment&) const = default;

    // calls f(n) for every member, ascending
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(lo + (w << 6) + b);
                bits &= bits - 1;
            }
        }
    }
};

struct SieveOptions {
    std::uint64_t segment_bits = kDefaultSegmentBits;
    std::uint64_t overshoot = kDefaultOvershoot;
    bool include_zero = false;
    std::string cache_dir;  // empty: no cache
};

SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                           std::uint64_t budget = kDefaultSegmentBits);
SieveSegment sieve_segment_serial(std::uint64_t lo, std::uint64_t hi,
                                  std::uint64_t budget = kDefaultSegmentBits);

// cache-aware fetch used by the streaming passes
SieveSegment load_or_sieve(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opt);

void write_segment(const SieveSegment& s, const std::filesystem::path& file);
std::optional<SieveSegment> read_segment(const std::filesystem::path& file);
std::filesystem::path segment_cache_path(const std::string& dir, std::uint64_t lo,
                                         std::uint64_t hi);

bool is_sum_of_two_squares(std::uint64_t n);

// #{1 <= n <= x : n in E} (0 added when include_zero)
std::uint64_t count_up_to(std::uint64_t x, const SieveOptions& opt = {});
std::uint64_t count_up_to_serial(std::uint64_t x, const SieveOptions& opt = {});

struct EnumerationResult {
    std::vector<std::uint64_t> values;
    bool truncated = false;  // no member of E in (x, x + overshoot]
};

// Streams E in [start, x + overshoot] ascending to f, segment by segment.
// Returns false ("truncated") when no member exceeds x inside the window.
bool stream_up_to(std::uint64_t x, const std::function<void(std::uint64_t)>& f,
                  const SieveOptions& opt = {});

// E in [1, x + overshoot] ascending; in-memory, intended for small x
EnumerationResult enumerate_up_to(std::uint64_t x, std::uint64_t overshoot = kDefaultOvershoot,
                                  bool include_zero = false);

}  // namespace twosq
