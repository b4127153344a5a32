#include "twosq/sieve.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <fstream>

#include "twosq/errors.hpp"
#include "twosq/primes.hpp"

namespace twosq {

namespace {

void check_interval(std::uint64_t lo, std::uint64_t hi, std::uint64_t budget) {
    if (lo > hi) throw ArgumentError("sieve_segment: lo > hi");
    if (hi - lo >= budget)
        throw ResourceError("sieve_segment: interval of " + std::to_string(hi - lo + 1) +
                            " entries exceeds budget " + std::to_string(budget));
}

// marks a^2 + b^2 (a <= b) falling in [clo, chi] into a bitset based at lo
void mark_chunk(std::uint64_t* words, std::uint64_t lo, std::uint64_t clo, std::uint64_t chi) {
    for (std::uint64_t a = 0;; ++a) {
        std::uint64_t a2 = a * a;
        if (2 * a2 > chi) break;
        std::uint64_t b = a;
        if (clo > a2) b = std::max(a, isqrt(clo - a2 - 1) + 1);
        std::uint64_t v = a2 + b * b;
        while (v <= chi) {
            std::uint64_t i = v - lo;
            words[i >> 6] |= std::uint64_t(1) << (i & 63);
            v += 2 * b + 1;
            ++b;
        }
    }
}

SieveSegment blank(std::uint64_t lo, std::uint64_t hi) {
    SieveSegment s;
    s.lo = lo;
    s.hi = hi;
    s.words.assign((hi - lo) / 64 + 1, 0);
    return s;
}

void put_u64(std::ofstream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u64(std::ifstream& in, std::uint64_t& v) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
    return true;
}

}  // namespace

std::uint64_t SieveSegment::popcount() const {
    std::uint64_t c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
}

std::uint64_t SieveSegment::popcount(std::uint64_t from, std::uint64_t to) const {
    from = std::max(from, lo);
    to = std::min(to, hi);
    if (from > to) return 0;
    std::uint64_t i = from - lo, j = to - lo;
    std::size_t wi = i >> 6, wj = j >> 6;
    std::uint64_t lomask = ~std::uint64_t(0) << (i & 63);
    std::uint64_t himask = (j & 63) == 63 ? ~std::uint64_t(0) : (std::uint64_t(1) << ((j & 63) + 1)) - 1;
    if (wi == wj) return std::popcount(words[wi] & lomask & himask);
    std::uint64_t c = std::popcount(words[wi] & lomask) + std::popcount(words[wj] & himask);
    for (std::size_t w = wi + 1; w < wj; ++w) c += std::popcount(words[w]);
    return c;
}

SieveSegment sieve_segment_serial(std::uint64_t lo, std::uint64_t hi, std::uint64_t budget) {
    check_interval(lo, hi, budget);
    SieveSegment s = blank(lo, hi);
    mark_chunk(s.words.data(), lo, lo, hi);
    return s;
}

SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t budget) {
    check_interval(lo, hi, budget);
    SieveSegment s = blank(lo, hi);
    const std::uint64_t n = hi - lo + 1;
    const std::int64_t nchunks = std::clamp<std::int64_t>(
        static_cast<std::int64_t>(n / (std::uint64_t(1) << 16)), 1, 4 * omp_get_max_threads());
    // chunk boundaries on word multiples so no two threads share a word
    const std::uint64_t words_per = (s.words.size() + nchunks - 1) / nchunks;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        std::uint64_t clo = lo + std::uint64_t(c) * words_per * 64;
        if (clo > hi) continue;
        std::uint64_t chi = std::min(hi, clo + words_per * 64 - 1);
        mark_chunk(s.words.data(), lo, clo, chi);
    }
    return s;
}

std::filesystem::path segment_cache_path(const std::string& dir, std::uint64_t lo,
                                         std::uint64_t hi) {
    return std::filesystem::path(dir) /
           ("seg_" + std::to_string(lo) + "_" + std::to_string(hi) + ".s2sq");
}

void write_segment(const SieveSegment& s, const std::filesystem::path& file) {
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ResourceError("cannot write cache file " + tmp.string());
        out.write("S2SQ1", 5);
        put_u64(out, s.lo);
        put_u64(out, s.hi);
        for (auto w : s.words) put_u64(out, w);
        if (!out) throw ResourceError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

std::optional<SieveSegment> read_segment(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[5];
    if (!in.read(magic, 5) || std::string(magic, 5) != "S2SQ1") return std::nullopt;
    SieveSegment s;
    if (!get_u64(in, s.lo) || !get_u64(in, s.hi) || s.lo > s.hi) return std::nullopt;
    s.words.resize((s.hi - s.lo) / 64 + 1);
    for (auto& w : s.words)
        if (!get_u64(in, w)) return std::nullopt;
    return s;
}

SieveSegment load_or_sieve(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opt) {
    if (opt.cache_dir.empty()) return sieve_segment_serial(lo, hi, opt.segment_bits);
    auto path = segment_cache_path(opt.cache_dir, lo, hi);
    if (auto s = read_segment(path); s && s->lo == lo && s->hi == hi) return *s;
    SieveSegment s = sieve_segment_serial(lo, hi, opt.segment_bits);
    std::filesystem::create_directories(opt.cache_dir);
    write_segment(s, path);
    return s;
}

bool is_sum_of_two_squares(std::uint64_t n) {
    if (n == 0) return true;
    while (n % 2 == 0) n /= 2;
    for (std::uint64_t p = 3; p * p <= n; p += 2) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        if (p % 4 == 3 && (e & 1)) return false;
    }
    return n % 4 != 3;
}

std::uint64_t count_up_to_serial(std::uint64_t x, const SieveOptions& opt) {
    std::uint64_t start = opt.include_zero ? 0 : 1;
    if (x < start) return 0;
    std::uint64_t total = 0;
    for (std::uint64_t lo = start; lo <= x; lo += opt.segment_bits) {
        std::uint64_t hi = std::min(x, lo + opt.segment_bits - 1);
        total += load_or_sieve(lo, hi, opt).popcount();
        if (hi == x) break;
    }
    return total;
}

std::uint64_t count_up_to(std::uint64_t x, const SieveOptions& opt) {
    std::uint64_t start = opt.include_zero ? 0 : 1;
    if (x < start) return 0;
    const std::int64_t nseg = static_cast<std::int64_t>((x - start) / opt.segment_bits + 1);
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (std::int64_t k = 0; k < nseg; ++k) {
        std::uint64_t lo = start + std::uint64_t(k) * opt.segment_bits;
        std::uint64_t hi = std::min(x, lo + opt.segment_bits - 1);
        total += load_or_sieve(lo, hi, opt).popcount();
    }
    return total;
}

bool stream_up_to(std::uint64_t x, const std::function<void(std::uint64_t)>& f,
                  const SieveOptions& opt) {
    std::uint64_t start = opt.include_zero ? 0 : 1;
    std::uint64_t end = x + opt.overshoot;
    bool found = false;
    for (std::uint64_t lo = start; lo <= end; lo += opt.segment_bits) {
        std::uint64_t hi = std::min(end, lo + opt.segment_bits - 1);
        load_or_sieve(lo, hi, opt).for_each([&](std::uint64_t n) {
            if (n > x) found = true;
            f(n);
        });
        if (hi == end) break;
    }
    return found;
}

EnumerationResult enumerate_up_to(std::uint64_t x, std::uint64_t overshoot, bool include_zero) {
    SieveOptions opt;
    opt.overshoot = overshoot;
    opt.include_zero = include_zero;
    EnumerationResult r;
    r.truncated = !stream_up_to(x, [&](std::uint64_t n) { r.values.push_back(n); }, opt);
    return r;
}

}  // namespace twosq
