#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "twosq/sieve.hpp"

namespace twosq {

// Counts of r consecutive members of E by residue word (a_1..a_r) mod q.
// Dense storage (index sum a_i q^(r-i)) when q <= 13, sparse above.
class ResidueCountMatrix {
public:
    ResidueCountMatrix() = default;
    ResidueCountMatrix(std::uint64_t q, int r, std::uint64_t x);

    std::uint64_t q() const { return q_; }
    int r() const { return r_; }
    std::uint64_t x() const { return x_; }
    bool dense() const { return dense_; }

    std::uint64_t at(const std::vector<std::uint64_t>& word) const;
    std::uint64_t at(std::uint64_t a) const { return at(std::vector<std::uint64_t>{a}); }
    std::uint64_t at(std::uint64_t a, std::uint64_t b) const {
        return at(std::vector<std::uint64_t>{a, b});
    }
    void add(std::uint64_t index, std::uint64_t n = 1);
    std::uint64_t total() const;
    std::uint64_t cells() const;  // q^r
    std::uint64_t index_of(const std::vector<std::uint64_t>& word) const;
    std::vector<std::uint64_t> word_of(std::uint64_t index) const;

    // nonzero cells in index order
    std::vector<std::pair<std::uint64_t, std::uint64_t>> nonzero() const;

    ResidueCountMatrix& operator+=(const ResidueCountMatrix& o);
    bool operator==(const ResidueCountMatrix& o) const;

private:
    std::uint64_t q_ = 0;
    int r_ = 0;
    std::uint64_t x_ = 0;
    bool dense_ = true;
    std::vector<std::uint64_t> dense_counts_;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse_counts_;
};

inline constexpr int kMaxTupleLength = 6;

ResidueCountMatrix count_by_residue(std::uint64_t x, std::uint64_t q, const SieveOptions& opt = {});
ResidueCountMatrix count_consecutive_pairs(std::uint64_t x, std::uint64_t q,
                                           const SieveOptions& opt = {});
ResidueCountMatrix count_consecutive_tuples(std::uint64_t x, std::uint64_t q, int r,
                                            const SieveOptions& opt = {});
// one segment after another, single thread
ResidueCountMatrix count_consecutive_tuples_serial(std::uint64_t x, std::uint64_t q, int r,
                                                   const SieveOptions& opt = {});

// gaps E_{n+1} - E_n for every E_n <= x; the last successor may exceed x
std::map<std::uint64_t, std::uint64_t> gap_histogram(std::uint64_t x, const SieveOptions& opt = {});

// #{n <= x : n = a mod q, n in E, n + h in E} for each a
std::vector<std::uint64_t> count_shifted_pairs(std::uint64_t x, std::uint64_t q, std::uint64_t h,
                                               const SieveOptions& opt = {});

void require_prime_1mod4(std::uint64_t q);

}  // namespace twosq
