#include "twosq/progressions.hpp"

#include <omp.h>

#include <algorithm>

#include "twosq/errors.hpp"
#include "twosq/primes.hpp"

namespace twosq {

ResidueCountMatrix::ResidueCountMatrix(std::uint64_t q, int r, std::uint64_t x)
    : q_(q), r_(r), x_(x), dense_(q <= 13) {
    if (dense_) dense_counts_.assign(cells(), 0);
}

std::uint64_t ResidueCountMatrix::cells() const { return ipow(q_, static_cast<unsigned>(r_)); }

std::uint64_t ResidueCountMatrix::index_of(const std::vector<std::uint64_t>& word) const {
    if (static_cast<int>(word.size()) != r_) throw ArgumentError("residue word has wrong length");
    std::uint64_t idx = 0;
    for (auto a : word) idx = idx * q_ + a % q_;
    return idx;
}

std::vector<std::uint64_t> ResidueCountMatrix::word_of(std::uint64_t index) const {
    std::vector<std::uint64_t> w(r_);
    for (int i = r_ - 1; i >= 0; --i) {
        w[i] = index % q_;
        index /= q_;
    }
    return w;
}

std::uint64_t ResidueCountMatrix::at(const std::vector<std::uint64_t>& word) const {
    auto idx = index_of(word);
    if (dense_) return dense_counts_[idx];
    auto it = sparse_counts_.find(idx);
    return it == sparse_counts_.end() ? 0 : it->second;
}

void ResidueCountMatrix::add(std::uint64_t index, std::uint64_t n) {
    if (dense_)
        dense_counts_[index] += n;
    else
        sparse_counts_[index] += n;
}

std::uint64_t ResidueCountMatrix::total() const {
    std::uint64_t t = 0;
    for (auto c : dense_counts_) t += c;
    for (auto& [k, c] : sparse_counts_) t += c;
    return t;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ResidueCountMatrix::nonzero() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (dense_) {
        for (std::uint64_t i = 0; i < dense_counts_.size(); ++i)
            if (dense_counts_[i]) out.emplace_back(i, dense_counts_[i]);
    } else {
        out.assign(sparse_counts_.begin(), sparse_counts_.end());
        std::sort(out.begin(), out.end());
    }
    return out;
}

ResidueCountMatrix& ResidueCountMatrix::operator+=(const ResidueCountMatrix& o) {
    if (o.q_ != q_ || o.r_ != r_) throw ArgumentError("matrix shape mismatch");
    if (dense_) {
        for (std::size_t i = 0; i < dense_counts_.size(); ++i) dense_counts_[i] += o.dense_counts_[i];
    } else {
        for (auto& [k, c] : o.sparse_counts_) sparse_counts_[k] += c;
    }
    return *this;
}

bool ResidueCountMatrix::operator==(const ResidueCountMatrix& o) const {
    return q_ == o.q_ && r_ == o.r_ && x_ == o.x_ && nonzero() == o.nonzero();
}

void require_prime_1mod4(std::uint64_t q) {
    if (!is_prime(q) || q % 4 != 1)
        throw ArgumentError("modulus " + std::to_string(q) + " must be a prime = 1 mod 4");
}

namespace {

struct SegmentEdge {
    std::vector<std::uint64_t> head;  // first min(r-1, n) residues
    std::vector<std::uint64_t> tail;  // last min(r-1, n) residues
    std::uint64_t n = 0;
};

// counts windows lying entirely inside the segment
SegmentEdge scan_segment(const SieveSegment& seg, std::uint64_t q, int r, std::uint64_t mod_qr,
                         ResidueCountMatrix& m) {
    SegmentEdge e;
    const std::size_t keep = static_cast<std::size_t>(r - 1);
    std::vector<std::uint64_t> ring(keep + 1);
    std::uint64_t code = 0;
    seg.for_each([&](std::uint64_t v) {
        std::uint64_t a = v % q;
        code = (code * q + a) % mod_qr;
        if (e.head.size() < keep) e.head.push_back(a);
        ring[e.n % (keep + 1)] = a;
        ++e.n;
        if (e.n >= static_cast<std::uint64_t>(r)) m.add(code);
    });
    std::uint64_t t = std::min<std::uint64_t>(keep, e.n);
    for (std::uint64_t i = e.n - t; i < e.n; ++i) e.tail.push_back(ring[i % (keep + 1)]);
    return e;
}

// windows starting in `pending` that are completed by `next`
void stitch(std::vector<std::uint64_t>& pending, const std::vector<std::uint64_t>& next,
            bool next_is_whole, const std::vector<std::uint64_t>& next_tail, int r,
            ResidueCountMatrix& m) {
    std::vector<std::uint64_t> combined = pending;
    combined.insert(combined.end(), next.begin(), next.end());
    for (std::size_t j = 0; j < pending.size(); ++j) {
        if (j + r > combined.size()) break;
        std::uint64_t idx = 0;
        for (int i = 0; i < r; ++i) idx = idx * m.q() + combined[j + i];
        m.add(idx);
    }
    const std::size_t keep = static_cast<std::size_t>(r - 1);
    std::vector<std::uint64_t> seq = pending;
    if (next_is_whole)
        seq.insert(seq.end(), next.begin(), next.end());
    else
        seq = next_tail;
    if (seq.size() > keep) seq.erase(seq.begin(), seq.end() - keep);
    pending = std::move(seq);
}

// the first `need` residues of E beyond x
std::vector<std::uint64_t> successors_beyond(std::uint64_t x, std::uint64_t q, std::size_t need,
                                             const SieveOptions& opt) {
    std::vector<std::uint64_t> out;
    std::uint64_t lo = x + 1, end = x + opt.overshoot;
    std::uint64_t step = 1 << 12;
    while (out.size() < need && lo <= end) {
        std::uint64_t hi = std::min(end, lo + std::min(step, opt.segment_bits) - 1);
        sieve_segment_serial(lo, hi, opt.segment_bits).for_each([&](std::uint64_t v) {
            if (out.size() < need) out.push_back(v % q);
        });
        lo = hi + 1;
        step *= 2;
    }
    return out;
}

void check_tuple_args(std::uint64_t q, int r) {
    require_prime_1mod4(q);
    if (r < 1 || r > kMaxTupleLength)
        throw ArgumentError("tuple length must be in [1, " + std::to_string(kMaxTupleLength) + "]");
}

void finish(std::uint64_t x, std::uint64_t q, int r, std::uint64_t resolved,
            std::vector<std::uint64_t>& pending, const SieveOptions& opt, ResidueCountMatrix& m) {
    if (pending.empty() || r == 1) return;
    auto succ = successors_beyond(x, q, static_cast<std::size_t>(r - 1), opt);
    const std::int64_t p = static_cast<std::int64_t>(pending.size());
    const std::int64_t complete =
        std::clamp<std::int64_t>(p + static_cast<std::int64_t>(succ.size()) - r + 1, 0, p);
    stitch(pending, succ, true, {}, r, m);
    if (complete < p)
        throw TruncatedError("successor beyond x not found within overshoot " +
                                 std::to_string(opt.overshoot),
                             resolved - static_cast<std::uint64_t>(p - complete));
}

}  // namespace

ResidueCountMatrix count_consecutive_tuples(std::uint64_t x, std::uint64_t q, int r,
                                            const SieveOptions& opt) {
    check_tuple_args(q, r);
    ResidueCountMatrix total(q, r, x);
    std::uint64_t start = opt.include_zero ? 0 : 1;
    if (x < start) return total;
    const std::uint64_t mod_qr = total.cells();
    const std::int64_t nseg = static_cast<std::int64_t>((x - start) / opt.segment_bits + 1);
    std::vector<SegmentEdge> edges(nseg);
#pragma omp parallel
    {
        ResidueCountMatrix local(q, r, x);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t k = 0; k < nseg; ++k) {
            std::uint64_t lo = start + std::uint64_t(k) * opt.segment_bits;
            std::uint64_t hi = std::min(x, lo + opt.segment_bits - 1);
            edges[k] = scan_segment(load_or_sieve(lo, hi, opt), q, r, mod_qr, local);
        }
#pragma omp critical
        total += local;
    }
    std::vector<std::uint64_t> pending;
    std::uint64_t resolved = 0;
    for (auto& e : edges) {
        stitch(pending, e.head, e.n <= static_cast<std::uint64_t>(r - 1), e.tail, r, total);
        resolved += e.n;
    }
    finish(x, q, r, resolved, pending, opt, total);
    return total;
}

ResidueCountMatrix count_consecutive_tuples_serial(std::uint64_t x, std::uint64_t q, int r,
                                                   const SieveOptions& opt) {
    check_tuple_args(q, r);
    ResidueCountMatrix m(q, r, x);
    const std::uint64_t mod_qr = m.cells();
    const std::uint64_t rr = static_cast<std::uint64_t>(r);
    std::uint64_t code = 0, seen = 0, seen_le = 0, extra = 0;
    stream_up_to(
        x,
        [&](std::uint64_t v) {
            if (v > x) {
                if (extra == rr - 1 || seen_le == 0) return;
                ++extra;
            } else {
                ++seen_le;
            }
            code = (code * q + v % q) % mod_qr;
            ++seen;
            // window ending here starts at element seen - r
            if (seen >= rr && seen - rr < seen_le) m.add(code);
        },
        opt);
    std::uint64_t complete = seen + 1 >= rr ? std::min(seen_le, seen + 1 - rr) : 0;
    if (complete < seen_le)
        throw TruncatedError("successor beyond x not found within overshoot", complete);
    return m;
}

ResidueCountMatrix count_by_residue(std::uint64_t x, std::uint64_t q, const SieveOptions& opt) {
    return count_consecutive_tuples(x, q, 1, opt);
}

ResidueCountMatrix count_consecutive_pairs(std::uint64_t x, std::uint64_t q,
                                           const SieveOptions& opt) {
    return count_consecutive_tuples(x, q, 2, opt);
}

std::map<std::uint64_t, std::uint64_t> gap_histogram(std::uint64_t x, const SieveOptions& opt) {
    if (x < 1) throw ArgumentError("gap_histogram needs x >= 1");
    std::uint64_t start = opt.include_zero ? 0 : 1;
    const std::int64_t nseg = static_cast<std::int64_t>((x - start) / opt.segment_bits + 1);
    struct Ends {
        std::uint64_t first = 0, last = 0;
        bool any = false;
    };
    std::vector<Ends> ends(nseg);
    std::map<std::uint64_t, std::uint64_t> hist;
#pragma omp parallel
    {
        std::map<std::uint64_t, std::uint64_t> local;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t k = 0; k < nseg; ++k) {
            std::uint64_t lo = start + std::uint64_t(k) * opt.segment_bits;
            std::uint64_t hi = std::min(x, lo + opt.segment_bits - 1);
            Ends& e = ends[k];
            load_or_sieve(lo, hi, opt).for_each([&](std::uint64_t v) {
                if (e.any)
                    ++local[v - e.last];
                else
                    e.first = v, e.any = true;
                e.last = v;
            });
        }
#pragma omp critical
        for (auto& [g, c] : local) hist[g] += c;
    }
    bool have = false;
    std::uint64_t prev = 0;
    for (auto& e : ends) {
        if (!e.any) continue;
        if (have) ++hist[e.first - prev];
        prev = e.last;
        have = true;
    }
    if (!have) return hist;
    auto succ = successors_beyond(x, ~std::uint64_t(0), 1, opt);
    if (succ.empty())
        throw TruncatedError("successor beyond x not found within overshoot " + std::to_string(opt.overshoot),
                             count_up_to(x, opt) - 1);
    ++hist[succ[0] - prev];
    return hist;
}

std::vector<std::uint64_t> count_shifted_pairs(std::uint64_t x, std::uint64_t q, std::uint64_t h,
                                               const SieveOptions& opt) {
    if (q == 0 || h == 0) throw ArgumentError("count_shifted_pairs needs q, h >= 1");
    if (h >= opt.segment_bits / 2) throw ResourceError("shift too large for segment budget");
    std::uint64_t start = opt.include_zero ? 0 : 1;
    std::vector<std::uint64_t> out(q, 0);
    if (x < start) return out;
    const std::uint64_t step = opt.segment_bits - h;
    const std::int64_t nseg = static_cast<std::int64_t>((x - start) / step + 1);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(q, 0);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t k = 0; k < nseg; ++k) {
            std::uint64_t lo = start + std::uint64_t(k) * step;
            std::uint64_t hi = std::min(x, lo + step - 1);
            SieveSegment s = sieve_segment_serial(lo, hi + h, opt.segment_bits);
            s.for_each([&](std::uint64_t v) {
                if (v <= hi && s.test(v + h)) ++local[v % q];
            });
        }
#pragma omp critical
        for (std::uint64_t a = 0; a < q; ++a) out[a] += local[a];
    }
    return out;
}

}  // namespace twosq
