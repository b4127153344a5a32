#pragma once

#include <optional>
#include <vector>

#include "report.hpp"
#include "twosq/predictors.hpp"
#include "twosq/sieve.hpp"

namespace twosq::cli {

struct TableOptions {
    std::optional<double> x;       // scale override for tables built on sieving
    std::vector<double> H;         // rows for tables 6 and 7; empty: defaults
    bool include_1e6 = false;      // add the H = 10^6 rows (slow)
    bool allow_long_run = false;   // permit sieving beyond 10^10
    std::optional<double> epsilon; // integral-form column; unset: quadrature defaults
    SieveOptions sieve;
};

inline constexpr double kMaxDeskSieve = 1e10;

struct TableResult {
    Table table;
    std::vector<PredictionReport> reports;
};

TableResult reproduce_table(int id, const TableOptions& opt);

// published actual counts at x = 10^12, q = 5
std::uint64_t reference_pair_count(int a, int b);
std::uint64_t reference_single_count(int a);
std::optional<std::uint64_t> reference_landau_count(double x);

}  // namespace twosq::cli
