#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twosq/constants.hpp"

namespace twosq {

// cached per (q, source)
const ConstantsBundle& constants_for(std::uint64_t q, CoeffSource source = CoeffSource::published);

struct PredictorContext {
    double x;
    std::uint64_t q;
    double alpha;  // 1 - K/sqrt(log x)
    double H;      // -1/log alpha
    double logH;
    const ConstantsBundle* constants;
};
PredictorContext make_context(double x, std::uint64_t q, CoeffSource source = CoeffSource::published);
double H_of_x(double x);

struct PredictionReport {
    std::string cell;
    std::optional<double> actual;
    bool actual_is_reference = false;  // taken from published data rather than computed
    std::vector<std::pair<std::string, double>> predictions;
    std::map<std::string, double> pct_errors;  // actual / prediction
    void finalize();
};

double landau_refined(double x, int J);
double ap_prediction(double x, std::uint64_t q, std::int64_t a, bool with_secondary);
double hl_pair_prediction(double x, std::uint64_t q, std::int64_t a, std::int64_t h, bool refined);

// S(q, v; H) - H/q truncated at J terms (J <= 3)
double asymptotic_S(const ConstantsBundle& c, std::int64_t v, double H, int J);
double asymptotic_S(std::uint64_t q, std::int64_t v, double H, int J,
                    CoeffSource source = CoeffSource::published);
// S(H) - H truncated at J terms
double asymptotic_S_total(const ConstantsBundle& c, double H, int J);

enum class S0Source { numeric, asymptotic_J1 };
double pipeline_D012(double x, std::uint64_t q, std::int64_t a, std::int64_t b, S0Source source);

double pair_conjecture(double x, std::uint64_t q, std::int64_t a, std::int64_t b);

struct TupleConstants {
    double C_minus1, C0, C1;
};
TupleConstants tuple_constants(std::uint64_t q, const std::vector<std::int64_t>& a);
double tuple_conjecture(double x, std::uint64_t q, const std::vector<std::int64_t>& a);

}  // namespace twosq
