#include "twosq/predictors.hpp"

#include <cmath>
#include <mutex>

#include "twosq/errors.hpp"
#include "twosq/progressions.hpp"
#include "twosq/singular.hpp"
#include "twosq/special.hpp"

namespace twosq {

namespace {

std::int64_t mod(std::int64_t a, std::uint64_t q) {
    const std::int64_t Q = static_cast<std::int64_t>(q);
    return ((a % Q) + Q) % Q;
}

void require_x(double x, double lo) {
    if (!(x >= lo)) throw ArgumentError("x must be >= " + std::to_string(lo));
}

}  // namespace

const ConstantsBundle& constants_for(std::uint64_t q, CoeffSource source) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, int>, ConstantsBundle> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(q, static_cast<int>(source));
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache.emplace(key, build_constants(q, source)).first->second;
}

double H_of_x(double x) {
    require_x(x, 100);
    double K = fundamentals().K;
    return -1 / std::log1p(-K / std::sqrt(std::log(x)));
}

PredictorContext make_context(double x, std::uint64_t q, CoeffSource source) {
    PredictorContext c;
    c.x = x;
    c.q = q;
    c.constants = &constants_for(q, source);
    c.alpha = 1 - c.constants->K / std::sqrt(std::log(x));
    c.H = H_of_x(x);
    c.logH = std::log(c.H);
    return c;
}

void PredictionReport::finalize() {
    pct_errors.clear();
    if (!actual) return;
    for (auto& [name, v] : predictions) pct_errors[name] = *actual / v;
}

double landau_refined(double x, int J) {
    require_x(x, 100);
    if (J < 0) throw ArgumentError("J must be >= 0");
    if (J > 1) throw ArgumentError("landau_refined: only J <= 1 has published coefficients");
    double K = fundamentals().K, L = std::log(x);
    double s = std::pow(L, -0.5);
    if (J == 1) s += PublishedCoeffs::c1_landau * std::pow(L, -1.5);
    return K * x * s;
}

namespace {

double c1_a(std::uint64_t q, std::int64_t a) {
    double lq = std::log(double(q));
    return mod(a, q) == 0 ? PublishedCoeffs::c1_landau + lq / 2
                          : PublishedCoeffs::c1_landau - lq / (2 * double(q - 1));
}

}  // namespace

double ap_prediction(double x, std::uint64_t q, std::int64_t a, bool with_secondary) {
    require_x(x, 100);
    require_prime_1mod4(q);
    double K = fundamentals().K, L = std::log(x);
    double s = std::pow(L, -0.5);
    if (with_secondary) s += c1_a(q, a) * std::pow(L, -1.5);
    return K / double(q) * x * s;
}

double hl_pair_prediction(double x, std::uint64_t q, std::int64_t a, std::int64_t h, bool refined) {
    require_x(x, 100);
    require_prime_1mod4(q);
    if (h < 1) throw ArgumentError("h must be >= 1");
    double K = fundamentals().K, L = std::log(x);
    double S = ck_singular_series(h, K);
    double s = 1 / L;
    if (refined) s += (c1_a(q, a) + c1_a(q, a + h)) / (L * L);
    return x * S / double(q) * K * K * s;
}

double asymptotic_S(const ConstantsBundle& c, std::int64_t v, double H, int J) {
    if (J < 0 || J > 3) throw ArgumentError("asymptotic_S supports 0 <= J <= 3");
    if (!(H > 1)) throw ArgumentError("asymptotic_S needs H > 1");
    const double L = std::log(H);
    v = mod(v, c.q);
    double s;
    if (v == 0) {
        s = -2 / (c.K * kPi) * std::sqrt(L);
        for (int j = 1; j <= J; ++j) s += c.c0_j.at(j) * std::pow(L, 0.5 - j);
    } else {
        // (1/(2K^2 phi)) sum conj(chi)(v) C_{q,chi} = C_{a,a+v}/(K q)
        s = c.C_ab.at(int(v)) / (c.K * double(c.q));
        for (int j = 1; j <= J; ++j) s += c.c1_j.at(j) * std::pow(L, 0.5 - j);
    }
    return s;
}

double asymptotic_S(std::uint64_t q, std::int64_t v, double H, int J, CoeffSource source) {
    return asymptotic_S(constants_for(q, source), v, H, J);
}

double asymptotic_S_total(const ConstantsBundle& c, double H, int J) {
    if (J < 0 || J > 3) throw ArgumentError("asymptotic_S_total supports 0 <= J <= 3");
    const double L = std::log(H);
    double s = -2 / (c.K * kPi) * std::sqrt(L);
    for (int j = 1; j <= J; ++j) s += c.c_j.at(j) * std::pow(L, 0.5 - j);
    return s;
}

double pipeline_D012(double x, std::uint64_t q, std::int64_t a, std::int64_t b, S0Source source) {
    require_x(x, 100);
    require_prime_1mod4(q);
    auto ctx = make_context(x, q);
    const double K = ctx.constants->K, sl = std::sqrt(std::log(x));
    const double kappa = K / (ctx.alpha * sl);
    std::vector<double> S0(q), E(q);
    for (std::uint64_t c = 0; c < q; ++c) {
        E[c] = E_qv(q, std::int64_t(c), ctx.H);
        if (source == S0Source::numeric)
            S0[c] = weighted_sum_S(q, std::int64_t(c), ctx.H) - E[c];
        else
            S0[c] = ctx.H / double(q) + asymptotic_S(*ctx.constants, std::int64_t(c), ctx.H, 1) - E[c];
    }
    const std::int64_t v = mod(b - a, q);
    double d = E[v] + S0[v];
    double one = 0, two = 0;
    for (std::uint64_t c = 0; c < q; ++c) {
        one += S0[mod(v - std::int64_t(c), q)] * E[c];
        for (std::uint64_t e = 0; e < q; ++e)
            two += S0[mod(v - std::int64_t(c) - std::int64_t(e), q)] * E[c] * E[e];
    }
    d += -2 * kappa * one + kappa * kappa * two;
    return x / double(q) / ctx.alpha * (K / sl) * (K / sl) * d;
}

double pair_conjecture(double x, std::uint64_t q, std::int64_t a, std::int64_t b) {
    require_x(x, 100);
    require_prime_1mod4(q);
    const auto& c = constants_for(q);
    const double L = std::log(x), sl = std::sqrt(L), sll = std::sqrt(std::log(L));
    const double phi = double(q - 1), r2 = std::sqrt(2.0);
    const double lead = c.K * x / (double(q) * double(q) * sl);
    if (mod(b - a, q) == 0) return lead * (1 - r2 * phi / kPi * sll / sl + c.C1 / (sl * sll));
    double Cab = c.C_ab.at(int(mod(b - a, q)));
    return lead * (1 + r2 / kPi * sll / sl + Cab / sl - c.C1 / (phi * sl * sll));
}

TupleConstants tuple_constants(std::uint64_t q, const std::vector<std::int64_t>& a) {
    require_prime_1mod4(q);
    const int r = static_cast<int>(a.size());
    if (r < 2 || r > 6) throw ArgumentError("tuple length must be in [2, 6]");
    const auto& c = constants_for(q);
    const double Q = double(q), phi = Q - 1, r2 = std::sqrt(2.0);
    auto delta = [&](int i, int j) { return mod(a[i] - a[j], q) == 0 ? 1.0 : 0.0; };
    double adj = 0, C0 = 0;
    for (int i = 0; i + 1 < r; ++i) {
        adj += 1 / Q - delta(i + 1, i);
        if (!delta(i + 1, i)) C0 += c.C_ab.at(int(mod(a[i + 1] - a[i], q)));
    }
    double far = 0;
    for (int k = 1; k <= r - 2; ++k)
        for (int i = 0; i + k + 1 < r; ++i) far += (1 / Q - delta(i + k + 1, i)) / k;
    return {Q * r2 / kPi * adj, C0, -Q * c.C1 / phi * adj + Q * r2 / std::sqrt(kPi) * far};
}

double tuple_conjecture(double x, std::uint64_t q, const std::vector<std::int64_t>& a) {
    require_x(x, 100);
    auto t = tuple_constants(q, a);
    const double K = fundamentals().K, L = std::log(x), sl = std::sqrt(L), sll = std::sqrt(std::log(L));
    return x / std::pow(double(q), double(a.size())) * K / sl *
           (1 + t.C_minus1 * sll / sl + t.C0 / sl + t.C1 / (sll * sl));
}

}  // namespace twosq
