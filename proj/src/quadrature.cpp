#include "twosq/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>

#include "twosq/constants.hpp"
#include "twosq/errors.hpp"
#include "twosq/progressions.hpp"
#include "twosq/special.hpp"

namespace twosq {

const GaussRule& gauss_rule(int n) {
    if (n < 2 || n > 400) throw ArgumentError("Gauss-Legendre node count must be in [2, 400]");
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    GaussRule r;
    for (double z : boost::math::legendre_p_zeros<double>(n)) {
        double d = boost::math::legendre_p_prime(n, z);
        double w = 2 / ((1 - z * z) * d * d);
        r.x.push_back(z);
        r.w.push_back(w);
        if (z != 0) {
            r.x.push_back(-z);
            r.w.push_back(w);
        }
    }
    return cache.emplace(n, std::move(r)).first->second;
}

namespace {

struct Node {
    double sigma, weight;
};

// integral over (1/2 + eps, 1) of f(sigma) / sqrt(1 - sigma)
std::vector<Node> nodes_for(double eps, double split, int n) {
    const auto& g = gauss_rule(n);
    std::vector<Node> out;
    const double lo = 0.5 + eps;
    const double b = std::max(split, lo);
    // sigma = 1 - u^2: dsigma / sqrt(1 - sigma) = 2 du
    const double U = std::sqrt(1 - b);
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        double u = U / 2 * (g.x[i] + 1);
        out.push_back({1 - u * u, g.w[i] * U / 2 * 2});
    }
    if (lo < split) {
        // sigma = lo + t^4: dsigma = 4 t^3 dt
        const double T = std::pow(split - lo, 0.25);
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            double t = T / 2 * (g.x[i] + 1);
            double s = lo + t * t * t * t;
            out.push_back({s, g.w[i] * T / 2 * 4 * t * t * t / std::sqrt(1 - s)});
        }
    }
    return out;
}

template <class Fn>
double integrate(Fn&& f, double eps, const QuadratureConfig& cfg, int n) {
    auto nodes = nodes_for(eps, cfg.split, n);
    std::vector<double> vals(nodes.size());
    std::exception_ptr err;
    const std::int64_t m = static_cast<std::int64_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 1) if (cfg.parallel)
    for (std::int64_t i = 0; i < m; ++i) {
        try {
            vals[i] = f(nodes[i].sigma);
        } catch (...) {
#pragma omp critical
            err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    long double s = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += (long double)nodes[i].weight * vals[i];
    return static_cast<double>(s);
}

struct Doubled {
    double value, delta;
};

template <class Fn>
Doubled integrate_checked(Fn&& f, double eps, const QuadratureConfig& cfg, const char* who) {
    if (cfg.nodes < 2) throw ArgumentError("nodes must be >= 2");
    double a = integrate(f, eps, cfg, cfg.nodes);
    double b = integrate(f, eps, cfg, 2 * cfg.nodes);
    double delta = std::abs(b - a) / std::max(std::abs(b), 1e-300);
    if (delta > cfg.rel_target)
        throw AccuracyError(std::string(who) + ": node doubling changed the integral by " + std::to_string(delta) +
                            " (relative), above " + std::to_string(cfg.rel_target));
    return {b, delta};
}

double epsilon_of(const QuadratureConfig& cfg, bool derivative) {
    double eps = cfg.epsilon.value_or(derivative ? 0.02 : 0.0);
    if (!(eps >= 0 && eps < 0.25)) throw ArgumentError("epsilon must lie in [0, 1/4)");
    if (derivative && eps < 0.01) throw ArgumentError("epsilon must be >= 0.01 where F' appears");
    return eps;
}

double F_prime(double s, FVariant v, const QuadratureConfig& cfg) {
    auto d = richardson_derivative([v](double t) { return F_fn(t, v); }, s, 1, cfg.derivative_h0,
                                   cfg.derivative_steps);
    if (d.error > 1e-7 * (std::abs(d.value) + 1))
        throw AccuracyError("F' Richardson extrapolation did not converge at sigma=" + std::to_string(s));
    return d.value;
}

}  // namespace

IntegralResult integral_count(double x, const QuadratureConfig& cfg) {
    if (!(x >= 1e3)) throw ArgumentError("integral_count needs x >= 1000");
    const double eps = epsilon_of(cfg, false);
    const double lx = std::log(x);
    auto f = [lx](double s) { return G_fn(s) * std::exp(s * lx) / s / kPi; };
    auto r = integrate_checked(f, eps, cfg, "integral_count");
    return {r.value, r.value, r.delta, eps, 2 * cfg.nodes};
}

IntegralResult integral_S(std::uint64_t q, std::int64_t v, double H, const QuadratureConfig& cfg) {
    require_prime_1mod4(q);
    if (!(H >= 5)) throw ArgumentError("integral_S needs H >= 5");
    const std::int64_t Q = static_cast<std::int64_t>(q);
    v = ((v % Q) + Q) % Q;
    const double K = fundamentals().K, lH = std::log(H), phi = double(q - 1);
    const double eps = epsilon_of(cfg, v == 0);
    double excess;
    Doubled r;
    if (v != 0) {
        auto f = [&](double s) { return A_q(s, q) * F_fn(s) * std::exp((s - 1) * lH); };
        r = integrate_checked(f, eps, cfg, "integral_S");
        excess = C_ab(q, 0, v, K) / (K * double(q)) + r.value / (2 * kPi * K * K * phi);
    } else {
        auto f = [&](double s) {
            return (F_prime(s, FVariant::gamma, cfg) + F_fn(s) * (lH - A_q(s, q) / 2)) * std::exp((s - 1) * lH);
        };
        r = integrate_checked(f, eps, cfg, "integral_S");
        excess = r.value / (kPi * K * K);
    }
    return {H / double(q) + excess, excess, r.delta, eps, 2 * cfg.nodes};
}

IntegralResult integral_ktuple_average(int k, double H, const QuadratureConfig& cfg) {
    if (k < 2 || k > 6) throw ArgumentError("integral_ktuple_average supports 2 <= k <= 6");
    if (!(H > 1)) throw ArgumentError("H must exceed 1");
    const double K = fundamentals().K, lH = std::log(H);
    const double eps = epsilon_of(cfg, true);
    auto f = [&](double s) {
        return (F_prime(s, FVariant::inverse_s, cfg) + F_fn(s, FVariant::inverse_s) * lH) * std::exp((s - 1) * lH);
    };
    auto r = integrate_checked(f, eps, cfg, "integral_ktuple_average");
    double excess = double(k) * (k - 1) * std::pow(H, k - 1) / (kPi * K * K) * r.value;
    return {std::pow(H, k) + excess, excess, r.delta, eps, 2 * cfg.nodes};
}

}  // namespace twosq
