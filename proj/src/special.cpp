#include "twosq/special.hpp"

#include <array>
#include <cmath>

#include "twosq/errors.hpp"

namespace twosq {

namespace {

// B_{2k} / (2k)!
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 6 / 2,
    -1.0 / 30 / 24,
    1.0 / 42 / 720,
    -1.0 / 30 / 40320,
    5.0 / 66 / 3628800,
    -691.0 / 2730 / 479001600,
    7.0 / 6 / 87178291200.0,
    -3617.0 / 510 / 20922789888000.0,
    43867.0 / 798 / 6402373705728000.0,
    -174611.0 / 330 / 2432902008176640000.0,
    854513.0 / 138 / 1124000727777607680000.0,
    -236364091.0 / 2730 / 620448401733239439360000.0,
};

using std::exp;
using std::log;

// everything except the pole term: sum_{n<N} (n+a)^-s + w^-s/2 + Bernoulli tail
template <class T>
T em_regular_part(T s, double alpha, int N, int K, double& logw) {
    T sum = 0.0;
    for (int n = 0; n < N; ++n) sum += exp(-s * std::log(n + alpha));
    const double w = N + alpha;
    logw = std::log(w);
    T ws = exp(-s * logw);
    sum += ws * 0.5;
    T poch = s;
    T wpow = ws / w;
    K = std::min<int>(K, kBernoulliOverFactorial.size());
    for (int k = 1; k <= K; ++k) {
        sum += poch * wpow * kBernoulliOverFactorial[k - 1];
        poch = poch * (s + double(2 * k - 1)) * (s + double(2 * k));
        wpow = wpow / (w * w);
    }
    return sum;
}

template <class T>
T direct_sum(T s, double alpha) {
    T sum = 0.0;
    for (int n = 0; n <= 24; ++n) sum += exp(-s * std::log(n + alpha));
    return sum;
}

}  // namespace

namespace detail {

template <class T>
T hurwitz_em(T s, double alpha, bool shifted, int N, int K) {
    if (value_of(s) > 40) {
        T z = direct_sum(s, alpha);
        return shifted ? z - T(1.0) / (s - 1.0) : z;
    }
    double logw;
    T reg = em_regular_part(s, alpha, N, K, logw);
    if (shifted) return reg - phi1((T(1.0) - s) * logw) * logw;
    return reg + exp((T(1.0) - s) * logw) / (s - 1.0);
}

template <class T>
T zeta_regularized(T s, int N, int K) {
    if (value_of(s) > 40) return (s - 1.0) * direct_sum(s, 1.0);
    double logw;
    T reg = em_regular_part(s, 1.0, N, K, logw);
    return (s - 1.0) * reg + exp((T(1.0) - s) * logw);
}

template <class T>
T zeta_any(T s, int N, int K) {
    if (value_of(s) > 40) return direct_sum(s, 1.0);
    double logw;
    T reg = em_regular_part(s, 1.0, N, K, logw);
    return reg + exp((T(1.0) - s) * logw) / (s - 1.0);
}

template double hurwitz_em<double>(double, double, bool, int, int);
template Dual hurwitz_em<Dual>(Dual, double, bool, int, int);
template double zeta_regularized<double>(double, int, int);
template Dual zeta_regularized<Dual>(Dual, int, int);
template double zeta_any<double>(double, int, int);
template Dual zeta_any<Dual>(Dual, int, int);

}  // namespace detail

double zeta_real(double s, bool regularized) {
    if (!(s > 0)) throw ArgumentError("zeta_real: s must be > 0");
    if (regularized) return detail::zeta_regularized(s);
    if (s == 1) throw ArgumentError("zeta_real: pole at s = 1");
    return detail::zeta_any(s);
}

double digamma(double x) {
    if (!(x > 0)) throw ArgumentError("digamma: x must be > 0");
    double acc = 0;
    while (x < 10) {
        acc -= 1 / x;
        x += 1;
    }
    const double x2 = 1 / (x * x);
    double series =
        x2 * (1.0 / 12 -
              x2 * (1.0 / 120 -
                    x2 * (1.0 / 252 -
                          x2 * (1.0 / 240 -
                                x2 * (1.0 / 132 - x2 * (691.0 / 32760 - x2 * (1.0 / 12)))))));
    return acc + std::log(x) - 0.5 / x - series;
}

}  // namespace twosq
