#pragma once

#include <cmath>
#include <vector>

namespace twosq {

// order-n central difference with points x + (n/2 - k) h; even-power error series in h
template <class Fn>
Derivative richardson_derivative(Fn&& f, double x, int order, double h0, int levels) {
    std::vector<std::vector<double>> R(levels);
    double h = h0;
    for (int i = 0; i < levels; ++i, h /= 2) {
        double sum = 0, binom = 1;
        for (int k = 0; k <= order; ++k) {
            sum += ((k & 1) ? -binom : binom) * f(x + (0.5 * order - k) * h);
            binom = binom * (order - k) / (k + 1);
        }
        R[i].push_back(sum / std::pow(h, order));
        double p = 4;
        for (int m = 1; m <= i; ++m, p *= 4)
            R[i].push_back(R[i][m - 1] + (R[i][m - 1] - R[i - 1][m - 1]) / (p - 1));
    }
    double best = R[levels - 1][levels - 1];
    double err = levels > 1 ? std::abs(best - R[levels - 2][levels - 2]) : INFINITY;
    return {best, err};
}

}  // namespace twosq
