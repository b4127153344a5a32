#include <doctest.h>

#include <cmath>
#include <random>

#include "twosq/errors.hpp"
#include "twosq/singular.hpp"

using namespace twosq;

namespace {

constexpr double kK = 0.76422365358922066299;

// membership in S_{p,alpha}: for p = 3 mod 4, p^(2b) m with 2b < alpha and p not dividing m;
// for p = 2, 2^b m with b < alpha - 1 and m = 1 mod 4
bool in_S(std::uint64_t p, int alpha, std::uint64_t n) {
    if (n == 0) return false;
    int b = 0;
    while (n % p == 0) n /= p, ++b;
    if (p == 2) return b < alpha - 1 && n % 4 == 1;
    return b % 2 == 0 && b < alpha;
}

Rational density_oracle(std::uint64_t p, const std::vector<std::int64_t>& D, int alpha) {
    std::uint64_t m = 1;
    for (int i = 0; i < alpha; ++i) m *= p;
    std::uint64_t hits = 0;
    for (std::uint64_t a = 0; a < m; ++a) {
        bool all = true;
        for (auto d : D) all = all && in_S(p, alpha, (a + std::uint64_t(d)) % m);
        hits += all;
    }
    return Rational(hits) / Rational(m);
}

// S({0,h}) by trial division
double ck_oracle(std::int64_t h) {
    double w = 1;
    std::int64_t n = h;
    int e2 = 0;
    while (n % 2 == 0) n /= 2, ++e2;
    if (e2) w = 2 - 3 / std::pow(2.0, e2);
    for (std::int64_t p = 3; p <= n; p += 2) {
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        if (e && p % 4 == 3) w *= (1 - std::pow(double(p), -e - 1)) / (1 - 1.0 / double(p));
    }
    return w / (2 * kK * kK);
}

}  // namespace

TEST_CASE("W2") {
    using R = boost::rational<std::int64_t>;
    CHECK((W2(1) == R(1)));
    CHECK((W2(2) == R(1, 2)));
    CHECK((W2(8) == R(13, 8)));
    CHECK((W2(12) == R(5, 4)));
    CHECK_THROWS_AS(W2(0), ArgumentError);
}

TEST_CASE("Connors-Keating values") {
    CHECK(ck_singular_series(1, kK) == doctest::Approx(1 / (2 * kK * kK)).epsilon(1e-15));
    CHECK(ck_singular_series(1, kK) == doctest::Approx(0.8561).epsilon(1e-4));
    CHECK(ck_singular_series(2, kK) == doctest::Approx(1 / (4 * kK * kK)).epsilon(1e-15));
    CHECK(ck_singular_series(3, kK) == doctest::Approx(1.1415).epsilon(1e-4));
    for (std::int64_t h = 1; h <= 2000; ++h) {
        REQUIRE(ck_singular_series(h, kK) == doctest::Approx(ck_oracle(h)).epsilon(1e-13));
        REQUIRE(ck_singular_series(h, kK) > 0);
    }
}

TEST_CASE("local densities agree with an independent brute force") {
    std::vector<std::vector<std::int64_t>> configs = {{0}, {0, 1}, {0, 2}, {0, 3}, {0, 4, 9}, {0, 1, 2}, {0, 6, 18}};
    for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 11ULL})
        for (auto& D : configs)
            for (int alpha = 2; alpha <= 6; alpha += 2) {
                double size = std::pow(double(p), alpha);
                if (size > 3e5) continue;
                TupleConfig c(D);
                auto o = density_oracle(p, c.offsets, alpha);
                CHECK(local_density(p, c, alpha) == o);
                CHECK(local_density_serial(p, c, alpha) == o);
                if (p != 2) CHECK(local_density_recursive(p, c, alpha) == o);
            }
}

TEST_CASE("recursion agrees with brute force at larger levels") {
    TupleConfig c({0, 3, 9});
    for (int alpha = 2; alpha <= 12; alpha += 2) CHECK(local_density_recursive(3, c, alpha) == local_density(3, c, alpha));
}

TEST_CASE("single-point densities") {
    TupleConfig one({0});
    CHECK(stabilized_density(3, one).value == Rational(3, 4));
    CHECK(stabilized_density(7, one).value == Rational(7, 8));
    CHECK(stabilized_density(2, one).value == Rational(1, 2));
}

TEST_CASE("stabilized densities repeat exactly and match Connors-Keating ratios") {
    for (std::int64_t h : {1, 3, 6, 9, 27}) {
        TupleConfig D({0, h});
        auto d = stabilized_density(3, D);
        auto z = stabilized_density(3, TupleConfig({0}));
        Rational ratio = d.value / (z.value * z.value);
        // CK factor at 3 is (1 - 3^{-v-1})/(1 - 1/3); the 1/(2K^2) normalization absorbs 1 - 3^{-2}
        int v = 0;
        for (std::int64_t n = h; n % 3 == 0; n /= 3) ++v;
        Rational ck = v == 0 ? Rational(1) : (1 - Rational(1, std::int64_t(std::pow(3, v + 1)))) / Rational(2, 3);
        Rational expect = ck * Rational(8, 9);
        CHECK(ratio == expect);
        CHECK(d.alpha >= 2);
    }
}

TEST_CASE("budget and argument checks") {
    TupleConfig D({0, 1});
    CHECK_THROWS_AS(local_density(5, D, 2), ArgumentError);
    CHECK_THROWS_AS(local_density(3, D, 3), ArgumentError);
    CHECK_THROWS_AS(local_density(3, D, 16), ResourceError);
    CHECK_THROWS_AS(TupleConfig({1, 1}), ArgumentError);
    CHECK(TupleConfig({5, 2, 9}).offsets == std::vector<std::int64_t>{0, 3, 7});
}

TEST_CASE("general singular series matches Connors-Keating for h <= 50") {
    for (std::int64_t h = 1; h <= 50; ++h) {
        auto s = singular_series_general(TupleConfig({0, h}));
        CHECK(s.value == doctest::Approx(ck_singular_series(h, kK)).epsilon(1e-8));
        CHECK(s.method == SingularMethod::local_density_product);
    }
}

TEST_CASE("trivial configurations") {
    CHECK(singular_series_general(TupleConfig(std::vector<std::int64_t>{})).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(singular_series_general(TupleConfig({7})).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a vanishing k = 4 singular series exists among small offsets") {
    bool found = false;
    for (std::int64_t a = 1; a <= 16 && !found; ++a)
        for (std::int64_t b = a + 1; b <= 16 && !found; ++b)
            for (std::int64_t c = b + 1; c <= 16 && !found; ++c)
                found = singular_series_general(TupleConfig({0, a, b, c})).value == 0;
    CHECK(found);
    // four consecutive integers always include one that is 3 mod 4
    CHECK(singular_series_general(TupleConfig({0, 1, 2, 3})).value == 0);
}

TEST_CASE("cutoff does not change the value") {
    TupleConfig D({0, 2, 6});
    double a = singular_series_general(D, 20).value, b = singular_series_general(D, 100).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
}

TEST_CASE("S0 by inclusion-exclusion") {
    CHECK(s0(TupleConfig({4})) == doctest::Approx(0.0).epsilon(1e-14));
    for (std::int64_t h : {1, 2, 3, 10})
        CHECK(s0(TupleConfig({0, h})) == doctest::Approx(ck_singular_series(h, kK) - 1).epsilon(1e-8));
    std::mt19937 rng(3);
    for (int t = 0; t < 5; ++t) {
        std::int64_t a = 1 + rng() % 10, b = a + 1 + rng() % 10, s = rng() % 50;
        double v1 = s0(TupleConfig({0, a, b})), v2 = s0(TupleConfig({s, s + a, s + b}));
        CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));
    }
}

TEST_CASE("elementary exponential sums") {
    CHECK(E_H(1) == doctest::Approx(1 / (std::exp(1.0) - 1)).epsilon(1e-15));
    CHECK(f_vq(0, 5) == -0.5);
    CHECK(f_vq(1, 5) == doctest::Approx(0.3).epsilon(1e-15));
    for (double H : {0.7, 6.3, 100.0}) {
        double s = 0;
        for (int v = 0; v < 5; ++v) s += E_qv(5, v, H);
        CHECK(s == doctest::Approx(E_H(H)).epsilon(1e-14));
        // E(q, v; H) = H/q + f(v; q) + O(1/H)
        if (H >= 100)
            for (int v = 0; v < 5; ++v) CHECK(std::abs(E_qv(5, v, H) - H / 5 - f_vq(v, 5)) < 1 / H);
    }
}

TEST_CASE("weighted sums against direct summation") {
    const double H = 100;
    for (int k = 0; k <= 2; ++k)
        for (int v = 0; v < 5; ++v) {
            double direct = 0;
            for (std::int64_t h = v == 0 ? 5 : v; h <= 5000; h += 5)
                direct += ck_oracle(h) * std::pow(double(h), k) * std::exp(-double(h) / H);
            WeightedSumSpec s;
            s.q = 5;
            s.v = v;
            s.H = H;
            s.k = k;
            CHECK(weighted_sum(s) == doctest::Approx(direct).epsilon(1e-11));
            CHECK(weighted_sum(s) == weighted_sum_serial(s));
        }
}

TEST_CASE("weighted sum table values at H = 100") {
    CHECK(std::abs(weighted_sum_S(5, 0, 100) - 20 - (-1.3968)) < 5e-5);
    CHECK(std::abs(weighted_sum_S(5, 3, 100) - 20 - 0.1120) < 5e-5);
}

TEST_CASE("residue classes partition the total sum") {
    for (double H : {16.0, 1000.0}) {
        double s = 0;
        for (int v = 0; v < 5; ++v) s += weighted_sum_S(5, v, H);
        CHECK(s == doctest::Approx(weighted_sum_total(H)).epsilon(1e-10));
        for (int v = 0; v < 5; ++v)
            CHECK(weighted_sum_S0(5, v, H) == doctest::Approx(weighted_sum_S(5, v, H) - E_qv(5, v, H)).epsilon(1e-12));
    }
}

TEST_CASE("S0 against the expansion S - H/q - f within 2/H") {
    for (double H : {16.0, 100.0, 1000.0})
        for (int v = 0; v < 5; ++v) {
            double lhs = weighted_sum_S0(5, v, H);
            double rhs = weighted_sum_S(5, v, H) - H / 5 - f_vq(v, 5);
            CHECK(std::abs(lhs - rhs) < 2 / H);
        }
}

TEST_CASE("truncation point and budget") {
    CHECK(weighted_sum_cutoff(100, 0, 1e-10) == std::uint64_t(std::ceil(100 * std::log(3 * 100 / 1e-10))));
    WeightedSumSpec s;
    s.H = 1e9;
    CHECK_THROWS_AS(weighted_sum(s), ResourceError);
}

TEST_CASE("Montgomery-Soundararajan type sums") {
    for (std::int64_t h : {3, 7, 12}) CHECK(ms_sum(h, 1) == doctest::Approx(0.0).epsilon(1e-12));
    double expect = 3 * (ck_singular_series(1, kK) - 1) + 2 * (ck_singular_series(2, kK) - 1) +
                    (ck_singular_series(3, kK) - 1);
    CHECK(ms_sum(4, 2) == doctest::Approx(expect).epsilon(1e-8));
    CHECK_THROWS_AS(ms_sum(40, 4), ResourceError);
}
