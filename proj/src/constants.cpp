#include "twosq/constants.hpp"

#include <cmath>
#include <cstdio>

#include "twosq/dual.hpp"
#include "twosq/errors.hpp"
#include "twosq/euler.hpp"
#include "twosq/primes.hpp"
#include "twosq/progressions.hpp"
#include "twosq/special.hpp"

namespace twosq {

namespace {

double K_at_depth(int J, std::uint32_t B) { return std::exp(-0.5 * log_P(1.0, J, B)) / std::sqrt(2.0); }

cplx sqrt_checked(cplx z, const char* what) {
    if (!(z.real() > 0)) throw AccuracyError(std::string("principal-branch factor with Re <= 0: ") + what);
    return std::sqrt(z);
}

}  // namespace

double landau_ramanujan(int depth_J, std::uint32_t tail_prime_bound) {
    if (depth_J < 3) throw ArgumentError("landau_ramanujan: depth_J must be >= 3");
    if (tail_prime_bound < 1000) throw ArgumentError("landau_ramanujan: tail_prime_bound must be >= 1000");
    double a = K_at_depth(depth_J, tail_prime_bound);
    double b = K_at_depth(depth_J + 1, tail_prime_bound);
    if (std::abs(a - b) > 1e-10)
        throw AccuracyError("landau_ramanujan: depths J and J+1 disagree by " + std::to_string(std::abs(a - b)));
    return b;
}

OmegaParts omega_constant() {
    auto [L1, L1p] = dirichlet_L_deriv(1.0, chi4());
    double alpha1 = L1p.real() / L1.real();
    double beta1 = log_P(Dual::variable(1.0)).d;
    return {alpha1, beta1, std::log(2 / (kPi * kPi)) + alpha1 + beta1};
}

const Fundamentals& fundamentals() {
    static const Fundamentals f = [] {
        Fundamentals r{};
        r.K = landau_ramanujan();
        r.K_depth_gap = std::abs(K_at_depth(6, 1000) - K_at_depth(7, 1000));
        r.gamma = kEulerGamma;
        auto [L1, L1p] = dirichlet_L_deriv(1.0, chi4());
        r.L1_chi4 = L1.real();
        r.L1p_chi4 = L1p.real();
        auto w = omega_constant();
        r.alpha1 = w.alpha1;
        r.beta1 = w.beta1;
        r.omega = w.omega;
        r.z_prime_0 = r.K / std::sqrt(kPi) * r.omega;
        return r;
    }();
    return f;
}

double z_prime_0() { return fundamentals().z_prime_0; }

SDCoeffs selberg_delange_coeffs(std::uint64_t q) {
    require_prime_1mod4(q);
    const auto& f = fundamentals();
    double lq = std::log(double(q)), phi = double(q - 1);
    double c = (f.omega + f.gamma) / (2 * kPi * f.K);
    double c1 = -lq / (f.K * phi * kPi);
    double c0 = ((f.omega + f.gamma) / 2 + lq) / (f.K * kPi);
    return {c, c0, c1};
}

cplx C_q_chi(std::uint64_t q, const Character& chi) {
    if (chi.modulus != q) throw ArgumentError("C_q_chi: character modulus differs from q");
    if (chi.principal) throw ArgumentError("C_q_chi: principal character");
    auto [L0, L1] = L_special(chi);
    if (std::abs(L0) < 1e-14) return 0.0;
    Character cx = product(chi, chi4());
    cplx L1x = L_special(cx).second;
    cplx two = 1.0 - chi(2) + chi(4);
    cplx half = 1.0 - chi(2) / 2.0;
    cplx euler = log_euler_3mod4(2.0, square(chi));
    return L0 * sqrt_checked(L1, "L(1, chi)") / sqrt_checked(L1x, "L(1, chi chi_4)") * two /
           sqrt_checked(half, "1 - chi(2)/2") * std::exp(-0.5 * euler);
}

double C_v(const CharacterTable& t, const std::vector<cplx>& C, std::int64_t v, double K) {
    const double q = double(t.q), phi = q - 1;
    cplx sum = 0.0;
    for (std::size_t k = 1; k < t.chars.size(); ++k) sum += std::conj(t.chars[k](v)) * C[k];
    sum *= q / (2 * K * phi);
    if (std::abs(sum.imag()) > 1e-10) throw AccuracyError("C_ab: imaginary part above 1e-10");
    return sum.real();
}

double C_ab(std::uint64_t q, std::int64_t a, std::int64_t b, double K) {
    require_prime_1mod4(q);
    std::int64_t v = ((b - a) % std::int64_t(q) + std::int64_t(q)) % std::int64_t(q);
    if (v == 0) throw ArgumentError("C_ab: a = b mod q");
    auto t = character_table(q);
    std::vector<cplx> C(t.chars.size(), 0.0);
    for (std::size_t k = 1; k < t.chars.size(); ++k) C[k] = C_q_chi(q, t.chars[k]);
    return C_v(t, C, v, K);
}

double pair_conjecture_C1(std::uint64_t q) {
    require_prime_1mod4(q);
    const auto& f = fundamentals();
    double phi = double(q - 1), r2 = std::sqrt(2.0);
    return r2 * phi / kPi * (std::log(f.K) + (f.omega + f.gamma) / 2) + r2 * double(q) * std::log(double(q)) / kPi;
}

ConstantsBundle build_constants(std::uint64_t q, CoeffSource source) {
    require_prime_1mod4(q);
    const auto& f = fundamentals();
    ConstantsBundle b;
    b.q = q;
    b.K = f.K;
    b.gamma = f.gamma;
    b.omega = f.omega;
    b.z_prime_0 = f.z_prime_0;
    b.c1_landau = PublishedCoeffs::c1_landau;
    b.C1 = pair_conjecture_C1(q);
    b.source = (source == CoeffSource::published && q == 5) ? CoeffSource::published : CoeffSource::numeric;
    auto sd = selberg_delange_coeffs(q);
    auto hc = higher_coeffs_numeric(q, 3);
    b.c_j[1] = sd.c;
    b.c0_j[1] = sd.c0;
    b.c1_j[1] = sd.c1;
    for (int j = 2; j <= 3; ++j) {
        b.c_j[j] = hc[j - 1].c;
        if (b.source == CoeffSource::published) {
            b.c0_j[j] = PublishedCoeffs::c0[j];
            b.c1_j[j] = PublishedCoeffs::c1[j];
        } else {
            b.c0_j[j] = hc[j - 1].c0;
            b.c1_j[j] = hc[j - 1].c1;
        }
    }
    auto t = character_table(q);
    b.C_q_chi.assign(t.chars.size(), 0.0);
    for (std::size_t k = 1; k < t.chars.size(); ++k) b.C_q_chi[k] = C_q_chi(q, t.chars[k]);
    for (std::int64_t v = 1; v < std::int64_t(q); ++v) b.C_ab[int(v)] = C_v(t, b.C_q_chi, v, f.K);

    char gap[32];
    std::snprintf(gap, sizeof gap, "%.1e", f.K_depth_gap);
    b.method_tags["K"] = std::string("accelerated Euler product, depths 6 and 7 differ by ") + gap;
    b.method_tags["L1p_chi4"] = "dual-number Euler-Maclaurin Hurwitz sums";
    b.method_tags["alpha1"] = "L'(1, chi_4) / (pi/4)";
    b.method_tags["beta1"] = "derivative of the accelerated log P at 1 (dual numbers); no truncated prime sum";
    b.method_tags["gamma"] = "hard-coded 20 digits";
    b.method_tags["omega"] =
        "log(2/pi^2) + L'/L(1,chi_4) (dual-number Euler-Maclaurin) + beta_1 (derivative of accelerated log P at 1)";
    b.method_tags["z_prime_0"] = "(K/sqrt(pi)) omega";
    b.method_tags["c1_landau"] = "published";
    b.method_tags["c_j"] = "j=1 closed form; j>=2 numeric Taylor (Richardson central differences)";
    b.method_tags["c0_j,c1_j"] = b.source == CoeffSource::published
                                     ? "j=1 closed form; j=2,3 published nine-digit values"
                                     : "j=1 closed form; j=2,3 numeric Taylor";
    b.method_tags["C_q_chi"] = "L(0) finite sum, L(1) digamma, p=3 mod 4 product accelerated (depth 6)";
    b.method_tags["C_ab"] = "character sum over C_q_chi";
    b.method_tags["C1"] = "closed form in K, omega, gamma";
    return b;
}

}  // namespace twosq
