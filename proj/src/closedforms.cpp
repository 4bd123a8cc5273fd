#include "ezeta/closedforms.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "detail.hpp"
#include "ezeta/complementary.hpp"
#include "ezeta/errors.hpp"
#include "ezeta/specialfn.hpp"

namespace ezeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

const SequencePtr& natural_seq() {
    static const SequencePtr seq = make_sequence(SequenceSpec::natural());
    return seq;
}

// Exact binomial in 128-bit integers; zero outside the triangle.
__int128 binom128(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    __int128 c = 1;
    for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
}

double binom(int n, int r) { return (double)binom128(n, r); }

}  // namespace

EvalResult cf_shifted_linear(double a, int s, const SummationConfig& config) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("cf_shifted_linear: requires a in (0, 1]");
    if (s < 3) throw DomainError("cf_shifted_linear: requires s >= 3");
    const double front = hurwitz_zeta(s - 1.0, a) * (polygamma(0, a + 1.0) - polygamma(0, 1.0));
    auto term = [a, s](std::int64_t n) {
        const double l = (double)(n - 1);
        return Complex{hurwitz_zeta(s - 1.0, a + l + 1.0) / ((a + l + 1.0) * (l + 1.0)), 0.0};
    };
    EvalResult sum = compensated_sum(term, std::nullopt, config, TailDecay{(double)s - 1.0, 0});
    EvalResult out = sum;
    out.value = Complex{front, 0.0} - a * sum.value;
    out.abs_error_estimate = std::abs(a) * sum.abs_error_estimate + 1e-15 * std::abs(front);
    out.converged = out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
    return out;
}

EvalResult cf_half_integer(int s, const SummationConfig& config, HalfIntegerVariant variant) {
    if (s < 3) throw DomainError("cf_half_integer: requires s >= 3 (the s = 2 display diverges)");
    const double psi_half = polygamma(0, 0.5);
    const EvalResult t_tail = multiple_t(Composition{(double)s - 1.0, 1.0}, config);
    const double front =
        std::pow(2.0, s) *
        (t_value(s) + t_tail.value.real() + 0.5 * psi_half * t_value(s - 1.0));

    // Bilinear polygamma block at 1/2. The two variants differ in whether
    // the source identity is applied at exponent s-1 (as printed) or s.
    const int m = (variant == HalfIntegerVariant::Statement) ? s - 1 : s;
    auto psi_at_half = [&](int order) { return polygamma(order, 0.5); };
    double inner = 0.0;
    for (int k = 0; k <= m - 2; ++k)
        inner += binom(m - 2, k) * psi_at_half(k + 1) * psi_at_half(m - k - 2);
    inner -= 0.5 * psi_at_half(m);
    double fact = 1.0;
    for (int i = 2; i <= m - 1; ++i) fact *= i;  // (m-1)!
    const double sign = ((s - 1) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{s-1}
    const double block = -sign / fact * inner;

    EvalResult out;
    out.value = Complex{front + block, 0.0};
    out.terms_used = t_tail.terms_used;
    out.abs_error_estimate =
        std::pow(2.0, s) * t_tail.abs_error_estimate + 1e-14 * (std::abs(front) + std::abs(block));
    out.converged = out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
    return out;
}

EvalResult cf_half_integer_odd(int s, const SummationConfig& config,
                               HalfIntegerOddVariant variant) {
    if (s < 1) throw DomainError("cf_half_integer_odd: requires s >= 1");
    const double gamma_e = -polygamma(0, 1.0);
    const double z2s = riemann_zeta(2.0 * s);
    const double z2s1 = riemann_zeta(2.0 * s + 1.0);
    const double pow22s = std::pow(2.0, 2.0 * s);

    double middle = 0.0;
    for (int l = 1; l <= s - 1; ++l)
        middle += (std::pow(2.0, 2.0 * l) - 1.0) * riemann_zeta(2.0 * l) *
                  riemann_zeta(2.0 * s + 1.0 - 2.0 * l);

    double ksum = 0.0;
    for (int k = 0; k <= 2 * s - 3; ++k)
        ksum += (k + 1.0) * (std::pow(2.0, k + 2.0) - 1.0) * riemann_zeta(k + 2.0) *
                (std::pow(2.0, 2.0 * s - k - 1.0) - 1.0) * riemann_zeta(2.0 * s - k - 1.0);

    double value;
    if (variant == HalfIntegerOddVariant::Derived) {
        // gamma cancels against the digamma boundary term of the bilinear
        // sum, leaving a 2 log 2 contribution and coefficient 1/2 - s.
        value = 2.0 * kLn2 * (pow22s - 1.0) * z2s + (0.5 - s) * (2.0 * pow22s - 1.0) * z2s1 -
                middle + ksum / (2.0 * s - 1.0);
    } else {
        // Published display; its k = 2s-2 term carries the divergent factor
        // (2^x - 1) zeta(x) at x = 1, read here as the regularized limit
        // gamma + 2 log 2.
        const double boundary = (2.0 * s - 1.0) * (pow22s - 1.0) * z2s * (gamma_e + 2.0 * kLn2);
        value = -gamma_e * (pow22s - 1.0) * z2s + (s + 0.5) * (2.0 * pow22s - 1.0) * z2s1 -
                middle + (ksum + boundary) / (2.0 * s - 1.0);
    }
    EvalResult out;
    out.value = Complex{value, 0.0};
    out.abs_error_estimate = 1e-13 * (1.0 + std::abs(value));
    out.converged = out.abs_error_estimate <= config.rel_tol * std::max(std::abs(value), 1.0);
    return out;
}

EvalResult cf_squares(int s, const SummationConfig& config) {
    if (s < 2) throw DomainError("cf_squares: requires s >= 2");
    const EvalResult depth2 = extended_mzv(natural_seq(), Composition{2.0 * s - 2.0, 2.0}, config);
    EvalResult out = depth2;
    out.value = Complex{1.75 * riemann_zeta(2.0 * s) -
                            riemann_zeta(2.0) * riemann_zeta(2.0 * s - 2.0),
                        0.0} +
                depth2.value;
    out.abs_error_estimate = depth2.abs_error_estimate + 1e-14;
    out.converged = out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
    return out;
}

long long coeff_beta(int k, int s) {
    if (k < 0 || s < 0) throw DomainError("coeff_beta: requires k, s >= 0");
    __int128 total = 0;
    for (int i = 0; i <= s - k - 1; ++i) {
        __int128 p4 = 1;
        for (int j = 0; j < i; ++j) p4 *= 4;
        total += p4 * binom128(2 * s - 2 * i - k - 2, s - i - 1);
    }
    return (long long)total;
}

double coeff_mu(int k, int s) {
    if (k < 2 || k > s) throw DomainError("coeff_mu: requires 2 <= k <= s");
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    const double paren = binom(2 * s - 2 - k, s - 2) + sgn * binom(2 * s - 2 - k, s - 1);
    return (sgn + 2.0) * paren - (1.0 + sgn) * (double)coeff_beta(k - 1, s - 1);
}

double coeff_eta(int s) {
    if (s < 2) throw DomainError("coeff_eta: requires s >= 2");
    return (s - 0.5) * binom(2 * s - 2, s - 1) - binom(2 * s - 2, s) - 4.0 * binom(2 * s - 3, s - 2) -
           (kPi * kPi / 8.0 - 0.5) * std::pow(2.0, 2.0 * s - 2.0);
}

double coeff_mu_odd_simplified(int k, int s, bool printed_form) {
    if (k < 1 || 2 * k + 1 > s) throw DomainError("coeff_mu_odd_simplified: index out of range");
    const int top = printed_form ? 2 * s - 2 * k - 1 : 2 * s - 2 * k - 3;
    return 2.0 * k / (s - 1.0) * binom(top, s - 2);
}

double cf_pronic(int s) {
    if (s < 2) throw DomainError("cf_pronic: requires s >= 2");
    double sum = 0.0;
    for (int k = 2; k <= s; ++k) sum += coeff_mu(k, s) * riemann_zeta((double)k);
    sum += coeff_eta(s);
    return (s % 2 == 0) ? sum : -sum;
}

EvalResult cf_pronic_decomposed(int s, const SummationConfig& config) {
    if (s < 2) throw DomainError("cf_pronic_decomposed: requires s >= 2");
    auto term_a = [s](std::int64_t n) {
        const double x = (double)n;
        return Complex{1.0 / (std::pow(x, s) * std::pow(x + 1.0, s - 1.0)), 0.0};
    };
    auto term_b = [s](std::int64_t n) {
        const double x = (double)n;
        return Complex{1.0 / (std::pow(x, s - 1.0) * std::pow(x + 1.0, (double)s)), 0.0};
    };
    auto term_c = [s](std::int64_t n) {
        const double x = (double)n;
        return Complex{1.0 / (std::pow(x, s - 1.0) * std::pow(x + 1.0, s - 1.0) *
                              (2.0 * x + 1.0) * (2.0 * x + 1.0)),
                       0.0};
    };
    const EvalResult ra = compensated_sum(term_a, std::nullopt, config, TailDecay{2.0 * s - 2.0, 0});
    const EvalResult rb = compensated_sum(term_b, std::nullopt, config, TailDecay{2.0 * s - 2.0, 0});
    const EvalResult rc = compensated_sum(term_c, std::nullopt, config, TailDecay{2.0 * s - 1.0, 0});
    EvalResult out;
    out.value = ra.value - 2.0 * rb.value + rc.value;
    out.terms_used = ra.terms_used + rb.terms_used + rc.terms_used;
    out.abs_error_estimate =
        ra.abs_error_estimate + 2.0 * rb.abs_error_estimate + rc.abs_error_estimate;
    out.converged = out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
    return out;
}

EvalResult cf_bessel_complementary(double nu, int s, const SummationConfig& config) {
    if (!(nu > -1.0)) throw DomainError("cf_bessel_complementary: requires nu > -1");
    if (s < 2) throw DomainError("cf_bessel_complementary: requires s >= 2");
    const SequencePtr seq = make_sequence(SequenceSpec::bessel_zeros(nu));
    const EvalResult z1 = extended_zeta(seq, (double)s, config);
    const EvalResult z2 = extended_mzv(seq, Composition{1.0, (double)s - 1.0}, config);
    EvalResult out;
    out.value = 0.5 * (nu + 1.0) * z1.value - z2.value;
    out.terms_used = z1.terms_used + z2.terms_used;
    out.abs_error_estimate =
        0.5 * (nu + 1.0) * z1.abs_error_estimate + z2.abs_error_estimate;
    out.converged = out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
    return out;
}

double cf_bessel_small(double nu, int two_s) {
    if (!(nu > -1.0)) throw DomainError("cf_bessel_small: requires nu > -1");
    switch (two_s) {
        case 2: return 1.0 / (4.0 * (nu + 1.0));
        case 4: return 1.0 / (16.0 * (1.0 + nu) * (1.0 + nu) * (2.0 + nu));
        case 6:
            return 1.0 / (32.0 * (1.0 + nu) * (1.0 + nu) * (1.0 + nu) * (2.0 + nu) * (3.0 + nu));
        default: throw DomainError("cf_bessel_small: argument must be 2, 4 or 6");
    }
}

EvalResult cf_besselpoly_complementary(int n, int s, const SummationConfig& config) {
    if (n < 1) throw DomainError("cf_besselpoly_complementary: requires n >= 1");
    const double nu = n + 0.5;
    const SequencePtr seq = make_sequence(SequenceSpec::bessel_poly_roots(n));
    const EvalResult zs = extended_zeta(seq, (double)s, config);
    const EvalResult zs1 = extended_zeta(seq, (double)s - 1.0, config);
    const EvalResult depth2 = extended_mzv(seq, Composition{1.0, (double)s - 1.0}, config);
    EvalResult out;
    out.value = (0.5 - nu) * zs.value - zs1.value - depth2.value;
    out.terms_used = zs.terms_used + zs1.terms_used + depth2.terms_used;
    out.abs_error_estimate = (nu + 0.5) * zs.abs_error_estimate + zs1.abs_error_estimate +
                             depth2.abs_error_estimate + 1e-13;
    out.converged = out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
    return out;
}

}  // namespace ezeta
