#include <doctest.h>

#include <cmath>
#include <vector>

#include "ezeta/errors.hpp"
#include "ezeta/specialfn.hpp"

using namespace ezeta;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kGamma = 0.57721566490153286061;
}  // namespace

TEST_CASE("riemann zeta classical values") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
    CHECK(riemann_zeta(4.0) == doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)riemann_zeta(1.0), DomainError);
    CHECK_THROWS_AS((void)riemann_zeta(0.5), DomainError);
}

TEST_CASE("riemann zeta(3) against a direct summation oracle") {
    // Independent route: raw partial sums plus Richardson tail extrapolation.
    std::vector<std::pair<std::int64_t, Complex>> partials;
    double s = 0.0;
    for (std::int64_t n = 1; n <= 16000; ++n) {
        s += 1.0 / ((double)n * n * n);
        if (n == 2000 || n == 4000 || n == 8000 || n == 16000)
            partials.push_back({n, Complex{s, 0.0}});
    }
    const double oracle = tail_extrapolate(partials, TailModel{1, 1, 0}, 3.0).real();
    CHECK(riemann_zeta(3.0) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(riemann_zeta(3.0) == doctest::Approx(1.2020569031595942).epsilon(1e-14));
}

TEST_CASE("hurwitz zeta") {
    for (double s : {2.0, 3.5, 11.0})
        CHECK(hurwitz_zeta(s, 1.0) == doctest::Approx(riemann_zeta(s)).epsilon(1e-13));
    CHECK(hurwitz_zeta(2.0, 0.5) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-13));
    CHECK(hurwitz_zeta(3.0, 2.0) == doctest::Approx(riemann_zeta(3.0) - 1.0).epsilon(1e-13));
    CHECK_THROWS_AS((void)hurwitz_zeta(0.5, 1.0), DomainError);
    CHECK_THROWS_AS((void)hurwitz_zeta(2.0, 0.0), DomainError);
}

TEST_CASE("polygamma values and recurrence") {
    CHECK(polygamma(0, 1.0) == doctest::Approx(-kGamma).epsilon(1e-14));
    CHECK(polygamma(1, 0.5) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
    CHECK(polygamma(0, 8.0) - polygamma(0, 7.0) == doctest::Approx(1.0 / 7.0).epsilon(1e-14));
    // psi^(n)(1/2) = (-1)^{n+1} n! (2^{n+1} - 1) zeta(n+1)
    double factorial = 1.0;
    for (int n = 1; n <= 6; ++n) {
        factorial *= n;
        const double expect = ((n + 1) % 2 == 0 ? 1.0 : -1.0) * factorial *
                              (std::pow(2.0, n + 1) - 1.0) * riemann_zeta(n + 1.0);
        CHECK(polygamma(n, 0.5) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)polygamma(0, 0.0), DomainError);
}

TEST_CASE("t values") {
    CHECK(t_value(2.0) == doctest::Approx(kPi * kPi / 8.0).epsilon(1e-14));
    CHECK(t_value(4.0) == doctest::Approx(std::pow(kPi, 4) / 96.0).epsilon(1e-14));
    CHECK(t_value(40.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("multiple t-values") {
    for (double s : {2.0, 3.0, 5.0})
        CHECK(multiple_t(Composition{s}).value.real() ==
              doctest::Approx(t_value(s)).epsilon(1e-10));
    // t(2,2) = (t(2)^2 - t(4)) / 2 by reflection over the odd integers.
    const double expect = 0.5 * (t_value(2.0) * t_value(2.0) - t_value(4.0));
    CHECK(multiple_t(Composition{2, 2}).value.real() == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("bessel_j basics") {
    CHECK(bessel_j(0.5, 2.0) ==
          doctest::Approx(std::sqrt(2.0 / (kPi * 2.0)) * std::sin(2.0)).epsilon(1e-13));
    CHECK(bessel_j(1.0, 0.0) == 0.0);
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j_normalized(0.7, 0.0) == 1.0);
    CHECK_THROWS_AS((void)bessel_j(-1.5, 1.0), DomainError);
}

TEST_CASE("bessel_j series and asymptotic branches agree") {
    // nu = 0 switches branches at x = 16; both stay accurate around it. The
    // series oracle itself loses digits to cancellation much past x ~ 25.
    for (double x : {14.0, 15.9, 16.1, 20.0}) {
        const double series = bessel_j_normalized(0.0, x);  // series route for nu = 0
        CHECK(bessel_j(0.0, x) == doctest::Approx(series).epsilon(2e-11));
    }
}

TEST_CASE("bessel zeros: half-integer order is exactly k pi") {
    CHECK(bessel_zero(0.5, 1) == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(bessel_zero(0.5, 3) == doctest::Approx(3.0 * kPi).epsilon(1e-13));
}

TEST_CASE("first zero of J_0 against a bisection oracle") {
    // Bisection on the power series over [2, 3].
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (bessel_j_normalized(0.0, mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    const double oracle = 0.5 * (lo + hi);
    CHECK(bessel_zero(0.0, 1) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(bessel_zero(0.0, 1) == doctest::Approx(2.404825557695773).epsilon(1e-10));
}

TEST_CASE("zeros of J_{-1/2} sit on the cosine grid (k - 1/2) pi") {
    for (int k = 1; k <= 4; ++k)
        CHECK(bessel_zero(-0.5, k) == doctest::Approx((k - 0.5) * kPi).epsilon(1e-12));
}

TEST_CASE("zero interlacing across orders") {
    for (double nu : {0.0, 0.5, 1.3}) {
        for (int k = 1; k <= 50; ++k) {
            CHECK(bessel_zero(nu, k) < bessel_zero(nu + 1.0, k));
            CHECK(bessel_zero(nu + 1.0, k) < bessel_zero(nu, k + 1));
        }
    }
}

TEST_CASE("zeros approach the large-index asymptote") {
    for (double nu : {0.0, 1.3}) {
        for (int k = 10; k <= 50; k += 10) {
            const double asymptote = (k + nu / 2.0 - 0.25) * kPi;
            CHECK(std::abs(bessel_zero(nu, k) / asymptote - 1.0) < 0.01);
        }
    }
}

TEST_CASE("zero residuals are small") {
    for (double nu : {0.0, 1.3}) {
        for (int k : {1, 2, 10, 100, 1000}) {
            const double x = bessel_zero(nu, k);
            // Envelope of J is ~ sqrt(2/(pi x)); the residual should be a
            // machine-level fraction of it.
            CHECK(std::abs(bessel_j(nu, x)) <= 1e-11 * std::sqrt(2.0 / (kPi * x)) * 1e3);
        }
    }
}

TEST_CASE("weierstrass product over the zeros reproduces the function") {
    // prod_{k<=K} (1 - x^2/x_k^2) -> j_nu(x), with the omitted tail restored
    // through log-corrections from sum_{k>K} 1/x_k^2 = 1/4 - partial.
    const double x = 1.0, nu = 0.0;
    const int K = 10000;
    double log_product = 0.0;
    double partial_inv_sq = 0.0;
    for (int k = 1; k <= K; ++k) {
        const double xk = bessel_zero(nu, k);
        log_product += std::log1p(-x * x / (xk * xk));
        partial_inv_sq += 1.0 / (xk * xk);
    }
    const double tail = 0.25 - partial_inv_sq;  // zeta_B(2) = 1/(4(nu+1)) at nu=0
    const double with_tail = std::exp(log_product - x * x * tail);
    CHECK(with_tail == doctest::Approx(bessel_j_normalized(nu, x)).epsilon(1e-6));
}

TEST_CASE("bessel polynomial coefficients") {
    CHECK(bessel_poly(0).coefficients == std::vector<long long>{1});
    CHECK(bessel_poly(1).coefficients == std::vector<long long>{1, 1});
    // Coefficient formula gives z^2 + 3z + 3 at n = 2.
    CHECK(bessel_poly(2).coefficients == std::vector<long long>{3, 3, 1});
    CHECK(bessel_poly(3).coefficients == std::vector<long long>{15, 15, 6, 1});
    for (int n = 0; n <= 12; ++n) {
        const auto poly = bessel_poly(n);
        CHECK(poly.coefficients.back() == 1);
        for (long long c : poly.coefficients) CHECK(c > 0);
    }
    CHECK_THROWS_AS((void)bessel_poly(17), DomainError);
}

TEST_CASE("the printed quadratic 3 + z + z^2 is not the coefficient-formula polynomial") {
    // Recorded discrepancy: the formula's roots do not satisfy 3 + z + z^2.
    const auto roots = bessel_poly_roots(2);
    for (const auto& z : roots) {
        const Complex formula = bessel_poly(2).evaluate(z);
        const Complex printed = 3.0 + z + z * z;
        CHECK(std::abs(formula) < 1e-12);
        CHECK(std::abs(printed) > 0.5);
    }
}

TEST_CASE("bessel polynomial roots") {
    const auto one = bessel_poly_roots(1);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0] - Complex{-1.0, 0.0}) < 1e-14);
    // n = 2: roots of z^2 + 3z + 3 are (-3 +- i sqrt(3))/2.
    const auto two = bessel_poly_roots(2);
    REQUIRE(two.size() == 2);
    CHECK(std::abs(two[0] - Complex{-1.5, -std::sqrt(3.0) / 2.0}) < 1e-12);
    CHECK(std::abs(two[1] - Complex{-1.5, std::sqrt(3.0) / 2.0}) < 1e-12);
}

TEST_CASE("root lists are closed under conjugation, with small residuals") {
    for (int n = 2; n <= 12; ++n) {
        const auto roots = bessel_poly_roots(n);
        const auto poly = bessel_poly(n);
        double norm = 0.0;
        for (long long c : poly.coefficients) norm += std::abs((double)c);
        for (const auto& z : roots) {
            // Conjugate present.
            bool found = false;
            for (const auto& w : roots)
                if (std::abs(w - std::conj(z)) < 1e-9 * (1.0 + std::abs(z))) found = true;
            CHECK(found);
            const double bound = 1e-10 * norm * std::pow(std::max(1.0, std::abs(z)), n);
            CHECK(std::abs(poly.evaluate(z)) <= bound);
        }
    }
}

TEST_CASE("ahmed identity for bessel polynomial roots") {
    for (int n = 2; n <= 10; ++n) {
        const double nu = n + 0.5;
        const auto roots = bessel_poly_roots(n);
        for (size_t j = 0; j < roots.size(); ++j) {
            Complex lhs = 0.0;
            for (size_t k = 0; k < roots.size(); ++k)
                if (k != j) lhs += 1.0 / (roots[k] - roots[j]);
            const Complex rhs = -1.0 - (nu - 0.5) / roots[j];
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
}

TEST_CASE("calogero identity with extrapolated tails") {
    for (double nu : {0.0, 1.3}) {
        for (int k : {1, 3, 7}) {
            const double xk2 = std::pow(bessel_zero(nu, k), 2);
            // Partial sums over i != k with checkpointed extrapolation.
            std::vector<std::pair<std::int64_t, Complex>> partials;
            double s = 0.0;
            for (int i = 1; i <= 8000; ++i) {
                if (i != k) {
                    const double xi2 = std::pow(bessel_zero(nu, i), 2);
                    s += 1.0 / (xi2 - xk2);
                }
                if (i == 1000 || i == 2000 || i == 4000 || i == 8000)
                    partials.push_back({i, Complex{s, 0.0}});
            }
            const double lhs =
                tail_extrapolate(partials, TailModel{2.0, 9.8696, nu / 2 - 0.25}, 1.0).real();
            CHECK(std::abs(lhs - (nu + 1.0) / (2.0 * xk2)) < 1e-6);
        }
    }
}
