#pragma once

#include <complex>
#include <cstdint>
#include <mutex>
#include <vector>

#include "ezeta/summation.hpp"

namespace ezeta {

// Riemann zeta for real s > 1, via accelerated alternating (eta) series.
double riemann_zeta(double s);

// Hurwitz zeta: sum_{n>=0} (a+n)^{-s}, s > 1, a > 0.
double hurwitz_zeta(double s, double a);

// Polygamma psi^(m)(x) for x > 0; m = 0 is the digamma function.
double polygamma(int m, double x);

// t(s) = (1 - 2^{-s}) zeta(s), s > 1.
double t_value(double s);

// Multiple t-value: extended MZV over the odd integers z_k = 2k - 1.
EvalResult multiple_t(const Composition& comp, const SummationConfig& config = {});

// Bessel function of the first kind, nu > -1, x >= 0.
double bessel_j(double nu, double x);

// Normalized form with value 1 at the origin (power series; |x| modest).
double bessel_j_normalized(double nu, double x);

// k-th positive zero of J_nu, nu > -1, k >= 1.
double bessel_zero(double nu, std::int64_t k);

// Growing, synchronized table of positive zeros of J_nu.
class BesselZeroTable {
public:
    explicit BesselZeroTable(double nu);
    double nu() const { return nu_; }
    double zero(std::int64_t k) const;  // 1-based
    void ensure(std::int64_t count) const;

private:
    double nu_;
    mutable std::mutex mutex_;
    mutable std::vector<double> zeros_;
};

// Degree-n Bessel polynomial with exact integer coefficients
// (n+m)!/(2^m (n-m)! m!) on z^{n-m}. Supported for n <= 16, where the
// coefficients fit a 64-bit integer.
struct BesselPolynomial {
    int degree = 0;
    std::vector<long long> coefficients;  // ascending powers, size degree+1

    double evaluate(double x) const;
    std::complex<double> evaluate(std::complex<double> z) const;
};

BesselPolynomial bessel_poly(int n);

// All n roots of the degree-n Bessel polynomial, ordered by increasing
// magnitude, ties by increasing imaginary part. Simultaneous-iteration
// root finding polished by Newton steps.
std::vector<Complex> bessel_poly_roots(int n);

}  // namespace ezeta
