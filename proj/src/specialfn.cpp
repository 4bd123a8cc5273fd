#include "ezeta/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ezeta/errors.hpp"

namespace ezeta {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// B_{2k} for k = 1..15.
constexpr double kBernoulli2k[] = {
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
};

}  // namespace

double riemann_zeta(double s) {
    if (!(s > 1.0)) throw DomainError("riemann_zeta: requires s > 1");
    // Chebyshev-accelerated alternating series for eta(s).
    const int n = 48;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d, sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c / std::pow(k + 1.0, s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    double eta = sum / d;
    return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0)) throw DomainError("hurwitz_zeta: requires s > 1");
    if (!(a > 0.0)) throw DomainError("hurwitz_zeta: requires a > 0");
    // Shift the argument upward, then the asymptotic Euler-Maclaurin tail.
    const double target = std::max(18.0, 0.6 * s);
    long double head = 0.0L;
    double x = a;
    while (x < target) {
        head += std::pow((long double)x, (long double)-s);
        x += 1.0;
    }
    const long double X = x;
    long double result = head;
    result += std::pow(X, (long double)(1.0 - s)) / (s - 1.0);
    result += std::pow(X, (long double)-s) / 2.0;
    // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * X^{-s-2k+1}
    long double rising = s;                                       // (s)_{2k-1}
    long double power = std::pow(X, (long double)(-s - 1.0));     // X^{-s-2k+1}
    long double factorial = 2.0L;                                 // (2k)!
    for (int k = 1; k <= 15; ++k) {
        const long double term = kBernoulli2k[k - 1] / factorial * rising * power;
        result += term;
        if (std::abs((double)term) < 1e-18 * std::abs((double)result)) break;
        rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        power /= X * X;
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return (double)result;
}

double polygamma(int m, double x) {
    if (!(x > 0.0)) throw DomainError("polygamma: requires x > 0");
    if (m < 0 || m > 12) throw DomainError("polygamma: order m in 0..12 supported");
    // Recurrence-shift to a large argument, then the asymptotic series.
    const double target = 18.0 + 1.5 * m;
    long double shift = 0.0L;
    double t = x;
    while (t < target) {
        shift += std::pow((long double)t, (long double)(-m - 1));
        t += 1.0;
    }
    const long double X = t;
    long double tail;
    if (m == 0) {
        // psi(X) ~ ln X - 1/(2X) - sum B_{2k}/(2k X^{2k})
        tail = std::log(X) - 0.5L / X;
        long double p = 1.0L / (X * X);
        for (int k = 1; k <= 15; ++k) {
            const long double term = kBernoulli2k[k - 1] / (2.0L * k) * p;
            tail -= term;
            if (std::abs((double)term) < 1e-19 * std::max(1.0, std::abs((double)tail))) break;
            p /= X * X;
        }
        return (double)(tail - shift);
    }
    // psi^(m)(X) ~ (-1)^{m-1} [ (m-1)!/X^m + m!/(2 X^{m+1})
    //                           + sum B_{2k} (2k+m-1)!/((2k)! X^{2k+m}) ]
    long double mfact = 1.0L;
    for (int i = 2; i < m; ++i) mfact *= i;  // (m-1)!
    long double xm = std::pow(X, (long double)-m);
    tail = mfact * xm + mfact * m / 2.0L * xm / X;
    long double num = mfact * m * (m + 1);  // (2k+m-1)! / (2k)! at k=1 times (2k)! ... built below
    long double fact2k = 2.0L;              // (2k)!
    long double p = xm / (X * X);
    for (int k = 1; k <= 15; ++k) {
        const long double term = kBernoulli2k[k - 1] * num / fact2k * p;
        tail += term;
        if (std::abs((double)term) < 1e-19 * std::abs((double)tail)) break;
        num *= (2.0L * k + m) * (2.0L * k + m + 1);
        fact2k *= (2.0L * k + 1) * (2.0L * k + 2);
        p /= X * X;
    }
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
    // Bring the shifted terms back: psi^(m)(x) = psi^(m)(X) - sum (-1)^m m! / (x+j)^{m+1}
    long double full_mfact = mfact * m;  // m!
    const double shift_sign = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m
    return (double)(sign * tail - shift_sign * full_mfact * shift);
}

double t_value(double s) {
    if (!(s > 1.0)) throw DomainError("t_value: requires s > 1");
    return (1.0 - std::pow(2.0, -s)) * riemann_zeta(s);
}

EvalResult multiple_t(const Composition& comp, const SummationConfig& config) {
    static const SequencePtr odd = make_sequence(SequenceSpec::odd());
    return extended_mzv(odd, comp, config);
}

// ---------------------------------------------------------------------------
// Bessel J and its zeros
// ---------------------------------------------------------------------------

namespace {

long double bessel_series_normalized(double nu, double x) {
    // j_nu(x) = sum_k (-1)^k (x^2/4)^k / (k! (nu+1)_k), equal to 1 at x = 0.
    const long double q = (long double)x * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k <= 600; ++k) {
        term *= -q / (k * ((long double)nu + k));
        sum += term;
        if (std::abs((double)term) < 1e-24 * (std::abs((double)sum) + 1e-300)) break;
    }
    return sum;
}

double bessel_j_series(double nu, double x) {
    const long double jn = bessel_series_normalized(nu, x);
    const long double scale = std::exp((long double)nu * std::log((long double)x / 2.0L) -
                                       std::lgamma((long double)nu + 1.0L));
    return (double)(jn * scale);
}

double bessel_j_asymptotic(double nu, double x) {
    // Hankel expansion: J_nu(x) = sqrt(2/(pi x)) (P cos w - Q sin w),
    // w = x - (nu/2 + 1/4) pi.
    const long double mu = 4.0L * (long double)nu * nu;
    long double t = 1.0L, P = 1.0L, Q = 0.0L;
    long double prev = std::numeric_limits<long double>::max();
    for (int k = 1; k <= 40; ++k) {
        t *= (mu - (2.0L * k - 1) * (2.0L * k - 1)) / (8.0L * k * (long double)x);
        if (std::abs((double)t) > (double)prev) break;  // asymptotic series turned
        prev = std::abs((double)t);
        const int phase = k % 4;
        if (phase == 1) Q += t;
        else if (phase == 2) P -= t;
        else if (phase == 3) Q -= t;
        else P += t;
        if (prev < 1e-20) break;
    }
    const long double w = (long double)x - ((long double)nu / 2.0L + 0.25L) * kPiL;
    const long double amp = std::sqrt(2.0L / (kPiL * (long double)x));
    return (double)(amp * (P * std::cos(w) - Q * std::sin(w)));
}

double series_cutoff(double nu) { return std::max(16.0, 0.5 * nu * nu); }

}  // namespace

double bessel_j(double nu, double x) {
    if (!(nu > -1.0)) throw DomainError("bessel_j: requires nu > -1");
    if (!(x >= 0.0)) throw DomainError("bessel_j: requires x >= 0");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (x <= series_cutoff(nu)) return bessel_j_series(nu, x);
    return bessel_j_asymptotic(nu, x);
}

double bessel_j_normalized(double nu, double x) {
    if (!(nu > -1.0)) throw DomainError("bessel_j_normalized: requires nu > -1");
    return (double)bessel_series_normalized(nu, x);
}

namespace {

double bessel_j_prime(double nu, double x) {
    // J'_nu = (nu/x) J_nu - J_{nu+1}; keeps the order above -1.
    return nu / x * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

// Refine a bracketed simple zero with Newton steps, falling back to bisection
// whenever a step leaves the bracket.
double refine_zero(double nu, double lo, double hi, double flo) {
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double f = bessel_j(nu, x);
        if (f == 0.0) return x;
        if ((f > 0) == (flo > 0)) lo = x; else hi = x;
        const double fp = bessel_j_prime(nu, x);
        double next = x - f / fp;
        if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-16 * x) return next;
        x = next;
        if (hi - lo <= 4e-16 * x) return 0.5 * (lo + hi);
    }
    throw IterationError("bessel_zero: refinement did not converge (nu=" + std::to_string(nu) + ")");
}

// Next zero after `prev` (prev = 0 for the first). Scans for a sign change
// with a step short enough that consecutive zeros cannot share an interval.
double next_zero(double nu, double prev) {
    double start;
    if (prev == 0.0) {
        // First zero exceeds 2 sqrt(nu+1) (from sum 1/x_k^2 = 1/(4(nu+1))).
        start = 2.0 * std::sqrt(nu + 1.0) * 0.999;
    } else {
        start = prev + 0.05 + 1e-9 * prev;
    }
    const double step = 1.2;
    double x0 = start;
    double f0 = bessel_j(nu, x0);
    // Move off a landing exactly on a zero or the previous root's residual.
    int guard = 0;
    while (f0 == 0.0 && guard++ < 16) {
        x0 += 1e-9 * std::max(1.0, x0);
        f0 = bessel_j(nu, x0);
    }
    for (int it = 0; it < 100000; ++it) {
        const double x1 = x0 + step;
        const double f1 = bessel_j(nu, x1);
        if (f1 == 0.0) {
            // Grid point landed on the zero; nudge the bracket open.
            return refine_zero(nu, x1 - 1e-9 * x1, x1 + 1e-9 * x1, f0);
        }
        if ((f0 > 0) != (f1 > 0)) return refine_zero(nu, x0, x1, f0);
        x0 = x1;
        f0 = f1;
    }
    throw IterationError("bessel_zero: no sign change found (nu=" + std::to_string(nu) + ")");
}

}  // namespace

BesselZeroTable::BesselZeroTable(double nu) : nu_(nu) {
    if (!(nu > -1.0)) throw DomainError("BesselZeroTable: requires nu > -1");
}

void BesselZeroTable::ensure(std::int64_t count) const {
    std::lock_guard<std::mutex> lock(mutex_);
    while ((std::int64_t)zeros_.size() < count) {
        const double prev = zeros_.empty() ? 0.0 : zeros_.back();
        zeros_.push_back(next_zero(nu_, prev));
    }
}

double BesselZeroTable::zero(std::int64_t k) const {
    if (k < 1) throw DomainError("BesselZeroTable: index k >= 1");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (k <= (std::int64_t)zeros_.size()) return zeros_[k - 1];
    }
    ensure(k);
    std::lock_guard<std::mutex> lock(mutex_);
    return zeros_[k - 1];
}

namespace {

std::shared_ptr<BesselZeroTable> shared_zero_table(double nu) {
    static std::mutex registry_mutex;
    static std::map<double, std::shared_ptr<BesselZeroTable>> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry.find(nu);
    if (it == registry.end())
        it = registry.emplace(nu, std::make_shared<BesselZeroTable>(nu)).first;
    return it->second;
}

}  // namespace

double bessel_zero(double nu, std::int64_t k) {
    if (!(nu > -1.0)) throw DomainError("bessel_zero: requires nu > -1");
    if (k < 1) throw DomainError("bessel_zero: requires k >= 1");
    return shared_zero_table(nu)->zero(k);
}

// ---------------------------------------------------------------------------
// Bessel polynomials
// ---------------------------------------------------------------------------

BesselPolynomial bessel_poly(int n) {
    if (n < 0) throw DomainError("bessel_poly: requires n >= 0");
    if (n > 16) throw DomainError("bessel_poly: exact 64-bit coefficients need n <= 16");
    BesselPolynomial poly;
    poly.degree = n;
    poly.coefficients.assign(n + 1, 0);
    // c_m = (n+m)!/(2^m (n-m)! m!) on z^{n-m}; c_0 = 1 and
    // c_m = c_{m-1} (n+m)(n-m+1)/(2m), integral at every step.
    __int128 c = 1;
    poly.coefficients[n] = 1;
    for (int m = 1; m <= n; ++m) {
        c = c * (n + m) * (n - m + 1) / (2 * m);
        poly.coefficients[n - m] = (long long)c;
    }
    return poly;
}

double BesselPolynomial::evaluate(double x) const {
    double v = 0.0;
    for (int i = degree; i >= 0; --i) v = v * x + (double)coefficients[i];
    return v;
}

std::complex<double> BesselPolynomial::evaluate(std::complex<double> z) const {
    std::complex<double> v = 0.0;
    for (int i = degree; i >= 0; --i) v = v * z + (double)coefficients[i];
    return v;
}

std::vector<Complex> bessel_poly_roots(int n) {
    if (n < 1) throw DomainError("bessel_poly_roots: requires n >= 1");
    const BesselPolynomial poly = bessel_poly(n);
    std::vector<Complex> coeff(poly.coefficients.size());
    for (size_t i = 0; i < coeff.size(); ++i) coeff[i] = (double)poly.coefficients[i];

    auto eval = [&](Complex z) {
        Complex v = 0.0;
        for (int i = n; i >= 0; --i) v = v * z + coeff[i];
        return v;
    };
    auto eval_prime = [&](Complex z) {
        Complex v = 0.0;
        for (int i = n; i >= 1; --i) v = v * z + (double)i * coeff[i];
        return v;
    };

    // Aberth-Ehrlich simultaneous iteration from a circle sized by the
    // constant term.
    const double radius = std::pow(std::abs(coeff[0]), 1.0 / n);
    std::vector<Complex> roots(n);
    for (int j = 0; j < n; ++j) {
        const double angle = 2.0 * (double)kPiL * j / n + 0.4;
        roots[j] = radius * Complex(std::cos(angle), std::sin(angle));
    }
    bool converged = false;
    for (int it = 0; it < 400 && !converged; ++it) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            const Complex p = eval(roots[j]);
            const Complex dp = eval_prime(roots[j]);
            if (std::abs(dp) == 0.0) continue;
            const Complex w = p / dp;
            Complex repel = 0.0;
            for (int i = 0; i < n; ++i)
                if (i != j) repel += 1.0 / (roots[j] - roots[i]);
            const Complex delta = w / (1.0 - w * repel);
            roots[j] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(roots[j])));
        }
        // Corrections can dither in the last bits; Newton polishing and the
        // residual gate below finish the job.
        converged = worst < 1e-13 || (it > 80 && worst < 1e-9);
    }
    if (!converged)
        throw IterationError("bessel_poly_roots: simultaneous iteration stalled (n=" +
                             std::to_string(n) + ")");
    // Newton polish.
    for (int j = 0; j < n; ++j)
        for (int it = 0; it < 6; ++it) {
            const Complex p = eval(roots[j]);
            const Complex dp = eval_prime(roots[j]);
            if (std::abs(dp) == 0.0) break;
            const Complex step = p / dp;
            roots[j] -= step;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(roots[j]))) break;
        }
    double norm = 0.0;
    for (const Complex& c : coeff) norm += std::abs(c);
    for (const Complex& z : roots) {
        const double bound = 1e-10 * norm * std::pow(std::max(1.0, std::abs(z)), n);
        if (!(std::abs(eval(z)) <= bound))
            throw IterationError("bessel_poly_roots: residual above gate (n=" +
                                 std::to_string(n) + ")");
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& u, const Complex& v) {
        const double au = std::abs(u), av = std::abs(v);
        if (std::abs(au - av) > 1e-12 * (au + av)) return au < av;
        return u.imag() < v.imag();
    });
    return roots;
}

}  // namespace ezeta
