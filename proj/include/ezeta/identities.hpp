#pragma once

#include <map>
#include <string>
#include <vector>

#include "ezeta/complementary.hpp"
#include "ezeta/sequences.hpp"
#include "ezeta/summation.hpp"

namespace ezeta {

struct IdentityReport {
    std::string identity_id;
    SequenceSpec sequence;
    std::map<std::string, double> parameters;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double residual = 0.0;  // |lhs - rhs|
    double tolerance = 0.0;
    bool passed = false;  // residual <= max(tolerance, 4 * error_budget)
    double error_budget = 0.0;
    std::string notes;  // adjudication remarks, skip reasons, failures
};

// Default tolerances: exact/finite checks, fast-converging infinite series,
// and tail-extrapolated Bessel sums.
inline constexpr double kToleranceExact = 1e-9;
inline constexpr double kToleranceSeries = 1e-8;
inline constexpr double kToleranceBessel = 1e-6;

// zeta_Z(s,t) + zeta_Z(t,s) + zeta_Z(s+t) = zeta_Z(s) zeta_Z(t).
IdentityReport verify_reflection(const SequencePtr& seq, double s, double t,
                                 const SummationConfig& config = {});

// zeta_Z(2,1) = zeta~_Z(3).
IdentityReport verify_euler_generalized(const SequencePtr& seq,
                                        const SummationConfig& config = {});

// Finite rational identity:
// sum_n 1/(z_n (z_n+x)) sum_{m<n} 1/(z_m+x) = sum_n (1/z~_n) / (z_n (z_n+x)).
IdentityReport verify_rational_identity(const SequencePtr& seq, Complex x,
                                        const SummationConfig& config = {});

// zeta~_Z(s+3) = sum_{a+b=s} zeta_Z(2+a, 1+b).
IdentityReport verify_taylor_sum(const SequencePtr& seq, int s,
                                 const SummationConfig& config = {});

// Finite depth-r rational identity:
// sum_{n_1>...>n_r} 1/(z_{n_1} (z_{n_1}+x)...(z_{n_r}+x))
//   = sum_n (1/z~_n^(r)) / (z_n (z_n+x)).
IdentityReport verify_general_rational(const SequencePtr& seq, int r, Complex x,
                                       const SummationConfig& config = {});

// sum_{s_1+...+s_r=s} zeta_Z(s_1+2, s_2+1, ..., s_r+1) = the series
// sum_n 1/(z~_n^(r) z_n^{s+2}). Both index conventions for the right side are
// evaluated and the report notes which one the numerics support.
IdentityReport verify_sum_formula(const SequencePtr& seq, int r, int s,
                                  const SummationConfig& config = {});

// zeta_Z(s,1) = zeta~_Z(s+1) + (s/2 - 1) zeta_Z(s+1)
//               - (1/2) sum_{k=1}^{s-2} zeta_Z(k+1) zeta_Z(s-k).
IdentityReport verify_reduction(const SequencePtr& seq, int s,
                                const SummationConfig& config = {});

// sum_{n>=0} (zeta_Z(n+2, s-n-2) - zeta_Z(s+n, -n)) = zeta~_Z(s), s >= 4.
IdentityReport verify_hirose(const SequencePtr& seq, double s,
                             const SummationConfig& config = {});

// Bessel MZV identity over z = x_{nu,k}^2:
// zeta_Z(s+3) = (2/(nu+1)) sum_{a+b=s, a>=-1} zeta_Z(2+a, 1+b); at s = 0 the
// corollary zeta_B(6) = (2/(nu+3)) zeta_B(2) zeta_B(4) is also checked
// against the exact rational forms.
IdentityReport verify_bessel(double nu, int s, const SummationConfig& config = {});

// Bessel polynomial case, nu = n + 1/2:
// zeta_Z(s+3) = (2/(1-2nu)) [zeta_Z(s+2) + sum_{a>=-1, a+b=s} zeta_Z(2+a, 1+b)];
// at s = 0: zeta_Z(2) + zeta_Z(1) zeta_Z(2) = (3/2 - nu) zeta_Z(3).
// n = 1 produces a skipped-with-reason report (empty depth-2 domain).
IdentityReport verify_besselpoly(int n, int s, const SummationConfig& config = {});

struct SuiteItem {
    std::string identity_id;
    SequenceSpec sequence;
    std::map<std::string, double> parameters;
};

// Evaluates every item in order; unknown identity ids throw before any
// evaluation. Mathematical failures are recorded in the reports, not thrown.
std::vector<IdentityReport> run_suite(const std::vector<SuiteItem>& items,
                                      const SummationConfig& config = {});

// The standard verification grid across all built-in families.
std::vector<SuiteItem> default_suite();

}  // namespace ezeta
