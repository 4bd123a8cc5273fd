#include <doctest.h>

#include <cmath>

#include "ezeta/closedforms.hpp"
#include "ezeta/errors.hpp"
#include "ezeta/identities.hpp"
#include "ezeta/specialfn.hpp"

using namespace ezeta;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("reflection reports") {
    CHECK(verify_reflection(make_sequence(SequenceSpec::natural()), 2, 2).residual < 1e-9);
    CHECK(verify_reflection(make_sequence(SequenceSpec::odd()), 3, 2).residual < 1e-8);
    auto fin = make_sequence(SequenceSpec::explicit_list({{1, 0}, {2, 0}, {3, 0}}));
    const auto r = verify_reflection(fin, 1, 1);
    CHECK(r.passed);
    CHECK(r.residual < 1e-12);
}

TEST_CASE("euler generalization reports") {
    const auto nat = verify_euler_generalized(make_sequence(SequenceSpec::natural()));
    CHECK(nat.passed);
    CHECK(nat.residual < 1e-9);
    CHECK(std::abs(nat.lhs.real() - riemann_zeta(3.0)) < 1e-9);

    const auto pronic = verify_euler_generalized(make_sequence(SequenceSpec::pronic()));
    CHECK(pronic.passed);
    CHECK(pronic.residual < 1e-7);
    CHECK(std::abs(pronic.rhs.real() - cf_pronic(3)) < 1e-8);

    const auto bessel = verify_euler_generalized(make_sequence(SequenceSpec::bessel_zeros(1.3)));
    CHECK(bessel.passed);
    CHECK(bessel.residual < 1e-6);
}

TEST_CASE("finite rational identity") {
    auto abc = make_sequence(SequenceSpec::explicit_list({{1, 0}, {2, 0}, {3, 0}}));
    const auto r = verify_rational_identity(abc, Complex{0.5, 0.0});
    CHECK(r.passed);
    CHECK(r.residual < 1e-12);
    auto ab = make_sequence(SequenceSpec::explicit_list({{1, 0}, {2, 0}}));
    const auto r0 = verify_rational_identity(ab, Complex{0.0, 0.0});
    CHECK(r0.residual < 1e-15);
    CHECK(r0.lhs.real() == doctest::Approx(0.25).epsilon(1e-14));  // 1/(2*2) * 1/1
    CHECK_THROWS_AS((void)verify_rational_identity(ab, Complex{-1.0, 0.0}), DomainError);
}

TEST_CASE("taylor-coefficient sum reports") {
    const auto nat = verify_taylor_sum(make_sequence(SequenceSpec::natural()), 1);
    CHECK(nat.passed);
    CHECK(nat.residual < 1e-9);
    CHECK(std::abs(nat.lhs.real() - std::pow(kPi, 4) / 90.0) < 1e-9);  // zeta(4)

    const auto euler_again = verify_taylor_sum(make_sequence(SequenceSpec::natural()), 0);
    CHECK(std::abs(euler_again.lhs.real() - riemann_zeta(3.0)) < 1e-9);

    CHECK(verify_taylor_sum(make_sequence(SequenceSpec::odd()), 2).residual < 1e-8);
}

TEST_CASE("general rational identity") {
    auto abc = make_sequence(SequenceSpec::explicit_list({{1, 0}, {2, 0}, {3, 0}}));
    CHECK(verify_general_rational(abc, 2, Complex{0.7, 0.0}).residual < 1e-12);
    auto abcd = make_sequence(SequenceSpec::explicit_list({{1, 0}, {2, 0}, {3, 0}, {4, 0}}));
    CHECK(verify_general_rational(abcd, 3, Complex{-0.2, 0.0}).residual < 1e-12);
    // r = 2 states the same identity as the depth-2 version.
    const auto a = verify_general_rational(abc, 2, Complex{0.5, 0.0});
    const auto b = verify_rational_identity(abc, Complex{0.5, 0.0});
    CHECK(std::abs(a.lhs - b.lhs) < 1e-14);
    CHECK(std::abs(a.rhs - b.rhs) < 1e-14);
}

TEST_CASE("sum formula") {
    const auto r21 = verify_sum_formula(make_sequence(SequenceSpec::natural()), 2, 1);
    CHECK(r21.passed);
    CHECK(r21.residual < 1e-8);
    CHECK(std::abs(r21.rhs.real() - std::pow(kPi, 4) / 90.0) < 1e-8);  // zeta(4)

    const auto r30 = verify_sum_formula(make_sequence(SequenceSpec::natural()), 3, 0);
    CHECK(r30.passed);
    CHECK(std::abs(r30.lhs.real() - std::pow(kPi, 4) / 90.0) < 1e-8);  // zeta(2,1,1) = zeta(4)
    CHECK(r30.notes.find("s+3") != std::string::npos);  // index adjudication recorded

    CHECK(verify_sum_formula(make_sequence(SequenceSpec::odd()), 2, 1).residual < 1e-7);
}

TEST_CASE("reduction formula") {
    const auto s2 = verify_reduction(make_sequence(SequenceSpec::natural()), 2);
    CHECK(s2.passed);
    CHECK(std::abs(s2.lhs.real() - riemann_zeta(3.0)) < 1e-9);
    CHECK(verify_reduction(make_sequence(SequenceSpec::natural()), 4).residual < 1e-9);
    const auto hi = verify_reduction(make_sequence(SequenceSpec::half_integer()), 3);
    CHECK(hi.passed);
    CHECK(hi.residual < 1e-7);
    // The zeta~(4) piece matches its closed form.
    CHECK(std::abs(complementary_zeta(make_sequence(SequenceSpec::half_integer()), 4.0)
                       .value.real() -
                   cf_half_integer(4).value.real()) < 1e-7);
}

TEST_CASE("hirose generalization") {
    const auto nat = verify_hirose(make_sequence(SequenceSpec::natural()), 5.0);
    CHECK(nat.passed);
    CHECK(nat.residual < 1e-7);
    CHECK(std::abs(nat.rhs.real() - riemann_zeta(5.0)) < 1e-9);

    const auto pronic = verify_hirose(make_sequence(SequenceSpec::pronic()), 5.0);
    CHECK(pronic.passed);
    CHECK(pronic.residual < 1e-6);
    CHECK(std::abs(pronic.rhs.real() - cf_pronic(5)) < 1e-7);

    const auto fin = verify_hirose(make_sequence(SequenceSpec::explicit_list(
                                       {{1, 0}, {2, 0}, {3, 0}})),
                                   6.0);
    CHECK(fin.passed);
    CHECK(fin.residual < 1e-10);
    CHECK_THROWS_AS(
        (void)verify_hirose(make_sequence(SequenceSpec::natural()), 3.0), DomainError);
}

TEST_CASE("bessel identity") {
    const auto half = verify_bessel(0.5, 0);
    CHECK(half.passed);
    // Corollary is algebraically exact in the rational forms.
    CHECK(std::abs(2.0 / (0.5 + 3.0) * cf_bessel_small(0.5, 2) * cf_bessel_small(0.5, 4) -
                   cf_bessel_small(0.5, 6)) < 1e-18);
    const auto nu0 = verify_bessel(0.0, 0);
    CHECK(nu0.passed);
    CHECK(std::abs(nu0.lhs.real() - 1.0 / 192.0) < 1e-7);
    CHECK(verify_bessel(1.3, 1).residual < 1e-6);
}

TEST_CASE("bessel polynomial identity") {
    CHECK(verify_besselpoly(2, 0).residual < 1e-10);
    CHECK(verify_besselpoly(5, 1).residual < 1e-9);
    const auto skipped = verify_besselpoly(1, 0);
    CHECK(skipped.passed);
    CHECK(skipped.notes.find("skipped") != std::string::npos);
}

TEST_CASE("run_suite rejects unknown ids before evaluating") {
    std::vector<SuiteItem> items = {{"euler", SequenceSpec::natural(), {}},
                                    {"no_such_identity", SequenceSpec::natural(), {}}};
    CHECK_THROWS_WITH_AS(run_suite(items), doctest::Contains("no_such_identity"), DomainError);
    CHECK(run_suite({}).empty());
}

TEST_CASE("suite items can pin a tolerance; failures are reported, not thrown") {
    std::vector<SuiteItem> items = {
        {"euler", SequenceSpec::natural(), {{"tolerance", 0.0}}}};
    const auto reports = run_suite(items);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].tolerance == 0.0);
    // With the tolerance forced to zero, passing hinges on the error budget
    // alone; either way the invariant holds and nothing throws.
    CHECK(reports[0].passed ==
          (reports[0].residual <= std::max(0.0, 4.0 * reports[0].error_budget)));
}

TEST_CASE("report invariant: passed iff residual within allowance") {
    for (const auto& spec :
         {SequenceSpec::natural(), SequenceSpec::squares(), SequenceSpec::pronic()}) {
        const auto r = verify_euler_generalized(make_sequence(spec));
        CHECK(r.passed == (r.residual <= std::max(r.tolerance, 4.0 * r.error_budget)));
    }
}

TEST_CASE("divergence is recorded in the report rather than thrown") {
    // s = 4 keeps the precondition but the gate fails midway for pronic at
    // a negative inner exponent only when the tail exponent is too small;
    // use reflection at barely-divergent arguments instead.
    auto nat = make_sequence(SequenceSpec::natural());
    const auto r = verify_reflection(nat, 1.0, 2.0);  // zeta(1) diverges
    CHECK_FALSE(r.passed);
    CHECK(r.notes.find("divergence") != std::string::npos);
}

TEST_CASE("halving the tolerance does not worsen residuals beyond budget changes") {
    auto seq = make_sequence(SequenceSpec::squares());
    SummationConfig loose, tight;
    loose.rel_tol = 1e-8;
    tight.rel_tol = 5e-9;
    const auto a = verify_euler_generalized(seq, loose);
    const auto b = verify_euler_generalized(seq, tight);
    CHECK(b.residual <=
          a.residual + std::abs(a.error_budget - b.error_budget) + 1e-12);
}
