#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "ezeta/complementary.hpp"
#include "ezeta/errors.hpp"
#include "ezeta/specialfn.hpp"

using namespace ezeta;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("natural sequence is its own complementary sequence") {
    auto nat = make_sequence(SequenceSpec::natural());
    for (int k = 1; k <= 50; ++k) {
        const auto r = complementary_term(nat, k);
        CHECK(std::abs(r.inv_value.real() - 1.0 / k) <= 1e-9);
    }
}

TEST_CASE("closed-form complementary terms for the rational families") {
    auto pronic = make_sequence(SequenceSpec::pronic());
    // 1/z~_3 = 1/3 - 2/4 + 1/49 = -43/294
    CHECK(complementary_term(pronic, 3).inv_value.real() ==
          doctest::Approx(-43.0 / 294.0).epsilon(1e-12));
    auto squares = make_sequence(SequenceSpec::squares());
    CHECK(complementary_term(squares, 2).inv_value.real() ==
          doctest::Approx(3.0 / 16.0 - polygamma(1, 3.0)).epsilon(1e-10));
    auto shifted = make_sequence(SequenceSpec::shifted_linear(0.4));
    auto halfint = make_sequence(SequenceSpec::half_integer());
    for (int k = 1; k <= 30; ++k) {
        CAPTURE(k);
        CHECK(std::abs(complementary_term(pronic, k).inv_value.real() -
                       (1.0 / k - 2.0 / (k + 1.0) +
                        1.0 / ((2.0 * k + 1.0) * (2.0 * k + 1.0)))) <= 1e-8);
        CHECK(std::abs(complementary_term(squares, k).inv_value.real() -
                       (3.0 / (4.0 * k * k) - polygamma(1, k + 1.0))) <= 1e-8);
        CHECK(std::abs(complementary_term(shifted, k).inv_value.real() -
                       (polygamma(0, k + 0.4) - polygamma(0, (double)k))) <= 1e-8);
        CHECK(std::abs(complementary_term(halfint, k).inv_value.real() -
                       (polygamma(0, k + 0.5) - polygamma(0, (double)k))) <= 1e-8);
    }
}

TEST_CASE("bessel complementary terms match the first-sum/tail split") {
    const double nu = 1.3;
    auto seq = make_sequence(SequenceSpec::bessel_zeros(nu));
    const double zeta_b2 = extended_zeta(seq, 1.0).value.real();
    for (int k : {1, 2, 5, 12}) {
        double partial = 0.0;
        for (int i = 1; i <= k; ++i) partial += 1.0 / seq->term_real(i);
        const double expect = (nu + 1.0) / (2.0 * seq->term_real(k)) - (zeta_b2 - partial);
        CHECK(std::abs(complementary_term(seq, k).inv_value.real() - expect) <= 1e-7);
    }
}

TEST_CASE("finite complementary terms are exact finite sums") {
    auto seq = make_sequence(SequenceSpec::explicit_list({{1, 0}, {2, 0}, {3, 0}}));
    // 1/z~_2 = 1/(1-2) + (1/(3-2) - 1/3) = -1/3
    CHECK(complementary_term(seq, 2).inv_value.real() ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    // k = N: only the first sum contributes; k = 1: only the second.
    CHECK(complementary_term(seq, 3).inv_value.real() ==
          doctest::Approx(1.0 / (1 - 3) + 1.0 / (2 - 3)).epsilon(1e-15));
    CHECK(complementary_term(seq, 1).inv_value.real() ==
          doctest::Approx((1.0 / (2 - 1) - 1.0 / 2) + (1.0 / (3 - 1) - 1.0 / 3)).epsilon(1e-15));
    // Single-element sequence: both sums empty.
    auto single = make_sequence(SequenceSpec::explicit_list({{2, 0}}));
    CHECK(complementary_term(single, 1).inv_value == Complex{0.0, 0.0});
}

TEST_CASE("degenerate sequences are rejected") {
    auto seq = make_sequence(SequenceSpec::explicit_list({{1, 0}, {1, 0}, {2, 0}}));
    // The collision involves z_1 = z_2; querying either of them must fail.
    CHECK_THROWS_AS((void)complementary_term(seq, 1, {}), DegenerateSequenceError);
    CHECK_THROWS_AS((void)complementary_term(seq, 2, {}), DegenerateSequenceError);
    CHECK_THROWS_AS((void)complementary_zeta(seq, 3.0, {}), DegenerateSequenceError);
}

TEST_CASE("higher-order fixed point z~^(r) = n^{r-1} on the natural numbers") {
    auto nat = make_sequence(SequenceSpec::natural());
    for (int r = 1; r <= 4; ++r)
        for (int n = 1; n <= 20; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            const auto res = higher_complementary_term(nat, n, r);
            CHECK(std::abs(res.inv_value.real() - std::pow((double)n, 1.0 - r)) <= 1e-8);
        }
}

TEST_CASE("higher-order conventions at r = 1 and r = 2") {
    auto nat = make_sequence(SequenceSpec::natural());
    CHECK(higher_complementary_term(nat, 9, 1).inv_value == Complex{1.0, 0.0});
    CHECK(higher_complementary_term(nat, 7, 2).inv_value.real() ==
          doctest::Approx(complementary_term(nat, 7).inv_value.real()).epsilon(1e-13));
    CHECK(std::abs(higher_complementary_term(nat, 7, 2).inv_value.real() - 1.0 / 7.0) <= 1e-9);
}

namespace {

// Test-local brute force for the depth-r straddled-simplex sums over a finite
// sequence: 1/z~_n^(r) as the residue decomposition prescribes.
Complex brute_higher_inv(const std::vector<Complex>& z, int n1based, int r) {
    const int N = (int)z.size();
    const int n = n1based - 1;
    Complex total = 0.0;
    // Position q = 1..r for the straddled index (1-based from the top).
    // Enumerate strictly decreasing tuples (i_1 > i_2 > ... > i_{r-1})
    // avoiding n, with exactly q-1 of them above n.
    std::vector<int> pick(r - 1);
    std::function<void(int, int)> rec = [&](int level, int bound) {
        if (level == r - 1) {
            int above = 0;
            for (int v : pick)
                if (v > n) ++above;
            const int q = above + 1;
            Complex contrib;
            if (q == 1) {
                contrib = 1.0;
                for (int v : pick) contrib *= 1.0 / (z[v] - z[n]);
            } else {
                const int top = pick[0];
                contrib = z[n] / (z[top] * (z[top] - z[n]));
                for (int l = 1; l < r - 1; ++l) contrib *= 1.0 / (z[pick[l]] - z[n]);
            }
            total += contrib;
            return;
        }
        for (int i = bound; i >= 0; --i) {
            if (i == n) continue;
            pick[level] = i;
            rec(level + 1, i - 1);
        }
    };
    if (r == 1) return 1.0;
    rec(0, N - 1);
    return total;
}

}  // namespace

TEST_CASE("higher-order terms match brute force on finite sequences") {
    const std::vector<Complex> values = {{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    auto seq = make_sequence(SequenceSpec::explicit_list(values));
    for (int r = 2; r <= 4; ++r)
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            const Complex expect = brute_higher_inv(values, n, r);
            const Complex got = higher_complementary_term(seq, n, r).inv_value;
            CHECK(std::abs(got - expect) <= 1e-13 * (1.0 + std::abs(expect)));
        }
}

TEST_CASE("the literal reading of the last straddle line is not summable") {
    // The residue decomposition carries a factor for every straddled index.
    // Dropping the (z_{n_2} - z_n) factor from the bottom line, as the display
    // literally reads at r = 3, leaves sum_{n_1 > n_2 > n} z_n / (z_{n_1}
    // (z_{n_1} - z_n)), whose inner count grows linearly: the partial sums
    // drift like log N instead of settling.
    const int n = 3;
    auto partial = [&](int N) {
        double s = 0.0;
        for (int t = n + 1; t <= N; ++t)
            s += (double)(t - n - 1) * n / ((double)t * (t - n));
        return s;
    };
    const double drift1 = partial(2000) - partial(1000);
    const double drift2 = partial(4000) - partial(2000);
    CHECK(drift1 > 0.5);                         // still moving
    CHECK(drift2 == doctest::Approx(drift1).epsilon(0.05));  // by a constant per octave: log
}

TEST_CASE("complementary zeta functions") {
    auto nat = make_sequence(SequenceSpec::natural());
    CHECK(std::abs(complementary_zeta(nat, 3.0).value.real() - riemann_zeta(3.0)) <= 1e-9);
    CHECK(std::abs(complementary_zeta(nat, 2.0).value.real() - riemann_zeta(2.0)) <= 1e-8);
    auto pronic = make_sequence(SequenceSpec::pronic());
    CHECK(std::abs(complementary_zeta(pronic, 2.0).value.real()) <= 1e-8);
    const double expect3 = -7.0 + 5.0 * kPi * kPi / 6.0 - riemann_zeta(3.0);
    CHECK(std::abs(complementary_zeta(pronic, 3.0).value.real() - expect3) <= 1e-8);
}

TEST_CASE("higher-order complementary zeta on the natural numbers") {
    auto nat = make_sequence(SequenceSpec::natural());
    CHECK(std::abs(higher_complementary_zeta(nat, 2, 3.0).value.real() - riemann_zeta(3.0)) <=
          1e-9);
    // z~^(3) = n^2, so the series at s = 2 is sum n^{-2} n^{-1} = zeta(3).
    CHECK(std::abs(higher_complementary_zeta(nat, 3, 2.0).value.real() - riemann_zeta(3.0)) <=
          1e-8);
    // r = 1 convention: series of z^{1-s}.
    CHECK(std::abs(higher_complementary_zeta(nat, 1, 4.0).value.real() - riemann_zeta(3.0)) <=
          1e-10);
}

TEST_CASE("finite complementary zeta against direct evaluation") {
    const std::vector<Complex> values = {{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    auto seq = make_sequence(SequenceSpec::explicit_list(values));
    for (int r : {2, 3}) {
        Complex direct = 0.0;
        for (int n = 1; n <= 4; ++n)
            direct += brute_higher_inv(values, n, r) / std::pow(values[n - 1], Complex{2.0, 0.0});
        const EvalResult got = higher_complementary_zeta(seq, r, 3.0);
        CHECK(std::abs(got.value - direct) <= 1e-13 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("complementary zeta diverges at s = 1") {
    auto nat = make_sequence(SequenceSpec::natural());
    CHECK_THROWS_AS((void)complementary_zeta(nat, 1.0), DivergenceError);
}

TEST_CASE("memoized complementary terms are stable under concurrent readers") {
    auto seq = make_sequence(SequenceSpec::half_integer());
    std::vector<std::thread> threads;
    std::vector<double> sums(4, 0.0);
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            double s = 0.0;
            for (int k = 1; k <= 200; ++k)
                s += complementary_term(seq, k).inv_value.real();
            sums[t] = s;
        });
    for (auto& th : threads) th.join();
    for (int t = 1; t < 4; ++t) CHECK(sums[t] == sums[0]);
}
