#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ezeta/sequences.hpp"

namespace ezeta {

// Ordered exponent tuple (s_1, ..., s_k) indexing a multiple zeta value.
struct Composition {
    std::vector<double> exponents;

    Composition() = default;
    Composition(std::initializer_list<double> s) : exponents(s) {}
    explicit Composition(std::vector<double> s) : exponents(std::move(s)) {}

    int depth() const { return static_cast<int>(exponents.size()); }
    double total() const;
};

enum class Extrapolation { None, Richardson };

struct SummationConfig {
    double rel_tol = 1e-10;
    std::int64_t max_terms_per_axis = 1'000'000;
    Extrapolation extrapolation = Extrapolation::Richardson;
    int richardson_order = 4;
    std::int64_t min_terms = 32;
};

struct EvalResult {
    Complex value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    std::int64_t terms_used = 0;
    bool converged = false;
};

// Known decay of a series tail: sum_{n>N} a_n ~ N^{-leading_exponent} times a
// polynomial in log N of degree log_power.
struct TailDecay {
    double leading_exponent = 1.0;
    int log_power = 0;
};

// Compensated (Neumaier) accumulation of a restartable term stream.
// `term(n)` is called for n = 1, 2, ...; `length` bounds the stream when
// finite. When `decay` is given and Richardson extrapolation is enabled, the
// partial sums are extrapolated through geometrically spaced checkpoints;
// without it the decay exponent is estimated from the data.
EvalResult compensated_sum(const std::function<Complex(std::int64_t)>& term,
                           std::optional<std::int64_t> length,
                           const SummationConfig& config,
                           std::optional<TailDecay> decay = std::nullopt,
                           std::int64_t preferred_top = 0);

// Depth-1 extended zeta: sum_{n>=1} z_n^{-s}.
EvalResult extended_zeta(const SequencePtr& seq, double s, const SummationConfig& config = {});

// Extended MZV over the strict simplex n_1 > ... > n_k >= 1, computed with
// incremental inner sums so the cost is linear per axis.
EvalResult extended_mzv(const SequencePtr& seq, const Composition& comp,
                        const SummationConfig& config = {});

// Star variant over the weak simplex n_1 >= ... >= n_k >= 1.
EvalResult extended_star_mzv(const SequencePtr& seq, const Composition& comp,
                             const SummationConfig& config = {});

// Richardson-style limit from partial sums at geometrically spaced truncation
// points, assuming tail decay N^(1 - p*target_exponent) with p from `model`.
// Requires at least 3 partial sums.
Complex tail_extrapolate(const std::vector<std::pair<std::int64_t, Complex>>& partials,
                         const TailModel& model, double target_exponent);

// Throws DivergenceError naming the failing prefix when the composition
// violates the convergence gate p*(s_1+...+s_j) > j for the sequence's tail
// growth exponent p. Finite sequences always pass.
void check_convergence_gate(const SequenceSource& seq, const Composition& comp);

}  // namespace ezeta
