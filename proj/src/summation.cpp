#include "ezeta/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "detail.hpp"
#include "ezeta/errors.hpp"

namespace ezeta {

double Composition::total() const {
    double t = 0.0;
    for (double s : exponents) t += s;
    return t;
}

namespace detail {

// z^{-s} with an exact-multiplication fast path for integer s.
Complex pow_minus(const Complex& z, double s, bool zreal) {
    const double rs = std::round(s);
    if (rs == s && std::abs(rs) <= 64.0) {
        int n = (int)rs;
        if (n == 0) return {1.0, 0.0};
        const bool neg = n < 0;
        n = std::abs(n);
        if (zreal) {
            double base = z.real(), acc = 1.0;
            for (int i = 0; i < n; ++i) acc *= base;
            return {neg ? acc : 1.0 / acc, 0.0};
        }
        Complex acc{1.0, 0.0};
        for (int i = 0; i < n; ++i) acc *= z;
        return neg ? acc : Complex{1.0, 0.0} / acc;
    }
    if (zreal && z.real() > 0.0) return {std::pow(z.real(), -s), 0.0};
    return std::pow(z, Complex{-s, 0.0});
}

namespace {

// One Richardson elimination stage for decay exponent `e` over nodes that
// need not be uniformly spaced.
void eliminate(std::vector<TablePoint>& t, double e) {
    std::vector<TablePoint> next;
    next.reserve(t.size() - 1);
    for (size_t j = 0; j + 1 < t.size(); ++j) {
        const double ratio = t[j + 1].n / t[j].n;
        const double f = std::pow(ratio, e) - 1.0;
        const Complex v = t[j + 1].value + (t[j + 1].value - t[j].value) / f;
        next.push_back({t[j + 1].n, v});
    }
    t = std::move(next);
}

}  // namespace

// Extrapolates checkpointed partial sums. With a known TailDecay the stage
// exponents are beta, beta+1, ... each repeated (log_power+1) times, which
// also annihilates polynomial-in-log tail factors. Without one, the leading
// exponent is estimated from the last three partials and the usual
// integer-step schedule follows from it.
ExtrapolationResult extrapolate_checkpoints(const std::vector<TablePoint>& points,
                                            std::optional<TailDecay> decay) {
    std::vector<TablePoint> t = points;
    if (!decay) {
        if (t.size() < 3) return {t.back().value, 0.0};
        // Per-octave exponent estimates from consecutive delta ratios; the
        // estimates themselves carry an O(1/N) bias, removed by one more
        // extrapolation step when a second estimate is available.
        std::vector<double> estimates;
        for (size_t j = t.size(); j-- > 2;) {
            const double d_hi = std::abs(t[j].value - t[j - 1].value);
            const double d_lo = std::abs(t[j - 1].value - t[j - 2].value);
            const double ratio = t[j].n / t[j - 1].n;
            if (d_hi == 0.0) return {t.back().value, 0.0};
            const double r = d_lo / d_hi;
            if (!(r > 1.05) || !(ratio > 1.0)) break;
            estimates.push_back(std::log(r) / std::log(ratio));
            if (estimates.size() == 2) break;
        }
        if (estimates.empty())
            return {t.back().value,
                    std::abs(t.back().value - t[t.size() - 2].value)};  // no usable decay
        double e0 = estimates[0];
        if (estimates.size() == 2) {
            const double refined = 2.0 * estimates[0] - estimates[1];
            if (std::abs(refined - e0) < 0.5) e0 = refined;
        }
        decay = TailDecay{e0, 0};
    }
    double spread = 0.0;
    int stage = 0;
    while (t.size() >= 2) {
        const Complex before = t.back().value;
        const double delta = std::abs(before - t[t.size() - 2].value);
        if (delta == 0.0) break;
        const int repeats = decay->log_power + 1;
        const double e = decay->leading_exponent + stage / repeats;
        eliminate(t, e);
        spread = std::abs(t.back().value - before);
        ++stage;
    }
    if (t.size() >= 2) spread = std::max(spread, std::abs(t.back().value - t[t.size() - 2].value));
    return {t.back().value, spread};
}

}  // namespace detail

using detail::Accumulator;
using detail::pow_minus;
using detail::TablePoint;

EvalResult compensated_sum(const std::function<Complex(std::int64_t)>& term,
                           std::optional<std::int64_t> length, const SummationConfig& config,
                           std::optional<TailDecay> decay, std::int64_t preferred_top) {
    Accumulator acc;
    EvalResult out;

    if (length) {
        for (std::int64_t n = 1; n <= *length; ++n) acc.add(term(n));
        out.value = acc.value();
        out.terms_used = *length;
        out.abs_error_estimate = 4.0 * std::numeric_limits<double>::epsilon() * acc.abs_sum;
        out.converged =
            out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
        return out;
    }

    const std::int64_t default_top = 32768;
    std::int64_t top = std::min(config.max_terms_per_axis,
                                preferred_top > 0 ? preferred_top : default_top);
    top = std::max<std::int64_t>(top, config.min_terms);

    int stages = config.richardson_order + (decay ? decay->log_power : 0);
    stages = std::min(stages, 8);
    std::int64_t base = top >> stages;
    while (base < std::max<std::int64_t>(16, config.min_terms) && stages > 1) {
        --stages;
        base = top >> stages;
    }
    // Keep checkpoint ratios exactly 2 so eliminations stay well conditioned.
    top = base << stages;

    std::vector<TablePoint> checkpoints;
    checkpoints.reserve(stages + 1);
    std::int64_t next_checkpoint = base;

    int tiny_run = 0;
    int settled = 0;
    bool early_exact = false;
    std::int64_t n = 1;
    for (; n <= top; ++n) {
        const Complex t = term(n);
        acc.add(t);
        // Streams that die off fast need no extrapolation.
        const double mag = std::abs(t.real()) + std::abs(t.imag());
        if (mag <= 1e-17 * (std::abs(acc.value()) + 1e-300))
            ++tiny_run;
        else
            tiny_run = 0;
        if (tiny_run >= 12 && n >= config.min_terms) {
            early_exact = true;
            break;
        }
        if (n == next_checkpoint) {
            checkpoints.push_back({(double)n, acc.value()});
            next_checkpoint = std::min(next_checkpoint * 2, top);
            if (checkpoints.size() >= 2) {
                const double delta =
                    std::abs(checkpoints.back().value - checkpoints[checkpoints.size() - 2].value);
                if (delta <= 0.02 * config.rel_tol * std::max(std::abs(acc.value()), 1.0))
                    ++settled;
                else
                    settled = 0;
                if (settled >= 2) break;
            }
        }
    }
    out.terms_used = std::min(n, top);
    const double noise =
        2.0 * std::numeric_limits<double>::epsilon() * acc.abs_sum * (1.0 + stages);

    if (early_exact || settled >= 2 || config.extrapolation == Extrapolation::None ||
        checkpoints.size() < 3) {
        out.value = acc.value();
        double delta = 0.0;
        if (checkpoints.size() >= 2)
            delta = std::abs(out.value - checkpoints[checkpoints.size() - 2].value);
        if (early_exact) delta = 0.0;
        out.abs_error_estimate = 4.0 * delta + noise;
        out.converged =
            out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
        return out;
    }

    const detail::ExtrapolationResult ex = detail::extrapolate_checkpoints(checkpoints, decay);
    out.value = ex.value;
    out.abs_error_estimate = 4.0 * ex.spread + noise;
    out.converged = out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
    return out;
}

void check_convergence_gate(const SequenceSource& seq, const Composition& comp) {
    if (comp.depth() < 1) throw DomainError("composition must have depth >= 1");
    if (seq.finite()) return;
    const auto model = seq.tail_model();
    if (!model) throw DivergenceError("infinite sequence without a tail model");
    const double p = model->growth_exponent;
    double prefix = 0.0;
    for (int j = 0; j < comp.depth(); ++j) {
        prefix += comp.exponents[j];
        if (!(p * prefix > (double)(j + 1) + 1e-12)) {
            std::ostringstream os;
            os << "divergent series: prefix " << (j + 1) << " of composition has exponent sum "
               << prefix << ", needs > " << (j + 1) / p;
            throw DivergenceError(os.str());
        }
    }
}

namespace {

TailDecay mzv_tail_decay(const SequenceSource& seq, const Composition& comp) {
    const auto model = seq.tail_model();
    const double p = model ? model->growth_exponent : 1.0;
    double gamma = std::numeric_limits<double>::max();
    double prefix = 0.0;
    std::vector<double> margins;
    for (int j = 0; j < comp.depth(); ++j) {
        prefix += comp.exponents[j];
        margins.push_back(p * prefix - (double)(j + 1));
        gamma = std::min(gamma, margins.back());
    }
    int at_min = 0;
    for (double m : margins)
        if (m < gamma + 1e-9) ++at_min;
    return {gamma, at_min - 1};
}

bool has_negative(const Composition& comp) {
    for (double s : comp.exponents)
        if (s < 0.0) return true;
    return false;
}

}  // namespace

EvalResult extended_zeta(const SequencePtr& seq, double s, const SummationConfig& config) {
    Composition comp{s};
    check_convergence_gate(*seq, comp);
    const bool zreal = seq->real_valued();
    auto term = [seq, s, zreal](std::int64_t n) { return pow_minus(seq->term(n), s, zreal); };
    if (seq->finite()) return compensated_sum(term, seq->length(), config);
    return compensated_sum(term, std::nullopt, config, mzv_tail_decay(*seq, comp));
}

EvalResult extended_mzv(const SequencePtr& seq, const Composition& comp,
                        const SummationConfig& config) {
    const int depth = comp.depth();
    if (depth < 1) throw DomainError("extended_mzv: composition depth >= 1");
    check_convergence_gate(*seq, comp);
    if (depth == 1) return extended_zeta(seq, comp.exponents[0], config);
    if (has_negative(comp)) {
        if (depth != 2 || comp.exponents[0] < 0.0 || comp.exponents[1] >= 0.0)
            throw DomainError(
                "extended_mzv: negative exponents supported only in the inner slot at depth 2");
        // Scaled inner accumulator keeps the growing powers bounded:
        // term(n) = z_n^{-(s1+s2)} sum_{m<n} (z_m/z_n)^{-s2}.
        const double s1 = comp.exponents[0], s2 = comp.exponents[1];
        const bool zreal = seq->real_valued();
        struct State {
            Complex scaled_inner{0.0, 0.0};
            Complex prev_z{0.0, 0.0};
        };
        auto state = std::make_shared<State>();
        auto term = [seq, s1, s2, zreal, state](std::int64_t n) {
            const Complex z = seq->term(n);
            if (n > 1) {
                const Complex ratio = state->prev_z / z;
                state->scaled_inner =
                    pow_minus(ratio, s2, false) * (state->scaled_inner + Complex{1.0, 0.0});
            }
            state->prev_z = z;
            return pow_minus(z, s1 + s2, zreal) * state->scaled_inner;
        };
        if (seq->finite()) return compensated_sum(term, seq->length(), config);
        return compensated_sum(term, std::nullopt, config, mzv_tail_decay(*seq, comp));
    }

    const bool zreal = seq->real_valued();
    struct State {
        std::vector<Accumulator> inner;  // inner[j]: sum over the simplex below n, depth j..k
    };
    auto state = std::make_shared<State>();
    state->inner.resize(depth + 1);
    auto exps = comp.exponents;
    auto term = [seq, exps, depth, zreal, state](std::int64_t n) {
        const Complex z = seq->term(n);
        std::vector<Complex> zp(depth);
        for (int i = 0; i < depth; ++i) zp[i] = pow_minus(z, exps[i], zreal);
        const Complex t = zp[0] * state->inner[1].value();
        // Ascending update keeps each level reading the pre-update value below.
        for (int j = 1; j < depth; ++j) {
            const Complex below = (j + 1 < depth) ? state->inner[j + 1].value() : Complex{1.0, 0.0};
            state->inner[j].add(zp[j] * below);
        }
        return t;
    };
    if (seq->finite()) return compensated_sum(term, seq->length(), config);
    return compensated_sum(term, std::nullopt, config, mzv_tail_decay(*seq, comp));
}

EvalResult extended_star_mzv(const SequencePtr& seq, const Composition& comp,
                             const SummationConfig& config) {
    const int depth = comp.depth();
    if (depth < 1) throw DomainError("extended_star_mzv: composition depth >= 1");
    if (has_negative(comp))
        throw DomainError("extended_star_mzv: negative exponents not supported");
    check_convergence_gate(*seq, comp);
    if (depth == 1) return extended_zeta(seq, comp.exponents[0], config);

    const bool zreal = seq->real_valued();
    struct State {
        std::vector<Accumulator> inner;  // weak-simplex sums including the current index
    };
    auto state = std::make_shared<State>();
    state->inner.resize(depth + 1);
    auto exps = comp.exponents;
    auto term = [seq, exps, depth, zreal, state](std::int64_t n) {
        const Complex z = seq->term(n);
        std::vector<Complex> zp(depth);
        for (int i = 0; i < depth; ++i) zp[i] = pow_minus(z, exps[i], zreal);
        // Descending update: level j folds in n_j = n using the already
        // updated level j+1 (weak inequalities).
        for (int j = depth - 1; j >= 1; --j) {
            const Complex below = (j + 1 < depth) ? state->inner[j + 1].value() : Complex{1.0, 0.0};
            state->inner[j].add(zp[j] * below);
        }
        return zp[0] * state->inner[1].value();
    };
    if (seq->finite()) return compensated_sum(term, seq->length(), config);
    return compensated_sum(term, std::nullopt, config, mzv_tail_decay(*seq, comp));
}

Complex tail_extrapolate(const std::vector<std::pair<std::int64_t, Complex>>& partials,
                         const TailModel& model, double target_exponent) {
    if (partials.size() < 3)
        throw DomainError("tail_extrapolate: need at least 3 partial sums");
    std::vector<TablePoint> points;
    points.reserve(partials.size());
    for (const auto& [n, v] : partials) points.push_back({(double)n, v});
    const double beta = model.growth_exponent * target_exponent - 1.0;
    if (!(beta > 0.0)) throw DomainError("tail_extrapolate: tail does not decay");
    return detail::extrapolate_checkpoints(points, TailDecay{beta, 0}).value;
}

}  // namespace ezeta
