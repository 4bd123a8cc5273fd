#include "ezeta/complementary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "detail.hpp"
#include "ezeta/errors.hpp"

namespace ezeta {

namespace {

using detail::Accumulator;
using detail::pow_minus;
using detail::RealAccumulator;
using detail::TablePoint;

constexpr int kMomentMax = 56;  // inverse powers z^{-2} .. z^{-(kMomentMax+1)}

void require_distinct(const Complex& zi, const Complex& zk, std::int64_t i, std::int64_t k) {
    if (std::abs(zi - zk) <= 1e-14 * (std::abs(zi) + std::abs(zk)))
        throw DegenerateSequenceError("coincident sequence values z_" + std::to_string(i) +
                                      " and z_" + std::to_string(k));
}

// ---------------------------------------------------------------------------
// Finite sequences: every sum is finite and evaluated exactly.
// ---------------------------------------------------------------------------

ComplementaryTermResult finite_complementary_term(const SequenceSource& seq, std::int64_t k) {
    const std::int64_t N = *seq.length();
    if (k < 1 || k > N) throw std::out_of_range("complementary_term: index past finite length");
    const Complex zk = seq.term(k);
    Accumulator acc;
    for (std::int64_t i = 1; i < k; ++i) {
        const Complex zi = seq.term(i);
        require_distinct(zi, zk, i, k);
        acc.add(1.0 / (zi - zk));
    }
    for (std::int64_t i = k + 1; i <= N; ++i) {
        const Complex zi = seq.term(i);
        require_distinct(zi, zk, i, k);
        acc.add(1.0 / (zi - zk) - 1.0 / zi);
    }
    ComplementaryTermResult out;
    out.inv_value = acc.value();
    out.abs_error_estimate = 4.0 * std::numeric_limits<double>::epsilon() * acc.abs_sum;
    out.terms_used = N;
    return out;
}

// Elementary symmetric sums e_0..e_max of {1/(z_i - z_n) : i < n}.
std::vector<Complex> head_elementary(const SequenceSource& seq, std::int64_t n, int emax) {
    std::vector<Complex> e(emax + 1, Complex{0.0, 0.0});
    e[0] = 1.0;
    const Complex zn = seq.term(n);
    for (std::int64_t i = 1; i < n; ++i) {
        const Complex zi = seq.term(i);
        require_distinct(zi, zn, i, n);
        const Complex v = 1.0 / (zi - zn);
        for (int j = std::min<int>(emax, (int)i); j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e;
}

// U_m(n) = sum_{n_1 > ... > n_m > n} 1/(z_{n_1}(z_{n_1}-z_n))
//          prod_{i=2..m} 1/(z_{n_i}-z_n),   m = 1..count.
// Streams the top index once, carrying the window's elementary symmetric
// sums; infinite tails go through checkpointed extrapolation.
struct UStreamResult {
    std::vector<Complex> u;    // index m-1
    std::vector<double> err;
    std::int64_t terms = 0;
};

UStreamResult u_streams(const SequenceSource& seq, std::int64_t n, int count,
                        const SummationConfig& config) {
    UStreamResult out;
    out.u.assign(count, Complex{0.0, 0.0});
    out.err.assign(count, 0.0);
    const Complex zn = seq.term(n);
    const auto model = seq.tail_model();
    const double p = model ? model->growth_exponent : 1.0;

    const std::optional<std::int64_t> len = seq.length();
    std::int64_t last;
    std::int64_t first_checkpoint = 0;
    if (len) {
        last = *len;
    } else {
        // Absolute power-of-2 checkpoints keep the elimination ratios exact.
        first_checkpoint = 64;
        while (first_checkpoint < 3 * n) first_checkpoint *= 2;
        // The window's slowly growing log factors carry coefficients that
        // scale with n, so small n affords (and needs) a deeper stream.
        const int stages = first_checkpoint <= 256 ? 11 : 8;
        last = std::min(first_checkpoint << stages,
                        std::max(config.max_terms_per_axis, first_checkpoint + 1));
    }

    std::vector<Complex> e(count, Complex{0.0, 0.0});  // e_0..e_{count-1} of the window
    e[0] = 1.0;
    std::vector<Accumulator> acc(count);
    std::vector<std::vector<TablePoint>> checkpoints(count);
    std::int64_t next_checkpoint = first_checkpoint;

    std::int64_t streamed = 0;
    for (std::int64_t t = n + 1; t <= last; ++t) {
        const Complex zt = seq.term(t);
        require_distinct(zt, zn, t, n);
        const Complex d = zt - zn;
        const Complex g = 1.0 / (zt * d);
        for (int m = 0; m < count; ++m) acc[m].add(g * e[m]);
        const Complex v = 1.0 / d;
        for (int j = count - 1; j >= 1; --j) e[j] += v * e[j - 1];
        ++streamed;
        if (!len && t == next_checkpoint) {
            for (int m = 0; m < count; ++m)
                checkpoints[m].push_back({(double)t, acc[m].value()});
            next_checkpoint *= 2;
        }
    }
    out.terms = streamed;
    for (int m = 0; m < count; ++m) {
        const double noise = 4.0 * std::numeric_limits<double>::epsilon() * acc[m].abs_sum;
        if (len || checkpoints[m].size() < 3) {
            out.u[m] = acc[m].value();
            out.err[m] = noise;
        } else {
            const auto ex =
                detail::extrapolate_checkpoints(checkpoints[m], TailDecay{2.0 * p - 1.0, m});
            out.u[m] = ex.value;
            out.err[m] = 4.0 * ex.spread + noise;
        }
    }
    return out;
}

// Generic higher-order term via the straddled-simplex decomposition:
// 1/z~_n^(r) = e_{r-1}(L_n) + z_n sum_{q=2}^{r} U_{q-1}(n) e_{r-q}(L_n),
// with L_n = {1/(z_i - z_n) : i < n}.
ComplementaryTermResult generic_higher_term(const SequenceSource& seq, std::int64_t n, int r,
                                            const SummationConfig& config) {
    const Complex zn = seq.term(n);
    const std::vector<Complex> e = head_elementary(seq, n, r - 1);
    const UStreamResult us = u_streams(seq, n, r - 1, config);
    Complex inv = e[r - 1];
    double err = 0.0;
    for (int q = 2; q <= r; ++q) {
        inv += zn * us.u[q - 2] * e[r - q];
        err += std::abs(zn) * us.err[q - 2] * std::abs(e[r - q]);
    }
    ComplementaryTermResult out;
    out.inv_value = inv;
    out.abs_error_estimate = err + 1e-15 * (1.0 + std::abs(inv));
    out.terms_used = n - 1 + us.terms;
    return out;
}

// ---------------------------------------------------------------------------
// Infinite real-valued sequences: memoized table with a moment ladder for
// the tails  sum_{i>k} (1/(z_i - z_k) - 1/z_i) = sum_j z_k^{j+1} tau_{j+2},
// where tau_q(M) = sum_{i>M} z_i^{-q}.
// ---------------------------------------------------------------------------

struct MomentLadder {
    std::vector<std::int64_t> rungs;        // 64, 128, ..., top
    std::vector<std::vector<double>> tau;   // tau[l][q-2] = sum_{i>rungs[l]} z_i^{-q}
    std::vector<double> tau_err;            // per rung, dominated by q = 2
};

struct ComplementaryCache {
    std::mutex mutex;
    std::vector<double> inv2;
    std::vector<double> err2;
    MomentLadder moments;
    std::map<int, std::vector<Complex>> higher_inv;
    std::map<int, std::vector<double>> higher_err;
};

ComplementaryCache& cache_of(const SequenceSource& seq) {
    auto& box = seq.caches();
    std::lock_guard<std::mutex> lock(box.mutex);
    if (!box.complementary)
        box.complementary = std::static_pointer_cast<void>(std::make_shared<ComplementaryCache>());
    return *std::static_pointer_cast<ComplementaryCache>(box.complementary);
}

void build_moments(const SequenceSource& seq, MomentLadder& ladder, std::int64_t need_top) {
    std::int64_t top = 64;
    while (top < need_top) top *= 2;
    if (!ladder.rungs.empty() && ladder.rungs.back() >= top) return;

    const double p = seq.tail_model()->growth_exponent;
    ladder.rungs.clear();
    for (std::int64_t m = 64; m <= top; m *= 2) ladder.rungs.push_back(m);
    const size_t L = ladder.rungs.size();
    ladder.tau.assign(L, std::vector<double>(kMomentMax, 0.0));
    ladder.tau_err.assign(L, 0.0);

    // Block sums between consecutive rungs.
    std::vector<std::vector<RealAccumulator>> block_acc(L > 1 ? L - 1 : 0);
    for (auto& b : block_acc) b.resize(kMomentMax);
    for (size_t l = 0; l + 1 < L; ++l) {
        for (std::int64_t i = ladder.rungs[l] + 1; i <= ladder.rungs[l + 1]; ++i) {
            const double z = seq.term(i).real();
            const double w = 1.0 / z;
            double pw = w;
            for (int q = 0; q < kMomentMax; ++q) {
                pw *= w;
                block_acc[l][q].add(pw);
            }
        }
    }

    // Tail beyond the top rung: checkpointed partial sums, extrapolated per q.
    const int tail_stages = 5;
    std::vector<std::vector<TablePoint>> tail_points(kMomentMax);
    std::vector<RealAccumulator> tail_acc(kMomentMax);
    std::int64_t next_cp = top * 2;
    for (std::int64_t i = top + 1; i <= (top << tail_stages); ++i) {
        const double z = seq.term(i).real();
        const double w = 1.0 / z;
        double pw = w;
        for (int q = 0; q < kMomentMax; ++q) {
            pw *= w;
            tail_acc[q].add(pw);
        }
        if (i == next_cp) {
            for (int q = 0; q < kMomentMax; ++q)
                tail_points[q].push_back({(double)i, {tail_acc[q].value(), 0.0}});
            next_cp *= 2;
        }
    }
    std::vector<double> top_tau(kMomentMax);
    double top_err = 0.0;
    for (int q = 0; q < kMomentMax; ++q) {
        const auto ex = detail::extrapolate_checkpoints(tail_points[q],
                                                        TailDecay{p * (q + 2.0) - 1.0, 0});
        top_tau[q] = ex.value.real();
        if (q == 0) top_err = 4.0 * ex.spread;
    }
    for (int q = 0; q < kMomentMax; ++q) {
        double running = top_tau[q];
        ladder.tau[L - 1][q] = running;
    }
    ladder.tau_err[L - 1] = top_err + 1e-16;
    for (size_t l = L - 1; l-- > 0;) {
        for (int q = 0; q < kMomentMax; ++q)
            ladder.tau[l][q] = ladder.tau[l + 1][q] + block_acc[l][q].value();
        ladder.tau_err[l] = ladder.tau_err[l + 1] + 1e-16;
    }
}

// 1/z~_k for an infinite real sequence: exact heads plus the moment tail.
std::pair<double, double> infinite_inv2(const SequenceSource& seq, std::int64_t k,
                                        const MomentLadder& ladder) {
    const double zk = seq.term(k).real();
    RealAccumulator acc;
    for (std::int64_t i = 1; i < k; ++i) {
        const double zi = seq.term(i).real();
        if (zi == zk) require_distinct(zi, zk, i, k);
        acc.add(1.0 / (zi - zk));
    }
    // Pick the first rung M with |z_{M+1}| >= 2 |z_k| (magnitudes increase).
    size_t l = 0;
    while (l < ladder.rungs.size() &&
           (ladder.rungs[l] <= k ||
            std::abs(seq.term(ladder.rungs[l] + 1).real()) < 2.0 * std::abs(zk)))
        ++l;
    if (l >= ladder.rungs.size())
        throw DomainError("complementary_term: moment ladder too short for index " +
                          std::to_string(k));
    const std::int64_t M = ladder.rungs[l];
    for (std::int64_t i = k + 1; i <= M; ++i) {
        const double zi = seq.term(i).real();
        if (zi == zk) require_distinct(zi, zk, i, k);
        acc.add(1.0 / (zi - zk) - 1.0 / zi);
    }
    // Tail: sum_{j>=0} z_k^{j+1} tau_{j+2}(M); the ratio bound makes this a
    // geometric-rate series.
    double zpow = zk;
    double tail = 0.0;
    double last = 0.0;
    int used = kMomentMax;
    for (int q = 0; q < kMomentMax; ++q) {
        last = zpow * ladder.tau[l][q];
        tail += last;
        zpow *= zk;
        if (std::abs(last) < 1e-18 * (std::abs(tail) + std::abs(acc.value()) + 1e-30)) {
            used = q + 1;
            break;
        }
    }
    acc.add(tail);
    const double err = std::abs(last) + std::abs(zk) * ladder.tau_err[l] +
                       4.0 * std::numeric_limits<double>::epsilon() * acc.abs_sum;
    (void)used;
    return {acc.value(), err};
}

void ensure_inv2(const SequenceSource& seq, std::int64_t upto) {
    ComplementaryCache& cache = cache_of(seq);
    std::lock_guard<std::mutex> lock(cache.mutex);
    if ((std::int64_t)cache.inv2.size() >= upto) return;
    // The largest index determines the ladder; |z| is increasing, so the
    // first rung past 2^ceil covers every smaller k as well.
    const double p = seq.tail_model()->growth_exponent;
    const std::int64_t need = (p >= 2.0) ? 2 * upto : 4 * upto;
    build_moments(seq, cache.moments, need);
    cache.inv2.reserve(upto);
    cache.err2.reserve(upto);
    for (std::int64_t k = (std::int64_t)cache.inv2.size() + 1; k <= upto; ++k) {
        const auto [v, e] = infinite_inv2(seq, k, cache.moments);
        cache.inv2.push_back(v);
        cache.err2.push_back(e);
    }
}

void ensure_higher(const SequenceSource& seq, int r, std::int64_t upto) {
    // Memoized rows are built at library-default accuracy so a weak caller
    // configuration cannot poison the shared cache.
    const SummationConfig table_config{};
    ComplementaryCache& cache = cache_of(seq);
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto& inv = cache.higher_inv[r];
    auto& err = cache.higher_err[r];
    for (std::int64_t n = (std::int64_t)inv.size() + 1; n <= upto; ++n) {
        const auto res = generic_higher_term(seq, n, r, table_config);
        inv.push_back(res.inv_value);
        err.push_back(res.abs_error_estimate);
    }
}

}  // namespace

ComplementaryTermResult complementary_term(const SequencePtr& seq, std::int64_t k,
                                           const SummationConfig& /*config*/) {
    // Finite terms are exact and memoized infinite terms are built at the
    // library-default accuracy, so the configuration has nothing to steer.
    if (k < 1) throw DomainError("complementary_term: requires k >= 1");
    if (seq->finite()) return finite_complementary_term(*seq, k);
    if (!seq->real_valued())
        throw DomainError("complementary_term: infinite complex sequences not supported");
    ensure_inv2(*seq, k);
    ComplementaryCache& cache = cache_of(*seq);
    std::lock_guard<std::mutex> lock(cache.mutex);
    ComplementaryTermResult out;
    out.inv_value = {cache.inv2[k - 1], 0.0};
    out.abs_error_estimate = cache.err2[k - 1];
    out.terms_used = k;
    return out;
}

ComplementaryTermResult higher_complementary_term(const SequencePtr& seq, std::int64_t n, int r,
                                                  const SummationConfig& config) {
    if (n < 1) throw DomainError("higher_complementary_term: requires n >= 1");
    if (r < 1) throw DomainError("higher_complementary_term: requires r >= 1");
    if (r == 1) return {Complex{1.0, 0.0}, 0.0, 0};  // 1/z~^(1) = 1 by convention
    if (r == 2) return complementary_term(seq, n, config);
    if (seq->finite()) return generic_higher_term(*seq, n, r, config);
    if (!seq->real_valued())
        throw DomainError("higher_complementary_term: infinite complex sequences not supported");
    ensure_higher(*seq, r, n);
    ComplementaryCache& cache = cache_of(*seq);
    std::lock_guard<std::mutex> lock(cache.mutex);
    ComplementaryTermResult out;
    out.inv_value = cache.higher_inv[r][n - 1];
    out.abs_error_estimate = cache.higher_err[r][n - 1];
    out.terms_used = n;
    return out;
}

namespace {

EvalResult complementary_zeta_impl(const SequencePtr& seq, int r, double s,
                                   const SummationConfig& config) {
    const bool zreal = seq->real_valued();
    if (seq->finite()) {
        const std::int64_t N = *seq->length();
        Accumulator acc;
        double budget = 0.0;
        for (std::int64_t n = 1; n <= N; ++n) {
            const auto term = higher_complementary_term(seq, n, r, config);
            const Complex w = pow_minus(seq->term(n), s - 1.0, zreal);
            acc.add(term.inv_value * w);
            budget += term.abs_error_estimate * std::abs(w);
        }
        EvalResult out;
        out.value = acc.value();
        out.terms_used = N;
        out.abs_error_estimate =
            budget + 4.0 * std::numeric_limits<double>::epsilon() * acc.abs_sum;
        out.converged =
            out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
        return out;
    }

    const auto model = seq->tail_model();
    const double p = model->growth_exponent;
    const double beta = p * (s - 1.0) + (r - 2.0);
    if (!(beta > 0.0))
        throw DivergenceError("complementary zeta diverges: tail exponent " +
                              std::to_string(beta) + " for s = " + std::to_string(s));

    std::int64_t outer_top = (p >= 2.0) ? 1024 : 4096;
    if (r >= 3) outer_top = 256;
    outer_top = std::min(outer_top, config.max_terms_per_axis);

    if (r == 2)
        ensure_inv2(*seq, outer_top);
    else
        ensure_higher(*seq, r, outer_top);
    ComplementaryCache& cache = cache_of(*seq);

    auto shared_err = std::make_shared<double>(0.0);
    auto term = [seq, &cache, r, s, zreal, shared_err](std::int64_t n) {
        Complex inv;
        double e;
        {
            std::lock_guard<std::mutex> lock(cache.mutex);
            if (r == 2) {
                inv = {cache.inv2[n - 1], 0.0};
                e = cache.err2[n - 1];
            } else {
                inv = cache.higher_inv[r][n - 1];
                e = cache.higher_err[r][n - 1];
            }
        }
        const Complex w = pow_minus(seq->term(n), s - 1.0, zreal);
        *shared_err += e * std::abs(w);
        return inv * w;
    };
    EvalResult out =
        compensated_sum(term, std::nullopt, config, TailDecay{beta, 1}, outer_top);
    out.abs_error_estimate += *shared_err;
    out.converged = out.abs_error_estimate <= config.rel_tol * std::max(std::abs(out.value), 1.0);
    return out;
}

}  // namespace

EvalResult complementary_zeta(const SequencePtr& seq, double s, const SummationConfig& config) {
    return complementary_zeta_impl(seq, 2, s, config);
}

EvalResult higher_complementary_zeta(const SequencePtr& seq, int r, double s,
                                     const SummationConfig& config) {
    if (r < 1) throw DomainError("higher_complementary_zeta: requires r >= 1");
    if (r == 1) return extended_zeta(seq, s - 1.0, config);
    return complementary_zeta_impl(seq, r, s, config);
}

}  // namespace ezeta
