#pragma once

#include <cstdint>

#include "ezeta/sequences.hpp"
#include "ezeta/summation.hpp"

namespace ezeta {

struct ComplementaryTermResult {
    Complex inv_value{0.0, 0.0};  // the quantity 1 / z~_k
    double abs_error_estimate = 0.0;
    std::int64_t terms_used = 0;
};

// 1/z~_k = sum_{i<k} 1/(z_i - z_k) + sum_{i>k} (1/(z_i - z_k) - 1/z_i).
// Exact finite sums for finite sequences (empty sums are zero); for infinite
// sequences the tail is accumulated to budget and extrapolated. Results are
// memoized per sequence behind a lock. Throws DegenerateSequenceError when
// z_i == z_k for some i != k.
ComplementaryTermResult complementary_term(const SequencePtr& seq, std::int64_t k,
                                           const SummationConfig& config = {});

// Higher-order complementary term 1/z~_n^(r): the (r-1)-fold simplex sums with
// n straddled at each of the r positions. r = 1 is the convention 1/z~^(1) = 1
// and r = 2 reduces to complementary_term.
ComplementaryTermResult higher_complementary_term(const SequencePtr& seq, std::int64_t n, int r,
                                                  const SummationConfig& config = {});

// zeta~_Z(s) = sum_{n>=1} 1/(z~_n z_n^{s-1}).
EvalResult complementary_zeta(const SequencePtr& seq, double s,
                              const SummationConfig& config = {});

// zeta~^(r)_Z(s) = sum_{n>=1} 1/(z~_n^(r) z_n^{s-1}).
EvalResult higher_complementary_zeta(const SequencePtr& seq, int r, double s,
                                     const SummationConfig& config = {});

}  // namespace ezeta
