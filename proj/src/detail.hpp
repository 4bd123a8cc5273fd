#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "ezeta/summation.hpp"

namespace ezeta::detail {

// Neumaier-compensated accumulator; real and imaginary parts compensated
// independently.
struct Accumulator {
    double re = 0.0, im = 0.0;
    double cre = 0.0, cim = 0.0;
    double abs_sum = 0.0;

    void add(const Complex& v) {
        add_part(re, cre, v.real());
        add_part(im, cim, v.imag());
        abs_sum += std::abs(v.real()) + std::abs(v.imag());
    }
    Complex value() const { return {re + cre, im + cim}; }

private:
    static void add_part(double& s, double& c, double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
};

struct RealAccumulator {
    double sum = 0.0, comp = 0.0;
    double abs_sum = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
        abs_sum += std::abs(x);
    }
    double value() const { return sum + comp; }
};

// z^{-s} with an exact-multiplication fast path for integer s.
Complex pow_minus(const Complex& z, double s, bool zreal);

struct TablePoint {
    double n;
    Complex value;
};

struct ExtrapolationResult {
    Complex value;
    double spread;
};

// Extrapolates checkpointed partial sums; see summation.cpp.
ExtrapolationResult extrapolate_checkpoints(const std::vector<TablePoint>& points,
                                            std::optional<TailDecay> decay);

}  // namespace ezeta::detail
