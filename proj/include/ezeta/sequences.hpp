#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ezeta {

using Complex = std::complex<double>;

enum class Family {
    Natural,          // z_k = k
    Odd,              // z_k = 2k - 1
    ShiftedLinear,    // z_k = k + a - 1, a in (0, 1]
    HalfInteger,      // z_k = k - 1/2
    Squares,          // z_k = k^2
    Pronic,           // z_k = k (k + 1)
    BesselZeros,      // z_k = x_{nu,k}^2, squared positive zeros of J_nu
    BesselPolyRoots,  // z_k = roots of the degree-n Bessel polynomial (finite, complex)
    Explicit,         // user-supplied finite list
};

std::string family_name(Family f);

// Declarative description of a term sequence {z_k}, k >= 1.
struct SequenceSpec {
    Family family = Family::Natural;
    double a = 1.0;    // ShiftedLinear offset
    double nu = 0.0;   // BesselZeros order, nu > -1
    int degree = 1;    // BesselPolyRoots degree, n >= 1
    std::vector<Complex> values;  // Explicit terms, all nonzero

    static SequenceSpec natural() { return of(Family::Natural); }
    static SequenceSpec odd() { return of(Family::Odd); }
    static SequenceSpec shifted_linear(double a);
    static SequenceSpec half_integer() { return of(Family::HalfInteger); }
    static SequenceSpec squares() { return of(Family::Squares); }
    static SequenceSpec pronic() { return of(Family::Pronic); }
    static SequenceSpec bessel_zeros(double nu);
    static SequenceSpec bessel_poly_roots(int degree);
    static SequenceSpec explicit_list(std::vector<Complex> values);

    static SequenceSpec of(Family f) {
        SequenceSpec s;
        s.family = f;
        return s;
    }

    std::string describe() const;
};

// Asymptotic model z_k ~ c (k + d)^p used to extrapolate slowly convergent tails.
struct TailModel {
    double growth_exponent = 1.0;    // p
    double leading_coefficient = 1;  // c
    double offset = 0.0;             // d
};

namespace detail {
// Opaque per-sequence cache slots filled lazily by the numerics modules.
struct SequenceCaches {
    std::mutex mutex;
    std::shared_ptr<void> complementary;
};
}  // namespace detail

// A realized sequence. Immutable after construction apart from internal
// caches, which are synchronized; safe to share across threads.
class SequenceSource {
public:
    virtual ~SequenceSource() = default;

    // 1-based term access; throws std::out_of_range past a finite length.
    virtual Complex term(std::int64_t k) const = 0;

    // Convenience for real-valued families.
    double term_real(std::int64_t k) const { return term(k).real(); }

    // Number of terms when finite.
    virtual std::optional<std::int64_t> length() const { return std::nullopt; }

    virtual std::optional<TailModel> tail_model() const { return std::nullopt; }

    // True when every term has zero imaginary part.
    virtual bool real_valued() const { return true; }

    bool finite() const { return length().has_value(); }
    const SequenceSpec& spec() const { return spec_; }

    detail::SequenceCaches& caches() const { return caches_; }

protected:
    explicit SequenceSource(SequenceSpec spec) : spec_(std::move(spec)) {}

private:
    SequenceSpec spec_;
    mutable detail::SequenceCaches caches_;
};

using SequencePtr = std::shared_ptr<const SequenceSource>;

// Validates the spec and realizes it; throws DomainError naming the
// offending field on invalid parameters.
SequencePtr make_sequence(const SequenceSpec& spec);

}  // namespace ezeta
