#include "ezeta/sequences.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ezeta/errors.hpp"
#include "ezeta/specialfn.hpp"

namespace ezeta {

std::string family_name(Family f) {
    switch (f) {
        case Family::Natural: return "natural";
        case Family::Odd: return "odd";
        case Family::ShiftedLinear: return "shifted_linear";
        case Family::HalfInteger: return "half_integer";
        case Family::Squares: return "squares";
        case Family::Pronic: return "pronic";
        case Family::BesselZeros: return "bessel_zeros";
        case Family::BesselPolyRoots: return "bessel_poly_roots";
        case Family::Explicit: return "explicit";
    }
    return "unknown";
}

SequenceSpec SequenceSpec::shifted_linear(double a) {
    SequenceSpec s;
    s.family = Family::ShiftedLinear;
    s.a = a;
    return s;
}

SequenceSpec SequenceSpec::bessel_zeros(double nu) {
    SequenceSpec s;
    s.family = Family::BesselZeros;
    s.nu = nu;
    return s;
}

SequenceSpec SequenceSpec::bessel_poly_roots(int degree) {
    SequenceSpec s;
    s.family = Family::BesselPolyRoots;
    s.degree = degree;
    return s;
}

SequenceSpec SequenceSpec::explicit_list(std::vector<Complex> values) {
    SequenceSpec s;
    s.family = Family::Explicit;
    s.values = std::move(values);
    return s;
}

std::string SequenceSpec::describe() const {
    std::ostringstream os;
    os << family_name(family);
    switch (family) {
        case Family::ShiftedLinear: os << "(a=" << a << ")"; break;
        case Family::BesselZeros: os << "(nu=" << nu << ")"; break;
        case Family::BesselPolyRoots: os << "(n=" << degree << ")"; break;
        case Family::Explicit: os << "(N=" << values.size() << ")"; break;
        default: break;
    }
    return os.str();
}

namespace {

void check_index(std::int64_t k) {
    if (k < 1) throw std::out_of_range("sequence index k must be >= 1");
}

// Infinite real-valued family given by a plain formula.
class FormulaSequence final : public SequenceSource {
public:
    FormulaSequence(SequenceSpec spec, double (*fn)(std::int64_t, double), TailModel model)
        : SequenceSource(std::move(spec)), fn_(fn), model_(model) {}

    Complex term(std::int64_t k) const override {
        check_index(k);
        return {fn_(k, this->spec().a), 0.0};
    }
    std::optional<TailModel> tail_model() const override { return model_; }

private:
    double (*fn_)(std::int64_t, double);
    TailModel model_;
};

class BesselZerosSequence final : public SequenceSource {
public:
    explicit BesselZerosSequence(SequenceSpec spec)
        : SequenceSource(std::move(spec)) {
        const double nu = this->spec().nu;
        model_ = TailModel{2.0, 9.869604401089358618834490999876151135, nu / 2.0 - 0.25};
    }

    Complex term(std::int64_t k) const override {
        check_index(k);
        const double x = bessel_zero(this->spec().nu, k);
        return {x * x, 0.0};
    }
    std::optional<TailModel> tail_model() const override { return model_; }

private:
    TailModel model_;
};

class FiniteListSequence final : public SequenceSource {
public:
    FiniteListSequence(SequenceSpec spec, std::vector<Complex> values, bool real)
        : SequenceSource(std::move(spec)), values_(std::move(values)), real_(real) {}

    Complex term(std::int64_t k) const override {
        check_index(k);
        if (k > (std::int64_t)values_.size())
            throw std::out_of_range("sequence index " + std::to_string(k) +
                                    " past finite length " + std::to_string(values_.size()));
        return values_[k - 1];
    }
    std::optional<std::int64_t> length() const override {
        return (std::int64_t)values_.size();
    }
    bool real_valued() const override { return real_; }

private:
    std::vector<Complex> values_;
    bool real_;
};

double natural_term(std::int64_t k, double) { return (double)k; }
double odd_term(std::int64_t k, double) { return 2.0 * (double)k - 1.0; }
double shifted_term(std::int64_t k, double a) { return (double)k + a - 1.0; }
double half_integer_term(std::int64_t k, double) { return (double)k - 0.5; }
double squares_term(std::int64_t k, double) { return (double)k * (double)k; }
double pronic_term(std::int64_t k, double) { return (double)k * ((double)k + 1.0); }

}  // namespace

SequencePtr make_sequence(const SequenceSpec& spec) {
    switch (spec.family) {
        case Family::Natural:
            return std::make_shared<FormulaSequence>(spec, natural_term, TailModel{1.0, 1.0, 0.0});
        case Family::Odd:
            return std::make_shared<FormulaSequence>(spec, odd_term, TailModel{1.0, 2.0, -0.5});
        case Family::ShiftedLinear:
            if (!(spec.a >= 0.0 && spec.a <= 1.0))
                throw DomainError("make_sequence: parameter a must lie in [0, 1]");
            if (spec.a == 0.0)
                throw DomainError("make_sequence: parameter a = 0 makes z_1 = 0 (terms must be nonzero)");
            return std::make_shared<FormulaSequence>(spec, shifted_term,
                                                     TailModel{1.0, 1.0, spec.a - 1.0});
        case Family::HalfInteger:
            return std::make_shared<FormulaSequence>(spec, half_integer_term,
                                                     TailModel{1.0, 1.0, -0.5});
        case Family::Squares:
            return std::make_shared<FormulaSequence>(spec, squares_term, TailModel{2.0, 1.0, 0.0});
        case Family::Pronic:
            return std::make_shared<FormulaSequence>(spec, pronic_term, TailModel{2.0, 1.0, 0.5});
        case Family::BesselZeros:
            if (!(spec.nu > -1.0))
                throw DomainError("make_sequence: parameter nu must exceed -1");
            return std::make_shared<BesselZerosSequence>(spec);
        case Family::BesselPolyRoots: {
            if (spec.degree < 1)
                throw DomainError("make_sequence: parameter n must be a positive integer");
            std::vector<Complex> roots = bessel_poly_roots(spec.degree);
            return std::make_shared<FiniteListSequence>(spec, std::move(roots), false);
        }
        case Family::Explicit: {
            if (spec.values.empty())
                throw DomainError("make_sequence: explicit values list is empty");
            bool real = true;
            for (size_t i = 0; i < spec.values.size(); ++i) {
                if (spec.values[i] == Complex(0.0, 0.0))
                    throw DomainError("make_sequence: explicit value at position " +
                                      std::to_string(i + 1) + " is zero");
                if (spec.values[i].imag() != 0.0) real = false;
            }
            return std::make_shared<FiniteListSequence>(spec, spec.values, real);
        }
    }
    throw DomainError("make_sequence: unknown family");
}

}  // namespace ezeta
