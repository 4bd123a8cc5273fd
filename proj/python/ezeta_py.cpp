// Python bindings for the main operations: sequences, extended (star) MZVs,
// complementary sequences and zeta functions, special functions, closed
// forms, and the identity verification harness.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ezeta/closedforms.hpp"
#include "ezeta/complementary.hpp"
#include "ezeta/errors.hpp"
#include "ezeta/identities.hpp"
#include "ezeta/report_io.hpp"
#include "ezeta/specialfn.hpp"

namespace py = pybind11;
using namespace ezeta;

namespace {

SequenceSpec spec_from_args(const std::string& family, double a, double nu, int n,
                            const std::vector<Complex>& values) {
    if (family == "natural") return SequenceSpec::natural();
    if (family == "odd") return SequenceSpec::odd();
    if (family == "shifted_linear") return SequenceSpec::shifted_linear(a);
    if (family == "half_integer") return SequenceSpec::half_integer();
    if (family == "squares") return SequenceSpec::squares();
    if (family == "pronic") return SequenceSpec::pronic();
    if (family == "bessel_zeros") return SequenceSpec::bessel_zeros(nu);
    if (family == "bessel_poly_roots") return SequenceSpec::bessel_poly_roots(n);
    if (family == "explicit") return SequenceSpec::explicit_list(values);
    throw DomainError("unknown sequence family '" + family + "'");
}

SummationConfig config_from_kwargs(double rel_tol, std::int64_t max_terms) {
    SummationConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.max_terms_per_axis = max_terms;
    return cfg;
}

// pybind11 holders must be non-const; keep the shared const sequence
// behind a small handle instead.
struct PySequence {
    SequencePtr ptr;
};

}  // namespace

PYBIND11_MODULE(_ezeta, m) {
    m.doc() = "extended multiple zeta values, complementary zeta functions and "
              "structural identity verification";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
    py::register_exception<DegenerateSequenceError>(m, "DegenerateSequenceError",
                                                    PyExc_ValueError);
    py::register_exception<IterationError>(m, "IterationError", PyExc_RuntimeError);

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_readonly("abs_error_estimate", &EvalResult::abs_error_estimate)
        .def_readonly("terms_used", &EvalResult::terms_used)
        .def_readonly("converged", &EvalResult::converged)
        .def("__repr__", [](const EvalResult& r) {
            std::ostringstream os;
            os << "EvalResult(value=" << format_complex(r.value)
               << ", abs_error_estimate=" << r.abs_error_estimate
               << ", terms_used=" << r.terms_used
               << ", converged=" << (r.converged ? "True" : "False") << ")";
            return os.str();
        });

    py::class_<ComplementaryTermResult>(m, "ComplementaryTermResult")
        .def_readonly("inv_value", &ComplementaryTermResult::inv_value)
        .def_readonly("abs_error_estimate", &ComplementaryTermResult::abs_error_estimate)
        .def_readonly("terms_used", &ComplementaryTermResult::terms_used);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("identity_id", &IdentityReport::identity_id)
        .def_readonly("parameters", &IdentityReport::parameters)
        .def_readonly("lhs", &IdentityReport::lhs)
        .def_readonly("rhs", &IdentityReport::rhs)
        .def_readonly("residual", &IdentityReport::residual)
        .def_readonly("tolerance", &IdentityReport::tolerance)
        .def_readonly("passed", &IdentityReport::passed)
        .def_readonly("error_budget", &IdentityReport::error_budget)
        .def_readonly("notes", &IdentityReport::notes)
        .def_property_readonly(
            "sequence", [](const IdentityReport& r) { return r.sequence.describe(); })
        .def("to_json", [](const IdentityReport& r) { return to_json(r); })
        .def("__repr__", [](const IdentityReport& r) {
            std::ostringstream os;
            os << "IdentityReport(" << r.identity_id << ", " << r.sequence.describe()
               << ", residual=" << r.residual << ", passed=" << (r.passed ? "True" : "False")
               << ")";
            return os.str();
        });

    py::class_<PySequence>(m, "Sequence")
        .def("term", [](const PySequence& s, std::int64_t k) { return s.ptr->term(k); },
             py::arg("k"))
        .def_property_readonly("finite",
                               [](const PySequence& s) { return s.ptr->finite(); })
        .def_property_readonly("length", [](const PySequence& s) { return s.ptr->length(); })
        .def("__repr__", [](const PySequence& s) {
            return "Sequence(" + s.ptr->spec().describe() + ")";
        });

    m.def(
        "sequence",
        [](const std::string& family, double a, double nu, int n,
           const std::vector<Complex>& values) {
            return PySequence{make_sequence(spec_from_args(family, a, nu, n, values))};
        },
        py::arg("family"), py::arg("a") = 1.0, py::arg("nu") = 0.0, py::arg("n") = 1,
        py::arg("values") = std::vector<Complex>{},
        "Create a term sequence: natural, odd, shifted_linear(a), half_integer, squares, "
        "pronic, bessel_zeros(nu), bessel_poly_roots(n), explicit(values)");

    const auto with_cfg = [](auto&& fn) { return fn; };
    (void)with_cfg;

    m.def(
        "extended_zeta",
        [](const PySequence& seq, double s, double rel_tol, std::int64_t max_terms) {
            return extended_zeta(seq.ptr, s, config_from_kwargs(rel_tol, max_terms));
        },
        py::arg("seq"), py::arg("s"), py::arg("rel_tol") = 1e-10,
        py::arg("max_terms") = 1'000'000);
    m.def(
        "extended_mzv",
        [](const PySequence& seq, const std::vector<double>& comp, double rel_tol,
           std::int64_t max_terms) {
            return extended_mzv(seq.ptr, Composition{comp}, config_from_kwargs(rel_tol, max_terms));
        },
        py::arg("seq"), py::arg("composition"), py::arg("rel_tol") = 1e-10,
        py::arg("max_terms") = 1'000'000);
    m.def(
        "extended_star_mzv",
        [](const PySequence& seq, const std::vector<double>& comp, double rel_tol,
           std::int64_t max_terms) {
            return extended_star_mzv(seq.ptr, Composition{comp},
                                     config_from_kwargs(rel_tol, max_terms));
        },
        py::arg("seq"), py::arg("composition"), py::arg("rel_tol") = 1e-10,
        py::arg("max_terms") = 1'000'000);
    m.def(
        "complementary_term",
        [](const PySequence& seq, std::int64_t k, int r) {
            return higher_complementary_term(seq.ptr, k, r);
        },
        py::arg("seq"), py::arg("k"), py::arg("r") = 2);
    m.def(
        "complementary_zeta",
        [](const PySequence& seq, double s, int r, double rel_tol, std::int64_t max_terms) {
            return higher_complementary_zeta(seq.ptr, r, s, config_from_kwargs(rel_tol, max_terms));
        },
        py::arg("seq"), py::arg("s"), py::arg("r") = 2, py::arg("rel_tol") = 1e-10,
        py::arg("max_terms") = 1'000'000);

    m.def("riemann_zeta", &riemann_zeta, py::arg("s"));
    m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("a"));
    m.def("polygamma", &polygamma, py::arg("m"), py::arg("x"));
    m.def("t_value", &t_value, py::arg("s"));
    m.def(
        "multiple_t",
        [](const std::vector<double>& comp) { return multiple_t(Composition{comp}); },
        py::arg("composition"));
    m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));
    m.def("bessel_zero", &bessel_zero, py::arg("nu"), py::arg("k"));
    m.def("bessel_poly_roots", &bessel_poly_roots, py::arg("n"));
    m.def(
        "bessel_poly_coefficients",
        [](int n) { return bessel_poly(n).coefficients; },
        py::arg("n"), "exact integer coefficients, ascending powers");

    m.def("cf_shifted_linear",
          [](double a, int s) { return cf_shifted_linear(a, s); }, py::arg("a"), py::arg("s"));
    m.def("cf_half_integer", [](int s) { return cf_half_integer(s); }, py::arg("s"));
    m.def("cf_half_integer_odd", [](int s) { return cf_half_integer_odd(s); }, py::arg("s"));
    m.def("cf_squares", [](int s) { return cf_squares(s); }, py::arg("s"));
    m.def("cf_pronic", &cf_pronic, py::arg("s"));
    m.def("cf_bessel_complementary",
          [](double nu, int s) { return cf_bessel_complementary(nu, s); }, py::arg("nu"),
          py::arg("s"));
    m.def("cf_bessel_small", &cf_bessel_small, py::arg("nu"), py::arg("two_s"));
    m.def("cf_besselpoly_complementary",
          [](int n, int s) { return cf_besselpoly_complementary(n, s); }, py::arg("n"),
          py::arg("s"));
    m.def("coeff_mu", &coeff_mu, py::arg("k"), py::arg("s"));
    m.def("coeff_beta", &coeff_beta, py::arg("k"), py::arg("s"));
    m.def("coeff_eta", &coeff_eta, py::arg("s"));

    m.def("verify_reflection",
          [](const PySequence& seq, double s, double t) { return verify_reflection(seq.ptr, s, t); },
          py::arg("seq"), py::arg("s"), py::arg("t"));
    m.def("verify_euler",
          [](const PySequence& seq) { return verify_euler_generalized(seq.ptr); }, py::arg("seq"));
    m.def("verify_rational_identity",
          [](const PySequence& seq, Complex x) { return verify_rational_identity(seq.ptr, x); },
          py::arg("seq"), py::arg("x"));
    m.def("verify_taylor_sum",
          [](const PySequence& seq, int s) { return verify_taylor_sum(seq.ptr, s); }, py::arg("seq"),
          py::arg("s"));
    m.def("verify_general_rational",
          [](const PySequence& seq, int r, Complex x) {
              return verify_general_rational(seq.ptr, r, x);
          },
          py::arg("seq"), py::arg("r"), py::arg("x"));
    m.def("verify_sum_formula",
          [](const PySequence& seq, int r, int s) { return verify_sum_formula(seq.ptr, r, s); },
          py::arg("seq"), py::arg("r"), py::arg("s"));
    m.def("verify_reduction",
          [](const PySequence& seq, int s) { return verify_reduction(seq.ptr, s); }, py::arg("seq"),
          py::arg("s"));
    m.def("verify_hirose",
          [](const PySequence& seq, double s) { return verify_hirose(seq.ptr, s); }, py::arg("seq"),
          py::arg("s"));
    m.def("verify_bessel", [](double nu, int s) { return verify_bessel(nu, s); }, py::arg("nu"),
          py::arg("s"));
    m.def("verify_besselpoly", [](int n, int s) { return verify_besselpoly(n, s); }, py::arg("n"),
          py::arg("s"));
    m.def("run_default_suite", []() { return run_suite(default_suite()); },
          "Run the standard verification grid and return the reports");
}
