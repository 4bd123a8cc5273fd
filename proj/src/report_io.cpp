#include "ezeta/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ezeta/errors.hpp"

namespace ezeta {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Complex v) {
    if (v.imag() == 0.0) return format_double(v.real());
    std::string out = format_double(v.real());
    if (v.imag() >= 0.0 || std::isnan(v.imag())) out += "+";
    out += format_double(v.imag()) + "i";
    return out;
}

namespace {

json number_or_token(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

double from_number_or_token(const json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::nan("");
}

json sequence_to_json(const SequenceSpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    switch (spec.family) {
        case Family::ShiftedLinear: j["a"] = spec.a; break;
        case Family::BesselZeros: j["nu"] = spec.nu; break;
        case Family::BesselPolyRoots: j["n"] = spec.degree; break;
        case Family::Explicit: {
            json vals = json::array();
            for (const auto& v : spec.values) {
                if (v.imag() == 0.0)
                    vals.push_back(v.real());
                else
                    vals.push_back(json::array({v.real(), v.imag()}));
            }
            j["values"] = vals;
            break;
        }
        default: break;
    }
    return j;
}

SequenceSpec sequence_from_json(const json& j) {
    const std::string fam = j.at("family").get<std::string>();
    if (fam == "natural") return SequenceSpec::natural();
    if (fam == "odd") return SequenceSpec::odd();
    if (fam == "shifted_linear") return SequenceSpec::shifted_linear(j.at("a").get<double>());
    if (fam == "half_integer") return SequenceSpec::half_integer();
    if (fam == "squares") return SequenceSpec::squares();
    if (fam == "pronic") return SequenceSpec::pronic();
    if (fam == "bessel_zeros") return SequenceSpec::bessel_zeros(j.at("nu").get<double>());
    if (fam == "bessel_poly_roots")
        return SequenceSpec::bessel_poly_roots(j.at("n").get<int>());
    if (fam == "explicit") {
        std::vector<Complex> values;
        for (const auto& v : j.at("values")) {
            if (v.is_array())
                values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
            else
                values.emplace_back(v.get<double>(), 0.0);
        }
        return SequenceSpec::explicit_list(std::move(values));
    }
    throw DomainError("unknown sequence family '" + fam + "'");
}

json complex_to_json(Complex v) {
    if (v.imag() == 0.0) return v.real();
    return json::array({v.real(), v.imag()});
}

Complex complex_from_json(const json& j) {
    if (j.is_array()) return {j.at(0).get<double>(), j.at(1).get<double>()};
    return {j.get<double>(), 0.0};
}

json report_to_json_obj(const IdentityReport& r) {
    json j;
    j["identity_id"] = r.identity_id;
    j["sequence"] = sequence_to_json(r.sequence);
    j["parameters"] = r.parameters;
    j["lhs"] = complex_to_json(r.lhs);
    j["rhs"] = complex_to_json(r.rhs);
    j["residual"] = number_or_token(r.residual);
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    j["error_budget"] = r.error_budget;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace

std::string to_json(const EvalResult& r) {
    json j;
    j["value"] = complex_to_json(r.value);
    j["abs_error_estimate"] = r.abs_error_estimate;
    j["terms_used"] = r.terms_used;
    j["converged"] = r.converged;
    return j.dump();
}

std::string to_json(const SequenceSpec& spec) { return sequence_to_json(spec).dump(); }

SequenceSpec sequence_spec_from_json(const std::string& text) {
    return sequence_from_json(json::parse(text));
}

std::string to_json(const IdentityReport& r) { return report_to_json_obj(r).dump(); }

IdentityReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    IdentityReport r;
    r.identity_id = j.at("identity_id").get<std::string>();
    r.sequence = sequence_from_json(j.at("sequence"));
    r.parameters = j.at("parameters").get<std::map<std::string, double>>();
    r.lhs = complex_from_json(j.at("lhs"));
    r.rhs = complex_from_json(j.at("rhs"));
    r.residual = from_number_or_token(j.at("residual"));
    r.tolerance = j.at("tolerance").get<double>();
    r.passed = j.at("passed").get<bool>();
    r.error_budget = j.at("error_budget").get<double>();
    if (j.contains("notes")) r.notes = j.at("notes").get<std::string>();
    return r;
}

std::string csv_header_reports() {
    return "identity_id,sequence,parameters,lhs,rhs,residual,tolerance,passed,error_budget,notes";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string parameters_compact(const std::map<std::string, double>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += " ";
        out += k + "=" + format_double(v);
    }
    return out;
}

}  // namespace

std::string to_csv_row(const IdentityReport& r) {
    std::ostringstream os;
    os << r.identity_id << ',' << csv_escape(r.sequence.describe()) << ','
       << csv_escape(parameters_compact(r.parameters)) << ',' << csv_escape(format_complex(r.lhs))
       << ',' << csv_escape(format_complex(r.rhs)) << ',' << format_double(r.residual) << ','
       << format_double(r.tolerance) << ',' << (r.passed ? "true" : "false") << ','
       << format_double(r.error_budget) << ',' << csv_escape(r.notes);
    return os.str();
}

void print_report(std::ostream& os, const IdentityReport& r) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.identity_id << "  "
       << r.sequence.describe();
    const std::string params = parameters_compact(r.parameters);
    if (!params.empty()) os << "  [" << params << "]";
    os << "\n      lhs=" << format_complex(r.lhs) << "  rhs=" << format_complex(r.rhs)
       << "\n      residual=" << format_double(r.residual)
       << "  tolerance=" << format_double(r.tolerance)
       << "  error_budget=" << format_double(r.error_budget) << "\n";
    if (!r.notes.empty()) os << "      note: " << r.notes << "\n";
}

void print_reports(std::ostream& os, const std::vector<IdentityReport>& reports,
                   OutputFormat format) {
    switch (format) {
        case OutputFormat::Human: {
            int passed = 0;
            for (const auto& r : reports) {
                print_report(os, r);
                if (r.passed) ++passed;
            }
            os << passed << "/" << reports.size() << " identities passed\n";
            break;
        }
        case OutputFormat::Json: {
            for (const auto& r : reports) os << to_json(r) << "\n";
            break;
        }
        case OutputFormat::Csv: {
            os << csv_header_reports() << "\n";
            for (const auto& r : reports) os << to_csv_row(r) << "\n";
            break;
        }
    }
}

}  // namespace ezeta
