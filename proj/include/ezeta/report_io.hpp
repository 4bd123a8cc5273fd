#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ezeta/identities.hpp"
#include "ezeta/summation.hpp"

namespace ezeta {

enum class OutputFormat { Human, Json, Csv };

// Numbers are serialized with 17 significant digits so output is
// byte-identical across runs and round-trips through parsing.
std::string format_double(double v);
std::string format_complex(Complex v);

std::string to_json(const EvalResult& r);
std::string to_json(const IdentityReport& r);
IdentityReport report_from_json(const std::string& text);

// Sequence specs as JSON objects, e.g. {"family": "pronic"} or
// {"family": "bessel_zeros", "nu": 1.5}; used in reports and config files.
std::string to_json(const SequenceSpec& spec);
SequenceSpec sequence_spec_from_json(const std::string& text);

std::string csv_header_reports();
std::string to_csv_row(const IdentityReport& r);

void print_report(std::ostream& os, const IdentityReport& r);
void print_reports(std::ostream& os, const std::vector<IdentityReport>& reports,
                   OutputFormat format);

}  // namespace ezeta
