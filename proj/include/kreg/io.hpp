#pragma once

// File formats: representations, certificates, multiplicative specs and bare
// matrices as JSON; reports as CSV.

#include "kreg/growth.hpp"
#include "kreg/linear_representation.hpp"
#include "kreg/multiplicative.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace kreg {

using Json = nlohmann::json;

/// Integers below 2^53 in magnitude are JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& v);
/// Accepts integral numbers and decimal strings.  Throws InvalidArgument.
Integer integer_from_json(const Json& j);

Json to_json(const LinearRepresentation& rep);
LinearRepresentation representation_from_json(const Json& j);

Json to_json(const GrowthCertificate& cert);
GrowthCertificate certificate_from_json(const Json& j);

Json to_json(const MultiplicativeSpec& spec);
MultiplicativeSpec spec_from_json(const Json& j);

/// {"matrix": [[...], ...]} / {"dim": d, "matrix": [flat]} / a bare nested array.
IntMatrix matrix_from_json(const Json& j);

/// Reads and parses a JSON file.  Syntax errors become FormatError carrying the
/// byte offset; schema errors carry the path of the offending field.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

LinearRepresentation load_representation(const std::string& path);
void save_representation(const std::string& path, const LinearRepresentation& rep);
GrowthCertificate load_certificate(const std::string& path);
void save_certificate(const std::string& path, const GrowthCertificate& cert);
MultiplicativeSpec load_spec(const std::string& path);
IntMatrix load_matrix(const std::string& path);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

// CSV: header row, LF line endings, integers in decimal, rationals as p/q.
std::string render_csv(const VerificationReport& report);
std::string render_csv(const DiscrepancyReport& report);
std::string render_csv(const LogBoundReport& report);
std::string render_csv(const RepunitReport& report);

}  // namespace kreg
