#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "opnorm/certificate.hpp"
#include "opnorm/dense.hpp"

namespace opnorm::io {

using nlohmann::json;

inline constexpr std::string_view kResultSchema = "opnorm/1";
inline constexpr std::string_view kWitnessSchema = "opnorm-witness/1";

/// Comma-separated decimals, one row per line, no header. Errors carry the
/// 1-based line and column and are reported as kInput.
DenseMatrix parse_matrix_csv(std::string_view text);
DenseMatrix read_matrix_csv(const std::filesystem::path& path);

/// Entries at 17 significant digits, so parsing round-trips exactly.
std::string format_matrix_csv(const DenseMatrix& a);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Hex SHA-256 of format_matrix_csv(a).
std::string matrix_digest(const DenseMatrix& a);

/// %.17g for floats, sorted keys, no whitespace; non-finite floats become null.
std::string canonical_dump(const json& value);

json certificate_to_json(const ClassCertificate& certificate);
ClassCertificate certificate_from_json(const json& value);

struct Witness {
  std::string matrix_digest;
  ClassCertificate certificate;
};

json witness_to_json(const DenseMatrix& a, const ClassCertificate& certificate);
Witness witness_from_json(const json& value);

json matrix_to_json(const DenseMatrix& a);
DenseMatrix matrix_from_json(const json& value);

}  // namespace opnorm::io
