#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "corrdet/linalg.hpp"

namespace corrdet {

// Inputs further than this from symmetric are rejected.
inline constexpr double kSymmetryTolerance = 1e-9;

/// Headerless CSV: one row per line, comma-separated decimals, optional
/// whitespace; blank lines are ignored. The array must be square and
/// symmetric within 1e-9, and is then symmetrized by averaging.
/// Throws ParseError or NotSymmetric.
SymMatrix parse_matrix_csv(std::string_view text);
SymMatrix read_matrix_csv(const std::filesystem::path& path);

/// 17 significant digits, so parsing the output recovers every bit.
std::string format_matrix_csv(const SymMatrix& m);
void write_matrix_csv(const std::filesystem::path& path, const SymMatrix& m);

/// Serializes with every floating-point number printed to 17 significant
/// digits and keys in insertion order. Non-finite numbers become null.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace corrdet
