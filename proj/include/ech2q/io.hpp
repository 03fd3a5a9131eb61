#pragma once

#include "ech2q/exact.hpp"
#include "ech2q/orbits.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ech2q::io {

enum class Format { tsv, json, md };

std::optional<Format> parse_format(std::string_view s);

/// Format precedence: explicit flag, then the ECH_FORMAT environment
/// variable, then TSV.
Format default_format();

/// "b^2he^3" style rendering with zero powers omitted; the empty current
/// prints as a lone empty-set sign, mirroring generator tables.
std::string render_current(const ReebCurrent& c);

/// Human form: bare integer when the denominator is one, else "n/d".
std::string render_rational(const Rational& r);

/// Canonical machine form: always "n/d", including "0/1".
std::string render_rational_canonical(const Rational& r);

/// "r", "r+cδ" or "r-cδ" with c omitted when 1.
std::string render_perturbed(const Perturbed& x);

/// Strict integer parse; throws std::invalid_argument.
Int parse_int(std::string_view s);

/// "n" or "n/d"; throws std::invalid_argument.
Rational parse_rational(std::string_view s);

/// Accepts "r", "r+cδ", "r-cδ"; the infinitesimal may be spelled δ or d,
/// and the ASCII hyphen or a true minus sign both work.
Perturbed parse_perturbed(std::string_view s);

/// One emitted table: a command echo, flat parameter map, fixed column
/// names and pre-stringified cells. Cell values are exact decimal/fraction
/// strings so no format can lose precision, and JSON round-trips
/// byte-identically.
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Serializes a record. TSV is tab-separated data rows only; Markdown adds
/// a header; JSON wraps rows in a schema-stable envelope with a format
/// version field.
std::string emit(const OutputRecord& record, Format format);

inline constexpr const char* format_version = "1";

}  // namespace ech2q::io
