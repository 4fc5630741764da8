#pragma once

// Reading and writing knot vectors and span tables.
//
// Knot vectors:
//   JSON  {"degree": 2, "spans": 3, "knots": [0, 0, 0, 1, 2, 3, 3, 3]}
//   text  "2 3\n0 0 0 1 2 3 3 3\n"   (inline form: "2 3: 0 0 0 1 2 3 3 3")
// Span tables:
//   JSON  {"degree": m, "span": j, "columns": {"<i>": [b_0, ..., b_m], ...}}
//   CSV   header "k,i=<j-m>,...,i=<j>", one row per k
// Exact tables write each entry as a "p/q" string.

#include <filesystem>
#include <string>
#include <string_view>

#include "bbspan/knots.hpp"
#include "bbspan/scalar.hpp"
#include "bbspan/span_conversion.hpp"

namespace bbspan {

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view name);

/// Shortest decimal string that reads back to the same double.
std::string format_number(double v);
std::string format_number(const Rational& v);

/// Parses either knot format; the format is detected from the first
/// non-blank character. Throws ParseError or the validation error.
KnotVector parse_knots(std::string_view text);
KnotVector read_knots_file(const std::filesystem::path& path);

std::string knots_to_json(const KnotVector& kv);
std::string knots_to_text(const KnotVector& kv);

std::string write_table(const SpanTable<double>& table, Format format);
std::string write_table(const SpanTable<Rational>& table, Format format);

SpanTable<double> table_from_json(std::string_view text);
SpanTable<Rational> rational_table_from_json(std::string_view text);

}  // namespace bbspan
