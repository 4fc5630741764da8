#include "bbspan/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace bbspan {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r\n", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r\n", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

template <class T>
T parse_token(std::string_view token, const char* what) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    parse_error(std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

KnotVector parse_knots_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    parse_error(std::string("knot JSON: ") + e.what());
  }
  try {
    const int m = doc.at("degree").get<int>();
    const int n = doc.at("spans").get<int>();
    auto values = doc.at("knots").get<std::vector<double>>();
    return validate(m, n, std::move(values));
  } catch (const json::exception& e) {
    parse_error(std::string("knot JSON: ") + e.what());
  }
}

KnotVector parse_knots_text(std::string_view text) {
  // "m n: t..." and "m n\nt..." differ only in the separator.
  std::string buffer(text);
  const auto colon = buffer.find(':');
  if (colon != std::string::npos) buffer[colon] = ' ';
  const auto tokens = split_ws(buffer);
  if (tokens.size() < 2) parse_error("knot text needs a 'degree spans' header");
  const int m = parse_token<int>(tokens[0], "degree");
  const int n = parse_token<int>(tokens[1], "span count");
  std::vector<double> values;
  values.reserve(tokens.size() - 2);
  for (std::size_t q = 2; q < tokens.size(); ++q) values.push_back(parse_token<double>(tokens[q], "knot"));
  return validate(m, n, std::move(values));
}

template <class Scalar>
ordered_json table_json(const SpanTable<Scalar>& table) {
  ordered_json doc;
  doc["degree"] = table.degree();
  doc["span"] = table.span().value;
  ordered_json columns = ordered_json::object();
  for (int i = table.first_function(); i <= table.last_function(); ++i) {
    ordered_json col = ordered_json::array();
    for (int k = 0; k <= table.degree(); ++k) {
      if constexpr (std::is_same_v<Scalar, Rational>) {
        col.push_back(format_number(table(k, i)));
      } else {
        col.push_back(table(k, i) == 0.0 ? 0.0 : table(k, i));
      }
    }
    columns[std::to_string(i)] = std::move(col);
  }
  doc["columns"] = std::move(columns);
  return doc;
}

template <class Scalar>
std::string table_csv(const SpanTable<Scalar>& table) {
  std::string out = "k";
  for (int i = table.first_function(); i <= table.last_function(); ++i) {
    out += ",i=" + std::to_string(i);
  }
  out += '\n';
  for (int k = 0; k <= table.degree(); ++k) {
    out += std::to_string(k);
    for (int i = table.first_function(); i <= table.last_function(); ++i) {
      out += ',' + format_number(table(k, i));
    }
    out += '\n';
  }
  return out;
}

template <class Scalar>
std::string table_text(const SpanTable<Scalar>& table) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 0;
  for (int k = 0; k <= table.degree(); ++k) {
    auto& row = cells.emplace_back();
    for (int i = table.first_function(); i <= table.last_function(); ++i) {
      row.push_back(format_number(table(k, i)));
      width = std::max(width, row.back().size());
    }
  }
  width = std::max<std::size_t>(width, 6) + 2;
  std::ostringstream os;
  os << "degree " << table.degree() << ", span " << table.span().value << '\n';
  os << std::left << std::setw(4) << "k";
  for (int i = table.first_function(); i <= table.last_function(); ++i) {
    os << std::right << std::setw(static_cast<int>(width)) << ("i=" + std::to_string(i));
  }
  os << '\n';
  for (int k = 0; k <= table.degree(); ++k) {
    os << std::left << std::setw(4) << k;
    for (const auto& cell : cells[k]) os << std::right << std::setw(static_cast<int>(width)) << cell;
    os << '\n';
  }
  return os.str();
}

template <class Scalar>
std::string write_any(const SpanTable<Scalar>& table, Format format) {
  switch (format) {
    case Format::Json:
      return table_json(table).dump(2) + '\n';
    case Format::Csv:
      return table_csv(table);
    case Format::Text:
      return table_text(table);
  }
  return {};
}

Rational rational_from_json(const json& v) {
  if (v.is_string()) {
    try {
      return Rational(v.get<std::string>());
    } catch (const std::exception&) {
      parse_error("bad rational '" + v.get<std::string>() + "'");
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return Rational(v.get<double>());
  parse_error("table entry is neither a number nor a string");
}

template <class Scalar>
SpanTable<Scalar> table_from_json_impl(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const int m = doc.at("degree").get<int>();
    const int j = doc.at("span").get<int>();
    if (m < 0) parse_error("negative degree");
    const auto& columns = doc.at("columns");
    RowMajorMatrix<Scalar> b = RowMajorMatrix<Scalar>::Zero(m + 1, m + 1);
    if (columns.size() != static_cast<std::size_t>(m + 1)) parse_error("expected degree + 1 columns");
    for (int c = 0; c <= m; ++c) {
      const auto& col = columns.at(std::to_string(j - m + c));
      if (col.size() != static_cast<std::size_t>(m + 1)) parse_error("column length must be degree + 1");
      for (int k = 0; k <= m; ++k) {
        if constexpr (std::is_same_v<Scalar, Rational>) {
          b(k, c) = rational_from_json(col.at(k));
        } else {
          b(k, c) = col.at(k).template get<double>();
        }
      }
    }
    return SpanTable<Scalar>(m, SpanIndex{j}, std::move(b));
  } catch (const json::exception& e) {
    parse_error(std::string("table JSON: ") + e.what());
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return {buf.data(), ptr};
}

std::string format_number(const Rational& v) { return to_string(v); }

KnotVector parse_knots(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) parse_error("empty knot input");
  return body.front() == '{' ? parse_knots_json(body) : parse_knots_text(body);
}

KnotVector read_knots_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_knots(ss.str());
}

std::string knots_to_json(const KnotVector& kv) {
  ordered_json doc;
  doc["degree"] = kv.degree();
  doc["spans"] = kv.spans();
  doc["knots"] = std::vector<double>(kv.values().begin(), kv.values().end());
  return doc.dump() + '\n';
}

std::string knots_to_text(const KnotVector& kv) {
  std::string out = std::to_string(kv.degree()) + ' ' + std::to_string(kv.spans()) + '\n';
  bool first = true;
  for (double v : kv.values()) {
    if (!first) out += ' ';
    out += format_number(v);
    first = false;
  }
  return out + '\n';
}

std::string write_table(const SpanTable<double>& table, Format format) { return write_any(table, format); }

std::string write_table(const SpanTable<Rational>& table, Format format) {
  return write_any(table, format);
}

SpanTable<double> table_from_json(std::string_view text) { return table_from_json_impl<double>(text); }

SpanTable<Rational> rational_table_from_json(std::string_view text) {
  return table_from_json_impl<Rational>(text);
}

}  // namespace bbspan
