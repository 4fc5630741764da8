#include "bbspan/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include "support/random_knots.hpp"

namespace bbspan {
namespace {

ErrorCode error_of(std::string_view text) {
  try {
    (void)parse_knots(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected parse to fail";
  return ErrorCode::InvalidArgument;
}

TEST(IoTest, ParsesAllKnotForms) {
  const auto a = parse_knots(R"({"degree": 2, "spans": 3, "knots": [0, 0, 0, 1, 2, 3, 3, 3]})");
  const auto b = parse_knots("2 3\n0 0 0 1 2 3 3 3\n");
  const auto c = parse_knots("  2 3: 0 0 0 1 2 3 3 3");
  for (const auto* kv : {&a, &b, &c}) {
    EXPECT_EQ(kv->degree(), 2);
    EXPECT_EQ(kv->spans(), 3);
    EXPECT_EQ(kv->t(1), 1.0);
  }
}

TEST(IoTest, ReportsParseAndValidationErrors) {
  EXPECT_EQ(error_of(""), ErrorCode::ParseError);
  EXPECT_EQ(error_of("2"), ErrorCode::ParseError);
  EXPECT_EQ(error_of("2 3: 0 0 x 1 2 3 3 3"), ErrorCode::ParseError);
  EXPECT_EQ(error_of(R"({"degree": 2, "knots": [0]})"), ErrorCode::ParseError);
  EXPECT_EQ(error_of("{not json"), ErrorCode::ParseError);
  EXPECT_EQ(error_of("2 3: 0 0 0 2 1 3 3 3"), ErrorCode::NotNondecreasing);
  EXPECT_EQ(error_of("2 3: 0 0 0 1 2 3 3"), ErrorCode::LengthMismatch);
}

TEST(IoTest, FormatNumberIsShortestRoundTrip) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(format_number(Rational(4, 6)), "2/3");
  EXPECT_EQ(format_number(Rational(0)), "0");
}

TEST(IoTest, KnotFormatsRoundTrip) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const auto kv = testing::random_float_knots(rng, 1 + trial % 6, 1 + trial % 7);
    const auto from_json = parse_knots(knots_to_json(kv));
    const auto from_text = parse_knots(knots_to_text(kv));
    ASSERT_TRUE(std::equal(kv.values().begin(), kv.values().end(), from_json.values().begin()));
    ASSERT_TRUE(std::equal(kv.values().begin(), kv.values().end(), from_text.values().begin()));
  }
}

TEST(IoTest, ReadsKnotFile) {
  const auto path = std::filesystem::temp_directory_path() / "bbspan_io_test_knots.json";
  {
    std::ofstream out(path);
    out << R"({"degree": 1, "spans": 2, "knots": [0, 0, 0.5, 1, 1]})";
  }
  EXPECT_EQ(read_knots_file(path).spans(), 2);
  std::filesystem::remove(path);
  EXPECT_THROW((void)read_knots_file(path), Error);
}

SpanTable<double> uniform_cubic_table() {
  std::vector<double> v;
  for (int i = -3; i <= 10; ++i) v.push_back(i);
  const auto kv = validate(3, 7, std::move(v));
  return convert_span_new(kv, SpanIndex{3});
}

TEST(IoTest, WritesCsvTable) {
  std::vector<double> v = {0, 0, 0, 1, 1, 1};
  const auto kv = validate(2, 1, std::move(v));
  EXPECT_EQ(write_table(convert_span_new(kv, SpanIndex{0}), Format::Csv),
            "k,i=-2,i=-1,i=0\n0,1,0,0\n1,0,1,0\n2,0,0,1\n");
}

TEST(IoTest, WritesExactCsvTable) {
  std::vector<Rational> v;
  for (int i = -3; i <= 10; ++i) v.emplace_back(i);
  const auto table = convert_span_new(validate(3, 7, std::move(v)), SpanIndex{3});
  const auto csv = write_table(table, Format::Csv);
  EXPECT_EQ(csv, "k,i=0,i=1,i=2,i=3\n0,1/6,2/3,1/6,0\n1,0,2/3,1/3,0\n2,0,1/3,2/3,0\n3,0,1/6,2/3,1/6\n");
}

TEST(IoTest, TableJsonRoundTrips) {
  const auto table = uniform_cubic_table();
  const auto json = write_table(table, Format::Json);
  EXPECT_NE(json.find("\"columns\""), std::string::npos);
  EXPECT_LT(json.find("\"0\""), json.find("\"3\""));  // columns in i order
  EXPECT_EQ(table_from_json(json), table);
  EXPECT_EQ(write_table(table_from_json(json), Format::Json), json);
}

TEST(IoTest, ExactTableJsonRoundTrips) {
  std::vector<Rational> v;
  for (int i = -2; i <= 7; ++i) v.emplace_back(Rational(i, 3));
  const auto table = convert_span_new(validate(2, 5, std::move(v)), SpanIndex{2});
  const auto json = write_table(table, Format::Json);
  EXPECT_NE(json.find("\"1/2\""), std::string::npos);
  EXPECT_EQ(rational_table_from_json(json), table);
}

TEST(IoTest, RejectsMalformedTableJson) {
  EXPECT_THROW((void)table_from_json(R"({"degree": 1, "span": 0, "columns": {"0": [1, 0]}})"), Error);
  EXPECT_THROW((void)table_from_json(R"({"degree": 1, "span": 0})"), Error);
  EXPECT_THROW((void)rational_table_from_json(
                   R"({"degree": 0, "span": 0, "columns": {"0": ["one"]}})"),
               Error);
}

TEST(IoTest, TextTableListsEveryEntry) {
  const auto text = write_table(uniform_cubic_table(), Format::Text);
  EXPECT_NE(text.find("span 3"), std::string::npos);
  EXPECT_NE(text.find("i=0"), std::string::npos);
  EXPECT_NE(text.find("0.16666666666666666"), std::string::npos);
}

TEST(IoTest, ParseFormat) {
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("text"), Format::Text);
  EXPECT_THROW((void)parse_format("xml"), Error);
}

}  // namespace
}  // namespace bbspan
