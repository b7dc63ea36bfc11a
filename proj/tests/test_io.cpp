#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ramex/custom.hpp"
#include "ramex/errors.hpp"
#include "ramex/families.hpp"
#include "ramex/io.hpp"

using namespace ramex;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content) {
    path = std::filesystem::temp_directory_path() /
           ("ramex_io_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++) + ".csv");
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  static int counter;
};
int TempFile::counter = 0;

}  // namespace

TEST_CASE("format_sig12 and rational display") {
  CHECK(format_sig12(0.0) == "0");
  CHECK(format_sig12(24.0) == "24");
  CHECK(format_sig12(1.0 / 3.0) == "0.333333333333");
  CHECK(to_display(make_ratio(25, 12)) == "25/12");
  CHECK(to_display(make_ratio(-3, 9)) == "-1/3");
  CHECK(to_display(Rational(7)) == "7");
}

TEST_CASE("parse_rational forms") {
  CHECK(parse_rational("25/12") == make_ratio(25, 12));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0.25") == make_ratio(1, 4));
  CHECK(parse_rational("-1.5e2") == Rational(-150));
  CHECK(parse_rational("2e-3") == make_ratio(1, 500));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("custom file: unit-family equivalent") {
  TempFile file("fprime\n1,1\n");
  const auto coeffs = load_custom<Rational>(file.path.string(), 8);
  CHECK(coeffs.kind == CoefficientKind::fprime);
  REQUIRE(coeffs.entries.size() == 1);
  CHECK(coeffs.entries[0].first == 1);
  CHECK(coeffs.entries[0].second == Rational(1));

  SieveTables tables(8);
  FamilySpec spec;
  spec.kind = FamilyKind::custom;
  spec.path = file.path.string();
  const auto fprime = make_fprime<Rational>(spec, 8, tables);
  CHECK(fprime.at(1) == Rational(1));
  for (std::int64_t d = 2; d <= 8; ++d) CHECK(fprime.at(d) == Rational(0));
}

TEST_CASE("custom file: power-decay prefix, float and exact") {
  TempFile file("fprime\n1,1\n2,0.5\n4,0.25\n");
  const auto exact = load_custom<Rational>(file.path.string(), 8);
  REQUIRE(exact.entries.size() == 3);
  CHECK(exact.entries[1].second == make_ratio(1, 2));
  CHECK(exact.entries[2].second == make_ratio(1, 4));
  const auto approx = load_custom<double>(file.path.string(), 8);
  CHECK(approx.entries[1].second == 0.5);
}

TEST_CASE("custom file: fhat kind dualizes back to f'") {
  // fhat = [1, 0, ...] is the unit function's expansion
  TempFile file("fhat\n1,1\n");
  SieveTables tables(6);
  FamilySpec spec;
  spec.kind = FamilyKind::custom;
  spec.path = file.path.string();
  const auto fprime = make_fprime<Rational>(spec, 6, tables);
  CHECK(fprime.at(1) == Rational(1));
  for (std::int64_t d = 2; d <= 6; ++d) CHECK(fprime.at(d) == Rational(0));
}

TEST_CASE("custom file validation errors carry line numbers") {
  SUBCASE("duplicate index") {
    TempFile file("fprime\n1,1\n2,0.5\n1,3\n");
    try {
      load_custom<double>(file.path.string(), 8);
      FAIL("expected IngestError");
    } catch (const IngestError& e) {
      CHECK(std::string(e.what()).find(":4") != std::string::npos);
      CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
  }
  SUBCASE("index beyond support") {
    TempFile file("fprime\n9,1\n");
    CHECK_THROWS_AS(load_custom<double>(file.path.string(), 8), IngestError);
  }
  SUBCASE("index zero") {
    TempFile file("fprime\n0,1\n");
    CHECK_THROWS_AS(load_custom<double>(file.path.string(), 8), IngestError);
  }
  SUBCASE("non-numeric value") {
    TempFile file("fprime\n1,zebra\n");
    try {
      load_custom<double>(file.path.string(), 8);
      FAIL("expected IngestError");
    } catch (const IngestError& e) {
      CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
  }
  SUBCASE("bad header") {
    TempFile file("coefficients\n1,1\n");
    CHECK_THROWS_AS(load_custom<double>(file.path.string(), 8), IngestError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_custom<double>("/nonexistent/nope.csv", 8),
                    IngestError);
  }
}

namespace {

ConvolutionReport<Rational> worked_report() {
  SieveTables tables(8);
  const auto p = make_problem(ones_table<Rational>(4),
                              ones_table<Rational>(6), 4, 2);
  return report(p, tables);
}

}  // namespace

TEST_CASE("conv report CSV has the pinned column set") {
  const auto rep = worked_report();
  const std::string csv = emit(rep, OutputFormat::csv);
  CHECK(csv ==
        "N,h,brute_force,main_term,error,envelope,ratio\n"
        "4,2,24,22,2,,\n");
}

TEST_CASE("unit x unit CSV row renders exact zeros") {
  SieveTables tables(12);
  const auto p = make_problem(dirichlet_identity<Rational>(10),
                              dirichlet_identity<Rational>(11), 10, 1);
  const auto rep = report(p, tables);
  const std::string csv = emit(rep, OutputFormat::csv);
  CHECK(csv.find("10,1,10,10,0,") != std::string::npos);
}

TEST_CASE("human report shows the worked numbers") {
  const std::string text = emit(worked_report(), OutputFormat::human);
  CHECK(text.find("24") != std::string::npos);
  CHECK(text.find("22") != std::string::npos);
  CHECK(text.find("error") != std::string::npos);
}

TEST_CASE("json report round-trips field-for-field at render precision") {
  SieveTables tables(40);
  const auto fam = parse_family("power:0.5");
  const auto fprime = make_fprime<double>(fam, 32, tables);
  const auto gprime = make_fprime<double>(fam, 33, tables);
  const auto p = make_problem(fprime, gprime, 32, 1);
  const auto rep = report(p, BoundKind::power_delta, 0.5, tables);

  const std::string dumped = emit(rep, OutputFormat::json);
  const auto parsed = nlohmann::json::parse(dumped);
  CHECK(parsed["N"] == 32);
  CHECK(parsed["h"] == 1);
  CHECK(parsed["f_label"] == "power:0.5");
  CHECK(parsed["kind"] == "power-delta");
  // numbers re-parse to exactly their 12-digit rendering
  CHECK(parsed["brute_force"].get<double>() ==
        parse_double(format_sig12(rep.brute)));
  CHECK(parsed["main_term"].get<double>() ==
        parse_double(format_sig12(rep.main)));
  CHECK(parsed["envelope"].get<double>() ==
        parse_double(format_sig12(rep.bound)));
  // emitting the parsed values again is byte-stable
  ConvolutionReport<double> rebuilt = rep;
  rebuilt.brute = parsed["brute_force"].get<double>();
  rebuilt.main = parsed["main_term"].get<double>();
  rebuilt.error = parsed["error"].get<double>();
  CHECK(emit(rebuilt, OutputFormat::json) == dumped);
}

TEST_CASE("exact sweep rows render rationals as p/q") {
  SieveTables tables(128);
  const auto fam = parse_family("power:1");
  const auto sweep = error_sweep<Rational>(fam, fam, BoundKind::power_delta,
                                           1.0, 2, {8, 16, 32, 64, 120},
                                           tables, 1);
  const std::string csv = emit(sweep, OutputFormat::csv);
  CHECK(csv.substr(0, 46) == "N,h,brute_force,main_term,error,envelope,ratio");
  CHECK(csv.find('/') != std::string::npos);  // at least one exact rational
  const std::string json_text = emit(sweep, OutputFormat::json);
  const auto parsed = nlohmann::json::parse(json_text);
  CHECK(parsed["rows"].size() == 5);
  CHECK(parsed["rows"][0]["brute_force"].is_string());
}

TEST_CASE("ingham and decay emissions") {
  SieveTables tables(256);
  const auto points = ingham_check(1, {16, 64, 128}, tables);
  const std::string csv = emit(points, 1, OutputFormat::csv);
  CHECK(csv.substr(0, 16) == "N,lhs,rhs,ratio\n");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  const auto fhat = expansion_coeffs(ones_table<double>(256), 256);
  const auto fit = fit_decay(fhat, DecayModel::power);
  const std::string fit_json = emit(fit, OutputFormat::json);
  const auto parsed = nlohmann::json::parse(fit_json);
  CHECK(parsed["model"] == "power");
  CHECK(parsed["points"].get<std::size_t>() == fit.points);
}

TEST_CASE("expansion emission in all three formats") {
  const auto exp = expansion_coeffs(ones_table<Rational>(4), 4);
  const std::string csv = emit(exp, OutputFormat::csv);
  CHECK(csv ==
        "r,coefficient\n"
        "1,25/12\n"
        "2,3/4\n"
        "3,1/3\n"
        "4,1/4\n");
  const auto parsed = nlohmann::json::parse(emit(exp, OutputFormat::json));
  CHECK(parsed["support"] == 4);
  CHECK(parsed["coefficients"][0] == "25/12");
  CHECK(emit(exp, OutputFormat::human).find("25/12") != std::string::npos);
}

TEST_CASE("write_output failure modes") {
  CHECK_THROWS_AS(write_output("/nonexistent_dir/x/y.csv", "data"),
                  std::runtime_error);
  TempFile file("placeholder");
  write_output(file.path.string(), "hello\n");
  std::ifstream in(file.path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "hello");
}

TEST_CASE("output format parsing") {
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK(parse_output_format("human") == OutputFormat::human);
  CHECK_FALSE(parse_output_format("xml").has_value());
}
