#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <string>

#include "fpsel/errors.hpp"
#include "fpsel/prime_field.hpp"
#include "fpsel/table.hpp"
#include "fpsel/verify.hpp"

using namespace fpsel;

TEST_CASE("range parsing") {
  auto r = parse_range("5");
  REQUIRE(r.has_value());
  CHECK(r->lo == 5);
  CHECK(r->hi == 5);
  r = parse_range("3..7");
  REQUIRE(r.has_value());
  CHECK(r->lo == 3);
  CHECK(r->hi == 7);
  r = parse_range("0..0");
  REQUIRE(r.has_value());
  CHECK(r->lo == 0);
  CHECK(parse_range("").has_value() == false);
  CHECK(parse_range("a").has_value() == false);
  CHECK(parse_range("3..").has_value() == false);
  CHECK(parse_range("..5").has_value() == false);
  CHECK(parse_range("3..x").has_value() == false);
  CHECK(parse_range("1..2..3").has_value() == false);
  CHECK(parse_range("-3").has_value() == false);
  CHECK(parse_range("3.5").has_value() == false);
  CHECK(parse_range("9999999999999999999999").has_value() == false);
}

TEST_CASE("suite names") {
  CHECK(kSuiteNames.size() == 9);
  for (const auto& name : kSuiteNames) CHECK(is_suite_name(name));
  CHECK(is_suite_name("all"));
  CHECK_FALSE(is_suite_name("nope"));
  CHECK_FALSE(is_suite_name(""));
  CHECK_FALSE(is_suite_name("Beta"));
  VerifyOptions opt;
  CHECK_THROWS_AS(run_suite("nope", opt), DomainError);
}

TEST_CASE("single-prime sweep counts and invariants") {
  VerifyOptions opt;
  opt.p = Range{3, 3};
  Report r = run_suite("beta", opt);
  CHECK(r.suite == "beta");
  CHECK(r.checked == 9);  // all (a, b) in [0, 2]^2
  CHECK(r.passed == 9);
  CHECK(r.failed == 0);
  CHECK(r.skipped == 0);
  CHECK(r.counterexamples.empty());
  CHECK(r.checked == r.passed + r.failed);

  VerifyOptions sopt;
  sopt.p = Range{5, 5};
  sopt.n = 2;
  sopt.c = Range{1, 1};
  Report s = run_suite("selberg", sopt);
  CHECK(s.checked + s.skipped == 25);  // the full (a, b) square
  CHECK(s.checked == s.passed + s.failed);
  CHECK(s.failed == 0);
  CHECK(s.skipped > 0);  // low-degree cells are excluded by the regime
}

TEST_CASE("invalid grids are usage errors") {
  VerifyOptions opt;
  opt.p = Range{4, 4};  // no odd prime in range
  CHECK_THROWS_AS(run_suite("beta", opt), DomainError);
  opt.p = Range{7, 3};  // empty range
  CHECK_THROWS_AS(run_suite("beta", opt), DomainError);
  opt.p = Range{3, 100000};  // too many primes for one sweep
  CHECK_THROWS_AS(run_suite("beta", opt), DomainError);
  VerifyOptions nopt;
  nopt.n = 0;
  CHECK_THROWS_AS(run_suite("selberg", nopt), DomainError);
}

TEST_CASE("report JSON carries the stable schema") {
  VerifyOptions opt;
  opt.p = Range{3, 5};
  Report r = run_suite("beta", opt);
  std::string text = report_json(r);
  auto j = nlohmann::json::parse(text);
  CHECK(j["suite"] == "beta");
  CHECK(j["checked"].is_number_unsigned());
  CHECK(j["passed"] == j["checked"]);
  CHECK(j["failed"] == 0);
  CHECK(j["skipped"] == 0);
  CHECK(j["counterexamples"].is_array());
  CHECK(j["counterexamples"].empty());
  CHECK(j["wall_time_ms"].is_number_unsigned());
  CHECK(j["grid"].is_object());
  // Stable key order: suite first, then grid, counts, counterexamples, time.
  CHECK(text.find("\"suite\"") < text.find("\"grid\""));
  CHECK(text.find("\"grid\"") < text.find("\"checked\""));
  CHECK(text.find("\"checked\"") < text.find("\"passed\""));
  CHECK(text.find("\"passed\"") < text.find("\"skipped\""));
  CHECK(text.find("\"skipped\"") < text.find("\"failed\""));
  CHECK(text.find("\"failed\"") < text.find("\"counterexamples\""));
  CHECK(text.find("\"counterexamples\"") < text.find("\"wall_time_ms\""));
}

TEST_CASE("aggregate run prefixes sub-suite grids") {
  VerifyOptions opt;
  opt.p = Range{5, 5};
  opt.c = Range{1, 1};
  opt.a = Range{0, 2};
  opt.b = Range{0, 2};
  Report r = run_suite("all", opt);
  CHECK(r.suite == "all");
  CHECK(r.failed == 0);
  CHECK(r.checked == r.passed);
  // The grid names every sub-suite, and notes carry their suite prefix.
  REQUIRE_FALSE(r.grid.empty());
  CHECK(r.grid.front().first == "suites");
  CHECK(r.grid.front().second.find("beta") != std::string::npos);
  CHECK(r.grid.front().second.find("kz") != std::string::npos);
  for (const auto& note : r.notes)
    CHECK(note.find(": ") != std::string::npos);
}

TEST_CASE("worker count does not change any reported result") {
  VerifyOptions opt;
  opt.p = Range{5, 7};
  setenv("FPSEL_WORKERS", "1", 1);
  Report one = run_suite("selberg", opt);
  setenv("FPSEL_WORKERS", "5", 1);
  Report many = run_suite("selberg", opt);
  setenv("FPSEL_WORKERS", "1", 1);
  CHECK(one.checked == many.checked);
  CHECK(one.passed == many.passed);
  CHECK(one.skipped == many.skipped);
  CHECK(one.failed == many.failed);
  CHECK(one.counterexamples == many.counterexamples);
  CHECK(one.notes == many.notes);
}

TEST_CASE("value tables are deterministic and structurally sound") {
  PrimeField F(11);
  Table t = build_table(F, 2, 3);
  CHECK(t.cells.size() == 121);
  std::string csv1 = table_csv(t);
  setenv("FPSEL_WORKERS", "6", 1);
  Table t2 = build_table(F, 2, 3);
  setenv("FPSEL_WORKERS", "1", 1);
  CHECK(table_csv(t2) == csv1);
  CHECK(csv1.rfind("a,b,value,region\n", 0) == 0);

  // Rows above the boundary a = p-1-(n-1)c are identically zero.
  for (std::uint32_t a = 8; a < 11; ++a)
    for (std::uint32_t b = 0; b < 11; ++b) {
      CHECK(t.at(a, b).value == 0);
      CHECK(t.at(a, b).region.band == -1);
    }
  // The pinned constant row.
  for (std::uint32_t b = 0; b < 11; ++b) CHECK(t.at(7, b).value == 2);
  // Every annotation that applies reproduces the value: no mismatch markers.
  for (const auto& cell : t.cells)
    for (const auto& f : cell.forms)
      CHECK(f.find(":MISMATCH") == std::string::npos);

  auto j = nlohmann::json::parse(table_json(t));
  CHECK(j["p"] == 11);
  CHECK(j["n"] == 2);
  CHECK(j["c"] == 3);
  CHECK(j["a_max_inside"] == 7);
  CHECK(j["cells"].size() == 121);

  std::string md = table_md(t);
  CHECK(md.find("| a\\b |") != std::string::npos);
  CHECK(md.find("Regions:") != std::string::npos);

  CHECK_THROWS_AS(build_table(F, 0, 1), DomainError);
  CHECK_THROWS_AS(build_table(F, 2, 11), DomainError);
  PrimeField big(499);
  CHECK_THROWS_AS(build_table(big, 3, 400), ResourceError);
}
