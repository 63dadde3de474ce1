#ifndef FPSEL_VERIFY_HPP
#define FPSEL_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fpsel {

// Inclusive integer range, parsed from "A" or "A..B".
struct Range {
  std::uint64_t lo = 0, hi = 0;
};

// Parses "A" or "A..B"; returns nullopt on malformed input.
std::optional<Range> parse_range(const std::string& text);

// Optional overrides for the per-suite default grids. Axes a suite does not
// use are ignored; for the constant-term suites the a/b/c axes select the
// exponent parameters of the same name in their natural order.
struct VerifyOptions {
  std::optional<Range> p, c, a, b;
  std::optional<int> n;
};

// Outcome of one verification sweep. checked = passed + failed counts the
// cells whose identity was actually evaluated; skipped counts cells excluded
// by a regime precondition (or reported as singular). Notes are informational
// side-channel lines (not part of the JSON report).
struct Report {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> grid;
  std::uint64_t checked = 0, passed = 0, skipped = 0, failed = 0;
  std::vector<std::string> counterexamples;
  std::uint64_t wall_time_ms = 0;
  std::vector<std::string> notes;
};

// The individual suite names, in canonical order (excludes "all").
extern const std::vector<std::string> kSuiteNames;

// Whether `name` is a valid argument to run_suite (a suite name or "all").
bool is_suite_name(const std::string& name);

// Runs one named suite (or every suite for "all") over its default grid with
// the given overrides applied. Throws DomainError or ResourceError for
// invalid or over-budget ranges -- callers should treat those as usage
// errors.
Report run_suite(const std::string& suite, const VerifyOptions& opt);

// Renders a report as a stable-schema JSON object:
// {suite, grid, checked, passed, skipped, failed, counterexamples[],
//  wall_time_ms}. Notes are not included.
std::string report_json(const Report& r);

}  // namespace fpsel

#endif  // FPSEL_VERIFY_HPP
