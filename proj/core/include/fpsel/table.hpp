#ifndef FPSEL_TABLE_HPP
#define FPSEL_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpsel/closed_forms.hpp"
#include "fpsel/fp_integral.hpp"
#include "fpsel/prime_field.hpp"

namespace fpsel {

// One (a, b) cell of a parameter table: the integral value, the region of
// the (a, b) rectangle it falls in, and the names of the closed forms whose
// preconditions hold at this cell ("product", "base", "morris", "binomial",
// "factorization", "vanishing"). A form that applies but does not reproduce
// the value is listed with a ":MISMATCH" suffix (this indicates a bug and is
// asserted against in the test suite).
struct TableCell {
  std::uint32_t a, b, value;
  Region region;
  std::vector<std::string> forms;
};

// Full p x p table of S_n(a, b, c) values for fixed (p, n, c), row-major in
// (a, b). Rows with a > p-1-(n-1)c lie above the parameter rectangle and
// carry identically zero values.
struct Table {
  std::uint32_t p;
  int n;
  std::uint32_t c;
  std::vector<TableCell> cells;

  const TableCell& at(std::uint32_t a, std::uint32_t b) const {
    return cells.at(std::size_t(a) * p + b);
  }
};

// Computes the table by expansion; every annotation is recomputed honestly.
// Throws DomainError for invalid (n, c) and ResourceError when p or the
// dense expansion volume exceeds the budget.
Table build_table(const PrimeField& F, int n, std::uint32_t c);

// Renderings; all deterministic byte-for-byte for fixed inputs.
// CSV header: a,b,value,region. Region labels also appear in JSON and
// Markdown; the closed-form annotations appear only in JSON.
std::string table_csv(const Table& t);
std::string table_json(const Table& t);
std::string table_md(const Table& t);

}  // namespace fpsel

#endif  // FPSEL_TABLE_HPP
