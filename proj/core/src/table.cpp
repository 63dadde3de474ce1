#include "fpsel/table.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fpsel/errors.hpp"
#include "fpsel/parallel.hpp"

namespace fpsel {

namespace {

constexpr std::uint32_t kMaxTableP = 512;
constexpr double kMaxDenseVolume = 5e8;

void annotate(TableCell& cell, const SelbergParams& S) {
  const std::uint32_t p = S.p();
  const Fp val{cell.value, *S.F};
  auto add = [&](const char* name, Fp expect) {
    cell.forms.push_back(expect == val ? std::string(name)
                                       : std::string(name) + ":MISMATCH");
  };
  if (S.main_regime()) add("product", selberg_rhs(S));
  if (std::uint64_t(S.a) + S.b + std::uint64_t(S.n - 1) * S.c ==
      std::uint64_t(p) - 1)
    add("base", base_case_value(S));
  if (S.morris_regime()) {
    add("morris", morris_form_rhs(S));
    add("binomial", binom_form_rhs(S));
  }
  if (cell.region.band >= 1) add("factorization", factorization_rhs(S));
  const bool low_degree =
      std::uint64_t(S.a) + S.b + std::uint64_t(S.n - 1) * S.c <
      std::uint64_t(p) - 1;
  if (low_degree || cell.region.band < 0) add("vanishing", Fp{0, *S.F});
}

}  // namespace

Table build_table(const PrimeField& F, int n, std::uint32_t c) {
  const std::uint32_t p = F.p();
  if (n < 1) throw DomainError("build_table: n must be at least 1");
  if (c >= p) throw DomainError("build_table: c must be less than p");
  if (p > kMaxTableP) throw ResourceError("build_table: p exceeds the budget");
  const double volume = std::pow(
      2.0 * (p - 1) + 2.0 * c * (n - 1) + 1.0, double(n));
  if (volume > kMaxDenseVolume)
    throw ResourceError("build_table: expansion volume exceeds the budget");
  Table t;
  t.p = p;
  t.n = n;
  t.c = c;
  t.cells.assign(std::size_t(p) * p, TableCell{});
  parallel_blocks(std::uint64_t(p) * p,
                  [&](std::uint64_t lo, std::uint64_t hi, int) {
                    for (std::uint64_t i = lo; i < hi; ++i) {
                      const std::uint32_t a = std::uint32_t(i / p);
                      const std::uint32_t b = std::uint32_t(i % p);
                      SelbergParams S(F, n, a, b, c);
                      TableCell& cell = t.cells[std::size_t(i)];
                      cell.a = a;
                      cell.b = b;
                      cell.value = selberg_S(S).v;
                      cell.region = region_classify(S);
                      annotate(cell, S);
                    }
                  });
  return t;
}

std::string table_csv(const Table& t) {
  std::ostringstream os;
  os << "a,b,value,region\n";
  for (const TableCell& cell : t.cells)
    os << cell.a << "," << cell.b << "," << cell.value << ","
       << region_name(cell.region) << "\n";
  return os.str();
}

std::string table_json(const Table& t) {
  nlohmann::ordered_json j;
  j["p"] = t.p;
  j["n"] = t.n;
  j["c"] = t.c;
  j["a_max_inside"] =
      std::int64_t(t.p) - 1 - std::int64_t(t.n - 1) * std::int64_t(t.c);
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const TableCell& cell : t.cells) {
    nlohmann::ordered_json c;
    c["a"] = cell.a;
    c["b"] = cell.b;
    c["value"] = cell.value;
    c["region"] = region_name(cell.region);
    c["forms"] = cell.forms;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j.dump(2);
}

std::string table_md(const Table& t) {
  std::ostringstream os;
  os << "# S_" << t.n << "(a,b," << t.c << ") over F_" << t.p << "\n\n";
  os << "| a\\b |";
  for (std::uint32_t b = 0; b < t.p; ++b) os << " " << b << " |";
  os << "\n|---|";
  for (std::uint32_t b = 0; b < t.p; ++b) os << "---|";
  os << "\n";
  for (std::uint32_t a = 0; a < t.p; ++a) {
    os << "| **" << a << "** |";
    for (std::uint32_t b = 0; b < t.p; ++b)
      os << " " << t.at(a, b).value << " |";
    os << "\n";
  }
  os << "\nRegions:\n";
  const std::int64_t athr =
      std::int64_t(t.p) - 1 - std::int64_t(t.n - 1) * std::int64_t(t.c);
  if (athr < 0) {
    os << "- all rows: outside (a exceeds the parameter rectangle)\n";
    return os.str();
  }
  // Region depends on b alone for rows a <= athr; compress that row's
  // labels into intervals.
  std::uint32_t start = 0;
  std::string current = region_name(t.at(0, 0).region);
  for (std::uint32_t b = 1; b <= t.p; ++b) {
    std::string name =
        b < t.p ? region_name(t.at(0, b).region) : std::string();
    if (b == t.p || name != current) {
      os << "- rows a=0.." << athr << ", b=" << start << ".." << (b - 1)
         << ": " << current << "\n";
      if (b < t.p) {
        start = b;
        current = name;
      }
    }
  }
  if (athr + 1 <= std::int64_t(t.p) - 1)
    os << "- rows a=" << (athr + 1) << ".." << (t.p - 1)
       << ": outside (identically zero)\n";
  return os.str();
}

}  // namespace fpsel
