#include "fpsel/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "fpsel/closed_forms.hpp"
#include "fpsel/errors.hpp"
#include "fpsel/fp_integral.hpp"
#include "fpsel/kz.hpp"
#include "fpsel/parallel.hpp"
#include "fpsel/poch_identity.hpp"
#include "fpsel/prime_field.hpp"

namespace fpsel {

namespace {

constexpr std::uint64_t kMaxPrime = 100'000;
constexpr std::uint64_t kMaxPrimesPerSweep = 64;
constexpr std::uint64_t kMaxAxisValue = 1'000'000;

bool is_odd_prime(std::uint64_t v) {
  if (v < 3 || v % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> primes_in(const Range& r) {
  if (r.lo > r.hi) throw DomainError("prime range has lo > hi");
  if (r.hi > kMaxPrime) throw DomainError("prime range exceeds the budget");
  std::vector<std::uint32_t> out;
  for (std::uint64_t v = std::max<std::uint64_t>(r.lo, 3); v <= r.hi; ++v)
    if (is_odd_prime(v)) {
      out.push_back(std::uint32_t(v));
      if (out.size() > kMaxPrimesPerSweep)
        throw DomainError("prime range selects too many primes");
    }
  if (out.empty()) throw DomainError("prime range contains no odd prime");
  return out;
}

std::vector<std::uint32_t> values_in(const Range& r) {
  if (r.lo > r.hi) throw DomainError("range has lo > hi");
  if (r.hi > kMaxAxisValue) throw DomainError("range exceeds the budget");
  std::vector<std::uint32_t> out;
  for (std::uint64_t v = r.lo; v <= r.hi; ++v)
    out.push_back(std::uint32_t(v));
  return out;
}

std::string range_str(const Range& r) {
  return r.lo == r.hi ? std::to_string(r.lo)
                      : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

// Field cache shared (read-only) by all worker threads of a sweep.
struct Fields {
  std::map<std::uint32_t, std::unique_ptr<PrimeField>> by_p;

  const PrimeField& get(std::uint32_t p) const { return *by_p.at(p); }
  void add(const std::vector<std::uint32_t>& ps) {
    for (std::uint32_t p : ps)
      if (!by_p.count(p)) by_p.emplace(p, std::make_unique<PrimeField>(p));
  }
};

enum class Kind { pass, fail, skip };

struct Outcome {
  Kind kind = Kind::pass;
  std::string detail;  // counterexample text for fail
  std::string note;    // informational line, any kind
};

// Evaluates cells 0..ncells-1 (in parallel when FPSEL_WORKERS > 1) and folds
// the outcomes into `rep` in cell order, independent of the worker count.
void sweep(Report& rep, std::uint64_t ncells,
           const std::function<Outcome(std::uint64_t)>& eval) {
  std::vector<std::vector<Outcome>> slots(
      static_cast<std::size_t>(worker_count()));
  parallel_blocks(ncells, [&](std::uint64_t b, std::uint64_t e, int slot) {
    auto& out = slots[std::size_t(slot)];
    out.reserve(std::size_t(e - b));
    for (std::uint64_t i = b; i < e; ++i) {
      try {
        out.push_back(eval(i));
      } catch (const std::exception& ex) {
        out.push_back(Outcome{Kind::fail,
                              "cell " + std::to_string(i) +
                                  ": unexpected exception: " + ex.what(),
                              ""});
      }
    }
  });
  for (const auto& slot : slots)
    for (const auto& o : slot) {
      switch (o.kind) {
        case Kind::pass:
          ++rep.checked;
          ++rep.passed;
          break;
        case Kind::fail:
          ++rep.checked;
          ++rep.failed;
          rep.counterexamples.push_back(o.detail);
          break;
        case Kind::skip:
          ++rep.skipped;
          break;
      }
      if (!o.note.empty()) rep.notes.push_back(o.note);
    }
}

struct GridCell {
  std::uint32_t p;
  int n;
  std::uint32_t c, a, b;
};

std::string cell_str(const GridCell& g) {
  std::ostringstream os;
  os << "p=" << g.p << " n=" << g.n << " c=" << g.c << " a=" << g.a
     << " b=" << g.b;
  return os.str();
}

// The (p, n, c, a, b) product grid; a and b default to 0..p-1 per prime and
// are clamped to it, and c values >= p are dropped.
std::vector<GridCell> product_grid(const std::vector<std::uint32_t>& ps,
                                   const std::vector<int>& ns,
                                   const std::vector<std::uint32_t>& cs,
                                   const std::optional<Range>& aopt,
                                   const std::optional<Range>& bopt) {
  std::vector<GridCell> cells;
  for (std::uint32_t p : ps) {
    auto clamp_axis = [&](const std::optional<Range>& o) {
      Range r = o.value_or(Range{0, p - 1});
      r.hi = std::min<std::uint64_t>(r.hi, p - 1);
      std::vector<std::uint32_t> vals;
      if (r.lo <= r.hi) vals = values_in(r);
      return vals;
    };
    const std::vector<std::uint32_t> as = clamp_axis(aopt);
    const std::vector<std::uint32_t> bs = clamp_axis(bopt);
    for (int n : ns)
      for (std::uint32_t c : cs) {
        if (c >= p) continue;
        for (std::uint32_t a : as)
          for (std::uint32_t b : bs) cells.push_back(GridCell{p, n, c, a, b});
      }
  }
  return cells;
}

std::vector<int> resolve_n(const std::optional<int>& n,
                           std::vector<int> defaults) {
  if (!n) return defaults;
  if (*n < 1) throw DomainError("n must be at least 1");
  return {*n};
}

void describe_grid(Report& rep, const std::optional<Range>& p, Range pdef,
                   const std::vector<int>& ns, const std::optional<Range>& c,
                   Range cdef, const std::optional<Range>& a,
                   const std::optional<Range>& b, const char* abdef) {
  rep.grid.emplace_back("p", range_str(p.value_or(pdef)));
  std::string nstr;
  for (std::size_t i = 0; i < ns.size(); ++i)
    nstr += (i ? "," : "") + std::to_string(ns[i]);
  rep.grid.emplace_back("n", nstr);
  rep.grid.emplace_back("c", range_str(c.value_or(cdef)));
  rep.grid.emplace_back("a", a ? range_str(*a) : abdef);
  rep.grid.emplace_back("b", b ? range_str(*b) : abdef);
}

// ---------------------------------------------------------------- suites --

Report suite_beta(const VerifyOptions& opt) {
  Report rep;
  rep.suite = "beta";
  const Range pdef{3, 13};
  const auto ps = primes_in(opt.p.value_or(pdef));
  Fields fields;
  fields.add(ps);
  std::vector<GridCell> cells =
      product_grid(ps, {1}, {0}, opt.a, opt.b);
  rep.grid.emplace_back("p", range_str(opt.p.value_or(pdef)));
  rep.grid.emplace_back("a", opt.a ? range_str(*opt.a) : "0..p-1");
  rep.grid.emplace_back("b", opt.b ? range_str(*opt.b) : "0..p-1");
  sweep(rep, cells.size(), [&](std::uint64_t i) {
    const GridCell& g = cells[std::size_t(i)];
    const PrimeField& F = fields.get(g.p);
    Fp lhs = beta_expansion(g.a, g.b, F);
    Fp rhs = beta_closed_form(g.a, g.b, F);
    if (lhs == rhs) return Outcome{};
    std::ostringstream os;
    os << "p=" << g.p << " a=" << g.a << " b=" << g.b << ": expansion="
       << lhs.v << " closed_form=" << rhs.v;
    return Outcome{Kind::fail, os.str(), ""};
  });
  return rep;
}

Report suite_selberg(const VerifyOptions& opt) {
  Report rep;
  rep.suite = "selberg";
  const Range pdef{5, 13}, cdef{0, 4};
  const auto ps = primes_in(opt.p.value_or(pdef));
  const auto ns = resolve_n(opt.n, {1, 2, 3});
  const auto cs = values_in(opt.c.value_or(cdef));
  Fields fields;
  fields.add(ps);
  auto cells = product_grid(ps, ns, cs, opt.a, opt.b);
  describe_grid(rep, opt.p, pdef, ns, opt.c, cdef, opt.a, opt.b, "0..p-1");
  sweep(rep, cells.size(), [&](std::uint64_t i) {
    const GridCell& g = cells[std::size_t(i)];
    SelbergParams S(fields.get(g.p), g.n, g.a, g.b, g.c);
    if (!S.main_regime()) return Outcome{Kind::skip, "", ""};
    Fp lhs = selberg_S(S);
    Fp rhs = selberg_rhs(S);
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << cell_str(g) << ": selberg_S=" << lhs.v << " selberg_rhs=" << rhs.v;
      return Outcome{Kind::fail, os.str(), ""};
    }
    const std::uint64_t low =
        std::uint64_t(g.a) + g.b + std::uint64_t(g.n - 1) * g.c;
    if (low == std::uint64_t(g.p) - 1) {
      Fp base = base_case_value(S);
      if (!(base == lhs)) {
        std::ostringstream os;
        os << cell_str(g) << ": selberg_S=" << lhs.v
           << " base_case_value=" << base.v;
        return Outcome{Kind::fail, os.str(), ""};
      }
    }
    return Outcome{};
  });
  return rep;
}

Report suite_aomoto(const VerifyOptions& opt) {
  Report rep;
  rep.suite = "aomoto";
  const Range pdef{5, 13}, cdef{0, 4};
  const auto ps = primes_in(opt.p.value_or(pdef));
  const auto ns = resolve_n(opt.n, {1, 2, 3});
  const auto cs = values_in(opt.c.value_or(cdef));
  Fields fields;
  fields.add(ps);
  auto cells = product_grid(ps, ns, cs, opt.a, opt.b);
  describe_grid(rep, opt.p, pdef, ns, opt.c, cdef, opt.a, opt.b, "0..p-1");
  sweep(rep, cells.size(), [&](std::uint64_t i) {
    const GridCell& g = cells[std::size_t(i)];
    const PrimeField& F = fields.get(g.p);
    SelbergParams S(F, g.n, g.a, g.b, g.c);
    if (!S.aomoto_regime()) return Outcome{Kind::skip, "", ""};
    for (int k = 0; k < g.n; ++k) {
      Fp lhs = selberg_Skn(S, k);
      Fp rhs = aomoto_rhs(S, k);
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << cell_str(g) << " k=" << k << ": selberg_Skn=" << lhs.v
           << " aomoto_rhs=" << rhs.v;
        return Outcome{Kind::fail, os.str(), ""};
      }
    }
    // Recursion chain: S_{0,n} -> S_{n,n} equals the a -> a+1 shift.
    Fp chain = selberg_Skn(S, 0);
    for (int k = 1; k <= g.n; ++k) chain = chain * aomoto_step(S, k);
    Fp top = selberg_Skn(S, g.n);
    if (!(chain == top)) {
      std::ostringstream os;
      os << cell_str(g) << ": step chain=" << chain.v
         << " selberg_Skn(n)=" << top.v;
      return Outcome{Kind::fail, os.str(), ""};
    }
    if (g.a + 1 < g.p) {
      SelbergParams Sh(F, g.n, g.a + 1, g.b, g.c);
      Fp shifted = selberg_S(Sh);
      if (!(chain == shifted)) {
        std::ostringstream os;
        os << cell_str(g) << ": step chain=" << chain.v
           << " selberg_S(a+1)=" << shifted.v;
        return Outcome{Kind::fail, os.str(), ""};
      }
    }
    return Outcome{};
  });
  return rep;
}

Report suite_morris(const VerifyOptions& opt) {
  Report rep;
  rep.suite = "morris";
  // Family one: the constant-term identity over Z with exponents
  // (alpha, beta, gamma) selected by the a/b/c axes.
  struct CtCell {
    int n;
    std::uint32_t alpha, beta, gamma;
  };
  const auto ct_ns = resolve_n(opt.n, {1, 2, 3});
  const auto alphas = values_in(opt.a.value_or(Range{0, 3}));
  const auto betas = values_in(opt.b.value_or(Range{0, 3}));
  const auto gammas = values_in(opt.c.value_or(Range{0, 2}));
  std::vector<CtCell> ct_cells;
  for (int n : ct_ns)
    for (std::uint32_t al : alphas)
      for (std::uint32_t be : betas)
        for (std::uint32_t ga : gammas)
          ct_cells.push_back(CtCell{n, al, be, ga});
  // Family two: the two closed forms against the expansion on the
  // (p, n, c, a, b) grid.
  const Range pdef{5, 13}, cdef{0, 4};
  const auto ps = primes_in(opt.p.value_or(pdef));
  const auto ns = resolve_n(opt.n, {1, 2, 3});
  const auto cs = values_in(opt.c.value_or(cdef));
  Fields fields;
  fields.add(ps);
  auto grid_cells = product_grid(ps, ns, cs, opt.a, opt.b);
  rep.grid.emplace_back("ct_n", opt.n ? std::to_string(*opt.n) : "1..3");
  rep.grid.emplace_back("ct_alpha",
                        range_str(opt.a.value_or(Range{0, 3})));
  rep.grid.emplace_back("ct_beta", range_str(opt.b.value_or(Range{0, 3})));
  rep.grid.emplace_back("ct_gamma", range_str(opt.c.value_or(Range{0, 2})));
  describe_grid(rep, opt.p, pdef, ns, opt.c, cdef, opt.a, opt.b, "0..p-1");
  const std::uint64_t split = ct_cells.size();
  sweep(rep, split + grid_cells.size(), [&](std::uint64_t i) {
    if (i < split) {
      const CtCell& c = ct_cells[std::size_t(i)];
      BigInt lhs = morris_ct_oracle(c.n, c.alpha, c.beta, c.gamma);
      BigInt rhs = morris_rhs_z(c.n, c.alpha, c.beta, c.gamma);
      if (lhs == rhs) return Outcome{};
      std::ostringstream os;
      os << "ct n=" << c.n << " alpha=" << c.alpha << " beta=" << c.beta
         << " gamma=" << c.gamma << ": oracle=" << lhs.str()
         << " product=" << rhs.str();
      return Outcome{Kind::fail, os.str(), ""};
    }
    const GridCell& g = grid_cells[std::size_t(i - split)];
    SelbergParams S(fields.get(g.p), g.n, g.a, g.b, g.c);
    if (!S.morris_regime()) return Outcome{Kind::skip, "", ""};
    Fp lhs = selberg_S(S);
    Fp form = morris_form_rhs(S);
    if (!(lhs == form)) {
      std::ostringstream os;
      os << cell_str(g) << ": selberg_S=" << lhs.v
         << " morris_form_rhs=" << form.v;
      return Outcome{Kind::fail, os.str(), ""};
    }
    Fp binom = binom_form_rhs(S);
    if (!(lhs == binom)) {
      std::ostringstream os;
      os << cell_str(g) << ": selberg_S=" << lhs.v
         << " binom_form_rhs=" << binom.v;
      return Outcome{Kind::fail, os.str(), ""};
    }
    return Outcome{};
  });
  return rep;
}

Report suite_dyson(const VerifyOptions& opt) {
  Report rep;
  rep.suite = "dyson";
  struct DCell {
    int n;
    std::uint32_t c;
  };
  const auto ns = resolve_n(opt.n, {1, 2, 3, 4});
  const auto cs = values_in(opt.c.value_or(Range{1, 3}));
  std::vector<DCell> cells;
  for (int n : ns)
    for (std::uint32_t c : cs) cells.push_back(DCell{n, c});
  std::string nstr;
  for (std::size_t i = 0; i < ns.size(); ++i)
    nstr += (i ? "," : "") + std::to_string(ns[i]);
  rep.grid.emplace_back("n", nstr);
  rep.grid.emplace_back("c", range_str(opt.c.value_or(Range{1, 3})));
  sweep(rep, cells.size(), [&](std::uint64_t i) {
    const DCell& c = cells[std::size_t(i)];
    BigInt lhs = dyson_ct_oracle(c.n, c.c);
    BigInt rhs = dyson_value_z(c.n, c.c);
    if (lhs == rhs) return Outcome{};
    std::ostringstream os;
    os << "n=" << c.n << " c=" << c.c << ": oracle=" << lhs.str()
       << " product=" << rhs.str();
    return Outcome{Kind::fail, os.str(), ""};
  });
  return rep;
}

Report suite_factorization(const VerifyOptions& opt) {
  Report rep;
  rep.suite = "factorization";
  const Range pdef{11, 11}, cdef{3, 3};
  const auto ps = primes_in(opt.p.value_or(pdef));
  const auto ns = resolve_n(opt.n, {2, 3});
  const auto cs = values_in(opt.c.value_or(cdef));
  Fields fields;
  fields.add(ps);
  auto cells = product_grid(ps, ns, cs, opt.a, opt.b);
  describe_grid(rep, opt.p, pdef, ns, opt.c, cdef, opt.a, opt.b, "0..p-1");
  sweep(rep, cells.size(), [&](std::uint64_t i) {
    const GridCell& g = cells[std::size_t(i)];
    SelbergParams S(fields.get(g.p), g.n, g.a, g.b, g.c);
    Region reg = region_classify(S);
    Fp lhs = selberg_S(S);
    Fp rhs{0, *S.F};
    const char* what = "";
    if (reg.band < 0) {
      rhs = Fp{0, *S.F};  // rows above the parameter rectangle vanish
      what = "vanishing";
    } else if (reg.band == 0) {
      rhs = selberg_omega0_value(S);
      what = "omega0 value";
    } else {
      rhs = factorization_rhs(S);
      what = "factorization_rhs";
    }
    if (lhs == rhs) return Outcome{};
    std::ostringstream os;
    os << cell_str(g) << " region=" << region_name(reg)
       << ": selberg_S=" << lhs.v << " " << what << "=" << rhs.v;
    return Outcome{Kind::fail, os.str(), ""};
  });
  return rep;
}

Report suite_jacobi(const VerifyOptions& opt) {
  Report rep;
  rep.suite = "jacobi";
  const Range pdef{5, 13}, cdef{1, 4};
  const auto ps = primes_in(opt.p.value_or(pdef));
  const auto ns = resolve_n(opt.n, {1, 2, 3});
  auto craw = values_in(opt.c.value_or(cdef));
  std::vector<std::uint32_t> cs;
  for (std::uint32_t c : craw)
    if (c >= 1) cs.push_back(c);  // the proposition needs c invertible
  Fields fields;
  fields.add(ps);
  auto cells = product_grid(ps, ns, cs, opt.a, opt.b);
  describe_grid(rep, opt.p, pdef, ns, opt.c, cdef, opt.a, opt.b, "0..p-1");
  sweep(rep, cells.size(), [&](std::uint64_t i) {
    const GridCell& g = cells[std::size_t(i)];
    SelbergParams S(fields.get(g.p), g.n, g.a, g.b, g.c);
    if (!S.aomoto_regime() || g.c % g.p == 0)
      return Outcome{Kind::skip, "", ""};
    try {
      if (jacobi_check(S)) return Outcome{};
    } catch (const SingularError& e) {
      return Outcome{Kind::skip, "",
                     cell_str(g) + ": singular denominator (" + e.what() +
                         ")"};
    }
    return Outcome{Kind::fail, cell_str(g) + ": jacobi sides differ", ""};
  });
  return rep;
}

Report suite_identity(const VerifyOptions& opt) {
  Report rep;
  rep.suite = "identity";
  struct IdCell {
    int n;
    std::uint32_t c;
  };
  std::vector<IdCell> id_cells;
  if (opt.n || opt.c) {
    const auto ns = resolve_n(opt.n, {2, 3});
    const auto cs = values_in(opt.c.value_or(Range{1, 2}));
    for (int n : ns)
      for (std::uint32_t c : cs) id_cells.push_back(IdCell{n, c});
  } else {
    id_cells = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  }
  // Decoupled rational sum cells.
  struct DecCell {
    int n;
    std::uint32_t a, b, c;
  };
  const auto dns = resolve_n(opt.n, {2, 3});
  const auto das = values_in(opt.a.value_or(Range{0, 2}));
  const auto dbs = values_in(opt.b.value_or(Range{0, 2}));
  const auto dcs = values_in(opt.c.value_or(Range{1, 1}));
  std::vector<DecCell> dec_cells;
  for (int n : dns)
    for (std::uint32_t a : das)
      for (std::uint32_t b : dbs)
        for (std::uint32_t c : dcs) dec_cells.push_back(DecCell{n, a, b, c});
  {
    std::string pairs;
    for (std::size_t i = 0; i < id_cells.size(); ++i)
      pairs += (i ? " " : "") + std::string("(") +
               std::to_string(id_cells[i].n) + "," +
               std::to_string(id_cells[i].c) + ")";
    rep.grid.emplace_back("identity_nc", pairs);
    rep.grid.emplace_back("decoupled_n",
                          opt.n ? std::to_string(*opt.n) : "2..3");
    rep.grid.emplace_back("decoupled_a",
                          range_str(opt.a.value_or(Range{0, 2})));
    rep.grid.emplace_back("decoupled_b",
                          range_str(opt.b.value_or(Range{0, 2})));
    rep.grid.emplace_back("decoupled_c",
                          range_str(opt.c.value_or(Range{1, 1})));
  }
  // Enforce the enumeration budget up front so oversized grids are rejected
  // as usage errors rather than failing mid-sweep.
  for (const IdCell& c : id_cells) {
    MSelection probe(c.n, c.c);
    (void)probe;
  }
  for (const DecCell& c : dec_cells) {
    MSelection probe(c.n, c.c);
    (void)probe;
  }
  const std::uint64_t split = id_cells.size();
  sweep(rep, split + dec_cells.size(), [&](std::uint64_t i) {
    if (i < split) {
      const IdCell& c = id_cells[std::size_t(i)];
      if (!verify_identity(c.n, c.c)) {
        return Outcome{Kind::fail,
                       "identity n=" + std::to_string(c.n) +
                           " c=" + std::to_string(c.c) + ": sides differ",
                       ""};
      }
      std::string note = "identity n=" + std::to_string(c.n) +
                         " c=" + std::to_string(c.c) +
                         ": normal form " + identity_normal_form(c.n, c.c);
      return Outcome{Kind::pass, "", note};
    }
    const DecCell& c = dec_cells[std::size_t(i - split)];
    if (decoupled_sum_check(c.n, c.a, c.b, c.c)) return Outcome{};
    std::ostringstream os;
    os << "decoupled n=" << c.n << " a=" << c.a << " b=" << c.b
       << " c=" << c.c << ": sum=" << decoupled_selberg_sum(c.n, c.a, c.b, c.c)
       << " product=" << classical_selberg_rhs(c.n, c.a, c.b, c.c);
    return Outcome{Kind::fail, os.str(), ""};
  });
  return rep;
}

Report suite_kz(const VerifyOptions& opt) {
  Report rep;
  rep.suite = "kz";
  struct Instance {
    std::uint32_t p, m1, m2;
    int n;
    std::int64_t knum, kden;
  };
  std::vector<Instance> all = {{7, 2, 2, 1, 3, 1}, {11, 3, 3, 2, 2, 1}};
  std::vector<Instance> cells;
  for (const Instance& inst : all) {
    if (opt.p && (inst.p < opt.p->lo || inst.p > opt.p->hi)) continue;
    if (opt.n && inst.n != *opt.n) continue;
    cells.push_back(inst);
  }
  std::string desc;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Instance& c = cells[i];
    std::ostringstream os;
    os << (i ? " " : "") << "(p=" << c.p << ",m1=" << c.m1 << ",m2=" << c.m2
       << ",n=" << c.n << ",kappa=" << c.knum << "/" << c.kden << ")";
    desc += os.str();
  }
  rep.grid.emplace_back("instances", desc);
  Fields fields;
  for (const Instance& c : cells) fields.add({c.p});
  sweep(rep, cells.size(), [&](std::uint64_t i) {
    const Instance& c = cells[std::size_t(i)];
    std::ostringstream id;
    id << "p=" << c.p << " m1=" << c.m1 << " m2=" << c.m2 << " n=" << c.n
       << " kappa=" << c.knum << "/" << c.kden;
    KZParams K(fields.get(c.p), c.m1, c.m2, c.n, c.knum, c.kden);
    if (!K.regime())
      return Outcome{Kind::skip, "",
                     id.str() + ": outside the closed-form regime"};
    TensorVector u = kz_solution(K);
    auto res = kz_residual(K, u);
    if (!tv_is_zero(res.first) || !tv_is_zero(res.second))
      return Outcome{Kind::fail, id.str() + ": residual does not vanish", ""};
    if (!singular_check(K, u))
      return Outcome{Kind::fail,
                     id.str() + ": singular-vector relation fails", ""};
    TensorVector v = kz_closed_form(K);
    if (!tv_equal(u, v))
      return Outcome{Kind::fail,
                     id.str() + ": construction and closed form differ", ""};
    std::string note;
    if (tv_is_zero(u))
      note = id.str() +
             ": regime-valid parameters with identically zero solution";
    return Outcome{Kind::pass, "", note};
  });
  return rep;
}

}  // namespace

const std::vector<std::string> kSuiteNames = {
    "beta",   "selberg",       "aomoto", "morris", "dyson",
    "factorization", "jacobi", "identity", "kz"};

bool is_suite_name(const std::string& name) {
  if (name == "all") return true;
  return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) !=
         kSuiteNames.end();
}

std::optional<Range> parse_range(const std::string& text) {
  auto parse_u64 = [](const std::string& s,
                      std::uint64_t& out) -> bool {
    if (s.empty() || s.size() > 18) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    out = std::stoull(s);
    return true;
  };
  Range r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    if (!parse_u64(text, r.lo)) return std::nullopt;
    r.hi = r.lo;
    return r;
  }
  if (!parse_u64(text.substr(0, dots), r.lo)) return std::nullopt;
  if (!parse_u64(text.substr(dots + 2), r.hi)) return std::nullopt;
  if (r.lo > r.hi) return std::nullopt;
  return r;
}

Report run_suite(const std::string& suite, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  if (suite == "beta") {
    rep = suite_beta(opt);
  } else if (suite == "selberg") {
    rep = suite_selberg(opt);
  } else if (suite == "aomoto") {
    rep = suite_aomoto(opt);
  } else if (suite == "morris") {
    rep = suite_morris(opt);
  } else if (suite == "dyson") {
    rep = suite_dyson(opt);
  } else if (suite == "factorization") {
    rep = suite_factorization(opt);
  } else if (suite == "jacobi") {
    rep = suite_jacobi(opt);
  } else if (suite == "identity") {
    rep = suite_identity(opt);
  } else if (suite == "kz") {
    rep = suite_kz(opt);
  } else if (suite == "all") {
    rep.suite = "all";
    std::string names;
    for (std::size_t i = 0; i < kSuiteNames.size(); ++i)
      names += (i ? "," : "") + kSuiteNames[i];
    rep.grid.emplace_back("suites", names);
    for (const std::string& name : kSuiteNames) {
      Report sub = run_suite(name, opt);
      rep.checked += sub.checked;
      rep.passed += sub.passed;
      rep.skipped += sub.skipped;
      rep.failed += sub.failed;
      for (const auto& cx : sub.counterexamples)
        rep.counterexamples.push_back(sub.suite + ": " + cx);
      for (const auto& note : sub.notes)
        rep.notes.push_back(sub.suite + ": " + note);
    }
  } else {
    throw DomainError("unknown suite: " + suite);
  }
  const auto stop = std::chrono::steady_clock::now();
  rep.wall_time_ms = std::uint64_t(
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count());
  return rep;
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  nlohmann::ordered_json grid = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.grid) grid[k] = v;
  j["grid"] = grid;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  j["skipped"] = r.skipped;
  j["failed"] = r.failed;
  j["counterexamples"] = r.counterexamples;
  j["wall_time_ms"] = r.wall_time_ms;
  return j.dump(2);
}

}  // namespace fpsel
