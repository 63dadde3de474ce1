#ifndef FPSEL_MULTIPOLY_HPP
#define FPSEL_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fpsel/bigint.hpp"
#include "fpsel/errors.hpp"
#include "fpsel/prime_field.hpp"

namespace fpsel {

// Coefficient ring tags. A ring provides Value, the ring operations, and
// same() so cross-ring operations can be rejected.

struct FpRing {
  const PrimeField* field = nullptr;
  using Value = std::uint32_t;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value add(Value a, Value b) const { return field->add(a, b); }
  Value sub(Value a, Value b) const { return field->sub(a, b); }
  Value mul(Value a, Value b) const { return field->mul(a, b); }
  Value neg(Value a) const { return field->neg(a); }
  Value from_int(std::int64_t v) const { return field->reduce(v); }
  bool is_zero(Value a) const { return a == 0; }
  bool eq(Value a, Value b) const { return a == b; }
  bool same(const FpRing& o) const {
    return field && o.field && field->p() == o.field->p();
  }
  static std::string to_string(Value a) { return std::to_string(a); }
};

struct IntRing {
  using Value = BigInt;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value from_int(std::int64_t v) const { return Value(v); }
  bool is_zero(const Value& a) const { return a == 0; }
  bool eq(const Value& a, const Value& b) const { return a == b; }
  bool same(const IntRing&) const { return true; }
  static std::string to_string(const Value& a) { return a.str(); }
};

// base^e in a ring by squaring; e = 0 gives one() (so 0^0 = 1 for evaluate).
template <class Ring>
typename Ring::Value ring_pow(const Ring& R, typename Ring::Value base,
                              std::uint64_t e) {
  auto acc = R.one();
  while (e) {
    if (e & 1) acc = R.mul(acc, base);
    e >>= 1;
    if (e) base = R.mul(base, base);
  }
  return acc;
}

using ExpVec = std::vector<std::uint32_t>;

// Sparse multivariate polynomial: exponent vector -> nonzero coefficient,
// keyed lexicographically (std::map), so iteration order is deterministic.
template <class Ring>
class MultiPoly {
 public:
  using Value = typename Ring::Value;
  using TermMap = std::map<ExpVec, Value>;

  MultiPoly(Ring ring, int nvars) : ring_(std::move(ring)), nvars_(nvars) {
    if (nvars < 0) throw TypeError("MultiPoly: negative variable count");
  }

  static MultiPoly constant(Ring ring, int nvars, Value v) {
    MultiPoly P(std::move(ring), nvars);
    P.add_term(ExpVec(nvars, 0), std::move(v));
    return P;
  }
  static MultiPoly one(Ring ring, int nvars) {
    Value v = ring.one();
    return constant(std::move(ring), nvars, std::move(v));
  }
  static MultiPoly variable(Ring ring, int nvars, int idx) {
    if (idx < 0 || idx >= nvars)
      throw TypeError("MultiPoly::variable: index out of range");
    MultiPoly P(ring, nvars);
    ExpVec e(nvars, 0);
    e[idx] = 1;
    P.add_term(std::move(e), ring.one());
    return P;
  }
  static MultiPoly monomial(Ring ring, int nvars, ExpVec exps, Value v) {
    if (int(exps.size()) != nvars)
      throw TypeError("MultiPoly::monomial: exponent vector length mismatch");
    MultiPoly P(std::move(ring), nvars);
    P.add_term(std::move(exps), std::move(v));
    return P;
  }

  const Ring& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Value coefficient(const ExpVec& exps) const {
    if (int(exps.size()) != nvars_)
      throw TypeError("coefficient: exponent vector length mismatch");
    auto it = terms_.find(exps);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  // Per-variable maximum exponents; all zeros for the zero polynomial.
  std::vector<std::uint32_t> max_degrees() const {
    std::vector<std::uint32_t> d(nvars_, 0);
    for (const auto& [e, v] : terms_)
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > d[i]) d[i] = e[i];
    return d;
  }
  std::uint32_t degree(int var) const {
    if (var < 0 || var >= nvars_) throw TypeError("degree: bad variable");
    std::uint32_t d = 0;
    for (const auto& [e, v] : terms_)
      if (e[var] > d) d = e[var];
    return d;
  }
  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, v] : terms_) {
      std::uint64_t s = 0;
      for (auto x : e) s += x;
      if (s > d) d = s;
    }
    return d;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b, "add");
    MultiPoly r = a;
    for (const auto& [e, v] : b.terms_) r.add_term(e, v);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b, "sub");
    MultiPoly r = a;
    for (const auto& [e, v] : b.terms_) r.add_term(e, a.ring_.neg(v));
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.ring_, a.nvars_);
    for (const auto& [e, v] : a.terms_) r.terms_.emplace(e, a.ring_.neg(v));
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b, "mul");
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_, a.nvars_);
    std::uint64_t cells = dense_cells(a, b);
    if (cells != 0 && cells <= kDenseCellLimit) return mul_dense(a, b);
    return mul_sparse(a, b);
  }

  MultiPoly scale(const Value& k) const {
    MultiPoly r(ring_, nvars_);
    if (ring_.is_zero(k)) return r;
    for (const auto& [e, v] : terms_) {
      Value w = ring_.mul(v, k);
      if (!ring_.is_zero(w)) r.terms_.emplace(e, std::move(w));
    }
    return r;
  }

  MultiPoly pow(std::uint64_t e) const {
    MultiPoly acc = one(ring_, nvars_);
    MultiPoly base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  Value evaluate(const std::vector<Value>& point) const {
    if (int(point.size()) != nvars_)
      throw TypeError("evaluate: point dimension mismatch");
    Value acc = ring_.zero();
    for (const auto& [e, v] : terms_) {
      Value t = v;
      for (int i = 0; i < nvars_; ++i)
        if (e[i]) t = ring_.mul(t, ring_pow(ring_, point[i], e[i]));
      acc = ring_.add(acc, t);
    }
    return acc;
  }

  MultiPoly derivative(int var) const {
    if (var < 0 || var >= nvars_) throw TypeError("derivative: bad variable");
    MultiPoly r(ring_, nvars_);
    for (const auto& [e, v] : terms_) {
      if (e[var] == 0) continue;
      Value w = ring_.mul(v, ring_.from_int(std::int64_t(e[var])));
      if (ring_.is_zero(w)) continue;  // exponent divisible by char
      ExpVec f = e;
      f[var] -= 1;
      r.terms_.emplace(std::move(f), std::move(w));
    }
    return r;
  }

  // Rename variables: exponent of variable i becomes exponent of perm[i];
  // perm must be a permutation of 0..nvars-1.
  MultiPoly permute_vars(const std::vector<int>& perm) const {
    if (int(perm.size()) != nvars_)
      throw TypeError("permute_vars: permutation length mismatch");
    std::vector<bool> seen(nvars_, false);
    for (int i : perm) {
      if (i < 0 || i >= nvars_ || seen[i])
        throw TypeError("permute_vars: not a permutation");
      seen[i] = true;
    }
    MultiPoly r(ring_, nvars_);
    for (const auto& [e, v] : terms_) {
      ExpVec f(nvars_, 0);
      for (int i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
      r.terms_.emplace(std::move(f), v);
    }
    return r;
  }

  // Multiply by the monomial x^s.
  MultiPoly shift_exponents(const ExpVec& s) const {
    if (int(s.size()) != nvars_)
      throw TypeError("shift_exponents: shift length mismatch");
    MultiPoly r(ring_, nvars_);
    for (const auto& [e, v] : terms_) {
      ExpVec f = e;
      for (int i = 0; i < nvars_; ++i) f[i] += s[i];
      r.terms_.emplace(std::move(f), v);
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    if (!ring_.same(o.ring_) || nvars_ != o.nvars_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, v] : terms_) {
      if (e != it->first || !ring_.eq(v, it->second)) return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const {
    if (int(names.size()) != nvars_)
      throw TypeError("to_string: name list length mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, v] : terms_) {
      std::string c = ring_.to_string(v);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string term;
      if (mono.empty())
        term = c;
      else if (c == "1")
        term = mono;
      else
        term = c + "*" + mono;
      if (out.empty())
        out = negative ? "-" + term : term;
      else
        out += (negative ? " - " : " + ") + term;
    }
    return out;
  }

  // The two multiplication paths are exposed so tests can confirm they agree
  // bit for bit; operator* picks between them by the product bounding box.
  static MultiPoly mul_sparse(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b, "mul");
    MultiPoly r(a.ring_, a.nvars_);
    for (const auto& [ea, va] : a.terms_) {
      for (const auto& [eb, vb] : b.terms_) {
        Value w = a.ring_.mul(va, vb);
        if (a.ring_.is_zero(w)) continue;
        ExpVec e = ea;
        for (int i = 0; i < a.nvars_; ++i) e[i] += eb[i];
        r.add_term(std::move(e), std::move(w));
      }
    }
    return r;
  }

  static MultiPoly mul_dense(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b, "mul");
    MultiPoly r(a.ring_, a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    std::uint64_t cells = dense_cells(a, b);
    if (cells == 0 || cells > kDenseCellLimit)
      throw ResourceError("mul_dense: bounding box exceeds dense cell limit");
    const int n = a.nvars_;
    auto da = a.max_degrees();
    auto db = b.max_degrees();
    std::vector<std::uint64_t> dim(n), stride(n);
    for (int i = 0; i < n; ++i) dim[i] = std::uint64_t(da[i]) + db[i] + 1;
    std::uint64_t acc_stride = 1;
    for (int i = n - 1; i >= 0; --i) {
      stride[i] = acc_stride;
      acc_stride *= dim[i];
    }
    std::vector<Value> grid(cells, a.ring_.zero());
    for (const auto& [ea, va] : a.terms_) {
      std::uint64_t base = 0;
      for (int i = 0; i < n; ++i) base += std::uint64_t(ea[i]) * stride[i];
      for (const auto& [eb, vb] : b.terms_) {
        std::uint64_t idx = base;
        for (int i = 0; i < n; ++i) idx += std::uint64_t(eb[i]) * stride[i];
        grid[idx] = a.ring_.add(grid[idx], a.ring_.mul(va, vb));
      }
    }
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
      if (a.ring_.is_zero(grid[idx])) continue;
      ExpVec e(n);
      std::uint64_t rest = idx;
      for (int i = 0; i < n; ++i) {
        e[i] = std::uint32_t(rest / stride[i]);
        rest %= stride[i];
      }
      r.terms_.emplace(std::move(e), std::move(grid[idx]));
    }
    return r;
  }

 private:
  static constexpr std::uint64_t kDenseCellLimit = 1'000'000;

  static void require_compatible(const MultiPoly& a, const MultiPoly& b,
                                 const char* op) {
    if (!a.ring_.same(b.ring_))
      throw TypeError(std::string("MultiPoly ") + op + ": ring mismatch");
    if (a.nvars_ != b.nvars_)
      throw TypeError(std::string("MultiPoly ") + op +
                      ": variable count mismatch");
  }

  // Product bounding-box cell count, or 0 on overflow past the dense limit.
  static std::uint64_t dense_cells(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    auto da = a.max_degrees();
    auto db = b.max_degrees();
    std::uint64_t cells = 1;
    for (int i = 0; i < a.nvars_; ++i) {
      cells *= std::uint64_t(da[i]) + db[i] + 1;
      if (cells > kDenseCellLimit) return 0;
    }
    return cells;
  }

  void add_term(ExpVec e, Value v) {
    if (ring_.is_zero(v)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(v));
    } else {
      it->second = ring_.add(it->second, v);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Ring ring_;
  int nvars_;
  TermMap terms_;
};

using FpPoly = MultiPoly<FpRing>;
using ZPoly = MultiPoly<IntRing>;

// Exact division of P by the monic linear factor (x_var + k); DomainError if
// the remainder is nonzero.
template <class Ring>
MultiPoly<Ring> divide_exact_linear(const MultiPoly<Ring>& P, int var,
                                    typename Ring::Value k) {
  if (var < 0 || var >= P.nvars())
    throw TypeError("divide_exact_linear: bad variable");
  if (P.is_zero()) return P;
  const std::uint32_t D = P.degree(var);
  if (D == 0)
    throw DomainError("divide_exact_linear: dividend has degree 0 in x_var");
  // Split into coefficient polynomials c_d (exponent of var zeroed out).
  std::vector<MultiPoly<Ring>> c(D + 1, MultiPoly<Ring>(P.ring(), P.nvars()));
  for (const auto& [e, v] : P.terms()) {
    ExpVec f = e;
    std::uint32_t d = f[var];
    f[var] = 0;
    c[d] = c[d] + MultiPoly<Ring>::monomial(P.ring(), P.nvars(), std::move(f), v);
  }
  // Synthetic division: q_{D-1} = c_D; q_{d-1} = c_d - k q_d; rem = c_0 - k q_0.
  std::vector<MultiPoly<Ring>> q(D, MultiPoly<Ring>(P.ring(), P.nvars()));
  q[D - 1] = c[D];
  for (std::uint32_t d = D - 1; d >= 1; --d)
    q[d - 1] = c[d] - q[d].scale(k);
  MultiPoly<Ring> rem = c[0] - q[0].scale(k);
  if (!rem.is_zero())
    throw DomainError("divide_exact_linear: nonzero remainder");
  MultiPoly<Ring> Q(P.ring(), P.nvars());
  for (std::uint32_t d = 0; d < D; ++d) {
    ExpVec s(P.nvars(), 0);
    s[var] = d;
    Q = Q + q[d].shift_exponents(s);
  }
  return Q;
}

// Laurent polynomial body / x^shift. Only the operations the constant-term
// oracles need: multiply, power, constant term, renormalization.
template <class Ring>
struct LaurentPoly {
  MultiPoly<Ring> body;
  ExpVec shift;

  LaurentPoly(MultiPoly<Ring> b, ExpVec s) : body(std::move(b)), shift(std::move(s)) {
    if (int(shift.size()) != body.nvars())
      throw TypeError("LaurentPoly: shift length mismatch");
  }
  static LaurentPoly from_poly(MultiPoly<Ring> b) {
    ExpVec s(b.nvars(), 0);
    return LaurentPoly(std::move(b), std::move(s));
  }

  typename Ring::Value constant_term() const { return body.coefficient(shift); }

  LaurentPoly mul(const LaurentPoly& o) const {
    ExpVec s = shift;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += o.shift[i];
    return LaurentPoly(body * o.body, std::move(s));
  }
  LaurentPoly pow(std::uint64_t e) const {
    LaurentPoly acc = from_poly(MultiPoly<Ring>::one(body.ring(), body.nvars()));
    LaurentPoly base = *this;
    while (e) {
      if (e & 1) acc = acc.mul(base);
      e >>= 1;
      if (e) base = base.mul(base);
    }
    return acc;
  }
  // Same Laurent element, represented with shift + extra: body * x^extra.
  LaurentPoly renormalized(const ExpVec& extra) const {
    ExpVec s = shift;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += extra[i];
    return LaurentPoly(body.shift_exponents(extra), std::move(s));
  }
};

}  // namespace fpsel

#endif  // FPSEL_MULTIPOLY_HPP
