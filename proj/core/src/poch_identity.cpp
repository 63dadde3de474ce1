#include "fpsel/poch_identity.hpp"

#include <algorithm>
#include <stdexcept>

#include "fpsel/errors.hpp"

namespace fpsel {

namespace {

constexpr std::uint64_t kStateBudget = 10'000'000;

// Rising factorials (x)_0 .. (x)_rmax as polynomials in Z[x, y]; `var` picks
// which of the two variables plays the role of x.
std::vector<ZPoly> rising_table(int var, std::uint64_t rmax) {
  IntRing R;
  std::vector<ZPoly> t;
  t.reserve(rmax + 1);
  t.push_back(ZPoly::one(R, 2));
  ZPoly v = ZPoly::variable(R, 2, var);
  for (std::uint64_t r = 1; r <= rmax; ++r)
    t.push_back(t.back() * (v + ZPoly::constant(R, 2, BigInt(r - 1))));
  return t;
}

// (x + y + base)_len as a polynomial in Z[x, y].
ZPoly rising_xy(std::uint64_t base, std::uint64_t len) {
  IntRing R;
  ZPoly s = ZPoly::variable(R, 2, 0) + ZPoly::variable(R, 2, 1);
  ZPoly acc = ZPoly::one(R, 2);
  for (std::uint64_t i = 0; i < len; ++i)
    acc = acc * (s + ZPoly::constant(R, 2, BigInt(base + i)));
  return acc;
}

}  // namespace

std::uint64_t pair_count(int n) {
  if (n < 0) throw DomainError("pair_count: negative n");
  return std::uint64_t(n) * (n - 1) / 2;
}

MSelection::MSelection(int n_, std::uint32_t c_) : n(n_), c(c_) {
  if (n < 1) throw DomainError("MSelection: n must be at least 1");
  const std::uint64_t pairs = pair_count(n);
  std::uint64_t states = 1;
  for (std::uint64_t e = 0; e < pairs; ++e) {
    states *= std::uint64_t(2) * c + 1;
    if (states > kStateBudget)
      throw ResourceError(
          "MSelection: (2c+1)^C(n,2) exceeds the enumeration budget");
  }
  m.assign(pairs, 0);
}

std::size_t MSelection::pair_index(int i, int j) const {
  if (!(0 <= i && i < j && j < n))
    throw DomainError("MSelection: pair index out of range");
  // Pairs (0,1)..(0,n-1), (1,2)..(1,n-1), ... in row-major order.
  return std::size_t(i) * n - std::size_t(i) * (i + 1) / 2 + (j - i - 1);
}

bool MSelection::advance() {
  const std::uint32_t top = 2 * c;
  for (std::size_t e = m.size(); e-- > 0;) {
    if (m[e] < top) {
      ++m[e];
      std::fill(m.begin() + e + 1, m.end(), 0u);
      return true;
    }
  }
  return false;
}

std::uint64_t MSelection::total() const {
  std::uint64_t t = 0;
  for (std::uint32_t v : m) t += v;
  return t;
}

std::uint64_t MSelection::r_of(int k) const {
  const std::uint32_t top = 2 * c;
  std::uint64_t r = 0;
  for (int i = 0; i < k; ++i) r += top - m[pair_index(i, k)];
  for (int j = k + 1; j < n; ++j) r += m[pair_index(k, j)];
  return r;
}

std::uint64_t MSelection::s_of(int k) const {
  const std::uint32_t top = 2 * c;
  std::uint64_t s = 0;
  for (int i = 0; i < k; ++i) s += m[pair_index(i, k)];
  for (int j = k + 1; j < n; ++j) s += top - m[pair_index(k, j)];
  return s;
}

ZPoly identity_lhs(int n, std::uint32_t c) {
  IntRing R;
  MSelection sel(n, c);
  const std::uint64_t pairs = pair_count(n);
  std::vector<BigInt> binom;
  for (std::uint32_t t = 0; t <= 2 * c; ++t)
    binom.push_back(binomial_z(2 * std::uint64_t(c), t));
  const std::uint64_t rmax = 2 * std::uint64_t(c) * (n > 0 ? n - 1 : 0);
  std::vector<ZPoly> px = rising_table(0, rmax);
  std::vector<ZPoly> py = rising_table(1, rmax);
  ZPoly acc(R, 2);
  do {
    BigInt coef = 1;
    for (std::uint32_t v : sel.m) coef *= binom[v];
    if (sel.total() % 2 == 1) coef = -coef;
    ZPoly term = ZPoly::one(R, 2);
    std::uint64_t rsum = 0, ssum = 0;
    for (int k = 0; k < n; ++k) {
      const std::uint64_t r = sel.r_of(k), s = sel.s_of(k);
      rsum += r;
      ssum += s;
      term = term * px[r] * py[s];
    }
    if (rsum != 2 * std::uint64_t(c) * pairs ||
        ssum != 2 * std::uint64_t(c) * pairs)
      throw std::logic_error("identity_lhs: exponent bookkeeping broke");
    acc = acc + term.scale(coef);
  } while (sel.advance());
  return acc;
}

ZPoly identity_rhs(int n, std::uint32_t c) {
  IntRing R;
  if (n < 1) throw DomainError("identity_rhs: n must be at least 1");
  const std::uint64_t rmax = std::uint64_t(c) * (n > 1 ? n - 1 : 0);
  std::vector<ZPoly> px = rising_table(0, rmax);
  std::vector<ZPoly> py = rising_table(1, rmax);
  BigInt cst = 1;
  ZPoly acc = ZPoly::one(R, 2);
  for (int k = 1; k <= n - 1; ++k) {
    BigInt q, rem;
    boost::multiprecision::divide_qr(
        factorial_z(std::uint64_t(k + 1) * c), factorial_z(c), q, rem);
    if (rem != 0)
      throw std::logic_error("identity_rhs: ((k+1)c)!/c! not an integer");
    cst *= q;
    const std::uint64_t kc = std::uint64_t(k) * c;
    acc = acc * px[kc] * py[kc] *
          rising_xy(std::uint64_t(2 * n - k - 2) * c, kc);
  }
  return acc.scale(cst);
}

bool verify_identity(int n, std::uint32_t c) {
  return identity_lhs(n, c) == identity_rhs(n, c);
}

std::string identity_normal_form(int n, std::uint32_t c) {
  IntRing R;
  ZPoly q = identity_lhs(n, c);
  // Strip the rising-factorial factors prod_k (x)_{kc} (y)_{kc}.
  for (int k = 1; k <= n - 1; ++k)
    for (std::uint64_t i = 0; i < std::uint64_t(k) * c; ++i) {
      q = divide_exact_linear(q, 0, BigInt(i));
      q = divide_exact_linear(q, 1, BigInt(i));
    }
  // The quotient must be K prod_k (x+y+(2n-k-2)c)_{kc}; collect the offsets.
  std::vector<std::uint64_t> offsets;
  for (int k = 1; k <= n - 1; ++k)
    for (std::uint64_t i = 0; i < std::uint64_t(k) * c; ++i)
      offsets.push_back(std::uint64_t(2 * n - k - 2) * c + i);
  std::sort(offsets.begin(), offsets.end());
  BigInt cst = 1;
  for (int k = 1; k <= n - 1; ++k) {
    BigInt qk, rem;
    boost::multiprecision::divide_qr(
        factorial_z(std::uint64_t(k + 1) * c), factorial_z(c), qk, rem);
    if (rem != 0)
      throw std::logic_error("identity_normal_form: constant not an integer");
    cst *= qk;
  }
  ZPoly expect = ZPoly::constant(R, 2, cst);
  for (std::uint64_t t : offsets) expect = expect * rising_xy(t, 1);
  if (!(q == expect))
    throw std::logic_error(
        "identity_normal_form: quotient does not match the factored form");
  std::string out = cst.str();
  for (std::uint64_t t : offsets) {
    out += "(x+y";
    if (t > 0) out += "+" + std::to_string(t);
    out += ")";
  }
  return out;
}

Rational classical_selberg_rhs(int n, std::uint32_t a, std::uint32_t b,
                               std::uint32_t c) {
  if (n < 1) throw DomainError("classical_selberg_rhs: n must be at least 1");
  Rational acc = 1;
  for (int j = 1; j <= n; ++j) {
    acc *= Rational(factorial_z(std::uint64_t(j) * c), factorial_z(c));
    acc *= factorial_z(a + std::uint64_t(j - 1) * c);
    acc *= factorial_z(b + std::uint64_t(j - 1) * c);
    acc /= factorial_z(std::uint64_t(a) + b + std::uint64_t(n + j - 2) * c + 1);
  }
  return acc;
}

Rational classical_aomoto_rhs(int n, std::uint32_t a, std::uint32_t b,
                              std::uint32_t c, int k) {
  if (k < 0 || k > n) throw DomainError("classical_aomoto_rhs: k not in [0, n]");
  Rational acc = classical_selberg_rhs(n, a, b, c);
  for (int j = 1; j <= k; ++j)
    acc *= Rational(std::uint64_t(a) + std::uint64_t(n - j) * c + 1,
                    std::uint64_t(a) + b + std::uint64_t(2 * n - j - 1) * c + 2);
  return acc;
}

Rational decoupled_selberg_sum(int n, std::uint32_t a, std::uint32_t b,
                               std::uint32_t c) {
  MSelection sel(n, c);
  std::vector<BigInt> binom;
  for (std::uint32_t t = 0; t <= 2 * c; ++t)
    binom.push_back(binomial_z(2 * std::uint64_t(c), t));
  const BigInt bfact = factorial_z(b);
  Rational acc = 0;
  do {
    BigInt coef = 1;
    for (std::uint32_t v : sel.m) coef *= binom[v];
    if (sel.total() % 2 == 1) coef = -coef;
    Rational term = coef;
    for (int k = 0; k < n; ++k) {
      const std::uint64_t r = sel.r_of(k);
      term *= Rational(factorial_z(a + r) * bfact,
                       factorial_z(std::uint64_t(a) + r + b + 1));
    }
    acc += term;
  } while (sel.advance());
  return acc;
}

bool decoupled_sum_check(int n, std::uint32_t a, std::uint32_t b,
                         std::uint32_t c) {
  return decoupled_selberg_sum(n, a, b, c) == classical_selberg_rhs(n, a, b, c);
}

}  // namespace fpsel
