#include "fpsel/fp_integral.hpp"

#include <string>

#include "fpsel/errors.hpp"

namespace fpsel {

Cycle::Cycle(std::vector<std::uint32_t> l) : lengths(std::move(l)) {
  for (auto x : lengths)
    if (x == 0) throw DomainError("Cycle: lengths must be >= 1");
}

namespace {

ExpVec cycle_exponents(const Cycle& cyc, std::uint32_t p) {
  ExpVec target(cyc.lengths.size());
  for (std::size_t i = 0; i < cyc.lengths.size(); ++i) {
    std::uint64_t e = std::uint64_t(cyc.lengths[i]) * p - 1;
    if (e > 0xffffffffull)
      throw DomainError("Cycle: exponent l*p-1 exceeds 32 bits");
    target[i] = std::uint32_t(e);
  }
  return target;
}

}  // namespace

Fp fp_integral(const FpPoly& P, const Cycle& cyc) {
  if (P.nvars() != cyc.dim())
    throw TypeError("fp_integral: polynomial/cycle dimension mismatch");
  const PrimeField& F = *P.ring().field;
  return {P.coefficient(cycle_exponents(cyc, F.p())), F};
}

FpPoly fp_integral_partial(const FpPoly& P, const Cycle& cyc) {
  const int tn = cyc.dim();
  if (tn > P.nvars())
    throw TypeError("fp_integral_partial: cycle longer than variable list");
  const PrimeField& F = *P.ring().field;
  const ExpVec target = cycle_exponents(cyc, F.p());
  const int rest = P.nvars() - tn;
  FpPoly out(P.ring(), rest);
  for (const auto& [e, v] : P.terms()) {
    bool hit = true;
    for (int i = 0; i < tn; ++i)
      if (e[i] != target[i]) {
        hit = false;
        break;
      }
    if (!hit) continue;
    ExpVec f(e.begin() + tn, e.end());
    out = out + FpPoly::monomial(P.ring(), rest, std::move(f), v);
  }
  return out;
}

bool stokes_check(const FpPoly& P, int var, const Cycle& cyc) {
  return fp_integral(P.derivative(var), cyc).v == 0;
}

Fp beta_expansion(std::uint32_t a, std::uint32_t b, const PrimeField& F) {
  const std::uint32_t p = F.p();
  if (a >= p || b >= p)
    throw DomainError("beta_expansion: requires a < p and b < p");
  FpRing R{&F};
  FpPoly x = FpPoly::variable(R, 1, 0);
  FpPoly integrand =
      x.pow(a) * (FpPoly::one(R, 1) - x).pow(b);
  return fp_integral(integrand, Cycle::ones(1));
}

Fp beta_closed_form(std::uint32_t a, std::uint32_t b, const PrimeField& F) {
  const std::uint32_t p = F.p();
  if (a >= p || b >= p)
    throw DomainError("beta_closed_form: requires a < p and b < p");
  // -a!b!/(a+b-p+1)! when a+b >= p-1, else 0.
  std::uint32_t expect = 0;
  if (std::uint64_t(a) + b >= std::uint64_t(p) - 1) {
    std::uint32_t d = std::uint32_t(std::uint64_t(a) + b - p + 1);
    expect = F.neg(F.mul(F.mul(F.factorial(a), F.factorial(b)),
                         F.inv_factorial(d)));
  }
  return Fp{expect, F};
}

Fp beta_fp(std::uint32_t a, std::uint32_t b, const PrimeField& F) {
  Fp val = beta_expansion(a, b, F);
  if (val != beta_closed_form(a, b, F))
    throw std::logic_error("beta_fp: expansion disagrees with closed form");
  return val;
}

SelbergParams::SelbergParams(const PrimeField& field, int n_, std::uint32_t a_,
                             std::uint32_t b_, std::uint32_t c_)
    : F(&field), n(n_), a(a_), b(b_), c(c_) {
  if (n < 1) throw DomainError("SelbergParams: n must be >= 1");
  if (a >= field.p() || b >= field.p() || c >= field.p())
    throw DomainError("SelbergParams: a, b, c must lie in [0, p-1]");
}

bool SelbergParams::main_regime() const {
  const std::uint64_t P = p();
  const std::uint64_t s1 = std::uint64_t(a) + b + std::uint64_t(n - 1) * c;
  const std::uint64_t s2 = std::uint64_t(a) + b + std::uint64_t(2 * n - 2) * c;
  return P - 1 <= s1 && s2 < 2 * P - 1;
}

bool SelbergParams::aomoto_regime() const {
  const std::uint64_t P = p();
  const std::uint64_t s1 = std::uint64_t(a) + b + std::uint64_t(n - 1) * c;
  const std::uint64_t s2 = std::uint64_t(a) + b + std::uint64_t(2 * n - 2) * c;
  return P - 1 <= s1 && s2 < 2 * P - 2;
}

bool SelbergParams::morris_regime() const {
  const std::uint64_t P = p();
  const std::uint64_t s1 = std::uint64_t(a) + b + std::uint64_t(n - 1) * c;
  const std::uint64_t s3 = std::uint64_t(a) + std::uint64_t(n - 1) * c;
  return P - 1 <= s1 && s3 <= P - 1;
}

FpPoly master_polynomial(const SelbergParams& S, int k) {
  if (k < 0 || k > S.n)
    throw DomainError("master_polynomial: k must lie in [0, n]");
  FpRing R{S.F};
  const int n = S.n;
  FpPoly acc = FpPoly::one(R, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FpPoly diff = FpPoly::variable(R, n, i) - FpPoly::variable(R, n, j);
      acc = acc * diff.pow(2 * std::uint64_t(S.c));
    }
  for (int i = 0; i < n; ++i) {
    FpPoly xi = FpPoly::variable(R, n, i);
    FpPoly fac = xi.pow(std::uint64_t(S.a) + (i < k ? 1 : 0)) *
                 (FpPoly::one(R, n) - xi).pow(S.b);
    acc = acc * fac;
  }
  return acc;
}

Fp selberg_Skn(const SelbergParams& S, int k) {
  return fp_integral(master_polynomial(S, k), Cycle::ones(S.n));
}

Fp selberg_S(const SelbergParams& S) { return selberg_Skn(S, 0); }

Fp selberg_sum_oracle(const SelbergParams& S) {
  const PrimeField& F = *S.F;
  const std::uint32_t p = F.p();
  const int n = S.n;
  // Per-residue power tables: w[x] = x^a (1-x)^b, d2c[d] = d^{2c}.
  std::vector<std::uint32_t> w(p), d2c(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    w[x] = F.mul(F.pow(x, S.a), F.pow(F.sub(1, x), S.b));
    d2c[x] = F.pow(x, 2 * std::uint64_t(S.c));
  }
  std::vector<std::uint32_t> x(n, 0);
  std::uint32_t acc = 0;
  for (;;) {
    std::uint32_t term = 1;
    for (int i = 0; i < n && term; ++i) term = F.mul(term, w[x[i]]);
    for (int i = 0; i < n && term; ++i)
      for (int j = i + 1; j < n && term; ++j)
        term = F.mul(term, d2c[F.sub(x[i], x[j])]);
    acc = F.add(acc, term);
    int pos = n - 1;
    while (pos >= 0 && x[pos] == p - 1) x[pos--] = 0;
    if (pos < 0) break;
    ++x[pos];
  }
  return {acc, F};
}

}  // namespace fpsel
