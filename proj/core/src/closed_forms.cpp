#include "fpsel/closed_forms.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "fpsel/errors.hpp"

namespace fpsel {

Region region_classify(const SelbergParams& S) {
  const std::int64_t p = S.p(), c = S.c, n = S.n;
  const std::int64_t athr = p - 1 - (n - 1) * c;
  if (std::int64_t(S.a) > athr) return {-1};
  if (std::int64_t(S.b) <= athr) return {0};
  for (int i = 1; i < n; ++i) {
    const std::int64_t lo = p - (n - i) * c;
    const std::int64_t hi = p - 1 - (n - i - 1) * c;
    if (std::int64_t(S.b) >= lo && std::int64_t(S.b) <= hi) return {i};
  }
  throw std::logic_error("region_classify: bands failed to cover b");
}

std::string region_name(const Region& r) {
  return r.band < 0 ? "outside" : "omega" + std::to_string(r.band);
}

Fp selberg_rhs(const SelbergParams& S) {
  if (!S.main_regime())
    throw DomainError("selberg_rhs: parameters outside the main regime");
  const PrimeField& F = *S.F;
  const std::uint64_t p = F.p(), a = S.a, b = S.b, c = S.c, n = S.n;
  std::uint32_t acc = F.neg_one_pow(n);
  const std::uint32_t invc = F.inv_factorial(c);
  for (std::uint64_t j = 1; j <= n; ++j) {
    acc = F.mul(acc, F.factorial_proj(j * c));
    acc = F.mul(acc, invc);
    acc = F.mul(acc, F.factorial_proj(a + (j - 1) * c));
    acc = F.mul(acc, F.factorial_proj(b + (j - 1) * c));
    const std::uint64_t d = a + b + (n + j - 2) * c + 1;
    if (d < p)
      throw DomainError("selberg_rhs: denominator factorial argument < 0");
    acc = F.mul(acc, F.inv_factorial(d - p));
  }
  return {acc, F};
}

Fp base_case_value(const SelbergParams& S) {
  const PrimeField& F = *S.F;
  const std::uint64_t p = F.p(), n = S.n, c = S.c;
  if (std::uint64_t(S.a) + S.b + (n - 1) * c != p - 1)
    throw DomainError("base_case_value: requires a+b+(n-1)c = p-1");
  const std::uint64_t e = std::uint64_t(S.b) * n + c * n * (n - 1) / 2;
  std::uint32_t acc = F.neg_one_pow(e);
  acc = F.mul(acc, F.factorial_proj(c * n));
  acc = F.mul(acc, F.pow(F.inv_factorial(c), n));
  return {acc, F};
}

Fp aomoto_rhs(const SelbergParams& S, int k) {
  if (!S.aomoto_regime())
    throw DomainError("aomoto_rhs: parameters outside the strict regime");
  if (k < 0 || k >= S.n)
    throw DomainError("aomoto_rhs: k must lie in [0, n-1]");
  const PrimeField& F = *S.F;
  const std::uint64_t a = S.a, b = S.b, c = S.c, n = S.n;
  std::uint32_t acc = selberg_rhs(S).v;
  for (std::uint64_t j = 1; j <= std::uint64_t(k); ++j) {
    const std::uint32_t num = F.reduce(BigInt(a + (n - j) * c + 1));
    const std::uint32_t den = F.reduce(BigInt(a + b + (2 * n - j - 1) * c + 2));
    if (den == 0)
      throw SingularError("aomoto_rhs: zero denominator a+b+(2n-j-1)c+2");
    acc = F.mul(acc, F.mul(num, F.inv(den)));
  }
  return {acc, F};
}

Fp aomoto_step(const SelbergParams& S, int k) {
  if (!S.aomoto_regime())
    throw DomainError("aomoto_step: parameters outside the strict regime");
  if (k < 1 || k > S.n) throw DomainError("aomoto_step: k must lie in [1, n]");
  const PrimeField& F = *S.F;
  const std::uint64_t a = S.a, b = S.b, c = S.c, n = S.n, kk = k;
  const std::uint32_t num = F.reduce(BigInt(a + (n - kk) * c + 1));
  const std::uint32_t den = F.reduce(BigInt(a + b + (2 * n - kk - 1) * c + 2));
  if (den == 0)
    throw SingularError("aomoto_step: zero denominator a+b+(2n-k-1)c+2");
  return {F.mul(num, F.inv(den)), F};
}

BigInt dyson_value_z(int n, std::uint32_t c) {
  if (n < 1) throw DomainError("dyson_value_z: n must be >= 1");
  BigInt num = factorial_z(std::uint64_t(c) * n);
  BigInt den = 1;
  for (int i = 0; i < n; ++i) den *= factorial_z(c);
  BigInt q = num / den;
  if (q * den != num)
    throw std::logic_error("dyson_value_z: multinomial not integral");
  return q;
}

Fp dyson_value_fp(int n, std::uint32_t c, const PrimeField& F) {
  if (n < 1) throw DomainError("dyson_value_fp: n must be >= 1");
  const std::uint64_t cn = std::uint64_t(c) * n;
  if (cn >= F.p())
    throw DomainError("dyson_value_fp: cn must lie in [0, p-1]");
  return {F.mul(F.factorial(cn), F.pow(F.inv_factorial(c), n)), F};
}

BigInt dyson_ct_oracle(int n, std::uint32_t c) {
  if (n < 1) throw DomainError("dyson_ct_oracle: n must be >= 1");
  IntRing R;
  auto acc = LaurentPoly<IntRing>::from_poly(ZPoly::one(R, n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ZPoly xi = ZPoly::variable(R, n, i), xj = ZPoly::variable(R, n, j);
      ExpVec ei(n, 0), ej(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      // (1 - x_i/x_j)^c = (x_j - x_i)^c / x_j^c
      acc = acc.mul(LaurentPoly<IntRing>(xj - xi, ej).pow(c));
      // (1 - x_j/x_i)^c = (x_i - x_j)^c / x_i^c
      acc = acc.mul(LaurentPoly<IntRing>(xi - xj, ei).pow(c));
    }
  return acc.constant_term();
}

BigInt morris_rhs_z(int n, std::uint32_t alpha, std::uint32_t beta,
                    std::uint32_t gamma) {
  if (n < 1) throw DomainError("morris_rhs_z: n must be >= 1");
  Rational acc = 1;
  for (std::uint64_t j = 1; j <= std::uint64_t(n); ++j) {
    acc *= Rational(factorial_z(j * gamma), factorial_z(gamma));
    acc *= Rational(factorial_z(std::uint64_t(alpha) + beta + (j - 1) * gamma),
                    factorial_z(alpha + (j - 1) * gamma) *
                        factorial_z(beta + (j - 1) * gamma));
  }
  if (denominator(acc) != 1)
    throw std::logic_error("morris_rhs_z: product not integral");
  return numerator(acc);
}

Fp morris_rhs_fp(int n, std::uint32_t alpha, std::uint32_t beta,
                 std::uint32_t gamma, const PrimeField& F) {
  if (n < 1) throw DomainError("morris_rhs_fp: n must be >= 1");
  std::uint32_t acc = 1;
  const std::uint32_t invg = F.inv_factorial(gamma);
  for (std::uint64_t j = 1; j <= std::uint64_t(n); ++j) {
    acc = F.mul(acc, F.factorial(j * gamma));
    acc = F.mul(acc, invg);
    acc = F.mul(acc, F.factorial(std::uint64_t(alpha) + beta + (j - 1) * gamma));
    acc = F.mul(acc, F.inv_factorial(alpha + (j - 1) * gamma));
    acc = F.mul(acc, F.inv_factorial(beta + (j - 1) * gamma));
  }
  return {acc, F};
}

BigInt morris_ct_oracle(int n, std::uint32_t alpha, std::uint32_t beta,
                        std::uint32_t gamma) {
  if (n < 1) throw DomainError("morris_ct_oracle: n must be >= 1");
  IntRing R;
  auto acc = LaurentPoly<IntRing>::from_poly(ZPoly::one(R, n));
  for (int i = 0; i < n; ++i) {
    ZPoly xi = ZPoly::variable(R, n, i);
    ZPoly one = ZPoly::one(R, n);
    ExpVec ei(n, 0);
    ei[i] = 1;
    // (1 - x_i)^alpha
    acc = acc.mul(LaurentPoly<IntRing>::from_poly((one - xi).pow(alpha)));
    // (1 - 1/x_i)^beta = (x_i - 1)^beta / x_i^beta
    acc = acc.mul(LaurentPoly<IntRing>(xi - one, ei).pow(beta));
  }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      ZPoly xj = ZPoly::variable(R, n, j), xk = ZPoly::variable(R, n, k);
      ExpVec ek(n, 0);
      ek[k] = 1;
      // (1 - x_j/x_k)^gamma = (x_k - x_j)^gamma / x_k^gamma
      acc = acc.mul(LaurentPoly<IntRing>(xk - xj, ek).pow(gamma));
    }
  return acc.constant_term();
}

Fp morris_form_rhs(const SelbergParams& S) {
  if (!S.morris_regime())
    throw DomainError("morris_form_rhs: parameters outside the Morris regime");
  const PrimeField& F = *S.F;
  const std::uint64_t p = F.p(), n = S.n, c = S.c;
  const std::uint32_t alpha =
      std::uint32_t(std::uint64_t(S.a) + S.b + (n - 1) * c + 1 - p);
  const std::uint32_t beta =
      std::uint32_t(p - 1 - S.a - (n - 1) * c);
  const BigInt M = morris_rhs_z(S.n, alpha, beta, S.c);
  std::uint32_t v = F.reduce(M);
  const std::uint64_t e = c * (n * (n - 1) / 2) + n * std::uint64_t(S.a);
  if (e & 1) v = F.neg(v);
  return {v, F};
}

Fp binom_form_rhs(const SelbergParams& S) {
  if (!S.morris_regime())
    throw DomainError("binom_form_rhs: parameters outside the Morris regime");
  const PrimeField& F = *S.F;
  const std::uint64_t p = F.p(), n = S.n, c = S.c;
  const std::uint32_t k = std::uint32_t(p - 1 - S.a - (n - 1) * c);
  std::uint32_t acc = F.reduce(dyson_value_z(S.n, S.c));
  const std::uint64_t e = c * (n * (n - 1) / 2) + n * std::uint64_t(S.a);
  if (e & 1) acc = F.neg(acc);
  for (std::uint64_t j = 1; j <= n; ++j) {
    acc = F.mul(acc, binom_lucas(std::uint64_t(S.b) + (j - 1) * c, k, F));
    const std::uint64_t bot = (j - 1) * c + k;  // < p whenever the band math
    if (bot >= p)                               // holds; guarded anyway
      throw std::logic_error("binom_form_rhs: bottom binomial argument >= p");
    acc = F.mul(acc, F.inv(F.binom_small(std::uint32_t(bot), k)));
  }
  return {acc, F};
}

Fp selberg_omega0_value(const SelbergParams& S) {
  if (region_classify(S).band != 0)
    throw DomainError("selberg_omega0_value: cell not in omega0");
  if (S.main_regime()) return selberg_rhs(S);
  return {0, *S.F};  // a+b+(n-1)c < p-1: vanishing lemma
}

Fp factorization_rhs(const SelbergParams& S) {
  const Region reg = region_classify(S);
  if (reg.band < 1)
    throw DomainError("factorization_rhs: cell not in omega_i with i >= 1");
  const PrimeField& F = *S.F;
  const int n = S.n, i = reg.band;
  const std::int64_t p = F.p(), a = S.a, b = S.b, c = S.c;
  std::vector<std::uint32_t> X(n + 1, 1);
  for (int j = 1; j <= n; ++j) {
    const std::int64_t top = p - 1 - (std::int64_t(n) - j) * c - a;
    const std::int64_t bot = std::int64_t(j - 1) * c;
    if (!(0 <= bot && bot <= top && top < p))
      throw std::logic_error("factorization_rhs: binomial bounds violated");
    X[j] = F.binom_small(std::uint32_t(top), std::uint32_t(bot));
  }
  std::uint32_t num = 1, den = 1;
  for (int j = 1; j <= n - i; ++j) num = F.mul(num, X[j]);
  for (int j = 1; j <= i; ++j) num = F.mul(num, X[j]);
  for (int j = 1; j <= n; ++j) den = F.mul(den, X[j]);
  std::uint32_t acc = F.mul(num, F.inv(den));
  acc = F.mul(acc, F.neg_one_pow(std::uint64_t(n - i) * i * c));
  acc = F.mul(acc, binom_lucas(std::uint64_t(n) * c, std::uint64_t(i) * c, F));
  const SelbergParams S1(F, n - i, std::uint32_t(a + std::int64_t(i) * c),
                         S.b, S.c);
  const SelbergParams S2(F, i, std::uint32_t(a + std::int64_t(n - i) * c),
                         std::uint32_t(b + std::int64_t(n - i) * c - p), S.c);
  acc = F.mul(acc, selberg_omega0_value(S1).v);
  acc = F.mul(acc, selberg_omega0_value(S2).v);
  return {acc, F};
}

FpPoly jacobi_poly(int n, Fp alpha, Fp beta) {
  if (alpha.F == nullptr || beta.F == nullptr ||
      alpha.F->p() != beta.F->p())
    throw TypeError("jacobi_poly: alpha and beta must share a field");
  if (n < 0) throw DomainError("jacobi_poly: n must be >= 0");
  const PrimeField& F = *alpha.F;
  FpRing R{&F};
  const std::uint32_t half = F.inv(2);
  FpPoly x = FpPoly::variable(R, 1, 0);
  FpPoly base = (x - FpPoly::one(R, 1)).scale(half);  // (x-1)/2
  FpPoly acc(R, 1);
  FpPoly base_pow = FpPoly::one(R, 1);
  for (int v = 0; v <= n; ++v) {
    std::uint32_t coef = F.binom_small(std::uint32_t(n), std::uint32_t(v));
    for (int i = 1; i <= v; ++i) {
      const std::uint32_t t =
          F.add(F.add(F.reduce(std::int64_t(n) + i), alpha.v), beta.v);
      coef = F.mul(coef, t);
    }
    for (int i = v + 1; i <= n; ++i)
      coef = F.mul(coef, F.add(alpha.v, F.reduce(std::int64_t(i))));
    acc = acc + base_pow.scale(coef);
    if (v < n) base_pow = base_pow * base;
  }
  return acc.scale(F.inv_factorial(std::uint32_t(n)));
}

std::pair<FpPoly, FpPoly> jacobi_sides(const SelbergParams& S) {
  if (!S.aomoto_regime())
    throw DomainError("jacobi_sides: parameters outside the strict regime");
  if (S.c == 0) throw DomainError("jacobi_sides: requires c >= 1");
  const PrimeField& F = *S.F;
  const int n = S.n;
  const std::uint64_t a = S.a, b = S.b, c = S.c;
  std::uint32_t dprod = 1;
  for (std::uint64_t i = n - 1; i <= 2 * std::uint64_t(n) - 2; ++i) {
    const std::uint32_t d = F.reduce(BigInt(a + b + i * c + 2));
    if (d == 0)
      throw SingularError("jacobi_sides: zero denominator a+b+ic+2");
    dprod = F.mul(dprod, d);
  }
  // LHS: integrate prod_i (x_i - t) * master over the x variables.
  FpRing R{&F};
  const int nv = n + 1;  // x_0..x_{n-1}, t last
  FpPoly acc = FpPoly::one(R, nv);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FpPoly diff = FpPoly::variable(R, nv, i) - FpPoly::variable(R, nv, j);
      acc = acc * diff.pow(2 * c);
    }
  FpPoly t = FpPoly::variable(R, nv, n);
  for (int i = 0; i < n; ++i) {
    FpPoly xi = FpPoly::variable(R, nv, i);
    acc = acc * (xi.pow(a) * (FpPoly::one(R, nv) - xi).pow(b) * (xi - t));
  }
  FpPoly lhs = fp_integral_partial(acc, Cycle::ones(n));
  // RHS: n! c^n S_n / prod * P_n^{(alpha,beta)}(1 - 2t).
  std::uint32_t scalar = F.factorial(std::uint32_t(n));
  scalar = F.mul(scalar, F.pow(S.c, n));
  scalar = F.mul(scalar, selberg_S(S).v);
  scalar = F.mul(scalar, F.inv(dprod));
  const std::uint32_t cinv = F.inv(S.c);
  Fp alpha{F.sub(F.mul(F.reduce(BigInt(a + 1)), cinv), 1), F};
  Fp beta{F.sub(F.mul(F.reduce(BigInt(b + 1)), cinv), 1), F};
  FpPoly P = jacobi_poly(n, alpha, beta);
  // Compose with x = 1 - 2t (Horner over the coefficient list).
  FpPoly tv = FpPoly::variable(R, 1, 0);
  FpPoly subst = FpPoly::one(R, 1) - tv.scale(2);
  const std::uint32_t D = P.degree(0);
  std::vector<std::uint32_t> coef(D + 1, 0);
  for (const auto& [e, v] : P.terms()) coef[e[0]] = v;
  FpPoly rhs(R, 1);
  for (int d = int(D); d >= 0; --d)
    rhs = rhs * subst + FpPoly::constant(R, 1, coef[d]);
  rhs = rhs.scale(scalar);
  return {std::move(lhs), std::move(rhs)};
}

bool jacobi_check(const SelbergParams& S) {
  auto [lhs, rhs] = jacobi_sides(S);
  return lhs == rhs;
}

}  // namespace fpsel
