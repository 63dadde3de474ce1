#include "fpsel/kz.hpp"

#include <stdexcept>
#include <string>

#include "fpsel/errors.hpp"

namespace fpsel {

KZParams::KZParams(const PrimeField& field, std::uint32_t m1_,
                   std::uint32_t m2_, int n_, std::int64_t kappa_num_,
                   std::int64_t kappa_den_)
    : F(&field),
      m1(m1_),
      m2(m2_),
      n(n_),
      kappa_num(kappa_num_),
      kappa_den(kappa_den_) {
  const std::uint32_t p = field.p();
  if (m1 < 1 || m1 >= p || m2 < 1 || m2 >= p)
    throw DomainError("KZParams: weights must lie in [1, p-1]");
  if (n < 0 || std::uint32_t(n) > std::min(m1, m2))
    throw DomainError("KZParams: n must lie in [0, min(m1, m2)]");
  if (kappa_den == 0) throw DomainError("KZParams: kappa denominator is 0");
  if (field.reduce(kappa_num) == 0 || field.reduce(kappa_den) == 0)
    throw DomainError("KZParams: kappa and 1/kappa must be nonzero mod p");
  const std::uint32_t kinv =
      F->mul(F->reduce(kappa_den), F->inv(F->reduce(kappa_num)));
  auto least_positive = [&](std::uint32_t r) {
    if (r == 0)
      throw std::logic_error("KZParams: residue unexpectedly zero");
    return r;
  };
  c = least_positive(kinv);
  M1 = least_positive(F->mul(F->neg(F->reduce(std::int64_t(m1))), kinv));
  M2 = least_positive(F->mul(F->neg(F->reduce(std::int64_t(m2))), kinv));
  const std::uint32_t half = F->inv(2);
  M12 = least_positive(
      F->mul(F->mul(F->mul(F->reduce(std::int64_t(m1)),
                           F->reduce(std::int64_t(m2))),
                    half),
             kinv));
}

std::uint32_t KZParams::kappa_fp() const {
  return F->mul(F->reduce(kappa_num), F->inv(F->reduce(kappa_den)));
}

bool KZParams::regime() const {
  if (n < 1) return false;
  const std::int64_t p = F->p();
  const std::int64_t s1 = std::int64_t(M1) + std::int64_t(n - 1) * c;
  const std::int64_t s2 = std::int64_t(M2) + std::int64_t(n - 1) * c;
  const std::int64_t s3 = std::int64_t(M1) + M2 + std::int64_t(n - 1) * c;
  const std::int64_t s4 = std::int64_t(M1) + M2 + std::int64_t(2 * n - 2) * c;
  return s1 < p && s2 < p && p <= s3 && s4 < 2 * p - 1;
}

namespace {

void tv_validate(const TensorVector& v) {
  if (v.drop < 0 || v.entries.size() != std::size_t(v.drop) + 1)
    throw TypeError("TensorVector: entries must cover r = 0..drop");
  for (const auto& e : v.entries)
    if (e.nvars() != 2) throw TypeError("TensorVector: entries must be in z1, z2");
}

void tv_check_pair(const TensorVector& a, const TensorVector& b) {
  tv_validate(a);
  tv_validate(b);
  if (a.m1 != b.m1 || a.m2 != b.m2 || a.drop != b.drop)
    throw TypeError("TensorVector: weight/drop mismatch");
}

}  // namespace

TensorVector tv_zero(const PrimeField& F, std::uint32_t m1, std::uint32_t m2,
                     int drop) {
  if (drop < 0) throw TypeError("tv_zero: negative drop");
  TensorVector v{m1, m2, drop, {}};
  FpRing R{&F};
  for (int r = 0; r <= drop; ++r) v.entries.emplace_back(R, 2);
  return v;
}

TensorVector tv_add(const TensorVector& a, const TensorVector& b) {
  tv_check_pair(a, b);
  TensorVector r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i)
    r.entries[i] = r.entries[i] + b.entries[i];
  return r;
}

TensorVector tv_scale(const TensorVector& v, std::uint32_t k) {
  tv_validate(v);
  TensorVector r = v;
  for (auto& e : r.entries) e = e.scale(k);
  return r;
}

bool tv_is_zero(const TensorVector& v) {
  tv_validate(v);
  for (const auto& e : v.entries)
    if (!e.is_zero()) return false;
  return true;
}

bool tv_equal(const TensorVector& a, const TensorVector& b) {
  tv_check_pair(a, b);
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i] != b.entries[i]) return false;
  return true;
}

TensorVector sl2_tensor_action(Gen g, Slot slot, const TensorVector& v) {
  tv_validate(v);
  if (slot == Slot::both) {
    TensorVector s1 = sl2_tensor_action(g, Slot::first, v);
    TensorVector s2 = sl2_tensor_action(g, Slot::second, v);
    return tv_add(s1, s2);
  }
  const PrimeField& F = v.field();
  const int d = v.drop;
  const bool first = slot == Slot::first;
  const std::int64_t m = first ? v.m1 : v.m2;
  // Index of the acted-on power: r in slot one, d - r in slot two.
  auto power = [&](int r) { return first ? std::int64_t(r) : d - r; };
  switch (g) {
    case Gen::e: {
      TensorVector out = tv_zero(F, v.m1, v.m2, d > 0 ? d - 1 : 0);
      if (d == 0) return out;  // e annihilates both slots at drop 0
      for (int r = 0; r <= d; ++r) {
        const std::int64_t k = power(r);
        if (k == 0) continue;
        const std::uint32_t coef = F.reduce(k * (m - k + 1) % F.p());
        const int out_r = first ? r - 1 : r;
        if (out_r > out.drop) continue;  // k = d - r = 0 excluded above
        out.entries[out_r] =
            out.entries[out_r] + v.entries[r].scale(coef);
      }
      return out;
    }
    case Gen::f: {
      TensorVector out = tv_zero(F, v.m1, v.m2, d + 1);
      for (int r = 0; r <= d; ++r) {
        const std::int64_t k = power(r);
        if (k + 1 > m) continue;  // f past the bottom of V_m
        const int out_r = first ? r + 1 : r;
        out.entries[out_r] = out.entries[out_r] + v.entries[r];
      }
      return out;
    }
    case Gen::h: {
      TensorVector out = tv_zero(F, v.m1, v.m2, d);
      for (int r = 0; r <= d; ++r) {
        const std::uint32_t coef = F.reduce(m - 2 * power(r));
        out.entries[r] = v.entries[r].scale(coef);
      }
      return out;
    }
  }
  throw std::logic_error("sl2_tensor_action: unknown generator");
}

TensorVector casimir_apply(const TensorVector& v) {
  tv_validate(v);
  const PrimeField& F = v.field();
  auto normalize = [&](TensorVector t) {
    if (t.drop == v.drop) return t;
    if (!tv_is_zero(t))
      throw std::logic_error("casimir_apply: drop drifted on nonzero vector");
    return tv_zero(F, v.m1, v.m2, v.drop);
  };
  // e(x)f, f(x)e, (1/2) h(x)h as compositions of the one-slot actions.
  TensorVector ef = normalize(
      sl2_tensor_action(Gen::e, Slot::first,
                        sl2_tensor_action(Gen::f, Slot::second, v)));
  TensorVector fe = normalize(
      sl2_tensor_action(Gen::f, Slot::first,
                        sl2_tensor_action(Gen::e, Slot::second, v)));
  TensorVector hh =
      sl2_tensor_action(Gen::h, Slot::first,
                        sl2_tensor_action(Gen::h, Slot::second, v));
  return tv_add(tv_add(ef, fe), tv_scale(hh, F.inv(2)));
}

std::pair<TensorVector, TensorVector> kz_residual(const KZParams& K,
                                                  const TensorVector& u) {
  tv_validate(u);
  if (u.m1 != K.m1 || u.m2 != K.m2 || u.drop != K.n)
    throw TypeError("kz_residual: vector does not match the parameters");
  const PrimeField& F = *K.F;
  FpRing R{&F};
  const std::uint32_t kap = K.kappa_fp();
  FpPoly z1 = FpPoly::variable(R, 2, 0), z2 = FpPoly::variable(R, 2, 1);
  FpPoly d12 = z1 - z2;
  TensorVector om = casimir_apply(u);
  TensorVector r1 = tv_zero(F, K.m1, K.m2, K.n);
  TensorVector r2 = tv_zero(F, K.m1, K.m2, K.n);
  for (int r = 0; r <= K.n; ++r) {
    r1.entries[r] =
        (d12 * u.entries[r].derivative(0)).scale(kap) - om.entries[r];
    r2.entries[r] =
        (-d12 * u.entries[r].derivative(1)).scale(kap) - om.entries[r];
  }
  return {std::move(r1), std::move(r2)};
}

bool singular_check(const KZParams& K, const TensorVector& u) {
  tv_validate(u);
  if (u.m1 != K.m1 || u.m2 != K.m2 || u.drop != K.n)
    throw TypeError("singular_check: vector does not match the parameters");
  const PrimeField& F = *K.F;
  const std::int64_t n = K.n, m1 = K.m1, m2 = K.m2;
  for (int r = 0; r < K.n; ++r) {
    const std::uint32_t c1 = F.reduce((n - r) * (m2 - n + r + 1));
    const std::uint32_t c2 = F.reduce((std::int64_t(r) + 1) * (m1 - r));
    FpPoly lhs = u.entries[r].scale(c1) + u.entries[r + 1].scale(c2);
    if (!lhs.is_zero()) return false;
  }
  return true;
}

TensorVector kz_solution(const KZParams& K) {
  const PrimeField& F = *K.F;
  FpRing R{&F};
  const int n = K.n;
  FpPoly z1 = FpPoly::variable(R, 2, 0), z2 = FpPoly::variable(R, 2, 1);
  FpPoly zfac = (z1 - z2).pow(K.M12);
  TensorVector u{K.m1, K.m2, n, {}};
  if (n == 0) {
    u.entries.push_back(zfac);
    return u;
  }
  // Variables t_0..t_{n-1}, z1, z2. Every subset term shares the base
  // prod_{i<j}(t_i-t_j)^{2c} prod_i (t_i-z1)^{M1-1}(t_i-z2)^{M2-1}; the
  // subset J then contributes prod_{i in J}(t_i-z2) prod_{i not in J}(t_i-z1).
  const int nv = n + 2;
  FpPoly base = FpPoly::one(R, nv);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FpPoly diff = FpPoly::variable(R, nv, i) - FpPoly::variable(R, nv, j);
      base = base * diff.pow(2 * std::uint64_t(K.c));
    }
  FpPoly Z1 = FpPoly::variable(R, nv, n), Z2 = FpPoly::variable(R, nv, n + 1);
  for (int i = 0; i < n; ++i) {
    FpPoly ti = FpPoly::variable(R, nv, i);
    base = base * (ti - Z1).pow(K.M1 - 1) * (ti - Z2).pow(K.M2 - 1);
  }
  for (int r = 0; r <= n; ++r) u.entries.emplace_back(R, 2);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    FpPoly term = base;
    int r = 0;
    for (int i = 0; i < n; ++i) {
      FpPoly ti = FpPoly::variable(R, nv, i);
      if (mask & (1u << i)) {
        term = term * (ti - Z2);
        ++r;
      } else {
        term = term * (ti - Z1);
      }
    }
    u.entries[r] = u.entries[r] + fp_integral_partial(term, Cycle::ones(n));
  }
  for (int r = 0; r <= n; ++r) u.entries[r] = u.entries[r] * zfac;
  return u;
}

TensorVector kz_closed_form(const KZParams& K) {
  if (!K.regime())
    throw DomainError("kz_closed_form: parameters outside the regime");
  const PrimeField& F = *K.F;
  FpRing R{&F};
  const std::uint64_t p = F.p(), n = K.n, c = K.c, M1 = K.M1, M2 = K.M2;
  const std::uint64_t A = n * (M1 + (n - 1) * c + 1);
  const std::uint64_t B = K.M12 + n * (M1 + M2 + (n - 1) * c - p);
  std::uint32_t pref = F.neg_one_pow(A);
  const std::uint32_t invc = F.inv_factorial(c);
  for (std::uint64_t j = 1; j <= n; ++j) {
    pref = F.mul(pref, F.factorial_proj(j * c));
    pref = F.mul(pref, invc);
    pref = F.mul(pref, F.factorial(M1 + (j - 1) * c));
    pref = F.mul(pref, F.factorial(M2 + (j - 1) * c));
    pref = F.mul(pref, F.inv_factorial(M1 + M2 + (n + j - 2) * c - p));
  }
  FpPoly z1 = FpPoly::variable(R, 2, 0), z2 = FpPoly::variable(R, 2, 1);
  FpPoly zfac = (z1 - z2).pow(B);
  TensorVector u{K.m1, K.m2, K.n, {}};
  for (std::uint64_t r = 0; r <= n; ++r) {
    std::uint32_t den = 1;
    for (std::uint64_t j = 1; j <= r; ++j)
      den = F.mul(den, F.reduce(BigInt(M1 + (j - 1) * c)));
    for (std::uint64_t j = 1; j <= n - r; ++j)
      den = F.mul(den, F.reduce(BigInt(M2 + (j - 1) * c)));
    if (den == 0)
      throw SingularError("kz_closed_form: zero denominator M_i + (j-1)c");
    std::uint32_t coef = F.mul(pref, F.neg_one_pow(r));
    coef = F.mul(coef, F.binom_small(std::uint32_t(n), std::uint32_t(r)));
    coef = F.mul(coef, F.inv(den));
    u.entries.push_back(zfac.scale(coef));
  }
  return u;
}

}  // namespace fpsel
