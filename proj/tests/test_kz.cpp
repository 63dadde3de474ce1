#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdint>
#include <vector>

#include "fpsel/errors.hpp"
#include "fpsel/kz.hpp"
#include "fpsel/multipoly.hpp"
#include "fpsel/prime_field.hpp"

using namespace fpsel;

namespace {

// Generic two-variable polynomial distinct per slot index.
FpPoly probe_poly(const PrimeField& F, int seed) {
  FpRing R{&F};
  FpPoly z1 = FpPoly::variable(R, 2, 0), z2 = FpPoly::variable(R, 2, 1);
  return z1.scale(F.reduce(std::int64_t(seed + 1))) +
         z2.pow(2).scale(F.reduce(std::int64_t(3 * seed + 2))) +
         FpPoly::constant(R, 2, F.reduce(std::int64_t(seed * seed + 5)));
}

TensorVector probe_vector(const PrimeField& F, std::uint32_t m1,
                          std::uint32_t m2, int drop) {
  TensorVector v = tv_zero(F, m1, m2, drop);
  for (int r = 0; r <= drop; ++r) {
    // Slots past the module dimensions must stay zero.
    if (std::uint32_t(r) > m1 || std::uint32_t(drop - r) > m2) continue;
    v.entries[std::size_t(r)] = probe_poly(F, r);
  }
  return v;
}

// Tridiagonal matrix form of e(x)f + f(x)e + (1/2) h(x)h on the drop-d slice:
//   (Omega u)_r = (r+1)(m1-r) u_{r+1} + (d-r+1)(m2-d+r) u_{r-1}
//                 + (1/2)(m1-2r)(m2-2(d-r)) u_r.
TensorVector casimir_matrix_oracle(const TensorVector& v) {
  const PrimeField& F = v.field();
  const int d = v.drop;
  const std::int64_t m1 = v.m1, m2 = v.m2;
  const std::uint32_t half = F.inv(2);
  TensorVector out = tv_zero(F, v.m1, v.m2, d);
  for (int r = 0; r <= d; ++r) {
    FpPoly acc(v.entries[std::size_t(r)].ring(), 2);
    if (r + 1 <= d) {
      std::uint32_t co = F.reduce((std::int64_t(r) + 1) * (m1 - r));
      acc = acc + v.entries[std::size_t(r) + 1].scale(co);
    }
    if (r - 1 >= 0) {
      std::uint32_t co =
          F.reduce((std::int64_t(d) - r + 1) * (m2 - d + r));
      acc = acc + v.entries[std::size_t(r) - 1].scale(co);
    }
    std::uint32_t diag =
        F.mul(half, F.reduce((m1 - 2 * std::int64_t(r)) *
                             (m2 - 2 * (std::int64_t(d) - r))));
    acc = acc + v.entries[std::size_t(r)].scale(diag);
    out.entries[std::size_t(r)] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("parameter validation and derived residues") {
  PrimeField F(7);
  CHECK_THROWS_AS(KZParams(F, 0, 2, 0, 3, 1), DomainError);
  CHECK_THROWS_AS(KZParams(F, 7, 2, 0, 3, 1), DomainError);
  CHECK_THROWS_AS(KZParams(F, 2, 2, 3, 3, 1), DomainError);   // n > min
  CHECK_THROWS_AS(KZParams(F, 2, 2, -1, 3, 1), DomainError);
  CHECK_THROWS_AS(KZParams(F, 2, 2, 1, 3, 0), DomainError);   // den = 0
  CHECK_THROWS_AS(KZParams(F, 2, 2, 1, 7, 1), DomainError);   // kappa = 0 mod p
  CHECK_THROWS_AS(KZParams(F, 2, 2, 1, 1, 7), DomainError);   // 1/kappa = 0

  KZParams K(F, 2, 2, 1, 3, 1);
  CHECK(K.kappa_fp() == 3);
  CHECK(K.c == 5);    // 1/3 mod 7
  CHECK(K.M1 == 4);   // -2/3 mod 7
  CHECK(K.M2 == 4);
  CHECK(K.M12 == 3);  // 4/6 mod 7
  CHECK(K.regime());

  KZParams K0(F, 2, 2, 0, 3, 1);
  CHECK_FALSE(K0.regime());  // the closed form assumes n >= 1

  // Negative and fractional kappa normalize to the same residues.
  KZParams Kn(F, 2, 2, 1, -4, 1);   // -4 = 3 mod 7
  CHECK(Kn.c == K.c);
  KZParams Kf(F, 2, 2, 1, 6, 2);    // 6/2 = 3
  CHECK(Kf.M12 == K.M12);
}

TEST_CASE("tensor vector plumbing") {
  PrimeField F(7);
  TensorVector z = tv_zero(F, 2, 2, 1);
  CHECK(z.entries.size() == 2);
  CHECK(tv_is_zero(z));
  TensorVector v = probe_vector(F, 2, 2, 1);
  CHECK_FALSE(tv_is_zero(v));
  CHECK(tv_equal(v, v));
  CHECK_FALSE(tv_equal(v, z));
  CHECK(tv_equal(tv_add(v, tv_scale(v, 6)), z));  // v - v = 0
  TensorVector other_drop = tv_zero(F, 2, 2, 2);
  CHECK_THROWS_AS(tv_add(v, other_drop), TypeError);
  CHECK_THROWS_AS(tv_equal(v, other_drop), TypeError);
}

TEST_CASE("sl2 commutation relations on the tensor product") {
  PrimeField F(7);
  for (auto [m1, m2, d] : std::vector<std::array<std::uint32_t, 3>>{
           {2, 2, 1}, {2, 2, 2}, {3, 2, 1}, {3, 3, 2}}) {
    TensorVector v = probe_vector(F, m1, m2, int(d));
    for (Slot s : {Slot::first, Slot::second, Slot::both}) {
      TensorVector ef =
          sl2_tensor_action(Gen::e, s, sl2_tensor_action(Gen::f, s, v));
      TensorVector fe =
          sl2_tensor_action(Gen::f, s, sl2_tensor_action(Gen::e, s, v));
      TensorVector hv = sl2_tensor_action(Gen::h, s, v);
      // [e, f] = h.
      CHECK(tv_equal(tv_add(ef, tv_scale(fe, 6)), hv));
      // [h, e] = 2e.
      TensorVector he =
          sl2_tensor_action(Gen::h, s, sl2_tensor_action(Gen::e, s, v));
      TensorVector eh =
          sl2_tensor_action(Gen::e, s, sl2_tensor_action(Gen::h, s, v));
      TensorVector e2 = tv_scale(sl2_tensor_action(Gen::e, s, v), 2);
      CHECK(tv_equal(tv_add(he, tv_scale(eh, 6)), e2));
      // [h, f] = -2f.
      TensorVector hf =
          sl2_tensor_action(Gen::h, s, sl2_tensor_action(Gen::f, s, v));
      TensorVector fh =
          sl2_tensor_action(Gen::f, s, sl2_tensor_action(Gen::h, s, v));
      TensorVector f2 = tv_scale(sl2_tensor_action(Gen::f, s, v), F.neg(2));
      CHECK(tv_equal(tv_add(hf, tv_scale(fh, 6)), f2));
    }
  }
}

TEST_CASE("raising kills the top of the module and drop-0 vectors") {
  PrimeField F(7);
  // f past f^m vanishes: m1 = 1, so f.f^1 v = 0 in the first slot.
  TensorVector v = probe_vector(F, 1, 3, 1);
  TensorVector fv = sl2_tensor_action(Gen::f, Slot::first, v);
  CHECK(fv.drop == 2);
  CHECK(fv.entries[2].is_zero());  // would be f^2 v_{m1=1}
  // e on a drop-0 vector is the drop-0 zero vector.
  TensorVector top = probe_vector(F, 2, 2, 0);
  TensorVector etop = sl2_tensor_action(Gen::e, Slot::both, top);
  CHECK(etop.drop == 0);
  CHECK(tv_is_zero(etop));
  // At drop 0 the f.e term dies, so e(f(v)) alone must reproduce h(v).
  TensorVector ef = sl2_tensor_action(
      Gen::e, Slot::first, sl2_tensor_action(Gen::f, Slot::first, top));
  CHECK(tv_equal(ef, sl2_tensor_action(Gen::h, Slot::first, top)));
}

TEST_CASE("casimir operator agrees with its tridiagonal matrix") {
  PrimeField F(7);
  for (auto [m1, m2, d] : std::vector<std::array<std::uint32_t, 3>>{
           {2, 2, 0}, {2, 2, 1}, {2, 2, 2}, {3, 2, 2}, {3, 3, 3}}) {
    TensorVector v = probe_vector(F, m1, m2, int(d));
    CHECK(tv_equal(casimir_apply(v), casimir_matrix_oracle(v)));
  }
}

TEST_CASE("constructed solution for p=7, m1=m2=2, n=1, kappa=3") {
  PrimeField F(7);
  KZParams K(F, 2, 2, 1, 3, 1);
  REQUIRE(K.regime());
  TensorVector u = kz_solution(K);
  CHECK_FALSE(tv_is_zero(u));
  CHECK(u.drop == 1);

  // u_0 = 3 (z1-z2)^4 and u_1 = 4 (z1-z2)^4.
  FpRing R{&F};
  FpPoly dz = FpPoly::variable(R, 2, 0) - FpPoly::variable(R, 2, 1);
  CHECK(u.entries[0] == dz.pow(4).scale(3));
  CHECK(u.entries[1] == dz.pow(4).scale(4));

  auto [r1, r2] = kz_residual(K, u);
  CHECK(tv_is_zero(r1));
  CHECK(tv_is_zero(r2));
  CHECK(singular_check(K, u));
  CHECK(tv_equal(kz_closed_form(K), u));
}

TEST_CASE("regime-valid parameters can force the zero solution") {
  PrimeField F(11);
  KZParams K(F, 3, 3, 2, 2, 1);
  REQUIRE(K.regime());
  TensorVector u = kz_solution(K);
  CHECK(tv_is_zero(u));  // (2c)! = 12! and C(12,6) both vanish mod 11
  auto [r1, r2] = kz_residual(K, u);
  CHECK(tv_is_zero(r1));
  CHECK(tv_is_zero(r2));
  CHECK(singular_check(K, u));
  CHECK(tv_equal(kz_closed_form(K), u));
}

TEST_CASE("n = 0: pure power of (z1 - z2), no singular relations") {
  PrimeField F(7);
  KZParams K(F, 2, 3, 0, 3, 1);
  TensorVector u = kz_solution(K);
  CHECK(u.drop == 0);
  FpRing R{&F};
  FpPoly dz = FpPoly::variable(R, 2, 0) - FpPoly::variable(R, 2, 1);
  CHECK(u.entries[0] == dz.pow(K.M12));
  auto [r1, r2] = kz_residual(K, u);
  CHECK(tv_is_zero(r1));
  CHECK(tv_is_zero(r2));
  CHECK(singular_check(K, u));
  CHECK_THROWS_AS(kz_closed_form(K), DomainError);  // regime needs n >= 1
}

TEST_CASE("residuals detect a non-solution") {
  PrimeField F(7);
  KZParams K(F, 2, 2, 1, 3, 1);
  TensorVector bad = probe_vector(F, 2, 2, 1);
  auto [r1, r2] = kz_residual(K, bad);
  CHECK_FALSE(tv_is_zero(r1));
}
