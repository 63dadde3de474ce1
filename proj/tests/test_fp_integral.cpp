#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "fpsel/errors.hpp"
#include "fpsel/fp_integral.hpp"
#include "fpsel/multipoly.hpp"
#include "fpsel/prime_field.hpp"

using namespace fpsel;

TEST_CASE("cycle validation and coefficient extraction") {
  PrimeField F(5);
  FpRing R{&F};
  CHECK_THROWS_AS(Cycle({1, 0, 2}), DomainError);
  CHECK(Cycle::ones(3).dim() == 3);

  // Integral over [l]_p picks the coefficient of x^{lp-1}.
  FpPoly x = FpPoly::variable(R, 1, 0);
  FpPoly P = x.pow(4).scale(3) + x.pow(9).scale(2) + x.pow(7);
  CHECK(fp_integral(P, Cycle({1})).v == 3);
  CHECK(fp_integral(P, Cycle({2})).v == 2);
  CHECK(fp_integral(P, Cycle({3})).v == 0);
  CHECK_THROWS_AS(fp_integral(P, Cycle::ones(2)), TypeError);

  // Two variables, mixed lengths.
  FpPoly y = FpPoly::variable(R, 2, 1);
  FpPoly Q = FpPoly::monomial(R, 2, {4, 9}, 2) + FpPoly::monomial(R, 2, {4, 4}, 1);
  CHECK(fp_integral(Q, Cycle({1, 2})).v == 2);
  CHECK(fp_integral(Q, Cycle({1, 1})).v == 1);
  CHECK(fp_integral(Q, Cycle({2, 1})).v == 0);
}

TEST_CASE("partial integration leaves a polynomial in the tail variables") {
  PrimeField F(5);
  FpRing R{&F};
  // P = x^4 (y^2 + 3) + x^2 y: integrating x over [1]_5 keeps only the x^4 row.
  FpPoly P = FpPoly::monomial(R, 2, {4, 2}, 1) + FpPoly::monomial(R, 2, {4, 0}, 3) +
             FpPoly::monomial(R, 2, {2, 1}, 1);
  FpPoly tail = fp_integral_partial(P, Cycle({1}));
  CHECK(tail.nvars() == 1);
  CHECK(tail.coefficient({2}) == 1);
  CHECK(tail.coefficient({0}) == 3);
  CHECK(tail.term_count() == 2);
  // Full-dimension partial agrees with fp_integral.
  FpPoly c0 = fp_integral_partial(P, Cycle({1, 1}));
  CHECK(c0.nvars() == 0);
  CHECK(c0.is_zero());
  CHECK_THROWS_AS(fp_integral_partial(tail, Cycle({1, 1})), TypeError);
}

TEST_CASE("integrals of derivatives vanish (discrete Stokes)") {
  PrimeField F(7);
  FpRing R{&F};
  FpPoly x = FpPoly::variable(R, 2, 0), y = FpPoly::variable(R, 2, 1);
  FpPoly P = (x + y.scale(2)).pow(5) * (x - y).pow(4) + x.pow(6) * y.pow(6);
  CHECK(stokes_check(P, 0, Cycle::ones(2)));
  CHECK(stokes_check(P, 1, Cycle::ones(2)));
  CHECK(stokes_check(P * P, 0, Cycle::ones(2)));
}

TEST_CASE("one-variable integral of x^a (1-x)^b") {
  PrimeField F5(5);
  CHECK(beta_fp(3, 4, F5).v == 1);  // -3!4!/3! = -24 = 1 mod 5
  CHECK(beta_fp(1, 1, F5).v == 0);  // below the degree threshold
  CHECK(beta_fp(4, 0, F5).v == 1);  // -4!/0! = -24 = 1 mod 5
  CHECK(beta_fp(0, 4, F5).v == 1);

  // The expansion and the closed form agree cellwise over small fields.
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    PrimeField F(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        Fp lhs = beta_expansion(a, b, F);
        Fp rhs = beta_closed_form(a, b, F);
        CHECK(lhs == rhs);
        if (std::uint64_t(a) + b < p - 1) CHECK(lhs.v == 0);
        // Exchanging a and b preserves the value.
        CHECK(beta_expansion(b, a, F) == lhs);
      }
  }
  CHECK_THROWS_AS(beta_fp(5, 0, F5), DomainError);
  CHECK_THROWS_AS(beta_fp(0, 5, F5), DomainError);
}

TEST_CASE("parameter validation and regime predicates") {
  PrimeField F(5);
  CHECK_THROWS_AS(SelbergParams(F, 0, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(SelbergParams(F, 2, 5, 1, 1), DomainError);
  CHECK_THROWS_AS(SelbergParams(F, 2, 1, 5, 1), DomainError);
  CHECK_THROWS_AS(SelbergParams(F, 2, 1, 1, 5), DomainError);

  SelbergParams S(F, 2, 2, 1, 1);  // a+b+(n-1)c = 4 = p-1, a+b+2c = 5 < 9
  CHECK(S.main_regime());
  CHECK(S.aomoto_regime());
  CHECK(S.morris_regime());
  SelbergParams low(F, 2, 0, 0, 1);  // sum 1 < p-1
  CHECK_FALSE(low.main_regime());
  SelbergParams high(F, 2, 4, 4, 4);  // a+b+2c = 16 >= 2p-1
  CHECK_FALSE(high.main_regime());
}

TEST_CASE("expansion values of S_n and S_{k,n} at a pinned cell") {
  PrimeField F(5);
  SelbergParams S(F, 2, 2, 1, 1);
  CHECK(selberg_S(S).v == 3);
  CHECK(selberg_Skn(S, 0).v == 3);
  CHECK(selberg_Skn(S, 1).v == 1);
  CHECK(selberg_Skn(S, 2).v == 3);
  // Fully decorated integral equals the one with a raised by one.
  SelbergParams S1(F, 2, 3, 1, 1);
  CHECK(selberg_Skn(S, 2) == selberg_S(S1));
  CHECK_THROWS_AS(selberg_Skn(S, 3), DomainError);
  CHECK_THROWS_AS(selberg_Skn(S, -1), DomainError);
  CHECK_THROWS_AS(master_polynomial(S, 5), DomainError);
}

TEST_CASE("the master polynomial is symmetric and the integral is stable "
          "under variable permutation") {
  PrimeField F(7);
  SelbergParams S(F, 3, 2, 2, 1);
  FpPoly M = master_polynomial(S, 0);
  CHECK(M.permute_vars({1, 0, 2}) == M);
  CHECK(M.permute_vars({2, 0, 1}) == M);
  // The k-decorated polynomial is not symmetric, but its integral is fixed by
  // permutations of the (equal-length) cycle coordinates.
  FpPoly M1 = master_polynomial(S, 1);
  Fp base = fp_integral(M1, Cycle::ones(3));
  CHECK(fp_integral(M1.permute_vars({2, 1, 0}), Cycle::ones(3)) == base);
  CHECK(fp_integral(M1.permute_vars({1, 2, 0}), Cycle::ones(3)) == base);
}

TEST_CASE("exchanging a and b preserves in-regime values") {
  PrimeField F(7);
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = 0; b < a; ++b) {
      SelbergParams S(F, 2, a, b, 1), T(F, 2, b, a, 1);
      if (!S.main_regime()) continue;
      CHECK(selberg_S(S) == selberg_S(T));
    }
}

TEST_CASE("odd pair exponents make the integral vanish") {
  // With exponent 2c+1 on the differences the integrand is antisymmetric, so
  // the coefficient at the symmetric exponent vector is zero.
  for (std::uint32_t p : {5u, 7u}) {
    PrimeField F(p);
    FpRing R{&F};
    for (int n : {2, 3}) {
      for (std::uint32_t c = 0; c <= 1; ++c) {
        FpPoly acc = FpPoly::one(R, n);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            FpPoly diff = FpPoly::variable(R, n, i) - FpPoly::variable(R, n, j);
            acc = acc * diff.pow(2 * c + 1);
          }
        for (int i = 0; i < n; ++i) {
          FpPoly xi = FpPoly::variable(R, n, i);
          acc = acc * xi.pow(2) * (FpPoly::one(R, n) - xi).pow(1);
        }
        CHECK(fp_integral(acc, Cycle::ones(n)).v == 0);
      }
    }
  }
}

TEST_CASE("pointwise sum over F_p^n matches the coefficient integral") {
  // sum_{x in F_p^n} integrand = (-1)^n S_n whenever every per-variable degree
  // a + b + 2(n-1)c stays below 2(p-1).
  PrimeField F5(5);
  SelbergParams S(F5, 2, 2, 1, 1);
  Fp sum = selberg_sum_oracle(S);
  CHECK(sum.v == 3);
  CHECK(F5.mul(F5.neg_one_pow(2), sum.v) == selberg_S(S).v);

  PrimeField F3(3);
  SelbergParams T(F3, 1, 1, 1, 0);
  Fp tsum = selberg_sum_oracle(T);
  CHECK(tsum.v == 1);
  CHECK(F3.mul(F3.neg_one_pow(1), tsum.v) == selberg_S(T).v);

  PrimeField F7(7);
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = 0; b < 7; ++b)
      for (std::uint32_t c = 0; c <= 2; ++c) {
        if (std::uint64_t(a) + b + 2 * c >= 12) continue;  // 2(p-1)
        SelbergParams U(F7, 2, a, b, c);
        CHECK(F7.mul(F7.neg_one_pow(2), selberg_sum_oracle(U).v) ==
              selberg_S(U).v);
      }
}

TEST_CASE("longer cycles read coefficients past the first period") {
  PrimeField F(3);
  FpRing R{&F};
  FpPoly x = FpPoly::variable(R, 1, 0);
  // Over F_3, (1-x)^3 = 1 - x^3, so x^2 (1-x)^3 = x^2 - x^5: the [2]_3
  // exponent 2p-1 = 5 carries -1 and the [1]_3 exponent 2 carries 1.
  FpPoly P = x.pow(2) * (FpPoly::one(R, 1) - x).pow(3);
  CHECK(fp_integral(P, Cycle({2})).v == 2);
  CHECK(fp_integral(P, Cycle({1})).v == 1);
}
