#ifndef FPSEL_FP_INTEGRAL_HPP
#define FPSEL_FP_INTEGRAL_HPP

#include <cstdint>
#include <vector>

#include "fpsel/multipoly.hpp"
#include "fpsel/prime_field.hpp"

namespace fpsel {

// Integration cycle [l_1, ..., l_k]_p: the F_p-integral of P over the cycle
// is the coefficient of x_1^{l_1 p - 1} ... x_k^{l_k p - 1} in P.
struct Cycle {
  std::vector<std::uint32_t> lengths;

  explicit Cycle(std::vector<std::uint32_t> l);
  static Cycle ones(int k) { return Cycle(std::vector<std::uint32_t>(k, 1)); }
  int dim() const { return int(lengths.size()); }
};

// Coefficient extraction over the full variable set; P must have exactly
// cyc.dim() variables.
Fp fp_integral(const FpPoly& P, const Cycle& cyc);

// Integrate the first tvars variables over the cycle, leaving a polynomial
// in the remaining nvars - tvars variables.
FpPoly fp_integral_partial(const FpPoly& P, const Cycle& cyc);

// Whether the integral of dP/dx_var over the cycle vanishes (it always does:
// the only monomials contributing to the integral of a derivative have
// exponent l p in P, and l p = 0 in F_p).
bool stokes_check(const FpPoly& P, int var, const Cycle& cyc);

// beta integral int_{[1]_p} x^a (1-x)^b dx for 0 <= a, b < p: the two sides
// separately (expansion of the integrand; the closed form
// -a! b! / (a+b-p+1)! when a + b >= p - 1, 0 otherwise) and the checked
// combination, which computes both and throws logic_error on disagreement.
Fp beta_expansion(std::uint32_t a, std::uint32_t b, const PrimeField& F);
Fp beta_closed_form(std::uint32_t a, std::uint32_t b, const PrimeField& F);
Fp beta_fp(std::uint32_t a, std::uint32_t b, const PrimeField& F);

// Parameters (n, a, b, c) of the F_p-Selberg integral over F_p.
struct SelbergParams {
  const PrimeField* F;
  int n;
  std::uint32_t a, b, c;

  SelbergParams(const PrimeField& field, int n_, std::uint32_t a_,
                std::uint32_t b_, std::uint32_t c_);

  std::uint32_t p() const { return F->p(); }

  // p - 1 <= a + b + (n-1)c  and  a + b + (2n-2)c < 2p - 1.
  bool main_regime() const;
  // Same first bound with the strict second bound a + b + (2n-2)c < 2p - 2.
  bool aomoto_regime() const;
  // p - 1 <= a + b + (n-1)c  and  a + (n-1)c <= p - 1.
  bool morris_regime() const;
};

// Master polynomial with k decorated variables:
//   prod_{i<j} (x_i-x_j)^{2c} prod_i x_i^a (1-x_i)^b prod_{i<=k} x_i.
// 0 <= k <= n.
FpPoly master_polynomial(const SelbergParams& S, int k);

// S_{k,n}(a,b,c): integral of the k-decorated master polynomial over
// [1,...,1]_p, by full expansion.
Fp selberg_Skn(const SelbergParams& S, int k);

// S_n(a,b,c) = S_{0,n}(a,b,c).
Fp selberg_S(const SelbergParams& S);

// Independent oracle: sum of the (undecorated) integrand over all of F_p^n,
// evaluated pointwise with per-residue power tables. Relates to selberg_S by
// (-1)^n * sum = S_n when the per-variable degree a + b + 2(n-1)c < 2(p-1).
Fp selberg_sum_oracle(const SelbergParams& S);

}  // namespace fpsel

#endif  // FPSEL_FP_INTEGRAL_HPP
