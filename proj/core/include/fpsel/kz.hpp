#ifndef FPSEL_KZ_HPP
#define FPSEL_KZ_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fpsel/fp_integral.hpp"
#include "fpsel/multipoly.hpp"
#include "fpsel/prime_field.hpp"

namespace fpsel {

// Parameters of the sl2 KZ system on V_{m1} (x) V_{m2} over F_p with
// kappa = kappa_num / kappa_den, restricted to the singular weight space of
// weight m1 + m2 - 2n (one-dimensional for 0 <= n <= min(m1, m2)).
// M1, M2, M12, c are the least positive residues of -m1/kappa, -m2/kappa,
// m1 m2 / (2 kappa), 1/kappa; with 1 <= m1, m2 < p they land in [1, p-1].
struct KZParams {
  const PrimeField* F;
  std::uint32_t m1, m2;
  int n;
  std::int64_t kappa_num, kappa_den;
  std::uint32_t M1, M2, M12, c;

  KZParams(const PrimeField& field, std::uint32_t m1_, std::uint32_t m2_,
           int n_, std::int64_t kappa_num_, std::int64_t kappa_den_);

  // kappa as a residue.
  std::uint32_t kappa_fp() const;

  // M1+(n-1)c < p, M2+(n-1)c < p, p <= M1+M2+(n-1)c, M1+M2+(2n-2)c < 2p-1;
  // false for n = 0 (the closed-form theorem assumes n >= 1).
  bool regime() const;
};

// Element of V_{m1} (x) V_{m2} with all coordinates in the weight subspace of
// total lowering `drop`: entries[r] is the coefficient (a polynomial in
// z1, z2 over F_p) of f^r v_{m1} (x) f^{drop-r} v_{m2}, r = 0..drop.
// Slots with r > m1 or drop - r > m2 do not correspond to basis vectors and
// must hold the zero polynomial.
struct TensorVector {
  std::uint32_t m1, m2;
  int drop;
  std::vector<FpPoly> entries;

  const PrimeField& field() const { return *entries.at(0).ring().field; }
};

TensorVector tv_zero(const PrimeField& F, std::uint32_t m1, std::uint32_t m2,
                     int drop);
TensorVector tv_add(const TensorVector& a, const TensorVector& b);
TensorVector tv_scale(const TensorVector& v, std::uint32_t k);
bool tv_is_zero(const TensorVector& v);
bool tv_equal(const TensorVector& a, const TensorVector& b);

enum class Gen { e, f, h };
enum class Slot { first, second, both };

// Action of g (x) 1, 1 (x) g, or the coproduct g (x) 1 + 1 (x) g on the
// basis f^k v_m:  e.f^k = k(m-k+1) f^{k-1},  h.f^k = (m-2k) f^k,
// f.f^k = f^{k+1} (zero past f^m). e lowers drop by one (drop-0 input yields
// the drop-0 zero vector), f raises it by one, h preserves it.
TensorVector sl2_tensor_action(Gen g, Slot slot, const TensorVector& v);

// Casimir e(x)f + f(x)e + (1/2) h(x)h, applied via compositions of
// sl2_tensor_action; preserves drop.
TensorVector casimir_apply(const TensorVector& v);

// KZ residuals (kappa (z1-z2) du/dz1 - Omega u, kappa (z2-z1) du/dz2 - Omega u);
// u solves the system over F_p[z1, z2] iff both vanish.
std::pair<TensorVector, TensorVector> kz_residual(const KZParams& K,
                                                  const TensorVector& u);

// Singular-vector relations (n-r)(m2-n+r+1) u_r + (r+1)(m1-r) u_{r+1} = 0
// for r = 0..n-1 (equivalent to e.u = 0 on the weight subspace).
bool singular_check(const KZParams& K, const TensorVector& u);

// Constructed solution: u_r = (z1-z2)^{M12} * integral over [1,...,1]_p of
//   sum_{|J|=r} prod_{i in J} (t_i-z1)^{M1-1}(t_i-z2)^{M2}
//             prod_{i not in J} (t_i-z1)^{M1}(t_i-z2)^{M2-1}
//             prod_{i<j} (t_i-t_j)^{2c} .
// For n = 0 the empty integral is 1 and u = (z1-z2)^{M12}.
TensorVector kz_solution(const KZParams& K);

// Closed form under regime():
//   u_r = (-1)^{A+r} C(n,r) (z1-z2)^B
//         prod_{j=1}^n (jc)!/c! (M1+(j-1)c)!(M2+(j-1)c)!/(M1+M2+(n+j-2)c-p)!
//         / ( prod_{j=1}^r (M1+(j-1)c) prod_{j=1}^{n-r} (M2+(j-1)c) ),
// A = n(M1+(n-1)c+1), B = M12 + n(M1+M2+(n-1)c-p). The (jc)! numerators are
// integers projected to F_p (zero when jc >= p).
TensorVector kz_closed_form(const KZParams& K);

}  // namespace fpsel

#endif  // FPSEL_KZ_HPP
