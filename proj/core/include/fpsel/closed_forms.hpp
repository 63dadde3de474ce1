#ifndef FPSEL_CLOSED_FORMS_HPP
#define FPSEL_CLOSED_FORMS_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "fpsel/bigint.hpp"
#include "fpsel/fp_integral.hpp"
#include "fpsel/multipoly.hpp"
#include "fpsel/prime_field.hpp"

namespace fpsel {

// Region of a parameter cell (a, b) for given (p, n, c):
//   band = 0:   a <= p-1-(n-1)c and b <= p-1-(n-1)c                (omega0)
//   band = i:   a <= p-1-(n-1)c and p-(n-i)c <= b <= p-1-(n-i-1)c  (omegai)
//   band = -1:  a > p-1-(n-1)c                                     (outside;
//               the integral vanishes there).
// For c >= 1 the bands partition b in [0, p-1]; for c = 0 everything is
// omega0.
struct Region {
  int band;  // -1 = outside, 0..n-1 = omega band
  bool operator==(const Region& o) const { return band == o.band; }
};

Region region_classify(const SelbergParams& S);
std::string region_name(const Region& r);

// Main product formula, valid in main_regime():
//   (-1)^n prod_{j=1}^n (jc)!/c! * (a+(j-1)c)!(b+(j-1)c)!
//                                   / (a+b+(n+j-2)c+1-p)! .
// Numerator factorials are integer factorials projected to F_p (zero when
// the argument reaches p), matching the vanishing lemmas; denominator
// factorials must lie in [0, p-1] (DomainError otherwise, though in-regime
// they always do).
Fp selberg_rhs(const SelbergParams& S);

// Degenerate case a+b+(n-1)c = p-1 (precondition; DomainError otherwise):
//   (-1)^{bn + c n(n-1)/2} (cn)! / (c!)^n.
Fp base_case_value(const SelbergParams& S);

// Aomoto product for S_{k,n}, 0 <= k <= n-1, valid in aomoto_regime():
//   prod_{j=1}^k (a+(n-j)c+1)/(a+b+(2n-j-1)c+2) * selberg_rhs.
// k = 0 reduces to selberg_rhs.
Fp aomoto_rhs(const SelbergParams& S, int k);

// Single recursion factor S_{k,n}/S_{k-1,n} for 1 <= k <= n:
//   (a+(n-k)c+1) / (a+b+(2n-k-1)c+2)  mod p.
Fp aomoto_step(const SelbergParams& S, int k);

// Dyson constant term (cn)!/(c!)^n: exact integer, F_p value (requires
// cn <= p-1), and the independent Laurent constant-term oracle.
BigInt dyson_value_z(int n, std::uint32_t c);
Fp dyson_value_fp(int n, std::uint32_t c, const PrimeField& F);
BigInt dyson_ct_oracle(int n, std::uint32_t c);

// Morris constant term
//   prod_{j=1}^n (jg)!/g! * (a+b+(j-1)g)! / ((a+(j-1)g)! (b+(j-1)g)!)
// exact integer, F_p value (all factorial arguments must lie in [0, p-1]),
// and the Laurent constant-term oracle for
//   CT prod_i (1-x_i)^alpha (1-1/x_i)^beta prod_{j != k} (1-x_j/x_k)^gamma.
BigInt morris_rhs_z(int n, std::uint32_t alpha, std::uint32_t beta,
                    std::uint32_t gamma);
Fp morris_rhs_fp(int n, std::uint32_t alpha, std::uint32_t beta,
                 std::uint32_t gamma, const PrimeField& F);
BigInt morris_ct_oracle(int n, std::uint32_t alpha, std::uint32_t beta,
                        std::uint32_t gamma);

// Morris-type evaluation of S_n in morris_regime():
//   (-1)^{C(n,2)c + na} * M(alpha, beta, gamma, n) projected to F_p,
// with alpha = a+b+(n-1)c+1-p, beta = p-a-(n-1)c-1, gamma = c.
Fp morris_form_rhs(const SelbergParams& S);

// Lucas-binomial evaluation of S_n in morris_regime(), with
// k = p-1-(n-1)c-a >= 0:
//   (-1)^{C(n,2)c + na} (nc)!/(c!)^n
//     * prod_{j=1}^n C(b+(j-1)c, k) / C((j-1)c+k, k),
// where (nc)!/(c!)^n and the top binomials are integers projected to F_p
// (Lucas); the bottom binomials have both arguments < p and are invertible.
Fp binom_form_rhs(const SelbergParams& S);

// Factorization over band omega_i (i >= 1; DomainError elsewhere):
//   (-1)^{(n-i)ic} C(nc, ic)
//     * prod_{j=1}^{n-i} X_j * prod_{j=1}^{i} X_j / prod_{j=1}^{n} X_j
//     * S_{n-i}(a+ic, b, c) * S_i(a+(n-i)c, b+(n-i)c-p, c),
// with X_j = C(p-1-(n-j)c-a, (j-1)c). Both sub-parameter cells land in
// omega0 of the smaller dimension and are evaluated by the main product or
// are zero by the vanishing lemma.
Fp factorization_rhs(const SelbergParams& S);

// Value of S_n for (a, b) in omega0: selberg_rhs when the main regime holds,
// 0 otherwise (vanishing lemma). DomainError outside omega0.
Fp selberg_omega0_value(const SelbergParams& S);

// Jacobi polynomial P_n^{(alpha,beta)}(x) over F_p (univariate, requires
// n < p):
//   (1/n!) sum_{v=0}^n C(n,v) prod_{i=1}^v (n+alpha+beta+i)
//                       prod_{i=v+1}^n (alpha+i) ((x-1)/2)^v.
FpPoly jacobi_poly(int n, Fp alpha, Fp beta);

// Both sides of the Jacobi identity as polynomials in t:
//   LHS: int prod_i (x_i - t) * master over [1,...,1]_p,
//   RHS: n! c^n selberg_rhs / prod_{i=n-1}^{2n-2} (a+b+ic+2)
//        * P_n^{(alpha,beta)}(1-2t),
// with alpha = (a+1)/c - 1, beta = (b+1)/c - 1 in F_p. Requires
// aomoto_regime() and c >= 1 (DomainError), and nonzero denominators
// (SingularError).
std::pair<FpPoly, FpPoly> jacobi_sides(const SelbergParams& S);
bool jacobi_check(const SelbergParams& S);

}  // namespace fpsel

#endif  // FPSEL_CLOSED_FORMS_HPP
