#ifndef FPSEL_POCH_IDENTITY_HPP
#define FPSEL_POCH_IDENTITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpsel/bigint.hpp"
#include "fpsel/multipoly.hpp"

namespace fpsel {

// Number of unordered pairs {i, j} among n vertices.
std::uint64_t pair_count(int n);

// Odometer over all assignments m_e in [0, 2c] for the C(n,2) pairs
// e = (i, j), i < j, in lexicographic pair order (0,1), (0,2), ..., (n-2,n-1).
// Construction throws ResourceError when (2c+1)^C(n,2) exceeds 10^7 states.
struct MSelection {
  int n;
  std::uint32_t c;
  std::vector<std::uint32_t> m;  // size C(n,2)

  MSelection(int n_, std::uint32_t c_);

  // Index of pair (i, j) with 0 <= i < j < n in the odometer vector.
  std::size_t pair_index(int i, int j) const;

  // Advance to the next assignment; false once all have been visited.
  bool advance();

  // Sum of all m_e in the current assignment.
  std::uint64_t total() const;

  // Exponent bookkeeping for vertex k under the current assignment, where
  // mbar_e = 2c - m_e:
  //   r_k = sum_{i<k} mbar_{ik} + sum_{j>k} m_{kj}
  //   s_k = sum_{i<k} m_{ik}   + sum_{j>k} mbar_{kj}
  std::uint64_t r_of(int k) const;
  std::uint64_t s_of(int k) const;
};

// Left side of the Pochhammer identity, a polynomial in Z[x, y]
// (variable 0 is x, variable 1 is y):
//   sum_m (-1)^{sum m_e} prod_e binom(2c, m_e) prod_k (x)_{r_k} (y)_{s_k}
// where (x)_r = x (x+1) ... (x+r-1) is the rising factorial.
ZPoly identity_lhs(int n, std::uint32_t c);

// Right side of the identity:
//   prod_{k=1}^{n-1} [((k+1)c)! / c!] (x)_{kc} (y)_{kc} (x+y+(2n-k-2)c)_{kc}
ZPoly identity_rhs(int n, std::uint32_t c);

// Whether the two sides agree as polynomials in Z[x, y].
bool verify_identity(int n, std::uint32_t c);

// Divides the left side exactly by the rising-factorial factors
// prod_{k=1}^{n-1} (x)_{kc} (y)_{kc} and expresses the quotient as
// K (x+y+t_1) ... (x+y+t_m) with t_1 <= ... <= t_m; returns that factored
// form as a compact string, e.g. "12(x+y+2)(x+y+3)".
// Throws DomainError if a division leaves a remainder and logic_error if the
// quotient fails to match the reconstructed factorization.
std::string identity_normal_form(int n, std::uint32_t c);

// Rational value of the classical n-dimensional Selberg integral with
// nonnegative integer exponents a, b and pair exponent 2c:
//   prod_{j=1}^{n} [(jc)!/c!] (a+(j-1)c)! (b+(j-1)c)! / (a+b+(n+j-2)c+1)!
Rational classical_selberg_rhs(int n, std::uint32_t a, std::uint32_t b,
                               std::uint32_t c);

// The same integral decorated with x_1 ... x_k:
//   prod_{j=1}^{k} (a+(n-j)c+1) / (a+b+(2n-j-1)c+2) times the value above.
Rational classical_aomoto_rhs(int n, std::uint32_t a, std::uint32_t b,
                              std::uint32_t c, int k);

// The classical Selberg integral evaluated by expanding
// prod_{i<j}(x_i-x_j)^{2c} and integrating each variable separately:
//   sum_m (-1)^{sum m_e} prod_e binom(2c, m_e)
//         prod_k (a+r_k)! b! / (a+r_k+b+1)!
Rational decoupled_selberg_sum(int n, std::uint32_t a, std::uint32_t b,
                               std::uint32_t c);

// Whether the decoupled sum reproduces the closed-form product.
bool decoupled_sum_check(int n, std::uint32_t a, std::uint32_t b,
                         std::uint32_t c);

}  // namespace fpsel

#endif  // FPSEL_POCH_IDENTITY_HPP
