#ifndef FPSEL_BIGINT_HPP
#define FPSEL_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

#include "fpsel/errors.hpp"

namespace fpsel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n! as an exact integer.
inline BigInt factorial_z(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Binomial coefficient C(n, m) as an exact integer; 0 when m > n.
inline BigInt binomial_z(std::uint64_t n, std::uint64_t m) {
  if (m > n) return 0;
  if (m > n - m) m = n - m;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    r *= n - m + i;
    r /= i;  // exact: r is C(n-m+i, i) after this step
  }
  return r;
}

// Rising factorial x(x+1)...(x+m-1) for integer x.
inline BigInt pochhammer_z(const BigInt& x, std::uint64_t m) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < m; ++i) r *= x + i;
  return r;
}

// Least nonnegative residue of v mod p.
inline std::uint32_t mod_big(const BigInt& v, std::uint32_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace fpsel

#endif  // FPSEL_BIGINT_HPP
