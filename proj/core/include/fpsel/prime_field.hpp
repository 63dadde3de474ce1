#ifndef FPSEL_PRIME_FIELD_HPP
#define FPSEL_PRIME_FIELD_HPP

#include <cstdint>
#include <vector>

#include "fpsel/bigint.hpp"
#include "fpsel/errors.hpp"

namespace fpsel {

// Arithmetic in F_p for an odd prime 3 <= p < 2^31, with factorial and
// inverse-factorial tables for n = 0..p-1 built at construction.
// All residues are kept in [0, p); products fit in 64 bits by the bound on p.
// Construction costs O(p) time and memory (the tables).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  PrimeField(const PrimeField&) = delete;
  PrimeField& operator=(const PrimeField&) = delete;

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return std::uint32_t((std::uint64_t(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t base, std::uint64_t e) const;

  // Multiplicative inverse via Fermat; SingularError on 0.
  std::uint32_t inv(std::uint32_t a) const;

  // Least nonnegative residue of a signed 64-bit integer.
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return std::uint32_t(r);
  }
  // Projection of an arbitrary integer to F_p.
  std::uint32_t reduce(const BigInt& v) const { return mod_big(v, p_); }

  // n! mod p for n in [0, p-1]; DomainError otherwise (n >= p would be
  // 0 mod p and signals a parameter-regime violation at call sites that
  // need an invertible factorial).
  std::uint32_t factorial(std::uint64_t n) const;
  // (n!)^{-1} mod p for n in [0, p-1]; DomainError otherwise.
  std::uint32_t inv_factorial(std::uint64_t n) const;
  // Projection of the integer n! to F_p: table value for n < p, else 0
  // (n! contains the factor p). This is the reading under which the
  // closed-form products agree with the vanishing lemmas.
  std::uint32_t factorial_proj(std::uint64_t n) const {
    return n < p_ ? fact_[static_cast<std::size_t>(n)] : 0;
  }

  // C(n, m) mod p for 0 <= m <= n < p via the tables.
  std::uint32_t binom_small(std::uint32_t n, std::uint32_t m) const;

  std::int32_t sign_pow(std::uint64_t e) const { return (e & 1) ? -1 : 1; }
  // (-1)^e as a residue.
  std::uint32_t neg_one_pow(std::uint64_t e) const {
    return (e & 1) ? p_ - 1 : 1;
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> fact_;
  std::vector<std::uint32_t> inv_fact_;
};

// Element of a PrimeField; carries its field so cross-field operations can be
// rejected (fields compare by characteristic).
struct Fp {
  std::uint32_t v = 0;
  const PrimeField* F = nullptr;

  Fp() = default;
  Fp(std::uint32_t value, const PrimeField& field) : v(value % field.p()), F(&field) {}

  friend Fp operator+(Fp a, Fp b) { return {check(a, b).add(a.v, b.v), *a.F}; }
  friend Fp operator-(Fp a, Fp b) { return {check(a, b).sub(a.v, b.v), *a.F}; }
  friend Fp operator*(Fp a, Fp b) { return {check(a, b).mul(a.v, b.v), *a.F}; }
  friend Fp operator-(Fp a) { return {a.F->neg(a.v), *a.F}; }
  friend bool operator==(Fp a, Fp b) { check(a, b); return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }
  Fp inverse() const { return {F->inv(v), *F}; }

 private:
  static const PrimeField& check(Fp a, Fp b) {
    if (a.F == nullptr || b.F == nullptr || a.F->p() != b.F->p())
      throw TypeError("Fp: operands belong to different fields");
    return *a.F;
  }
};

// Lucas: C(n, m) mod p via base-p digits; n, m arbitrary nonnegative.
std::uint32_t binom_lucas(std::uint64_t n, std::uint64_t m, const PrimeField& F);

// Rising factorial x(x+1)...(x+m-1) in F_p.
Fp pochhammer_fp(Fp x, std::uint64_t m);

// a! * b! for a + b = p - 1; equals (-1)^{a+1} mod p (checked).
Fp cancellation_value(std::uint32_t a, std::uint32_t b, const PrimeField& F);

}  // namespace fpsel

#endif  // FPSEL_PRIME_FIELD_HPP
