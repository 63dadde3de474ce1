#include "fpsel/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace fpsel {

namespace {

// Deterministic for the full range p < 2^31: trial division to sqrt(p).
bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31))
    throw DomainError("PrimeField: p must be < 2^31, got " + std::to_string(p));
  if (!is_odd_prime(p))
    throw DomainError("PrimeField: p must be an odd prime >= 3, got " +
                      std::to_string(p));
  fact_.resize(p_);
  inv_fact_.resize(p_);
  fact_[0] = 1;
  for (std::uint32_t n = 1; n < p_; ++n)
    fact_[n] = mul(fact_[n - 1], n);
  // Wilson: (p-1)! = -1 mod p; a cheap structural check on the table.
  if (fact_[p_ - 1] != p_ - 1)
    throw std::logic_error("PrimeField: factorial table violates Wilson");
  inv_fact_[p_ - 1] = pow(fact_[p_ - 1], p_ - 2);
  for (std::uint32_t n = p_ - 1; n > 0; --n)
    inv_fact_[n - 1] = mul(inv_fact_[n], n);
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t e) const {
  std::uint64_t acc = 1, b = base % p_;
  while (e) {
    if (e & 1) acc = acc * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return std::uint32_t(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw SingularError("PrimeField: inverse of 0");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::factorial(std::uint64_t n) const {
  if (n >= p_)
    throw DomainError("factorial: argument " + std::to_string(n) +
                      " outside [0, p-1] for p = " + std::to_string(p_));
  return fact_[static_cast<std::size_t>(n)];
}

std::uint32_t PrimeField::inv_factorial(std::uint64_t n) const {
  if (n >= p_)
    throw DomainError("inv_factorial: argument " + std::to_string(n) +
                      " outside [0, p-1] for p = " + std::to_string(p_));
  return inv_fact_[static_cast<std::size_t>(n)];
}

std::uint32_t PrimeField::binom_small(std::uint32_t n, std::uint32_t m) const {
  if (n >= p_)
    throw DomainError("binom_small: n must be < p");
  if (m > n) return 0;
  return mul(fact_[n], mul(inv_fact_[m], inv_fact_[n - m]));
}

std::uint32_t binom_lucas(std::uint64_t n, std::uint64_t m,
                          const PrimeField& F) {
  if (m > n) return 0;
  const std::uint64_t p = F.p();
  std::uint32_t acc = 1;
  while (n || m) {
    std::uint32_t nd = std::uint32_t(n % p), md = std::uint32_t(m % p);
    if (md > nd) return 0;
    acc = F.mul(acc, F.binom_small(nd, md));
    n /= p;
    m /= p;
  }
  return acc;
}

Fp pochhammer_fp(Fp x, std::uint64_t m) {
  if (x.F == nullptr) throw TypeError("pochhammer_fp: element has no field");
  const PrimeField& F = *x.F;
  std::uint32_t acc = 1;
  for (std::uint64_t i = 0; i < m; ++i)
    acc = F.mul(acc, F.add(x.v, F.reduce(std::int64_t(i % F.p()))));
  return {acc, F};
}

Fp cancellation_value(std::uint32_t a, std::uint32_t b, const PrimeField& F) {
  if (std::uint64_t(a) + b != std::uint64_t(F.p()) - 1)
    throw DomainError("cancellation_value: requires a + b = p - 1");
  std::uint32_t v = F.mul(F.factorial(a), F.factorial(b));
  if (v != F.neg_one_pow(std::uint64_t(a) + 1))
    throw std::logic_error("cancellation_value: identity violated");
  return {v, F};
}

}  // namespace fpsel
