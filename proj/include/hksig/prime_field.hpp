#ifndef HKSIG_PRIME_FIELD_HPP
#define HKSIG_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "hksig/errors.hpp"

namespace hksig {

// Arithmetic context for F_p. Elements are plain residues in [0, p);
// every operation returns a fully reduced value.
//
// The modulus is kept below 2^31 so products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31))
      throw Error("modulus out of range: " + std::to_string(p));
    if (!is_prime(p)) throw Error("modulus is not prime: " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? std::uint32_t(s - p_) : std::uint32_t(s);
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p_ - b);
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return std::uint32_t((std::uint64_t(a) * b) % p_);
  }

  // Extended Euclid. a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      std::int64_t s2 = s0 - q * s1;
      r0 = r1; r1 = r2;
      s0 = s1; s1 = s2;
    }
    // r0 == gcd(p, a) == 1 since p is prime and a != 0 mod p
    std::int64_t s = s0 % p_;
    if (s < 0) s += p_;
    return std::uint32_t(s);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p_, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // Reduce an arbitrary signed integer into [0, p).
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return std::uint32_t(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

}  // namespace hksig

#endif
