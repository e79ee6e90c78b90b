#ifndef HKSIG_MONOMIAL_HPP
#define HKSIG_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hksig/errors.hpp"

namespace hksig {

// Exponents are machine integers with a checked bound; the bound keeps
// Frobenius powers q^e within range long before memory becomes an issue.
inline constexpr std::uint32_t kMaxExponent = 1u << 20;

// Exponent vector of fixed arity. The ambient variable count is owned by
// the ring context; a Monomial only carries its exponents.
struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {
    for (auto x : exps) check_exponent(x);
  }

  std::size_t arity() const { return exps.size(); }

  std::uint64_t degree() const {
    return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
  }

  std::uint64_t weighted_degree(const std::vector<std::uint64_t>& weights) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
      d += std::uint64_t(exps[i]) * weights[i];
    return d;
  }

  bool is_one() const {
    for (auto e : exps)
      if (e) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return exps != o.exps; }
  // Container ordering only (std::map keys); the algebraic order lives in
  // MonomialOrder.
  bool operator<(const Monomial& o) const { return exps < o.exps; }

  static void check_exponent(std::uint64_t e) {
    if (e > kMaxExponent)
      throw OverflowError("exponent " + std::to_string(e) + " exceeds bound " +
                          std::to_string(kMaxExponent));
  }
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    std::uint64_t e = std::uint64_t(a.exps[i]) + b.exps[i];
    Monomial::check_exponent(e);
    r.exps[i] = std::uint32_t(e);
  }
  return r;
}

// Exact quotient a / b; requires divides(b, a).
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (b.exps[i] > a.exps[i]) throw InternalError("monomial division not exact");
    r.exps[i] = a.exps[i] - b.exps[i];
  }
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    r.exps[i] = a.exps[i] > b.exps[i] ? a.exps[i] : b.exps[i];
  return r;
}

// Rescale every exponent by q (the Frobenius action on monomials).
inline Monomial mono_frobenius(const Monomial& a, std::uint64_t q) {
  Monomial r(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    std::uint64_t e = std::uint64_t(a.exps[i]) * q;
    Monomial::check_exponent(e);
    r.exps[i] = std::uint32_t(e);
  }
  return r;
}

// Total, multiplicative well-orders on monomials of a fixed arity.
//
//   lex      plain lexicographic, first variable strongest
//   grevlex  total degree, ties by reverse lexicographic on the last
//            variable (standard convention; default everywhere)
//   block    elimination order: grevlex on the first `front` variables,
//            ties broken by grevlex on the rest
struct MonomialOrder {
  enum class Kind { lex, grevlex, block } kind = Kind::grevlex;
  std::size_t front = 0;  // block size; meaningful for Kind::block only

  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder block(std::size_t front) { return {Kind::block, front}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::block || front == o.front);
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  // Returns <0, 0, >0 when a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::lex:
        return lex_cmp(a.exps, b.exps, 0, a.exps.size());
      case Kind::grevlex:
        return grevlex_cmp(a.exps, b.exps, 0, a.exps.size());
      case Kind::block: {
        std::size_t k = front < a.exps.size() ? front : a.exps.size();
        if (int c = grevlex_cmp(a.exps, b.exps, 0, k)) return c;
        return grevlex_cmp(a.exps, b.exps, k, a.exps.size());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const {
    switch (kind) {
      case Kind::lex: return "lex";
      case Kind::grevlex: return "grevlex";
      case Kind::block: return "block(" + std::to_string(front) + ")";
    }
    return "?";
  }

 private:
  static int lex_cmp(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b, std::size_t lo,
                     std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static int grevlex_cmp(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b, std::size_t lo,
                         std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the monomial with the smaller exponent in the last
    // differing variable is the larger one.
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
};

}  // namespace hksig

#endif
