#ifndef HKSIG_POLYNOMIAL_HPP
#define HKSIG_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hksig/errors.hpp"
#include "hksig/monomial.hpp"
#include "hksig/prime_field.hpp"

namespace hksig {

// Ambient polynomial ring F_p[x_1..x_n] with a fixed monomial order.
// Shared immutably by every polynomial built over it.
struct PolyRing {
  PrimeField field;
  std::vector<std::string> vars;
  MonomialOrder order;

  PolyRing(std::uint32_t p, std::vector<std::string> names, MonomialOrder ord)
      : field(p), vars(std::move(names)), order(ord) {
    if (vars.empty()) throw Error("polynomial ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j]) throw Error("duplicate variable name: " + vars[i]);
  }

  std::size_t nvars() const { return vars.size(); }

  bool compatible(const PolyRing& o) const {
    return field == o.field && vars == o.vars && order == o.order;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyRing>(p, std::move(vars), order);
}

struct Term {
  std::uint32_t coeff;  // in [1, p); zero terms never stored
  Monomial mono;
};

// Sparse polynomial in canonical form: terms strictly decreasing in the
// ring's order, no zero coefficients. Equality of polynomials is equality
// of canonical forms. Immutable in spirit: all operations return new values.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Canonicalizes: sorts, merges duplicate monomials mod p, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    for (const auto& t : terms)
      if (t.mono.arity() != ring_->nvars())
        throw ArityError("term arity does not match ring");
    std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
      return ring_->order.greater(a.mono, b.mono);
    });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
      std::uint32_t c = t.coeff % ring_->field.modulus();
      if (!terms_.empty() && terms_.back().mono == t.mono) {
        terms_.back().coeff = ring_->field.add(terms_.back().coeff, c);
        if (terms_.back().coeff == 0) terms_.pop_back();
      } else if (c != 0) {
        terms_.push_back({c, std::move(t.mono)});
      }
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw InternalError("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }

  std::uint64_t degree() const {  // total degree; 0 for the zero polynomial
    std::uint64_t d = 0;
    for (const auto& t : terms_)
      if (t.mono.degree() > d) d = t.mono.degree();
    return d;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring() || !b.ring() || !a.ring()->compatible(*b.ring()))
    throw ArityError("polynomials live in different rings");
}

// ---- constructors -------------------------------------------------------

inline Polynomial poly_zero(const RingPtr& ring) { return Polynomial(ring); }

inline Polynomial poly_constant(const RingPtr& ring, std::int64_t c) {
  std::uint32_t r = ring->field.from_int(c);
  if (r == 0) return Polynomial(ring);
  return Polynomial(ring, {Term{r, Monomial(ring->nvars())}});
}

inline Polynomial poly_variable(const RingPtr& ring, std::size_t i) {
  if (i >= ring->nvars()) throw Error("variable index out of range");
  Monomial m(ring->nvars());
  m.exps[i] = 1;
  return Polynomial(ring, {Term{1, std::move(m)}});
}

inline Polynomial poly_monomial(const RingPtr& ring, Monomial m, std::uint32_t c = 1) {
  return Polynomial(ring, {Term{c, std::move(m)}});
}

// ---- arithmetic ---------------------------------------------------------

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const auto& ring = *a.ring();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = ring.order.compare(ta[i].mono, tb[j].mono);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j++]);
    } else {
      std::uint32_t s = ring.field.add(ta[i].coeff, tb[j].coeff);
      if (s != 0) out.push_back({s, ta[i].mono});
      ++i, ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(tb[j]);
  return Polynomial(a.ring(), std::move(out));
}

inline Polynomial poly_neg(const Polynomial& a) {
  if (!a.ring()) return a;
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = a.ring()->field.neg(t.coeff);
  return Polynomial(a.ring(), std::move(out));
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  return poly_add(a, poly_neg(b));
}

inline Polynomial poly_scalar_mul(const Polynomial& a, std::uint32_t c) {
  if (!a.ring()) return a;
  c %= a.ring()->field.modulus();
  if (c == 0) return Polynomial(a.ring());
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = a.ring()->field.mul(t.coeff, c);
  return Polynomial(a.ring(), std::move(out));
}

// Multiply by c * m (one term).
inline Polynomial poly_term_mul(const Polynomial& a, std::uint32_t c, const Monomial& m) {
  if (!a.ring()) return a;
  const auto& field = a.ring()->field;
  c %= field.modulus();
  if (c == 0) return Polynomial(a.ring());
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({field.mul(t.coeff, c), mono_mul(t.mono, m)});
  return Polynomial(a.ring(), std::move(out));
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const auto& ring = *a.ring();
  auto desc = [&ring](const Monomial& x, const Monomial& y) {
    return ring.order.greater(x, y);
  };
  std::map<Monomial, std::uint32_t, decltype(desc)> acc(desc);
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      Monomial m = mono_mul(ta.mono, tb.mono);
      std::uint32_t c = ring.field.mul(ta.coeff, tb.coeff);
      auto [it, fresh] = acc.emplace(std::move(m), c);
      if (!fresh) {
        it->second = ring.field.add(it->second, c);
        if (it->second == 0) acc.erase(it);
      }
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back({c, m});
  return Polynomial(a.ring(), std::move(out));
}

inline Polynomial poly_pow(const Polynomial& a, std::uint64_t e) {
  if (!a.ring()) throw Error("power of ring-less polynomial");
  Polynomial result = poly_constant(a.ring(), 1);
  Polynomial base = a;
  while (e) {
    if (e & 1) result = poly_mul(result, base);
    e >>= 1;
    if (e) base = poly_mul(base, base);
  }
  return result;
}

// f^(p^e) by exponent rescaling; valid over F_p because every coefficient
// is Frobenius-fixed. Agrees with poly_pow(f, p^e) term for term.
inline Polynomial frobenius_power(const Polynomial& f, unsigned e) {
  if (!f.ring()) throw Error("frobenius power of ring-less polynomial");
  if (e == 0) return f;
  std::uint64_t q = 1;
  std::uint64_t p = f.ring()->field.modulus();
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent)
      throw OverflowError("Frobenius power p^" + std::to_string(e) +
                          " exceeds the exponent bound");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.coeff, mono_frobenius(t.mono, q)});
  return Polynomial(f.ring(), std::move(out));
}

inline Polynomial poly_monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  std::uint32_t lc = a.leading_term().coeff;
  if (lc == 1) return a;
  return poly_scalar_mul(a, a.ring()->field.inv(lc));
}

// ---- printing -----------------------------------------------------------

inline std::string monomial_string(const PolyRing& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!first) os << "*";
    os << ring.vars[i];
    if (m.exps[i] > 1) os << "^" << m.exps[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

// Canonical text form: terms in ring order, '*' explicit, no unary minus
// (coefficients are residues). parse_polynomial(to_string(f)) == f.
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    if (t.mono.is_one()) {
      os << t.coeff;
    } else {
      if (t.coeff != 1) os << t.coeff << "*";
      os << monomial_string(ring, t.mono);
    }
    first = false;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << to_string(f);
}

// ---- ring conversion ----------------------------------------------------

// Reinterpret f in another ring over the same field. var_map[i] gives the
// index in `target` of the i-th source variable; every source variable that
// actually occurs must be mapped. Extra target variables get exponent zero.
inline Polynomial convert_to_ring(const Polynomial& f, const RingPtr& target,
                                  const std::vector<std::size_t>& var_map) {
  if (f.ring()->field != target->field) throw ArityError("field mismatch in conversion");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      if (i >= var_map.size() || var_map[i] >= target->nvars())
        throw ArityError("variable map out of range in conversion");
      m.exps[var_map[i]] = t.mono.exps[i];
    }
    out.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(target, std::move(out));
}

}  // namespace hksig

#endif
