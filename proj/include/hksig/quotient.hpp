#ifndef HKSIG_QUOTIENT_HPP
#define HKSIG_QUOTIENT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hksig/errors.hpp"
#include "hksig/groebner.hpp"
#include "hksig/linalg.hpp"
#include "hksig/monomial.hpp"
#include "hksig/parse.hpp"
#include "hksig/polynomial.hpp"

namespace hksig {

// A quotient R = F_p[vars]/(relations). Ideals of R are handled as ideals
// of the ambient ring containing the relations; every Groebner basis below
// lives in the ambient ring.
struct Presentation {
  RingPtr ring;
  std::vector<Polynomial> relations;
  GroebnerBasis rel_gb;
  int dim;  // Krull dimension of R
  std::vector<std::uint64_t> weights;
  bool cm_asserted = true;  // user assertion; probed, never proven

  std::uint32_t p() const { return ring->field.modulus(); }
};

inline Presentation present_quotient(RingPtr ring, std::vector<Polynomial> rels,
                                     std::vector<std::uint64_t> weights = {},
                                     bool cm_asserted = true) {
  GroebnerBasis gb = buchberger(ring, rels);
  if (gb.is_unit_ideal()) throw ConfigError("relations generate the unit ideal");
  int dim = krull_dimension(gb.leading_monomials(), ring->nvars());
  if (weights.empty()) weights.assign(ring->nvars(), 1);
  if (weights.size() != ring->nvars())
    throw ConfigError("weights must match the number of variables");
  return Presentation{std::move(ring), std::move(rels), std::move(gb),
                      dim,             std::move(weights), cm_asserted};
}

inline Presentation make_presentation(std::uint32_t p, std::vector<std::string> vars,
                                      const std::vector<std::string>& relation_texts,
                                      MonomialOrder order = MonomialOrder::grevlex(),
                                      std::vector<std::uint64_t> weights = {},
                                      bool cm_asserted = true) {
  RingPtr ring = make_ring(p, std::move(vars), order);
  std::vector<Polynomial> rels = parse_polynomials(ring, relation_texts);
  return present_quotient(std::move(ring), std::move(rels), std::move(weights), cm_asserted);
}

// Groebner basis of (relations + gens): the ideal gens generate in R,
// pulled back to the ambient ring.
inline GroebnerBasis ideal_in_quotient(const Presentation& pres,
                                       const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = pres.relations;
  all.insert(all.end(), gens.begin(), gens.end());
  return buchberger(pres.ring, all);
}

// Frobenius bracket power of the ideal gens generate in R: raise each
// generator to q = p^e and add the relations back. In characteristic p the
// result does not depend on the chosen lifts: (f + r)^q = f^q + r^q.
inline GroebnerBasis bracket_power(const Presentation& pres,
                                   const std::vector<Polynomial>& gens, unsigned e) {
  std::vector<Polynomial> all = pres.relations;
  for (const auto& g : gens) all.push_back(frobenius_power(g, e));
  return buchberger(pres.ring, all);
}

namespace detail {

inline RingPtr extend_with_aux(const RingPtr& ring) {
  std::string aux = "@t";
  for (bool clash = true; clash;) {
    clash = false;
    for (const auto& v : ring->vars)
      if (v == aux) {
        aux += "@";
        clash = true;
      }
  }
  std::vector<std::string> vars;
  vars.reserve(ring->nvars() + 1);
  vars.push_back(aux);
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  return make_ring(ring->field.modulus(), std::move(vars), MonomialOrder::block(1));
}

inline std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + by;
  return m;
}

}  // namespace detail

// Generators of A ∩ B via the auxiliary-variable trick: eliminate t from
// t*A + (1-t)*B.
inline std::vector<Polynomial> ideal_intersect(const RingPtr& ring,
                                               const std::vector<Polynomial>& a,
                                               const std::vector<Polynomial>& b) {
  RingPtr aux_ring = detail::extend_with_aux(ring);
  std::vector<std::size_t> up = detail::shift_map(ring->nvars(), 1);
  Polynomial t = poly_variable(aux_ring, 0);
  Polynomial one_minus_t = poly_sub(poly_constant(aux_ring, 1), t);
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(poly_mul(t, convert_to_ring(f, aux_ring, up)));
  for (const auto& f : b)
    gens.push_back(poly_mul(one_minus_t, convert_to_ring(f, aux_ring, up)));
  std::vector<Polynomial> cut = eliminate_front(aux_ring, gens, 1);
  std::vector<std::size_t> down(aux_ring->nvars(), 0);
  for (std::size_t i = 1; i < aux_ring->nvars(); ++i) down[i] = i - 1;
  std::vector<Polynomial> out;
  out.reserve(cut.size());
  for (const auto& f : cut) out.push_back(convert_to_ring(f, ring, down));
  return out;
}

// (J : f) for a single element: intersect J with (f) and divide out f.
// Division is exact because the ambient ring is a domain.
inline GroebnerBasis colon_element(const RingPtr& ring, const GroebnerBasis& j,
                                   const Polynomial& f) {
  if (f.is_zero())
    return buchberger(ring, {poly_constant(ring, 1)});  // (J : 0) is everything
  std::vector<Polynomial> meet = ideal_intersect(ring, j.gens, {f});
  std::vector<Polynomial> quot;
  quot.reserve(meet.size());
  for (const auto& h : meet) quot.push_back(divide_exact(h, f));
  return buchberger(ring, quot);
}

// (J : (f_1..f_k)) = ∩_i (J : f_i).
inline GroebnerBasis colon_ideal(const RingPtr& ring, const GroebnerBasis& j,
                                 const std::vector<Polynomial>& fs) {
  if (fs.empty()) return buchberger(ring, {poly_constant(ring, 1)});
  GroebnerBasis acc = colon_element(ring, j, fs[0]);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    GroebnerBasis next = colon_element(ring, j, fs[i]);
    acc = buchberger(ring, ideal_intersect(ring, acc.gens, next.gens));
  }
  return acc;
}

// Vector-space dimension of (ambient ring)/J, i.e. of R/(image of J) when J
// contains the relations. nullopt when infinite.
inline std::optional<std::uint64_t> colength(const GroebnerBasis& j,
                                             std::uint64_t cell_guard = kDefaultCellGuard) {
  return count_standard_monomials(j.leading_monomials(), j.ring->nvars(), cell_guard);
}

inline std::uint64_t finite_colength(const GroebnerBasis& j,
                                     std::uint64_t cell_guard = kDefaultCellGuard) {
  auto n = colength(j, cell_guard);
  if (!n) throw NotZeroDimensional("ideal is not zero dimensional");
  return *n;
}

// Coordinates of f modulo J in the standard monomial basis (descending).
inline std::vector<std::uint32_t> coordinates(const GroebnerBasis& j,
                                              const std::vector<Monomial>& basis,
                                              const Polynomial& f) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Polynomial nf = j.reduce(f);
  std::vector<std::uint32_t> v(basis.size(), 0);
  for (const auto& t : nf.terms()) {
    auto it = index.find(t.mono);
    if (it == index.end()) throw InternalError("normal form leaves the standard basis");
    v[it->second] = t.coeff;
  }
  return v;
}

inline Polynomial from_coordinates(const RingPtr& ring, const std::vector<Monomial>& basis,
                                   const std::vector<std::uint32_t>& v) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v[i] != 0) terms.push_back({v[i], basis[i]});
  return Polynomial(ring, std::move(terms));
}

// The socle (J : m)/J of a zero-dimensional quotient, as canonical rref
// vectors over the standard monomial basis plus polynomial lifts. Because
// every variable multiplies the colon ideal into J, the socle is spanned by
// the normal forms of the colon generators alone.
struct Socle {
  std::vector<Monomial> basis;  // standard monomials of ambient/J, descending
  FpMatrix vectors;             // rref rows: coordinates of a socle basis
  std::vector<Polynomial> reps; // polynomial lifts of the rows

  std::size_t dim() const { return vectors.size(); }
};

inline Socle socle_basis(const Presentation& pres, const GroebnerBasis& j) {
  const RingPtr& ring = pres.ring;
  std::vector<Monomial> basis =
      standard_monomial_basis(j.leading_monomials(), ring->nvars(), ring->order);
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(poly_variable(ring, i));
  GroebnerBasis col = colon_ideal(ring, j, vars);
  FpMatrix rows;
  for (const auto& g : col.gens) {
    std::vector<std::uint32_t> v = coordinates(j, basis, g);
    bool nonzero = false;
    for (auto c : v) nonzero |= (c != 0);
    if (nonzero) rows.push_back(std::move(v));
  }
  rref(rows, ring->field);
  Socle s;
  s.basis = std::move(basis);
  s.reps.reserve(rows.size());
  for (const auto& v : rows) s.reps.push_back(from_coordinates(ring, s.basis, v));
  s.vectors = std::move(rows);
  return s;
}

// Cohen-Macaulay type: socle dimension over the parameter ideal.
inline std::uint64_t cm_type(const Presentation& pres, const GroebnerBasis& sop_ideal) {
  return socle_basis(pres, sop_ideal).dim();
}

// Sanity checks for a candidate system of parameters x̲:
//  * the count must equal dim R,
//  * R/x̲R must be finite dimensional,
//  * a Cohen-Macaulay probe: l(R/x̲^{[p]}) == p^dim * l(R/x̲), which holds
//    whenever x̲ is a regular sequence. A failure flags rings where the
//    length normalization below would be biased.
struct SopReport {
  bool size_matches_dim = false;
  bool finite = false;
  bool probe_ran = false;
  bool cm_probe = true;
  int ring_dim = 0;
  std::uint64_t colength_1 = 0;  // l(R/x̲)
  std::uint64_t colength_p = 0;  // l(R/x̲^{[p]})
  std::string message;

  bool ok() const { return size_matches_dim && finite; }
};

inline SopReport validate_sop(const Presentation& pres, const std::vector<Polynomial>& sop) {
  SopReport rep;
  rep.ring_dim = pres.dim;
  rep.size_matches_dim = (sop.size() == static_cast<std::size_t>(pres.dim));
  if (!rep.size_matches_dim) {
    rep.message = "expected " + std::to_string(pres.dim) + " parameters, got " +
                  std::to_string(sop.size());
    return rep;
  }
  GroebnerBasis j1 = ideal_in_quotient(pres, sop);
  auto n1 = colength(j1);
  if (!n1) {
    rep.message = "parameters do not cut the ring down to dimension zero";
    return rep;
  }
  rep.finite = true;
  rep.colength_1 = *n1;
  if (pres.cm_asserted) {
    rep.probe_ran = true;
    GroebnerBasis jp = bracket_power(pres, sop, 1);
    rep.colength_p = finite_colength(jp);
    BigInt expected = int_pow(pres.p(), static_cast<unsigned>(pres.dim)) * BigInt(*n1);
    rep.cm_probe = (BigInt(rep.colength_p) == expected);
    if (!rep.cm_probe)
      rep.message = "length of the bracket power deviates from the Cohen-Macaulay prediction";
  }
  return rep;
}

// Weighted-homogeneity probe: a graded ideal is supported at the origin, so
// vector-space dimension and local length agree. Inhomogeneous input only
// warns; the caller decides what to do.
struct OriginSupport {
  bool homogeneous = true;
  std::string message;
};

inline OriginSupport origin_support_check(const Presentation& pres,
                                          const std::vector<Polynomial>& gens) {
  OriginSupport rep;
  auto check = [&](const Polynomial& f, const char* what) {
    if (f.is_zero() || f.size() == 1) return;
    std::uint64_t d0 = f.terms().front().mono.weighted_degree(pres.weights);
    for (const auto& t : f.terms())
      if (t.mono.weighted_degree(pres.weights) != d0) {
        rep.homogeneous = false;
        if (!rep.message.empty()) rep.message += "; ";
        rep.message += std::string(what) + " '" + to_string(f) +
                       "' is not homogeneous for the given weights";
        return;
      }
  };
  for (const auto& r : pres.relations) check(r, "relation");
  for (const auto& g : gens) check(g, "generator");
  return rep;
}

inline std::vector<Polynomial> require_sop(const Presentation& pres,
                                           const std::vector<std::string>& sop_texts) {
  std::vector<Polynomial> sop = parse_polynomials(pres.ring, sop_texts);
  SopReport rep = validate_sop(pres, sop);
  if (!rep.ok()) throw NotSOP("not a system of parameters: " + rep.message);
  return sop;
}

}  // namespace hksig

#endif
