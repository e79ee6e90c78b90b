#ifndef HKSIG_GROEBNER_HPP
#define HKSIG_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hksig/errors.hpp"
#include "hksig/monomial.hpp"
#include "hksig/polynomial.hpp"

namespace hksig {

inline constexpr std::uint64_t kDefaultCellGuard = 10'000'000;

// Full normal form of f modulo gens, scanning gens in the order given.
// Each step rewrites the highest reducible term by the first generator
// whose leading monomial divides it, so the result is deterministic for a
// fixed generator sequence. For a Groebner basis it is the unique normal
// form regardless of that sequence.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return f;
  const RingPtr& ring = f.ring();
  const PrimeField& field = ring->field;
  Polynomial work = f;
  Polynomial rem(ring);
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    bool reduced = false;
    for (const Polynomial& g : gens) {
      if (g.is_zero()) continue;
      const Term& gl = g.leading_term();
      if (!divides(gl.mono, lt.mono)) continue;
      std::uint32_t c = field.mul(lt.coeff, field.inv(gl.coeff));
      Monomial m = mono_div(lt.mono, gl.mono);
      work = poly_sub(work, poly_term_mul(g, c, m));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem = poly_add(rem, Polynomial(ring, {lt}));
      work = poly_sub(work, Polynomial(ring, {lt}));
    }
  }
  return rem;
}

// Quotient of f by a single divisor g, failing loudly if the division is
// not exact. Valid whenever f lies in the principal ideal (g): over a
// domain LT(h*g) = LT(h)*LT(g), so every leading term must step down.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const RingPtr& ring = f.ring();
  const PrimeField& field = ring->field;
  const Term& gl = g.leading_term();
  Polynomial work = f;
  std::vector<Term> quot;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    if (!divides(gl.mono, lt.mono))
      throw InternalError("exact division failed: leading term not divisible");
    std::uint32_t c = field.mul(lt.coeff, field.inv(gl.coeff));
    Monomial m = mono_div(lt.mono, gl.mono);
    work = poly_sub(work, poly_term_mul(g, c, m));
    quot.push_back({c, std::move(m)});
  }
  return Polynomial(ring, std::move(quot));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw InternalError("s-polynomial of zero");
  const PrimeField& field = f.ring()->field;
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  Monomial l = mono_lcm(lf.mono, lg.mono);
  Polynomial a = poly_term_mul(f, field.inv(lf.coeff), mono_div(l, lf.mono));
  Polynomial b = poly_term_mul(g, field.inv(lg.coeff), mono_div(l, lg.mono));
  return poly_sub(a, b);
}

// Reduced Groebner basis: monic, tails fully reduced, leading monomials
// pairwise non-dividing, sorted in decreasing order. Unique for an ideal
// and order, so independent of generator presentation.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> gens;

  Polynomial reduce(const Polynomial& f) const { return normal_form(f, gens); }
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool is_zero_ideal() const { return gens.empty(); }
  bool is_unit_ideal() const { return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.leading_monomial());
    return out;
  }
};

namespace detail {

// Pair queue ordered by the normal strategy: lcm degree, then the lcm in
// the ring's order, then the index pair. Total order, so the selection
// sequence is reproducible.
struct PairKey {
  std::uint64_t deg;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

inline void interreduce(std::vector<Polynomial>& basis) {
  // minimalize: drop elements whose leading monomial another one divides
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (divides(mj, mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) kept.push_back(basis[i]);
  }
  // tail-reduce each against the others
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    Polynomial r = normal_form(kept[i], others);
    if (!r.is_zero()) out.push_back(poly_monic(r));
  }
  basis = std::move(out);
}

}  // namespace detail

inline GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& input,
                                std::uint64_t max_reductions = 1'000'000) {
  std::vector<Polynomial> basis;
  for (const auto& f : input) {
    if (!f.ring() || !f.ring()->compatible(*ring))
      throw ArityError("generator lives in a different ring");
    if (!f.is_zero()) basis.push_back(poly_monic(f));
  }

  detail::PairLess less{ring->order};
  std::set<detail::PairKey, detail::PairLess> queue(less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial l = mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
    queue.insert({l.degree(), std::move(l), i, j});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  std::uint64_t reductions = 0;
  while (!queue.empty()) {
    detail::PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});

    const Monomial& mi = basis[pk.i].leading_monomial();
    const Monomial& mj = basis[pk.j].leading_monomial();
    // coprime leading monomials: S-polynomial reduces to zero
    if (mono_mul(mi, mj) == pk.lcm) continue;
    // chain criterion: some g_k divides the lcm and both side pairs are settled
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!divides(basis[k].leading_monomial(), pk.lcm)) continue;
      auto key_ik = std::minmax(pk.i, k);
      auto key_jk = std::minmax(pk.j, k);
      if (!pending.count({key_ik.first, key_ik.second}) &&
          !pending.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    if (++reductions > max_reductions)
      throw ResourceLimit("Groebner basis computation exceeded the reduction budget");
    Polynomial s = normal_form(s_polynomial(basis[pk.i], basis[pk.j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(poly_monic(s));
    std::size_t t = basis.size() - 1;
    for (std::size_t i = 0; i < t; ++i) push_pair(i, t);
  }

  detail::interreduce(basis);
  std::sort(basis.begin(), basis.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring->order.greater(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis{ring, std::move(basis)};
}

// Minimal generators of the leading-term ideal.
inline std::vector<Monomial> leading_ideal(const GroebnerBasis& gb) {
  return gb.leading_monomials();  // already minimal for a reduced basis
}

// Number of monomials outside the monomial ideal generated by lms.
// Returns nullopt when infinite (some variable has no pure power among the
// generators); enumeration is over the box cut out by the pure powers and
// refuses to scan more than cell_guard cells.
inline std::optional<std::uint64_t> count_standard_monomials(
    const std::vector<Monomial>& lms, std::size_t nvars,
    std::uint64_t cell_guard = kDefaultCellGuard) {
  for (const auto& m : lms)
    if (m.is_one()) return 0;  // unit ideal: nothing survives
  std::vector<std::uint64_t> box(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& m : lms) {
      if (m.exps[v] == 0) continue;
      bool pure = true;
      for (std::size_t w = 0; w < nvars && pure; ++w)
        if (w != v && m.exps[w] != 0) pure = false;
      if (pure && (box[v] == 0 || m.exps[v] < box[v])) box[v] = m.exps[v];
    }
    if (box[v] == 0) return std::nullopt;
  }
  std::uint64_t cells = 1;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (box[v] != 0 && cells > cell_guard / box[v])
      throw ResourceLimit("standard monomial enumeration exceeds the cell guard");
    cells *= box[v];
  }
  if (cells > cell_guard)
    throw ResourceLimit("standard monomial enumeration exceeds the cell guard");

  std::uint64_t count = 0;
  Monomial cur(nvars);
  while (true) {
    bool standard = true;
    for (const auto& m : lms)
      if (divides(m, cur)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    std::size_t v = 0;
    while (v < nvars) {
      if (++cur.exps[v] < box[v]) break;
      cur.exps[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  return count;
}

// The standard monomials themselves, sorted decreasing in `order`; the
// canonical coordinate basis for a zero-dimensional quotient. Throws
// NotZeroDimensional when the count is infinite.
inline std::vector<Monomial> standard_monomial_basis(
    const std::vector<Monomial>& lms, std::size_t nvars, const MonomialOrder& order,
    std::uint64_t cell_guard = kDefaultCellGuard) {
  auto n = count_standard_monomials(lms, nvars, cell_guard);
  if (!n) throw NotZeroDimensional("quotient is not finite dimensional");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(*n));
  if (*n == 0) return out;
  std::vector<std::uint64_t> box(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v)
    for (const auto& m : lms) {
      if (m.exps[v] == 0) continue;
      bool pure = true;
      for (std::size_t w = 0; w < nvars && pure; ++w)
        if (w != v && m.exps[w] != 0) pure = false;
      if (pure && (box[v] == 0 || m.exps[v] < box[v])) box[v] = m.exps[v];
    }
  Monomial cur(nvars);
  while (true) {
    bool standard = true;
    for (const auto& m : lms)
      if (divides(m, cur)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(cur);
    std::size_t v = 0;
    while (v < nvars) {
      if (++cur.exps[v] < box[v]) break;
      cur.exps[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  std::sort(out.begin(), out.end(),
            [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

// Krull dimension of R/(monomial ideal): the largest set of variables no
// generator is supported inside. -1 for the unit ideal (empty ring).
inline int krull_dimension(const std::vector<Monomial>& lms, std::size_t nvars) {
  if (nvars > 24) throw ResourceLimit("dimension search limited to 24 variables");
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    bool independent = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (std::size_t v = 0; v < nvars && inside; ++v)
        if (m.exps[v] != 0 && !(mask & (1u << v))) inside = false;
      if (inside) {  // generator lives on these variables
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
  }
  return best;
}

// Intersection with the subring that avoids the first `front` variables:
// Groebner basis under the block order, keeping the elements free of the
// front block. Output is re-expressed in the caller's ring and order.
inline std::vector<Polynomial> eliminate_front(const RingPtr& ring,
                                               const std::vector<Polynomial>& gens,
                                               std::size_t front) {
  if (front == 0 || front >= ring->nvars())
    throw Error("elimination block must be a proper prefix of the variables");
  RingPtr elim_ring = make_ring(ring->field.modulus(), ring->vars, MonomialOrder::block(front));
  std::vector<std::size_t> identity(ring->nvars());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(convert_to_ring(g, elim_ring, identity));
  GroebnerBasis gb = buchberger(elim_ring, moved);
  std::vector<Polynomial> out;
  for (const auto& g : gb.gens) {
    bool clean = true;
    for (const auto& t : g.terms())
      for (std::size_t v = 0; v < front && clean; ++v)
        if (t.mono.exps[v] != 0) clean = false;
    if (clean) out.push_back(convert_to_ring(g, ring, identity));
  }
  return out;
}

}  // namespace hksig

#endif
