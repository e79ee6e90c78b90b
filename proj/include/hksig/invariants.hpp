#ifndef HKSIG_INVARIANTS_HPP
#define HKSIG_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hksig/errors.hpp"
#include "hksig/linalg.hpp"
#include "hksig/quotient.hpp"
#include "hksig/rational.hpp"

namespace hksig {

inline constexpr const char* kModelNote =
    "two-point fit value = s + c/q through the last two rows; the reported "
    "limit s carries no rigorous error bound at finite e";

// Fit v = s + c/q through the last two entries (q scales by p per step) and
// return s. One row: that row. No rows: nothing to report.
inline std::optional<Rational> two_point_limit(const std::vector<Rational>& vals,
                                               std::uint32_t p) {
  if (vals.empty()) return std::nullopt;
  if (vals.size() == 1) return vals.back();
  const Rational& prev = vals[vals.size() - 2];
  const Rational& last = vals.back();
  return (Rational(p) * last - prev) / Rational(p - 1);
}

inline Rational extrapolation_residual(const std::vector<Rational>& vals,
                                       const std::optional<Rational>& limit) {
  if (!limit || vals.empty()) return Rational(0);
  return rational_abs(vals.back() - *limit);
}

// ---- Hilbert-Kunz sequences ----------------------------------------------

struct HKRow {
  unsigned e = 0;
  BigInt q;
  std::uint64_t length = 0;
  Rational normalized;
};

struct HKReport {
  std::string ideal_desc;
  int dim = 0;
  std::vector<HKRow> rows;
  std::optional<Rational> extrapolated;
  std::string model_note = kModelNote;
  bool truncated = false;
  std::string truncation_reason;
};

namespace detail {

inline BigInt q_to_dim(std::uint32_t p, unsigned e, int dim) {
  return int_pow(p, e * static_cast<unsigned>(dim < 0 ? 0 : dim));
}

inline std::string describe_ideal(const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += to_string(gens[i]);
  }
  return s + ")";
}

inline std::vector<Polynomial> maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  vars.reserve(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(poly_variable(ring, i));
  return vars;
}

}  // namespace detail

inline HKReport hk_sequence(const Presentation& pres, const std::vector<Polynomial>& ideal_gens,
                            unsigned e_max) {
  if (e_max == 0) throw ConfigError("e_max must be at least 1");
  HKReport rep;
  rep.dim = pres.dim;
  rep.ideal_desc = detail::describe_ideal(ideal_gens);
  {
    GroebnerBasis base = ideal_in_quotient(pres, ideal_gens);
    if (!colength(base)) throw NotZeroDimensional("ideal does not have finite colength");
  }
  std::vector<Rational> vals;
  for (unsigned e = 1; e <= e_max; ++e) {
    try {
      GroebnerBasis gb = bracket_power(pres, ideal_gens, e);
      std::uint64_t len = finite_colength(gb);
      BigInt qd = detail::q_to_dim(pres.p(), e, pres.dim);
      HKRow row{e, int_pow(pres.p(), e), len, Rational(BigInt(len), qd)};
      vals.push_back(row.normalized);
      rep.rows.push_back(std::move(row));
    } catch (const ResourceLimit& ex) {
      rep.truncated = true;
      rep.truncation_reason = ex.what();
      break;
    }
  }
  rep.extrapolated = two_point_limit(vals, pres.p());
  return rep;
}

// ---- relative Hilbert-Kunz ------------------------------------------------

struct RelativeHKRow {
  unsigned e = 0;
  BigInt q;
  std::uint64_t inner_length = 0;  // l(R/x̲^{[q]})
  std::uint64_t outer_length = 0;  // l(R/I^{[q]})
  Rational value;                  // (inner - outer)/q^dim
};

struct RelativeHKReport {
  std::string ideal_desc;
  int dim = 0;
  std::vector<RelativeHKRow> rows;
  std::optional<Rational> extrapolated;
  std::string model_note = kModelNote;
  bool truncated = false;
  std::string truncation_reason;
};

inline RelativeHKReport relative_hk(const Presentation& pres,
                                    const std::vector<Polynomial>& sop,
                                    const std::vector<Polynomial>& ideal_gens,
                                    unsigned e_max) {
  if (e_max == 0) throw ConfigError("e_max must be at least 1");
  GroebnerBasis outer = ideal_in_quotient(pres, ideal_gens);
  for (const auto& x : sop)
    if (!outer.contains(x))
      throw NotNested("parameter " + to_string(x) + " is not contained in the ideal");
  if (!colength(outer)) throw NotZeroDimensional("ideal does not have finite colength");

  RelativeHKReport rep;
  rep.dim = pres.dim;
  rep.ideal_desc = detail::describe_ideal(ideal_gens);
  std::vector<Rational> vals;
  for (unsigned e = 1; e <= e_max; ++e) {
    try {
      std::uint64_t li = finite_colength(bracket_power(pres, sop, e));
      std::uint64_t lo = finite_colength(bracket_power(pres, ideal_gens, e));
      if (lo > li) throw InternalError("relative Hilbert-Kunz difference went negative");
      BigInt qd = detail::q_to_dim(pres.p(), e, pres.dim);
      RelativeHKRow row{e, int_pow(pres.p(), e), li, lo, Rational(BigInt(li - lo), qd)};
      vals.push_back(row.value);
      rep.rows.push_back(std::move(row));
    } catch (const ResourceLimit& ex) {
      rep.truncated = true;
      rep.truncation_reason = ex.what();
      break;
    }
  }
  rep.extrapolated = two_point_limit(vals, pres.p());
  return rep;
}

// ---- signature reports ------------------------------------------------------

struct SearchConfig {
  std::uint64_t max_subspaces = 100000;
  std::uint64_t seed = 0;
};

struct CandidateRow {
  unsigned e = 0;
  BigInt q;
  std::uint64_t length = 0;  // l(R/I_candidate^{[q]})
  Rational value;
};

struct SignatureCandidate {
  std::string description;
  std::vector<CandidateRow> rows;
  std::optional<Rational> extrapolated;
};

struct SignatureReport {
  std::string kind;  // "rsig", "csig" or "fsig"
  std::vector<SignatureCandidate> candidates;  // sorted by description
  std::optional<Rational> minimum;             // least extrapolated value
  std::vector<std::string> minimum_candidates;
  std::vector<Rational> per_e_minimum;  // index i = value at e = i+1
  bool search_complete = true;
  std::string bound_flag = "exhaustive";  // or "sampled-upper-bound"
  std::string model_note = kModelNote;
  bool truncated = false;
  std::string truncation_reason;

  Rational residual() const {
    Rational r(0);
    for (const auto& c : candidates) {
      if (!c.extrapolated || c.rows.empty()) continue;
      Rational d = rational_abs(c.rows.back().value - *c.extrapolated);
      if (d > r) r = d;
    }
    return r;
  }
};

namespace detail {

// Evaluate candidate ideals x̲ + (gens) against the parameter lengths and
// assemble the sorted report. `denom` scales the per-e normalization (the
// length drop for csig, 1 for rsig).
struct CandidateSpec {
  std::string description;
  std::vector<Polynomial> extra_gens;
  std::uint64_t denom = 1;
};

inline SignatureReport evaluate_candidates(const Presentation& pres,
                                           const std::vector<Polynomial>& sop,
                                           std::vector<CandidateSpec> specs,
                                           const std::vector<std::uint64_t>& sop_lengths,
                                           unsigned e_max, std::string kind) {
  SignatureReport rep;
  rep.kind = std::move(kind);
  std::sort(specs.begin(), specs.end(),
            [](const CandidateSpec& a, const CandidateSpec& b) {
              return a.description < b.description;
            });
  for (auto& spec : specs) {
    SignatureCandidate cand;
    cand.description = spec.description;
    std::vector<Polynomial> gens = sop;
    gens.insert(gens.end(), spec.extra_gens.begin(), spec.extra_gens.end());
    std::vector<Rational> vals;
    for (unsigned e = 1; e <= e_max && e <= sop_lengths.size(); ++e) {
      std::uint64_t li = sop_lengths[e - 1];
      std::uint64_t lo;
      try {
        lo = finite_colength(bracket_power(pres, gens, e));
      } catch (const ResourceLimit& ex) {
        rep.truncated = true;
        rep.truncation_reason = ex.what();
        break;
      }
      if (lo > li) throw InternalError("candidate ideal increased the colength");
      BigInt qd = q_to_dim(pres.p(), e, pres.dim) * BigInt(spec.denom);
      CandidateRow row{e, int_pow(pres.p(), e), lo, Rational(BigInt(li - lo), qd)};
      vals.push_back(row.value);
      cand.rows.push_back(std::move(row));
    }
    cand.extrapolated = two_point_limit(vals, pres.p());
    rep.candidates.push_back(std::move(cand));
  }
  for (const auto& c : rep.candidates) {
    if (!c.extrapolated) continue;
    if (!rep.minimum || *c.extrapolated < *rep.minimum) rep.minimum = c.extrapolated;
  }
  for (const auto& c : rep.candidates)
    if (c.extrapolated && rep.minimum && *c.extrapolated == *rep.minimum)
      rep.minimum_candidates.push_back(c.description);
  for (unsigned e = 1; e <= e_max; ++e) {
    std::optional<Rational> m;
    for (const auto& c : rep.candidates)
      if (c.rows.size() >= e && (!m || c.rows[e - 1].value < *m)) m = c.rows[e - 1].value;
    if (!m) break;
    rep.per_e_minimum.push_back(*m);
  }
  return rep;
}

inline std::vector<std::uint64_t> sop_bracket_lengths(const Presentation& pres,
                                                      const std::vector<Polynomial>& sop,
                                                      unsigned e_max) {
  std::vector<std::uint64_t> out;
  for (unsigned e = 1; e <= e_max; ++e)
    out.push_back(finite_colength(bracket_power(pres, sop, e)));
  return out;
}

inline Polynomial combine(const RingPtr& ring, const Socle& socle,
                          const std::vector<std::uint32_t>& coeffs) {
  Polynomial u(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) u = poly_add(u, poly_scalar_mul(socle.reps[i], coeffs[i]));
  return u;
}

inline std::string subspace_description(const RingPtr& ring, const Socle& socle,
                                        const FpMatrix& rows) {
  std::string s = "<";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += ", ";
    s += to_string(combine(ring, socle, rows[r]));
  }
  return s + ">";
}

}  // namespace detail

// Candidates: nonzero socle elements u up to scalar; value per e is the
// relative Hilbert-Kunz difference of x̲ and (x̲, u). The minimum over the
// candidates is a certified upper bound for the infimum over all u.
inline SignatureReport rsig_estimate(const Presentation& pres,
                                     const std::vector<Polynomial>& sop, unsigned e_max,
                                     const SearchConfig& search = {}) {
  if (e_max == 0) throw ConfigError("e_max must be at least 1");
  const RingPtr& ring = pres.ring;
  Socle socle = socle_basis(pres, ideal_in_quotient(pres, sop));
  std::size_t k = socle.dim();
  std::vector<std::uint64_t> lx = detail::sop_bracket_lengths(pres, sop, e_max);

  std::vector<detail::CandidateSpec> specs;
  BigInt total = k == 0 ? BigInt(0)
                        : (int_pow(pres.p(), static_cast<unsigned>(k)) - 1) / (pres.p() - 1);
  bool exhaustive = total <= BigInt(search.max_subspaces);
  std::set<std::vector<std::uint32_t>> seen;
  auto add = [&](const std::vector<std::uint32_t>& v) {
    if (!seen.insert(v).second) return;
    Polynomial u = detail::combine(ring, socle, v);
    specs.push_back({to_string(u), {u}, 1});
  };
  if (exhaustive) {
    for_each_ray(k, pres.p(), [&](const std::vector<std::uint32_t>& v) {
      add(v);
      return true;
    });
  } else {
    for (std::size_t i = 0; i < k && specs.size() < search.max_subspaces; ++i) {
      std::vector<std::uint32_t> v(k, 0);
      v[i] = 1;
      add(v);
    }
    std::mt19937_64 rng(search.seed);
    std::uniform_int_distribution<std::uint32_t> coef(0, pres.p() - 1);
    while (specs.size() < search.max_subspaces) {
      std::vector<std::uint32_t> v(k, 0);
      bool nonzero = false;
      for (auto& c : v) nonzero |= ((c = coef(rng)) != 0);
      if (!nonzero) continue;
      std::size_t lead = 0;
      while (v[lead] == 0) ++lead;
      std::uint32_t s = pres.ring->field.inv(v[lead]);
      for (auto& c : v) c = pres.ring->field.mul(c, s);  // projective normal form
      add(v);
    }
  }
  SignatureReport rep =
      detail::evaluate_candidates(pres, sop, std::move(specs), lx, e_max, "rsig");
  rep.search_complete = exhaustive;
  rep.bound_flag = exhaustive ? "exhaustive" : "sampled-upper-bound";
  return rep;
}

// Candidates: nonzero F_p-subspaces V of the socle; the ideal is
// I_V = x̲ + (basis of V) and the per-e value is normalized by dim V, which
// equals the colength drop l(R/x̲) - l(R/I_V). Exhaustive below the cap,
// otherwise dimension-1 + full-socle + seeded random subspaces.
inline SignatureReport csig_estimate(const Presentation& pres,
                                     const std::vector<Polynomial>& sop, unsigned e_max,
                                     const SearchConfig& search = {}) {
  if (e_max == 0) throw ConfigError("e_max must be at least 1");
  const RingPtr& ring = pres.ring;
  Socle socle = socle_basis(pres, ideal_in_quotient(pres, sop));
  std::size_t k = socle.dim();
  std::vector<std::uint64_t> lx = detail::sop_bracket_lengths(pres, sop, e_max);

  BigInt total = 0;
  for (std::size_t j = 1; j <= k; ++j) total += subspace_count(k, j, pres.p());
  bool exhaustive = total <= BigInt(search.max_subspaces);

  std::vector<detail::CandidateSpec> specs;
  std::set<FpMatrix> seen;
  auto add = [&](const FpMatrix& rows) {
    if (!seen.insert(rows).second) return;
    std::vector<Polynomial> gens;
    gens.reserve(rows.size());
    for (const auto& v : rows) gens.push_back(detail::combine(ring, socle, v));
    specs.push_back({detail::subspace_description(ring, socle, rows), std::move(gens),
                     rows.size()});
  };
  if (exhaustive) {
    for_each_subspace(k, pres.p(), [&](const FpMatrix& rows) {
      add(rows);
      return true;
    });
  } else {
    for_each_ray(k, pres.p(), [&](const std::vector<std::uint32_t>& v) {
      add(FpMatrix{v});
      return specs.size() < search.max_subspaces;
    });
    if (k > 0 && specs.size() < search.max_subspaces) {
      FpMatrix full(k, std::vector<std::uint32_t>(k, 0));
      for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
      add(full);
    }
    std::mt19937_64 rng(search.seed);
    std::uniform_int_distribution<std::uint32_t> coef(0, pres.p() - 1);
    std::uniform_int_distribution<std::size_t> dim_pick(1, k == 0 ? 1 : k);
    while (k > 0 && specs.size() < search.max_subspaces) {
      std::size_t j = dim_pick(rng);
      FpMatrix rows(j, std::vector<std::uint32_t>(k, 0));
      for (auto& row : rows)
        for (auto& c : row) c = coef(rng);
      if (rref(rows, pres.ring->field) == 0) continue;
      add(rows);
    }
  }
  SignatureReport rep =
      detail::evaluate_candidates(pres, sop, std::move(specs), lx, e_max, "csig");
  rep.search_complete = exhaustive;
  rep.bound_flag = exhaustive ? "exhaustive" : "sampled-upper-bound";
  return rep;
}

// Hypersurface F-signature: for R = S/(f) the e-th free rank is
// a_e = l(S/((m^{[q]} : f^{q-1}) + (f))), normalized by q^(n-1). The power
// f^{q-1} is accumulated as a product of Frobenius twists of f^{p-1}.
inline SignatureReport fsig_hypersurface(const RingPtr& ring, const Polynomial& f,
                                         unsigned e_max) {
  if (e_max == 0) throw ConfigError("e_max must be at least 1");
  if (f.is_zero() || f.is_constant())
    throw ConfigError("hypersurface equation must be a nonconstant polynomial");
  const std::uint32_t p = ring->field.modulus();
  const unsigned dim = static_cast<unsigned>(ring->nvars()) - 1;

  SignatureReport rep;
  rep.kind = "fsig";
  SignatureCandidate cand;
  cand.description = to_string(f);
  std::vector<Rational> vals;
  Polynomial fp1 = poly_pow(f, p - 1);
  Polynomial power = poly_constant(ring, 1);  // f^{q-1} so far
  for (unsigned e = 1; e <= e_max; ++e) {
    try {
      power = poly_mul(power, frobenius_power(fp1, e - 1));
      std::vector<Polynomial> mq;
      for (std::size_t i = 0; i < ring->nvars(); ++i)
        mq.push_back(frobenius_power(poly_variable(ring, i), e));
      GroebnerBasis mq_gb = buchberger(ring, mq);
      GroebnerBasis col = colon_element(ring, mq_gb, power);
      std::vector<Polynomial> gens = col.gens;
      gens.push_back(f);
      std::uint64_t a_e = finite_colength(buchberger(ring, gens));
      BigInt qd = int_pow(p, e * dim);
      CandidateRow row{e, int_pow(p, e), a_e, Rational(BigInt(a_e), qd)};
      vals.push_back(row.value);
      cand.rows.push_back(std::move(row));
    } catch (const ResourceLimit& ex) {
      rep.truncated = true;
      rep.truncation_reason = ex.what();
      break;
    }
  }
  cand.extrapolated = two_point_limit(vals, p);
  rep.minimum = cand.extrapolated;
  rep.minimum_candidates.push_back(cand.description);
  for (const auto& row : cand.rows) rep.per_e_minimum.push_back(row.value);
  rep.candidates.push_back(std::move(cand));
  return rep;
}

// ---- chain, thresholds, deformation ---------------------------------------

struct ChainReport {
  SignatureReport rsig;
  SignatureReport csig;
  std::optional<SignatureReport> fsig;  // present for hypersurfaces
  std::uint64_t type = 0;
  std::optional<Rational> dsig_lower_bound;  // rsig minimum / type
  bool per_e_ok = true;
  bool gorenstein = false;
  std::optional<bool> gorenstein_coincidence;  // |csig - fsig| within tolerance
  Rational coincidence_tolerance = Rational(1, 10);
  std::vector<std::string> findings;
  bool pass = true;
};

inline ChainReport chain_check(const Presentation& pres, const std::vector<Polynomial>& sop,
                               unsigned e_max, const SearchConfig& search = {}) {
  ChainReport rep;
  rep.rsig = rsig_estimate(pres, sop, e_max, search);
  rep.csig = csig_estimate(pres, sop, e_max, search);
  rep.type = socle_basis(pres, ideal_in_quotient(pres, sop)).dim();
  rep.gorenstein = (rep.type == 1);

  std::size_t n = std::min(rep.rsig.per_e_minimum.size(), rep.csig.per_e_minimum.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (rep.csig.per_e_minimum[i] > rep.rsig.per_e_minimum[i]) {
      rep.per_e_ok = false;
      rep.findings.push_back("e=" + std::to_string(i + 1) +
                             ": csig minimum exceeds rsig minimum");
    }
  }
  if (rep.rsig.minimum && rep.csig.minimum && *rep.csig.minimum > *rep.rsig.minimum) {
    rep.per_e_ok = false;
    rep.findings.push_back("extrapolated csig minimum exceeds rsig minimum");
  }
  if (rep.rsig.minimum && rep.type > 0)
    rep.dsig_lower_bound = *rep.rsig.minimum / Rational(rep.type);

  if (pres.relations.size() == 1) {
    rep.fsig = fsig_hypersurface(pres.ring, pres.relations[0], e_max);
    if (rep.gorenstein && rep.fsig->minimum && rep.csig.minimum) {
      Rational gap = rational_abs(*rep.csig.minimum - *rep.fsig->minimum);
      rep.gorenstein_coincidence = (gap <= rep.coincidence_tolerance);
      if (!*rep.gorenstein_coincidence)
        rep.findings.push_back("Gorenstein hypersurface: csig and fsig estimates disagree");
    }
  }
  rep.pass = rep.per_e_ok &&
             (!rep.gorenstein_coincidence || *rep.gorenstein_coincidence);
  return rep;
}

struct SingularityReport {
  Rational csig_estimate;
  std::uint64_t mult = 1;
  unsigned dim = 0;
  bool regular = false;
  bool weakly_f_regular = false;
  bool gorenstein_f_regular = false;
  std::optional<Rational> weak_threshold;
  std::optional<Rational> gorenstein_threshold;
  std::vector<std::string> notes;
};

// Threshold flags from a finite-e, finite-search csig surrogate; every flag
// is heuristic because the true invariant is an infimum we only bound.
inline SingularityReport singularity_report(const Rational& csig_est, std::uint64_t mult,
                                            unsigned dim) {
  if (mult == 0) throw ConfigError("multiplicity must be positive");
  SingularityReport rep;
  rep.csig_estimate = csig_est;
  rep.mult = mult;
  rep.dim = dim;
  rep.regular = (csig_est == Rational(1));
  if (mult == 1) {
    if (!rep.regular)
      rep.notes.push_back(
          "inconsistent input: multiplicity 1 forces a regular ring, but the "
          "csig estimate is below 1");
    rep.weakly_f_regular = rep.regular;
    rep.gorenstein_f_regular = rep.regular;
  } else {
    Rational inv_mult(BigInt(1), BigInt(mult));
    Rational inv_fact(BigInt(1), factorial(dim));
    Rational weak = Rational(1) - std::max(inv_fact, inv_mult) / Rational(mult - 1);
    Rational gor = Rational(1) - Rational(BigInt(1), BigInt(mult - 1) * BigInt(mult - 1));
    rep.weak_threshold = weak;
    rep.gorenstein_threshold = gor;
    rep.weakly_f_regular = (csig_est >= weak);
    rep.gorenstein_f_regular = (csig_est >= gor);
  }
  rep.notes.push_back(
      "flags are heuristic: the estimate is a finite-e, finite-search upper "
      "bound for the true infimum");
  return rep;
}

struct DeformationReport {
  SignatureReport ring_csig;
  SignatureReport quotient_csig;
  std::string parameter;
  Rational tolerance;
  bool pass = false;
};

// Checks that the csig estimate can only drop when passing from R to R/xR
// for a parameter x. The tolerance absorbs extrapolation error: the larger
// last-row-to-limit residual of the two reports.
inline DeformationReport deformation_check(const Presentation& pres,
                                           const Polynomial& x_param,
                                           const std::vector<Polynomial>& sop_ring,
                                           const std::vector<Polynomial>& sop_quotient,
                                           unsigned e_max, const SearchConfig& search = {}) {
  bool in_sop = false;
  for (const auto& x : sop_ring) in_sop |= (x == x_param);
  if (!in_sop) throw NotSOP("the deformation parameter must be one of the parameters");
  SopReport ring_sop = validate_sop(pres, sop_ring);
  if (!ring_sop.ok()) throw NotSOP("ring parameters rejected: " + ring_sop.message);

  std::vector<Polynomial> qrels = pres.relations;
  qrels.push_back(x_param);
  Presentation quot = present_quotient(pres.ring, qrels, pres.weights, pres.cm_asserted);
  if (quot.dim != pres.dim - 1)
    throw NotSOP("quotient by the parameter did not drop the dimension by one");
  SopReport quot_sop = validate_sop(quot, sop_quotient);
  if (!quot_sop.ok()) throw NotSOP("quotient parameters rejected: " + quot_sop.message);

  DeformationReport rep;
  rep.parameter = to_string(x_param);
  rep.ring_csig = csig_estimate(pres, sop_ring, e_max, search);
  rep.quotient_csig = csig_estimate(quot, sop_quotient, e_max, search);
  rep.tolerance = std::max(rep.ring_csig.residual(), rep.quotient_csig.residual());
  if (rep.ring_csig.minimum && rep.quotient_csig.minimum)
    rep.pass = (*rep.ring_csig.minimum >= *rep.quotient_csig.minimum - rep.tolerance);
  return rep;
}

}  // namespace hksig

#endif
