#ifndef HKSIG_RUN_HPP
#define HKSIG_RUN_HPP

#include <string>
#include <vector>

#include "hksig/config.hpp"
#include "hksig/corpus.hpp"
#include "hksig/invariants.hpp"
#include "hksig/report_io.hpp"

namespace hksig {

// Exit codes: 0 clean, 1 hard error (thrown upstream), 2 a check the run
// was asked to perform came out negative.
struct RunResult {
  int exit_code = 0;
  std::string table;
  std::string csv;
  Json json;
  std::vector<std::string> warnings;
};

namespace detail {

inline void attach_warnings(RunResult& res) {
  if (res.warnings.empty()) return;
  std::string head;
  for (const auto& w : res.warnings) head += "warning: " + w + "\n";
  res.table = head + res.table;
  res.json["warnings"] = res.warnings;
}

}  // namespace detail

inline RunResult run_job(const JobConfig& cfg) {
  validate_config(cfg);
  RunResult res;
  const std::string ring = default_ring_label(cfg);
  Presentation pres = make_presentation(cfg.p, cfg.vars, cfg.relations,
                                        MonomialOrder::grevlex(), cfg.weights,
                                        cfg.cm_asserted);
  SearchConfig search{cfg.max_subspaces, cfg.seed};

  auto sop_with_warnings = [&]() {
    std::vector<Polynomial> sop = parse_polynomials(pres.ring, cfg.sop);
    SopReport sr = validate_sop(pres, sop);
    if (!sr.ok()) throw NotSOP("not a system of parameters: " + sr.message);
    if (sr.probe_ran && !sr.cm_probe)
      res.warnings.push_back("Cohen-Macaulay probe failed: " + sr.message);
    OriginSupport origin = origin_support_check(pres, sop);
    if (!origin.homogeneous) res.warnings.push_back(origin.message);
    return sop;
  };

  if (cfg.task == "hk") {
    std::vector<Polynomial> gens = cfg.ideal.empty()
                                       ? detail::maximal_ideal(pres.ring)
                                       : parse_polynomials(pres.ring, cfg.ideal);
    OriginSupport origin = origin_support_check(pres, gens);
    if (!origin.homogeneous) res.warnings.push_back(origin.message);
    HKReport rep = hk_sequence(pres, gens, cfg.e_max);
    res.table = table_for_hk(rep, ring);
    std::string body;
    append_hk_csv(body, rep, ring);
    res.csv = csv_document(body);
    res.json = json_for_hk(rep, ring);
  } else if (cfg.task == "rsig" || cfg.task == "csig") {
    std::vector<Polynomial> sop = sop_with_warnings();
    SignatureReport rep = cfg.task == "rsig" ? rsig_estimate(pres, sop, cfg.e_max, search)
                                             : csig_estimate(pres, sop, cfg.e_max, search);
    res.table = table_for_signature(rep, ring);
    std::string body;
    append_signature_csv(body, rep, ring);
    res.csv = csv_document(body);
    res.json = json_for_signature(rep, ring);
  } else if (cfg.task == "fsig") {
    if (cfg.relations.size() != 1)
      throw ConfigError("fsig needs exactly one relation (the hypersurface equation)");
    SignatureReport rep = fsig_hypersurface(pres.ring, pres.relations[0], cfg.e_max);
    res.table = table_for_signature(rep, ring);
    std::string body;
    append_signature_csv(body, rep, ring);
    res.csv = csv_document(body);
    res.json = json_for_signature(rep, ring);
  } else if (cfg.task == "chain") {
    std::vector<Polynomial> sop = sop_with_warnings();
    ChainReport rep = chain_check(pres, sop, cfg.e_max, search);
    res.table = table_for_chain(rep, ring);
    std::string body;
    append_chain_csv(body, rep, ring);
    res.csv = csv_document(body);
    res.json = json_for_chain(rep, ring);
    res.exit_code = rep.pass ? 0 : 2;
  } else if (cfg.task == "deform") {
    std::vector<Polynomial> sop = sop_with_warnings();
    Polynomial x_param = parse_polynomial(pres.ring, cfg.parameter);
    std::vector<Polynomial> sop_quot = parse_polynomials(pres.ring, cfg.sop_quotient);
    DeformationReport rep =
        deformation_check(pres, x_param, sop, sop_quot, cfg.e_max, search);
    res.table = table_for_deform(rep, ring);
    std::string body;
    append_deform_csv(body, rep, ring);
    res.csv = csv_document(body);
    res.json = json_for_deform(rep, ring);
    res.exit_code = rep.pass ? 0 : 2;
  } else if (cfg.task == "report") {
    std::vector<Polynomial> sop = sop_with_warnings();
    SignatureReport csig = csig_estimate(pres, sop, cfg.e_max, search);
    if (!csig.minimum)
      throw ConfigError("csig search produced no candidates to classify");
    SingularityReport rep = singularity_report(*csig.minimum, cfg.mult,
                                               static_cast<unsigned>(pres.dim));
    res.table = table_for_singularity(rep, csig, ring);
    std::string body;
    append_signature_csv(body, csig, ring);
    res.csv = csv_document(body);
    res.json = json_for_singularity(rep, csig, ring);
  } else {
    throw ConfigError("unknown task '" + cfg.task + "'");
  }
  detail::attach_warnings(res);
  return res;
}

inline RunResult run_corpus(const std::vector<std::string>& names) {
  RunResult res;
  std::vector<CorpusEntryResult> entries;
  entries.reserve(names.size());
  bool all = true;
  for (const auto& n : names) {
    entries.push_back(run_corpus_entry(n));
    all &= entries.back().pass;
  }
  res.table = table_for_corpus(entries);
  res.csv = csv_for_corpus(entries);
  res.json = json_for_corpus(entries);
  res.exit_code = all ? 0 : 2;
  return res;
}

}  // namespace hksig

#endif
