#ifndef HKSIG_REPORT_IO_HPP
#define HKSIG_REPORT_IO_HPP

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hksig/invariants.hpp"
#include "hksig/rational.hpp"

namespace hksig {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCsvHeader =
    "task,ring,e,q,candidate,length_num,length_den,value_num,value_den";

// ---- CSV -------------------------------------------------------------------

inline std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

namespace detail {

inline void csv_row(std::string& out, const std::string& task, const std::string& ring,
                    unsigned e, const BigInt& q, const std::string& candidate,
                    const BigInt& len_num, const BigInt& len_den, const Rational& value) {
  out += csv_escape(task);
  out += ',';
  out += csv_escape(ring);
  out += ',';
  out += std::to_string(e);
  out += ',';
  out += q.str();
  out += ',';
  out += csv_escape(candidate);
  out += ',';
  out += len_num.str();
  out += ',';
  out += len_den.str();
  out += ',';
  out += numerator(value).str();
  out += ',';
  out += denominator(value).str();
  out += '\n';
}

}  // namespace detail

inline void append_hk_csv(std::string& out, const HKReport& rep, const std::string& ring,
                          const std::string& task = "hk") {
  for (const auto& row : rep.rows)
    detail::csv_row(out, task, ring, row.e, row.q, rep.ideal_desc, BigInt(row.length),
                    BigInt(1), row.normalized);
}

inline void append_relative_csv(std::string& out, const RelativeHKReport& rep,
                                const std::string& ring) {
  for (const auto& row : rep.rows)
    detail::csv_row(out, "relative", ring, row.e, row.q, rep.ideal_desc,
                    BigInt(row.outer_length), BigInt(1), row.value);
}

inline void append_signature_csv(std::string& out, const SignatureReport& rep,
                                 const std::string& ring) {
  for (const auto& cand : rep.candidates)
    for (const auto& row : cand.rows)
      detail::csv_row(out, rep.kind, ring, row.e, row.q, cand.description,
                      BigInt(row.length), BigInt(1), row.value);
}

inline void append_chain_csv(std::string& out, const ChainReport& rep,
                             const std::string& ring) {
  append_signature_csv(out, rep.rsig, ring);
  append_signature_csv(out, rep.csig, ring);
  if (rep.fsig) append_signature_csv(out, *rep.fsig, ring);
}

inline void append_deform_csv(std::string& out, const DeformationReport& rep,
                              const std::string& ring) {
  append_signature_csv(out, rep.ring_csig, ring);
  append_signature_csv(out, rep.quotient_csig, ring + " mod (" + rep.parameter + ")");
}

inline std::string csv_document(const std::string& body) {
  return std::string(kCsvHeader) + "\n" + body;
}

// ---- JSON ------------------------------------------------------------------

namespace detail {

inline void put_rational(Json& obj, const std::string& key, const Rational& r) {
  obj[key] = rational_string(r);
  obj[key + "_decimal"] = rational_decimal(r);
}

inline void put_optional_rational(Json& obj, const std::string& key,
                                  const std::optional<Rational>& r) {
  if (r) {
    put_rational(obj, key, *r);
  } else {
    obj[key] = nullptr;
    obj[key + "_decimal"] = nullptr;
  }
}

}  // namespace detail

inline Json json_for_hk(const HKReport& rep, const std::string& ring,
                        const std::string& task = "hk") {
  Json j;
  j["task"] = task;
  j["ring"] = ring;
  j["ideal"] = rep.ideal_desc;
  j["dim"] = rep.dim;
  j["rows"] = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["e"] = row.e;
    r["q"] = row.q.str();
    r["length"] = row.length;
    detail::put_rational(r, "normalized", row.normalized);
    j["rows"].push_back(std::move(r));
  }
  detail::put_optional_rational(j, "extrapolated", rep.extrapolated);
  j["model_note"] = rep.model_note;
  j["truncated"] = rep.truncated;
  if (rep.truncated) j["truncation_reason"] = rep.truncation_reason;
  return j;
}

inline Json json_for_relative(const RelativeHKReport& rep, const std::string& ring) {
  Json j;
  j["task"] = "relative";
  j["ring"] = ring;
  j["ideal"] = rep.ideal_desc;
  j["dim"] = rep.dim;
  j["rows"] = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["e"] = row.e;
    r["q"] = row.q.str();
    r["inner_length"] = row.inner_length;
    r["outer_length"] = row.outer_length;
    detail::put_rational(r, "value", row.value);
    j["rows"].push_back(std::move(r));
  }
  detail::put_optional_rational(j, "extrapolated", rep.extrapolated);
  j["model_note"] = rep.model_note;
  j["truncated"] = rep.truncated;
  if (rep.truncated) j["truncation_reason"] = rep.truncation_reason;
  return j;
}

inline Json json_for_signature(const SignatureReport& rep, const std::string& ring) {
  Json j;
  j["task"] = rep.kind;
  j["ring"] = ring;
  j["candidates"] = Json::array();
  for (const auto& cand : rep.candidates) {
    Json c;
    c["candidate"] = cand.description;
    c["rows"] = Json::array();
    for (const auto& row : cand.rows) {
      Json r;
      r["e"] = row.e;
      r["q"] = row.q.str();
      r["length"] = row.length;
      detail::put_rational(r, "value", row.value);
      c["rows"].push_back(std::move(r));
    }
    detail::put_optional_rational(c, "extrapolated", cand.extrapolated);
    j["candidates"].push_back(std::move(c));
  }
  detail::put_optional_rational(j, "minimum", rep.minimum);
  j["minimum_candidates"] = rep.minimum_candidates;
  j["per_e_minimum"] = Json::array();
  for (const auto& v : rep.per_e_minimum) j["per_e_minimum"].push_back(rational_string(v));
  j["search_complete"] = rep.search_complete;
  j["bound_flag"] = rep.bound_flag;
  j["model_note"] = rep.model_note;
  j["truncated"] = rep.truncated;
  if (rep.truncated) j["truncation_reason"] = rep.truncation_reason;
  return j;
}

inline Json json_for_chain(const ChainReport& rep, const std::string& ring) {
  Json j;
  j["task"] = "chain";
  j["ring"] = ring;
  j["rsig"] = json_for_signature(rep.rsig, ring);
  j["csig"] = json_for_signature(rep.csig, ring);
  if (rep.fsig) j["fsig"] = json_for_signature(*rep.fsig, ring);
  j["type"] = rep.type;
  detail::put_optional_rational(j, "dsig_lower_bound", rep.dsig_lower_bound);
  j["per_e_ok"] = rep.per_e_ok;
  j["gorenstein"] = rep.gorenstein;
  if (rep.gorenstein_coincidence) {
    j["gorenstein_coincidence"] = *rep.gorenstein_coincidence;
    detail::put_rational(j, "coincidence_tolerance", rep.coincidence_tolerance);
  }
  j["findings"] = rep.findings;
  j["pass"] = rep.pass;
  return j;
}

inline Json json_for_deform(const DeformationReport& rep, const std::string& ring) {
  Json j;
  j["task"] = "deform";
  j["ring"] = ring;
  j["parameter"] = rep.parameter;
  j["ring_csig"] = json_for_signature(rep.ring_csig, ring);
  j["quotient_csig"] =
      json_for_signature(rep.quotient_csig, ring + " mod (" + rep.parameter + ")");
  detail::put_rational(j, "tolerance", rep.tolerance);
  j["pass"] = rep.pass;
  return j;
}

inline Json json_for_singularity(const SingularityReport& rep, const SignatureReport& csig,
                                 const std::string& ring) {
  Json j;
  j["task"] = "report";
  j["ring"] = ring;
  detail::put_rational(j, "csig_estimate", rep.csig_estimate);
  j["mult"] = rep.mult;
  j["dim"] = rep.dim;
  j["regular"] = rep.regular;
  j["weakly_f_regular"] = rep.weakly_f_regular;
  j["gorenstein_f_regular"] = rep.gorenstein_f_regular;
  detail::put_optional_rational(j, "weak_threshold", rep.weak_threshold);
  detail::put_optional_rational(j, "gorenstein_threshold", rep.gorenstein_threshold);
  j["notes"] = rep.notes;
  j["csig"] = json_for_signature(csig, ring);
  return j;
}

// ---- plain-text tables -------------------------------------------------------

namespace detail {

inline std::string fmt_rational(const Rational& r) {
  return rational_string(r) + " (~" + rational_decimal(r) + ")";
}

inline std::string fmt_optional(const std::optional<Rational>& r) {
  return r ? fmt_rational(*r) : std::string("n/a");
}

}  // namespace detail

inline std::string table_for_hk(const HKReport& rep, const std::string& ring,
                                const std::string& task = "hk") {
  std::ostringstream os;
  os << "task: " << task << "\nring: " << ring << "\nideal: " << rep.ideal_desc
     << "\ndim: " << rep.dim << "\n";
  os << std::setw(4) << "e" << std::setw(10) << "q" << std::setw(12) << "length"
     << "  normalized\n";
  for (const auto& row : rep.rows)
    os << std::setw(4) << row.e << std::setw(10) << row.q.str() << std::setw(12)
       << row.length << "  " << detail::fmt_rational(row.normalized) << "\n";
  os << "extrapolated: " << detail::fmt_optional(rep.extrapolated) << "\n";
  if (rep.truncated) os << "truncated: " << rep.truncation_reason << "\n";
  os << "note: " << rep.model_note << "\n";
  return os.str();
}

inline std::string table_for_relative(const RelativeHKReport& rep, const std::string& ring) {
  std::ostringstream os;
  os << "task: relative\nring: " << ring << "\nideal: " << rep.ideal_desc
     << "\ndim: " << rep.dim << "\n";
  os << std::setw(4) << "e" << std::setw(10) << "q" << std::setw(12) << "l(param)"
     << std::setw(12) << "l(ideal)" << "  value\n";
  for (const auto& row : rep.rows)
    os << std::setw(4) << row.e << std::setw(10) << row.q.str() << std::setw(12)
       << row.inner_length << std::setw(12) << row.outer_length << "  "
       << detail::fmt_rational(row.value) << "\n";
  os << "extrapolated: " << detail::fmt_optional(rep.extrapolated) << "\n";
  if (rep.truncated) os << "truncated: " << rep.truncation_reason << "\n";
  return os.str();
}

inline std::string table_for_signature(const SignatureReport& rep, const std::string& ring) {
  std::ostringstream os;
  os << "task: " << rep.kind << "\nring: " << ring << "\ncandidates: "
     << rep.candidates.size() << " (" << rep.bound_flag
     << (rep.search_complete ? ", search complete" : ", search truncated") << ")\n";
  for (const auto& cand : rep.candidates) {
    os << "candidate " << cand.description << "\n";
    for (const auto& row : cand.rows)
      os << std::setw(4) << row.e << std::setw(10) << row.q.str() << std::setw(12)
         << row.length << "  " << detail::fmt_rational(row.value) << "\n";
    os << "  extrapolated: " << detail::fmt_optional(cand.extrapolated) << "\n";
  }
  os << "minimum: " << detail::fmt_optional(rep.minimum);
  if (!rep.minimum_candidates.empty()) {
    os << " attained by:";
    for (const auto& d : rep.minimum_candidates) os << " " << d;
  }
  os << "\nper-e minimum:";
  for (const auto& v : rep.per_e_minimum) os << " " << rational_string(v);
  os << "\n";
  if (rep.truncated) os << "truncated: " << rep.truncation_reason << "\n";
  os << "note: " << rep.model_note << "\n";
  return os.str();
}

inline std::string table_for_chain(const ChainReport& rep, const std::string& ring) {
  std::ostringstream os;
  os << "task: chain\nring: " << ring << "\n\n";
  os << table_for_signature(rep.rsig, ring) << "\n";
  os << table_for_signature(rep.csig, ring) << "\n";
  if (rep.fsig) os << table_for_signature(*rep.fsig, ring) << "\n";
  os << "type: " << rep.type << "\n";
  os << "dsig lower bound (rsig/type): " << detail::fmt_optional(rep.dsig_lower_bound)
     << "\n";
  os << "per-e csig<=rsig: " << (rep.per_e_ok ? "ok" : "VIOLATED") << "\n";
  if (rep.gorenstein_coincidence)
    os << "Gorenstein csig~fsig within " << rational_string(rep.coincidence_tolerance)
       << ": " << (*rep.gorenstein_coincidence ? "ok" : "VIOLATED") << "\n";
  for (const auto& f : rep.findings) os << "finding: " << f << "\n";
  os << "chain: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline std::string table_for_deform(const DeformationReport& rep, const std::string& ring) {
  std::ostringstream os;
  os << "task: deform\nring: " << ring << "\nparameter: " << rep.parameter << "\n\n";
  os << table_for_signature(rep.ring_csig, ring) << "\n";
  os << table_for_signature(rep.quotient_csig, ring + " mod (" + rep.parameter + ")")
     << "\n";
  os << "tolerance: " << detail::fmt_rational(rep.tolerance) << "\n";
  os << "deformation csig(R) >= csig(R/x): " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline std::string table_for_singularity(const SingularityReport& rep,
                                         const SignatureReport& csig,
                                         const std::string& ring) {
  std::ostringstream os;
  os << "task: report\nring: " << ring << "\n\n";
  os << table_for_signature(csig, ring) << "\n";
  os << "csig estimate: " << detail::fmt_rational(rep.csig_estimate) << "\n";
  os << "multiplicity: " << rep.mult << ", dim: " << rep.dim << "\n";
  os << "regular: " << (rep.regular ? "yes" : "no") << "\n";
  os << "weakly F-regular flag: " << (rep.weakly_f_regular ? "yes" : "no")
     << " (threshold " << detail::fmt_optional(rep.weak_threshold) << ")\n";
  os << "Gorenstein F-regular flag: " << (rep.gorenstein_f_regular ? "yes" : "no")
     << " (threshold " << detail::fmt_optional(rep.gorenstein_threshold) << ")\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace hksig

#endif
