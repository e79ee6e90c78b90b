#ifndef HKSIG_CONFIG_HPP
#define HKSIG_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hksig/errors.hpp"

namespace hksig {

// One JSON document fully determines a run; equal configs (and seeds) give
// byte-identical artifacts.
struct JobConfig {
  std::uint32_t p = 2;
  std::vector<std::string> vars;
  std::vector<std::uint64_t> weights;  // empty = all 1
  std::vector<std::string> relations;
  std::vector<std::string> sop;
  std::string task = "hk";  // hk rsig csig fsig chain deform report
  unsigned e_max = 4;
  std::vector<std::string> ideal;  // hk only; empty = maximal ideal
  std::uint64_t max_subspaces = 100000;
  std::string output = "table";  // table csv json
  std::uint64_t seed = 0;
  bool cm_asserted = true;
  std::string parameter;                  // deform: the parameter to kill
  std::vector<std::string> sop_quotient;  // deform: parameters for R/xR
  std::uint64_t mult = 0;                 // report: multiplicity, user supplied
  std::string name;                       // ring label for artifacts
};

inline void validate_config(const JobConfig& cfg) {
  static const std::vector<std::string> tasks = {"hk",   "rsig",   "csig",  "fsig",
                                                 "chain", "deform", "report"};
  static const std::vector<std::string> outputs = {"table", "csv", "json"};
  bool ok = false;
  for (const auto& t : tasks) ok |= (t == cfg.task);
  if (!ok) throw ConfigError("unknown task '" + cfg.task + "'");
  ok = false;
  for (const auto& o : outputs) ok |= (o == cfg.output);
  if (!ok) throw ConfigError("unknown output format '" + cfg.output + "'");
  if (cfg.vars.empty()) throw ConfigError("config needs at least one variable");
  if (cfg.e_max == 0) throw ConfigError("e_max must be at least 1");
  if (cfg.max_subspaces == 0) throw ConfigError("max_subspaces must be at least 1");
  if (!cfg.weights.empty() && cfg.weights.size() != cfg.vars.size())
    throw ConfigError("weights must match the number of variables");
  for (auto w : cfg.weights)
    if (w == 0) throw ConfigError("weights must be positive");
  if (cfg.task == "deform" && cfg.parameter.empty())
    throw ConfigError("deform task needs a 'parameter' entry");
  if (cfg.task == "report" && cfg.mult == 0)
    throw ConfigError("report task needs a positive 'mult' entry");
}

inline JobConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  JobConfig cfg;
  try {
    cfg.p = j.at("p").get<std::uint32_t>();
    cfg.vars = j.at("vars").get<std::vector<std::string>>();
    if (j.contains("weights")) cfg.weights = j["weights"].get<std::vector<std::uint64_t>>();
    if (j.contains("relations"))
      cfg.relations = j["relations"].get<std::vector<std::string>>();
    if (j.contains("sop")) cfg.sop = j["sop"].get<std::vector<std::string>>();
    if (j.contains("task")) cfg.task = j["task"].get<std::string>();
    if (j.contains("e_max")) cfg.e_max = j["e_max"].get<unsigned>();
    if (j.contains("ideal")) cfg.ideal = j["ideal"].get<std::vector<std::string>>();
    if (j.contains("search") && j["search"].contains("max_subspaces"))
      cfg.max_subspaces = j["search"]["max_subspaces"].get<std::uint64_t>();
    if (j.contains("max_subspaces"))
      cfg.max_subspaces = j["max_subspaces"].get<std::uint64_t>();
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("cm_asserted")) cfg.cm_asserted = j["cm_asserted"].get<bool>();
    if (j.contains("parameter")) cfg.parameter = j["parameter"].get<std::string>();
    if (j.contains("sop_quotient"))
      cfg.sop_quotient = j["sop_quotient"].get<std::vector<std::string>>();
    if (j.contains("mult")) cfg.mult = j["mult"].get<std::uint64_t>();
    if (j.contains("name")) cfg.name = j["name"].get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("malformed config: ") + ex.what());
  }
  validate_config(cfg);
  return cfg;
}

inline JobConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("invalid JSON in ") + path + ": " + ex.what());
  }
  return config_from_json(j);
}

inline std::string default_ring_label(const JobConfig& cfg) {
  if (!cfg.name.empty()) return cfg.name;
  std::ostringstream os;
  os << "F" << cfg.p << "[";
  for (std::size_t i = 0; i < cfg.vars.size(); ++i) {
    if (i) os << ",";
    os << cfg.vars[i];
  }
  os << "]";
  if (!cfg.relations.empty()) {
    os << "/(";
    for (std::size_t i = 0; i < cfg.relations.size(); ++i) {
      if (i) os << ", ";
      os << cfg.relations[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace hksig

#endif
