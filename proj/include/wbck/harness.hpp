#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wbck/classify.hpp"
#include "wbck/op_table.hpp"
#include "wbck/order_profile.hpp"
#include "wbck/sections.hpp"

namespace wbck {

// Everything the theorem registry may quote about one algebra, computed once.
struct AlgebraFacts {
  OpTable table;
  OrderProfile oprofile;
  std::map<std::string, bool> law;  // catalog verdicts
  std::map<std::string, bool> basis;
  ClassReport report;
  bool all_sections_gstar = false;
  bool all_sections_m = false;
  bool all_sections_s = false;
  bool all_sections_o = false;
  bool all_sections_lattices = false;
  bool all_sections_de_morgan = false;
  bool all_sections_ortholattice = false;
  bool all_sections_orthomodular = false;
  bool strongly_bstar = false;
  bool ippo = false;
  bool ippo_prime = false;
  bool meet_formula = false;  // x - (x - y) is the meet, all pairs
};

AlgebraFacts compute_facts(const OpTable& a);

struct CaseResult {
  bool vacuous = false;  // hypothesis not satisfied
  bool pass = true;
  std::string detail;    // set on failure
};

struct TheoremCase {
  std::string id;         // "T1".."T23"
  std::string slug;
  std::string statement;
  std::string scope;      // "per-algebra" or "per-assignment"
  std::function<CaseResult(const AlgebraFacts&)> run;
};

const std::vector<TheoremCase>& registry();
const TheoremCase* find_theorem(const std::string& id_or_slug);

struct TheoremOutcome {
  std::string id;
  std::string slug;
  long long instances = 0;  // algebras satisfying the hypothesis
  long long vacuous = 0;
  std::vector<std::pair<OpTable, std::string>> counterexamples;
};

struct HarnessReport {
  int max_n = 0;
  long long algebras = 0;
  bool budget_exhausted = false;
  std::vector<TheoremOutcome> outcomes;

  bool ok() const;
};

// Checks every selected theorem against every wBCK-algebra of size <= max_n.
// An empty selection means all.
HarnessReport verify_all(int max_n, const std::vector<std::string>& selection = {});

nlohmann::ordered_json harness_json(const HarnessReport& report);

}  // namespace wbck
