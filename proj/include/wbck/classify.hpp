#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wbck/op_table.hpp"
#include "wbck/verdict.hpp"

namespace wbck {

enum class Tri { no, yes, not_applicable };

// One independently evaluated equivalence from the structure theory. A
// disagreement is critical: either a workbench bug or a refuted theorem.
struct Agreement {
  std::string pair;
  bool agreed = true;
  std::vector<std::string> witness;  // empty when agreed
};

struct ClassReport {
  Tri wbck = Tri::no;
  Tri qbck = Tri::no;
  Tri bck = Tri::no;
  Tri commutative = Tri::no;
  Tri positive_implicative = Tri::no;
  Tri contraction_rule = Tri::no;
  Tri orthoimplicative = Tri::no;
  Tri semi_implicative = Tri::no;
  Tri implicative = Tri::no;
  Tri uniform = Tri::no;  // not_applicable on non-commutative algebras
  Tri discrete = Tri::no;
  std::vector<Agreement> agreements;

  bool all_agreed() const;
};

struct NotWbck : std::runtime_error {
  Counterwitness why;
  NotWbck(Counterwitness why_, const std::string& msg);
};

// Full class membership; throws NotWbck when validation fails.
ClassReport classify(const OpTable& a);

// The cross-characterization agreements alone (also embedded in classify).
std::vector<Agreement> cross_validate(const OpTable& a);

// Stable-key-order JSON report: classes, agreements, sections.
nlohmann::ordered_json report_json(const OpTable& a, const ClassReport& r);

const char* to_string(Tri t);

}  // namespace wbck
