#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbck/derived_order.hpp"
#include "wbck/op_table.hpp"
#include "wbck/verdict.hpp"

namespace wbck {

// Terms over the signature {-, 0} plus the order-defined partial operations
// meet (&) and join (|). Nodes live in a per-law pool and reference each
// other by index.
struct TermNode {
  enum class Op : std::uint8_t { Var, Zero, Sub, Meet, Join };
  Op op = Op::Zero;
  int var = -1;   // variable slot for Op::Var
  int lhs = -1;   // node ids for binary ops
  int rhs = -1;
};

struct Atom {
  enum class Rel : std::uint8_t { Eq, Leq };  // s <= t desugars to (s - t) = 0
  Rel rel = Rel::Eq;
  int lhs = -1;
  int rhs = -1;
};

// One quantified implication: premises => conclusion, with an optional
// existential on the conclusion. Variables reference the owning law's slots.
struct Clause {
  std::vector<Atom> premises;
  Atom conclusion;
  int exists_var = -1;  // slot of the existentially bound variable, -1 if none
};

// A (quasi-)identity, universally quantified over all named variables except
// per-clause existentials. A law holds iff every clause holds. Catalog
// entries that mirror "if and only if" conditions carry one clause per
// direction.
struct Law {
  std::string name;                // catalog key or "<user>"
  std::vector<std::string> vars;   // universals first (sorted), existentials appended
  int num_universals = 0;
  std::vector<TermNode> nodes;
  std::vector<Clause> clauses;
  // Guarded laws skip assignments where a meet/join subterm is undefined
  // (the condition's hypothesis presumes existence). Unguarded laws with
  // meet nodes require the algebra to be a meet semilattice.
  bool guarded = false;

  bool uses_meet() const;
  bool uses_join() const;
};

struct LawParseError : std::runtime_error {
  int position;  // 0-based offset into the law text
  LawParseError(int pos, const std::string& msg);
};

// Raised when a meet/join law is evaluated on an algebra whose derived order
// does not support it.
struct NotMeetSemilattice : std::runtime_error {
  explicit NotMeetSemilattice(const std::string& msg) : std::runtime_error(msg) {}
};

// Grammar (docs/formats.md): variables [a-z], constant 0, infix - & |,
// relations = and <=, premises joined by "," then "=>", optional
// "exists v:" prefix on the conclusion; parentheses mandatory for grouping.
Law parse_law(const std::string& text);

// Fully parenthesized round-trippable form; multi-clause laws join with "; ".
std::string serialize_law(const Law& law);

// Builds a named multi-clause law from clause texts.
Law make_law(const std::string& name, const std::vector<std::string>& clause_texts,
             bool guarded = false);

// Exhaustive evaluation over the carrier. Premises are a material
// antecedent; existentials range over the carrier. The counterwitness is the
// lexicographically least failing assignment of the universals (variables in
// sorted name order). Throws NotMeetSemilattice per the rules above.
Verdict eval_law(const OpTable& a, const Law& law);

// Replays one instance: true iff the binding satisfies every premise of some
// clause and falsifies that clause's conclusion.
bool violates_at(const OpTable& a, const Law& law, const Bindings& binding);

}  // namespace wbck
