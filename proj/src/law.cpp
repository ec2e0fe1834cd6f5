#include "wbck/law.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "wbck/order_profile.hpp"

namespace wbck {

LawParseError::LawParseError(int pos, const std::string& msg)
    : std::runtime_error("position " + std::to_string(pos) + ": " + msg), position(pos) {}

bool Law::uses_meet() const {
  return std::any_of(nodes.begin(), nodes.end(),
                     [](const TermNode& t) { return t.op == TermNode::Op::Meet; });
}

bool Law::uses_join() const {
  return std::any_of(nodes.begin(), nodes.end(),
                     [](const TermNode& t) { return t.op == TermNode::Op::Join; });
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Law parse() {
    std::vector<Atom> atoms;
    skip_ws();
    bool has_premises = false;
    if (!peek_keyword("exists")) {
      atoms.push_back(parse_atom());
      skip_ws();
      while (match(',')) {
        atoms.push_back(parse_atom());
        skip_ws();
      }
      if (match_arrow()) {
        has_premises = true;
      } else {
        skip_ws();
        if (pos_ != text_.size()) fail("expected ',', '=>' or end of law");
        if (atoms.size() != 1) fail("expected '=>' after premises");
      }
    } else {
      has_premises = false;
    }

    Clause clause;
    if (has_premises || atoms.empty()) {
      clause.premises = std::move(atoms);
      skip_ws();
      if (peek_keyword("exists")) {
        consume_keyword("exists");
        skip_ws();
        int at = static_cast<int>(pos_);
        char v = parse_var_char();
        if (universal_of_.count(v))
          throw LawParseError(at, std::string("unbound variable '") + v +
                                      "': existential variable occurs in a premise");
        exists_char_ = v;
        skip_ws();
        if (!match(':')) fail("expected ':' after the existential variable");
      }
      clause.conclusion = parse_atom();
      skip_ws();
      if (pos_ != text_.size()) fail("unexpected trailing content");
    } else {
      clause.conclusion = atoms[0];
    }

    return build(std::move(clause));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw LawParseError(static_cast<int>(pos_), msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool match(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool match_arrow() {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '=' && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return true;
    }
    return false;
  }

  bool peek_keyword(const std::string& kw) {
    skip_ws();
    if (text_.compare(pos_, kw.size(), kw) != 0) return false;
    size_t end = pos_ + kw.size();
    return end >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
  }

  void consume_keyword(const std::string& kw) { pos_ += kw.size(); }

  char parse_var_char() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] < 'a' || text_[pos_] > 'z')
      fail("expected a variable [a-z]");
    char c = text_[pos_];
    if (pos_ + 1 < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))
      fail("variables are single letters");
    ++pos_;
    return c;
  }

  int var_slot(char c) {
    if (c == exists_char_) return kExistsSlot;
    auto [it, inserted] = universal_of_.try_emplace(c, static_cast<int>(universal_order_.size()));
    if (inserted) universal_order_.push_back(c);
    return it->second;
  }

  int add_node(TermNode node) {
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int parse_operand() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a term");
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return add_node({TermNode::Op::Zero});
    }
    if (c == '(') {
      ++pos_;
      int inner = parse_term();
      if (!match(')')) fail("expected ')'");
      return inner;
    }
    if (c >= 'a' && c <= 'z') {
      int at = static_cast<int>(pos_);
      char v = parse_var_char();
      (void)at;
      TermNode node{TermNode::Op::Var};
      node.var = var_slot(v);
      return add_node(node);
    }
    fail("expected a term");
  }

  int parse_term() {
    int lhs = parse_operand();
    skip_ws();
    if (pos_ < text_.size() &&
        (text_[pos_] == '-' || text_[pos_] == '&' || text_[pos_] == '|')) {
      char op = text_[pos_++];
      int rhs = parse_operand();
      TermNode node;
      node.op = op == '-' ? TermNode::Op::Sub : op == '&' ? TermNode::Op::Meet : TermNode::Op::Join;
      node.lhs = lhs;
      node.rhs = rhs;
      // no precedence between operators: a second infix needs parentheses
      skip_ws();
      if (pos_ < text_.size() &&
          (text_[pos_] == '-' || text_[pos_] == '&' || text_[pos_] == '|'))
        fail("parentheses required: no precedence between infix operators");
      return add_node(node);
    }
    return lhs;
  }

  Atom parse_atom() {
    Atom atom;
    atom.lhs = parse_term();
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '<' && text_[pos_ + 1] == '=') {
      pos_ += 2;
      atom.rel = Atom::Rel::Leq;
    } else if (pos_ < text_.size() && text_[pos_] == '=' &&
               (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '>')) {
      ++pos_;
      atom.rel = Atom::Rel::Eq;
    } else {
      fail("expected '=' or '<='");
    }
    atom.rhs = parse_term();
    return atom;
  }

  // Universals are sorted by name; the law is easier to test when the
  // counterwitness order does not depend on the order of appearance.
  Law build(Clause clause) {
    Law law;
    law.name = "<user>";
    std::vector<char> sorted = universal_order_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> remap(universal_order_.size());
    for (size_t i = 0; i < universal_order_.size(); ++i) {
      auto at = std::find(sorted.begin(), sorted.end(), universal_order_[i]) - sorted.begin();
      remap[i] = static_cast<int>(at);
    }
    for (char c : sorted) law.vars.emplace_back(1, c);
    law.num_universals = static_cast<int>(sorted.size());
    if (exists_char_ != 0) {
      law.vars.emplace_back(1, exists_char_);
      clause.exists_var = law.num_universals;
    }
    for (TermNode& node : nodes_) {
      if (node.op == TermNode::Op::Var)
        node.var = node.var == kExistsSlot ? law.num_universals : remap[node.var];
    }
    law.nodes = std::move(nodes_);
    law.clauses.push_back(std::move(clause));
    return law;
  }

  static constexpr int kExistsSlot = -2;

  const std::string& text_;
  size_t pos_ = 0;
  std::vector<TermNode> nodes_;
  std::map<char, int> universal_of_;
  std::vector<char> universal_order_;
  char exists_char_ = 0;
};

std::string term_text(const Law& law, int node_id, bool parenthesize) {
  const TermNode& node = law.nodes[node_id];
  switch (node.op) {
    case TermNode::Op::Var:
      return law.vars[node.var];
    case TermNode::Op::Zero:
      return "0";
    default: {
      char op = node.op == TermNode::Op::Sub ? '-' : node.op == TermNode::Op::Meet ? '&' : '|';
      std::string s = term_text(law, node.lhs, true) + ' ' + op + ' ' +
                      term_text(law, node.rhs, true);
      return parenthesize ? "(" + s + ")" : s;
    }
  }
}

std::string atom_text(const Law& law, const Atom& atom) {
  return term_text(law, atom.lhs, false) + (atom.rel == Atom::Rel::Eq ? " = " : " <= ") +
         term_text(law, atom.rhs, false);
}

std::string clause_text(const Law& law, const Clause& clause) {
  std::string out;
  for (size_t i = 0; i < clause.premises.size(); ++i) {
    if (i) out += ", ";
    out += atom_text(law, clause.premises[i]);
  }
  if (!clause.premises.empty()) out += " => ";
  if (clause.exists_var >= 0) out += "exists " + law.vars[clause.exists_var] + ": ";
  out += atom_text(law, clause.conclusion);
  return out;
}

}  // namespace

Law parse_law(const std::string& text) { return Parser(text).parse(); }

std::string serialize_law(const Law& law) {
  std::string out;
  for (size_t i = 0; i < law.clauses.size(); ++i) {
    if (i) out += "; ";
    out += clause_text(law, law.clauses[i]);
  }
  return out;
}

Law make_law(const std::string& name, const std::vector<std::string>& clause_texts, bool guarded) {
  Law merged;
  merged.name = name;
  merged.guarded = guarded;
  std::map<std::string, int> slot_of;
  for (const auto& text : clause_texts) {
    Law one = parse_law(text);
    for (int v = 0; v < one.num_universals; ++v)
      slot_of.try_emplace(one.vars[v], 0);
    (void)one;
  }
  int next = 0;
  for (auto& [nm, slot] : slot_of) slot = next++;  // std::map iterates sorted
  merged.num_universals = next;
  merged.vars.resize(next);
  for (const auto& [nm, slot] : slot_of) merged.vars[slot] = nm;

  for (const auto& text : clause_texts) {
    Law one = parse_law(text);
    int offset = static_cast<int>(merged.nodes.size());
    std::vector<int> var_remap(one.vars.size());
    for (int v = 0; v < one.num_universals; ++v) var_remap[v] = slot_of.at(one.vars[v]);
    Clause clause = one.clauses[0];
    if (clause.exists_var >= 0) {
      var_remap[clause.exists_var] = static_cast<int>(merged.vars.size());
      merged.vars.push_back(one.vars[clause.exists_var]);
      clause.exists_var = var_remap[one.clauses[0].exists_var];
    }
    for (TermNode node : one.nodes) {
      if (node.op == TermNode::Op::Var) node.var = var_remap[node.var];
      if (node.lhs >= 0) node.lhs += offset;
      if (node.rhs >= 0) node.rhs += offset;
      merged.nodes.push_back(node);
    }
    auto shift = [&](Atom atom) {
      atom.lhs += offset;
      atom.rhs += offset;
      return atom;
    };
    for (Atom& p : clause.premises) p = shift(p);
    clause.conclusion = shift(clause.conclusion);
    merged.clauses.push_back(std::move(clause));
  }
  return merged;
}

namespace {

// Tri-state instance values: kUndef marks a missing meet/join.
constexpr Elem kUndef = -1;

struct EvalTables {
  const Elem* meet = nullptr;
  const Elem* join = nullptr;
};

Elem eval_term(const OpTable& a, const Law& law, int node_id, const std::vector<Elem>& asg,
               const EvalTables& tables) {
  const TermNode& node = law.nodes[node_id];
  switch (node.op) {
    case TermNode::Op::Var:
      return asg[node.var];
    case TermNode::Op::Zero:
      return 0;
    case TermNode::Op::Sub: {
      Elem l = eval_term(a, law, node.lhs, asg, tables);
      Elem r = eval_term(a, law, node.rhs, asg, tables);
      if (l == kUndef || r == kUndef) return kUndef;
      return a.minus(l, r);
    }
    case TermNode::Op::Meet:
    case TermNode::Op::Join: {
      Elem l = eval_term(a, law, node.lhs, asg, tables);
      Elem r = eval_term(a, law, node.rhs, asg, tables);
      if (l == kUndef || r == kUndef) return kUndef;
      const Elem* tbl = node.op == TermNode::Op::Meet ? tables.meet : tables.join;
      return tbl[static_cast<size_t>(l) * a.n + r];
    }
  }
  return kUndef;
}

// 1 true, 0 false, -1 undefined
int eval_atom(const OpTable& a, const Law& law, const Atom& atom, const std::vector<Elem>& asg,
              const EvalTables& tables) {
  Elem l = eval_term(a, law, atom.lhs, asg, tables);
  Elem r = eval_term(a, law, atom.rhs, asg, tables);
  if (l == kUndef || r == kUndef) return -1;
  if (atom.rel == Atom::Rel::Eq) return l == r ? 1 : 0;
  return a.minus(l, r) == 0 ? 1 : 0;  // s <= t desugars per the first axiom
}

// 1 satisfied, 0 violated, -1 skipped (guarded undefined)
int eval_clause(const OpTable& a, const Law& law, const Clause& clause,
                std::vector<Elem>& asg, const EvalTables& tables) {
  for (const Atom& p : clause.premises) {
    int v = eval_atom(a, law, p, asg, tables);
    if (v == 0) return 1;
    if (v == -1) return -1;
  }
  if (clause.exists_var >= 0) {
    bool any_undef = false;
    for (Elem z = 0; z < a.n; ++z) {
      asg[clause.exists_var] = z;
      int v = eval_atom(a, law, clause.conclusion, asg, tables);
      if (v == 1) return 1;
      if (v == -1) any_undef = true;
    }
    return any_undef ? -1 : 0;
  }
  int v = eval_atom(a, law, clause.conclusion, asg, tables);
  return v;
}

struct PreparedTables {
  std::vector<Elem> meet_tbl, join_tbl;
  EvalTables view() const { return {meet_tbl.data(), join_tbl.data()}; }
};

PreparedTables prepare_tables(const OpTable& a, const Law& law) {
  PreparedTables prep;
  if (!law.uses_meet() && !law.uses_join()) return prep;
  auto derived = derive_order(a);
  auto* order = std::get_if<DerivedOrder>(&derived);
  if (!order)
    throw NotMeetSemilattice("law '" + law.name +
                             "' uses meet/join but the induced relation is not a partial order");
  const int n = a.n;
  prep.meet_tbl.assign(static_cast<size_t>(n) * n, kUndef);
  prep.join_tbl.assign(static_cast<size_t>(n) * n, kUndef);
  bool all_meets = true;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (auto m = meet(*order, x, y))
        prep.meet_tbl[static_cast<size_t>(x) * n + y] = *m;
      else
        all_meets = false;
      if (auto j = join(*order, x, y)) prep.join_tbl[static_cast<size_t>(x) * n + y] = *j;
    }
  if (!law.guarded && law.uses_meet() && !all_meets)
    throw NotMeetSemilattice("law '" + law.name +
                             "' uses meet but the derived order is not a meet semilattice");
  return prep;
}

}  // namespace

Verdict eval_law(const OpTable& a, const Law& law) {
  PreparedTables prep = prepare_tables(a, law);
  EvalTables tables = prep.view();

  const int u = law.num_universals;
  std::vector<Elem> asg(law.vars.size(), 0);
  std::fill(asg.begin(), asg.begin() + u, 0);
  while (true) {
    for (size_t c = 0; c < law.clauses.size(); ++c) {
      int v = eval_clause(a, law, law.clauses[c], asg, tables);
      if (v == 0) {
        Bindings bindings;
        for (int i = 0; i < u; ++i) bindings.emplace_back(law.vars[i], asg[i]);
        return Verdict::fail(std::move(bindings), clause_text(law, law.clauses[c]));
      }
    }
    // odometer, rightmost universal fastest: lexicographic assignment order
    int i = u - 1;
    while (i >= 0 && asg[i] == a.n - 1) asg[i--] = 0;
    if (i < 0) break;
    ++asg[i];
  }
  return Verdict::pass();
}

bool violates_at(const OpTable& a, const Law& law, const Bindings& binding) {
  PreparedTables prep = prepare_tables(a, law);
  EvalTables tables = prep.view();
  std::vector<Elem> asg(law.vars.size(), 0);
  for (int i = 0; i < law.num_universals; ++i) {
    bool found = false;
    for (const auto& [name, value] : binding)
      if (name == law.vars[i]) {
        asg[i] = value;
        found = true;
      }
    if (!found) throw std::invalid_argument("missing binding for variable " + law.vars[i]);
  }
  for (const Clause& clause : law.clauses)
    if (eval_clause(a, law, clause, asg, tables) == 0) return true;
  return false;
}

}  // namespace wbck
