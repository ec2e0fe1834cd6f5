#include "wbck/catalog.hpp"

namespace wbck {

namespace {

LawCatalog build_catalog() {
  LawCatalog c;
  auto add = [&](const std::string& name, const std::vector<std::string>& clauses,
                 bool guarded = false) { c.emplace(name, make_law(name, clauses, guarded)); };

  // order and subtraction
  add("salg", {"x <= y => (x - y) = 0", "(x - y) = 0 => x <= y"});
  add("sgalois", {"(x - y) <= z => (x - z) <= y"});
  add("mdi2", {"(x - (x - y)) <= y"});
  add("manti", {"x <= y => (z - y) <= (z - x)"});
  add("mtri", {"(x - (x - (x - y))) = (x - y)"});
  add("xx0", {"(x - x) = 0"});
  add("xyx", {"(x - y) <= x"});
  add("mdi1", {"(x - (x - y)) <= x"});
  add("x0x", {"(x - 0) = x"});
  add("0x0", {"(0 - x) = 0"});
  add("x.0yx", {"(x - (0 - y)) = x"});

  // the BCK gap
  add("mAnti", {"((z - y) - (z - x)) <= (x - y)"});
  add("miso", {"x <= y => (x - z) <= (y - z)"});
  add("exch", {"((x - y) - z) = ((x - z) - y)"});

  // contraction, distributivity, Pierce
  add("mcontr", {"((x - y) - y) = (x - y)"});
  add("mcontr_rule", {"(x - y) <= y => x <= y"});
  add("mdistr", {"((x - z) - (y - z)) = ((x - y) - z)"});
  add("pierce", {"(x - (y - x)) = x"});
  add("pierce_rule", {"x <= (y - x) => x = 0"});
  add("wm0", {"(x & (y - x)) = 0"}, /*guarded=*/true);

  // commutativity
  add("mcommut", {"(x - (x - y)) = (y - (y - x))"});
  add("midem", {"x <= y => x <= (y - (y - x))"});
  add("leq_iff_residual", {"x <= y => (y - (y - x)) = x", "(y - (y - x)) = x => x <= y"});
  add("leq_iff_exists", {"x <= y => exists z: x = (y - z)", "x = (y - z) => x <= y"});
  add("c2", {"((z - y) - (z - (y - (y - x)))) = 0"});
  add("pw", {"(x - ((x - y) - x)) = x"});

  // isotonicity relatives and joins
  add("miso_pp", {"((y - (y - x)) - z) <= (y - z)"});
  add("miso_p", {"((y - u) - z) <= (y - z)"});
  add("join_minus", {"((x | y) - x) <= y"}, /*guarded=*/true);

  // uniformity
  add("ippo_back", {"x <= p, p <= q => (p - x) = (p - (p - (q - x)))"});
  add("compm", {"x <= p, p <= q => (p - (q - x)) = x"});
  add("contr_full", {"z <= y => ((x - z) - y) = (x - y)"});
  add("abb", {"((x - (y - z)) - y) = (x - y)"});
  add("ippo_half", {"x <= p, p <= q => (p - x) <= (q - x)"});
  add("compm_half", {"x <= p, p <= q => (p - (q - x)) <= x"});
  add("contr_half", {"z <= y => ((x - z) - y) <= (x - y)"});
  add("abb_half", {"((x - (y - z)) - y) <= (x - y)"});

  // semilattice-ordered algebras
  add("meet_semilattice", {"((x & y) - x) = 0", "(z - y) <= (z - (x & y))"});

  return c;
}

std::map<std::string, std::vector<std::string>> build_bases() {
  return {
      {"COMM4", {"xx0", "x0x", "mcommut", "c2"}},
      {"COMM3a", {"mcommut", "c2", "x.0yx"}},
      {"COMM3b", {"mcommut", "c2", "pw"}},
      {"OI3", {"pierce", "mcommut", "c2"}},
      {"IMPL4", {"xx0", "pierce", "mcommut", "abb"}},
  };
}

}  // namespace

const LawCatalog& builtin_laws() {
  static const LawCatalog catalog = build_catalog();
  return catalog;
}

const Law* find_law(const std::string& name) {
  const auto& catalog = builtin_laws();
  auto it = catalog.find(name);
  return it == catalog.end() ? nullptr : &it->second;
}

const std::map<std::string, std::vector<std::string>>& builtin_bases() {
  static const std::map<std::string, std::vector<std::string>> bases = build_bases();
  return bases;
}

Verdict check_basis(const OpTable& a, const std::string& basis) {
  const auto& bases = builtin_bases();
  auto it = bases.find(basis);
  if (it == bases.end()) throw UnknownBasis(basis);
  for (const std::string& name : it->second) {
    const Law* law = find_law(name);
    Verdict v = eval_law(a, *law);
    if (!v.holds) {
      v.counterwitness->violated = name + ": " + v.counterwitness->violated;
      return v;
    }
  }
  return Verdict::pass();
}

}  // namespace wbck
