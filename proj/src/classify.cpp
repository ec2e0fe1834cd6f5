#include "wbck/classify.hpp"

#include <nlohmann/json.hpp>

#include "wbck/catalog.hpp"
#include "wbck/derived_order.hpp"
#include "wbck/order_profile.hpp"
#include "wbck/sections.hpp"
#include "wbck/validate.hpp"

namespace wbck {

namespace {

Tri tri(bool b) { return b ? Tri::yes : Tri::no; }

struct SectionSummary {
  bool all_m = true, all_s = true, all_o = true;
  bool all_orthomodular_lattices = true;
};

SectionSummary summarize(const std::vector<SectionProfile>& profiles) {
  SectionSummary s;
  for (const auto& p : profiles) {
    s.all_m &= p.m;
    s.all_s &= p.s;
    s.all_o &= p.o;
    s.all_orthomodular_lattices &= p.kind.is_lattice && p.kind.orthomodular;
  }
  return s;
}

void add_agreement(std::vector<Agreement>& out, const std::string& pair, bool left, bool right,
                   const std::string& left_desc, const std::string& right_desc) {
  Agreement agr;
  agr.pair = pair;
  agr.agreed = left == right;
  if (!agr.agreed) {
    agr.witness.push_back(left_desc + "=" + (left ? "true" : "false"));
    agr.witness.push_back(right_desc + "=" + (right ? "true" : "false"));
  }
  out.push_back(std::move(agr));
}

}  // namespace

NotWbck::NotWbck(Counterwitness why_, const std::string& msg)
    : std::runtime_error(msg), why(std::move(why_)) {}

bool ClassReport::all_agreed() const {
  for (const auto& a : agreements)
    if (!a.agreed) return false;
  return true;
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    case Tri::not_applicable: return "n/a";
  }
  return "?";
}

std::vector<Agreement> cross_validate(const OpTable& a) {
  auto law = [&](const char* name) { return eval_law(a, *find_law(name)).holds; };
  auto basis = [&](const char* name) { return check_basis(a, name).holds; };
  auto profiles = section_profiles(a);
  SectionSummary sec = summarize(profiles);
  bool strongly_bstar = is_strongly_sectionally_bstar(a).holds;
  bool ippo = check_ippo(a).holds;
  bool ippo_prime = check_ippo_prime(a).holds;

  bool commutative = law("mcommut");
  bool pierce = law("pierce");
  bool implicative = law("compm");

  std::vector<Agreement> out;
  add_agreement(out, "commutative<->sectionally_m", commutative, sec.all_m, "mcommut",
                "all_sections_m");
  add_agreement(out, "orthoimplicative<->sectionally_s", pierce, sec.all_s, "pierce",
                "all_sections_s");
  add_agreement(out, "sectionally_s<->sectionally_o", sec.all_s, sec.all_o, "all_sections_s",
                "all_sections_o");
  add_agreement(out, "contraction_rule<->strongly_sectionally_bstar", law("mcontr_rule"),
                strongly_bstar, "mcontr_rule", "strongly_sectionally_bstar");
  add_agreement(out, "implicative<->sectionally_m+ippo", implicative, sec.all_m && ippo, "compm",
                "all_sections_m&ippo");
  add_agreement(out, "implicative<->sectionally_s+ippo_prime", implicative,
                sec.all_s && ippo_prime, "compm", "all_sections_s&ippo_prime");
  for (const char* half : {"ippo_half", "compm_half", "contr_half", "abb_half"})
    add_agreement(out, std::string("implicative<->orthoimplicative+") + half, implicative,
                  pierce && law(half), "compm", std::string("pierce&") + half);
  add_agreement(out, "commutative<->COMM4", commutative, basis("COMM4"), "mcommut", "COMM4");
  add_agreement(out, "commutative<->COMM3a", commutative, basis("COMM3a"), "mcommut", "COMM3a");
  add_agreement(out, "commutative<->COMM3b", commutative, basis("COMM3b"), "mcommut", "COMM3b");
  add_agreement(out, "orthoimplicative<->OI3", pierce, basis("OI3"), "pierce", "OI3");
  add_agreement(out, "implicative<->IMPL4", implicative, basis("IMPL4"), "compm", "IMPL4");
  add_agreement(out, "pierce<->commutative+positive_implicative", pierce,
                commutative && law("mcontr"), "pierce", "mcommut&mcontr");
  return out;
}

ClassReport classify(const OpTable& a) {
  Verdict valid = validate_wbck(a);
  if (!valid.holds)
    throw NotWbck(*valid.counterwitness,
                  "not a wBCK-algebra: " + describe(*valid.counterwitness, a.names));

  auto law = [&](const char* name) { return eval_law(a, *find_law(name)).holds; };
  ClassReport r;
  r.wbck = Tri::yes;
  r.qbck = tri(law("miso"));
  r.bck = tri(law("mAnti"));
  r.commutative = tri(law("mcommut"));
  r.positive_implicative = tri(law("mcontr"));
  r.contraction_rule = tri(law("mcontr_rule"));
  r.orthoimplicative = tri(law("pierce"));
  r.implicative = tri(law("compm"));
  r.uniform = r.commutative == Tri::yes ? tri(law("abb")) : Tri::not_applicable;

  auto profiles = section_profiles(a);
  r.semi_implicative = tri(summarize(profiles).all_orthomodular_lattices);

  DerivedOrder order = derive_order_checked(a);
  r.discrete = tri(a.sub == discrete_wbck(order, a.names).sub);

  r.agreements = cross_validate(a);
  return r;
}

nlohmann::ordered_json report_json(const OpTable& a, const ClassReport& r) {
  using json = nlohmann::ordered_json;
  auto tri_json = [](Tri t) {
    return t == Tri::not_applicable ? json("n/a") : json(t == Tri::yes);
  };
  json classes;
  classes["wbck"] = tri_json(r.wbck);
  classes["qbck"] = tri_json(r.qbck);
  classes["bck"] = tri_json(r.bck);
  classes["commutative"] = tri_json(r.commutative);
  classes["positive_implicative"] = tri_json(r.positive_implicative);
  classes["contraction_rule"] = tri_json(r.contraction_rule);
  classes["orthoimplicative"] = tri_json(r.orthoimplicative);
  classes["semi_implicative"] = tri_json(r.semi_implicative);
  classes["implicative"] = tri_json(r.implicative);
  classes["uniform"] = tri_json(r.uniform);
  classes["discrete"] = tri_json(r.discrete);

  json agreements = json::array();
  for (const auto& agr : r.agreements) {
    json j;
    j["pair"] = agr.pair;
    j["agreed"] = agr.agreed;
    j["witness"] = agr.witness;
    agreements.push_back(std::move(j));
  }

  json sections = json::array();
  for (const auto& p : section_profiles(a)) {
    json j;
    j["top"] = a.names[p.top];
    json members = json::array();
    for (Elem m : p.members) members.push_back(a.names[m]);
    j["members"] = std::move(members);
    json comp;
    for (Elem m : p.members) comp[a.names[m]] = a.names[p.comp[m]];
    j["comp"] = std::move(comp);
    j["flags"] = {{"gstar", p.gstar}, {"s", p.s}, {"bstar", p.bstar}, {"m", p.m}, {"o", p.o}};
    j["lattice"] = {{"is_lattice", p.kind.is_lattice},
                    {"de_morgan", p.kind.de_morgan},
                    {"ortholattice", p.kind.ortholattice},
                    {"orthomodular", p.kind.orthomodular},
                    {"boolean", p.kind.boolean}};
    sections.push_back(std::move(j));
  }

  json out;
  out["classes"] = std::move(classes);
  out["agreements"] = std::move(agreements);
  out["sections"] = std::move(sections);
  return out;
}

}  // namespace wbck
