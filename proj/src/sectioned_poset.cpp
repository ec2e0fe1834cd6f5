#include "wbck/sectioned_poset.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "wbck/validate.hpp"

namespace wbck {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

GstarViolation::GstarViolation(Elem p_, Elem x_, const std::string& msg)
    : std::runtime_error(msg), p(p_), x(x_) {}

SectionedPoset parse_sectioned_poset(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<std::pair<int, std::string>> lines;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    size_t i = raw.find_first_not_of(" \t");
    if (i == std::string::npos || raw[i] == '#') continue;
    lines.emplace_back(lineno, raw);
  }
  size_t at = 0;
  auto next = [&]() -> const std::pair<int, std::string>* {
    return at < lines.size() ? &lines[at++] : nullptr;
  };

  auto* header = next();
  if (!header || split_ws(header->second) != std::vector<std::string>{"wbck-sections", "v1"})
    throw ParseError(header ? header->first : 1, "malformed header, expected 'wbck-sections v1'");

  auto* elements = next();
  if (!elements) throw ParseError(lineno, "missing 'elements:' line");
  auto toks = split_ws(elements->second);
  if (toks.empty() || toks[0] != "elements:")
    throw ParseError(elements->first, "expected 'elements:' line");
  toks.erase(toks.begin());
  if (toks.empty()) throw ParseError(elements->first, "no elements listed");

  SectionedPoset sp;
  sp.n = static_cast<int>(toks.size());
  sp.names = toks;
  std::map<std::string, Elem> index;
  for (int i = 0; i < sp.n; ++i)
    if (!index.emplace(sp.names[i], i).second)
      throw ParseError(elements->first, "duplicate element name '" + sp.names[i] + "'");
  auto lookup = [&](const std::string& tok, int line) -> Elem {
    auto it = index.find(tok);
    if (it == index.end()) throw ParseError(line, "unknown element token '" + tok + "'");
    return it->second;
  };

  std::vector<char> leq(static_cast<size_t>(sp.n) * sp.n, 0);
  for (Elem x = 0; x < sp.n; ++x) leq[static_cast<size_t>(x) * sp.n + x] = 1;

  const std::pair<int, std::string>* line = next();
  while (line) {
    auto parts = split_ws(line->second);
    if (parts.empty() || parts[0] != "leq:") break;
    if (parts.size() != 4 || parts[2] != "<=")
      throw ParseError(line->first, "expected 'leq: x <= y'");
    Elem x = lookup(parts[1], line->first);
    Elem y = lookup(parts[3], line->first);
    leq[static_cast<size_t>(x) * sp.n + y] = 1;
    line = next();
  }

  // transitive closure
  for (Elem z = 0; z < sp.n; ++z)
    for (Elem x = 0; x < sp.n; ++x)
      if (leq[static_cast<size_t>(x) * sp.n + z])
        for (Elem y = 0; y < sp.n; ++y)
          if (leq[static_cast<size_t>(z) * sp.n + y]) leq[static_cast<size_t>(x) * sp.n + y] = 1;

  auto order = order_from_relation(sp.n, leq);
  if (auto* bad = std::get_if<OrderViolation>(&order))
    throw ParseError(0, "leq relation is not a poset with least 0: " + bad->describe(sp.names));
  sp.order = std::get<DerivedOrder>(order);

  sp.comps.assign(sp.n, std::vector<Elem>(sp.n, -1));
  std::vector<bool> block_seen(sp.n, false);
  while (line) {
    auto parts = split_ws(line->second);
    if (parts.size() != 2 || parts[0] != "section" || parts[1].back() != ':')
      throw ParseError(line->first, "expected 'section p:'");
    Elem p = lookup(parts[1].substr(0, parts[1].size() - 1), line->first);
    if (block_seen[p])
      throw ParseError(line->first, "duplicate section block for '" + sp.names[p] + "'");
    block_seen[p] = true;
    line = next();
    while (line) {
      auto entry = split_ws(line->second);
      if (!entry.empty() && entry[0] == "section") break;
      if (entry.size() != 3 || entry[1] != "->")
        throw ParseError(line->first, "expected 'x -> y'");
      Elem x = lookup(entry[0], line->first);
      Elem y = lookup(entry[2], line->first);
      if (!sp.order.le(x, p))
        throw ParseError(line->first,
                         "'" + sp.names[x] + "' is not in the section [0," + sp.names[p] + "]");
      if (!sp.order.le(y, p))
        throw ParseError(line->first, "section value '" + sp.names[y] + "' lies outside [0," +
                                          sp.names[p] + "]");
      if (sp.comps[p][x] != -1)
        throw ParseError(line->first, "duplicate mapping for '" + sp.names[x] + "'");
      sp.comps[p][x] = y;
      line = next();
    }
  }
  for (Elem p = 0; p < sp.n; ++p) {
    if (!block_seen[p]) throw ParseError(0, "missing section block for '" + sp.names[p] + "'");
    for (Elem x = 0; x < sp.n; ++x)
      if (sp.order.le(x, p) && sp.comps[p][x] == -1)
        throw ParseError(0, "section " + sp.names[p] + " has no mapping for '" + sp.names[x] + "'");
  }
  return sp;
}

std::string format_sectioned_poset(const SectionedPoset& sp) {
  std::ostringstream out;
  out << "wbck-sections v1\n";
  out << "elements:";
  for (const auto& name : sp.names) out << ' ' << name;
  out << '\n';
  for (const auto& [lo, hi] : sp.order.hasse)
    out << "leq: " << sp.names[lo] << " <= " << sp.names[hi] << '\n';
  for (Elem p = 0; p < sp.n; ++p) {
    out << "section " << sp.names[p] << ":\n";
    for (Elem x = 0; x < sp.n; ++x)
      if (sp.comps[p][x] != -1)
        out << sp.names[x] << " -> " << sp.names[sp.comps[p][x]] << '\n';
  }
  return out.str();
}

SectionedPoset to_sectioned_poset(const OpTable& a) {
  SectionedPoset sp;
  sp.n = a.n;
  sp.names = a.names;
  sp.order = derive_order_checked(a);
  sp.comps.assign(a.n, std::vector<Elem>(a.n, -1));
  for (Elem p = 0; p < a.n; ++p)
    for (Elem x = 0; x < a.n; ++x)
      if (sp.order.le(x, p)) sp.comps[p][x] = a.minus(p, x);
  return sp;
}

std::variant<OpTable, ReconstructionFailure> reconstruct_subtraction(const SectionedPoset& sp) {
  const auto& order = sp.order;
  // every comp must be a g*-complementation of its section
  for (Elem p = 0; p < sp.n; ++p) {
    const auto& comp = sp.comps[p];
    if (comp[0] != p)
      throw GstarViolation(p, 0, "section " + sp.names[p] + ": comp(0) must be " + sp.names[p]);
    for (Elem x = 0; x < sp.n; ++x) {
      if (comp[x] == -1) continue;
      if (!order.le(comp[comp[x]], x))
        throw GstarViolation(p, x, "section " + sp.names[p] + ": comp(comp(" + sp.names[x] +
                                       ")) is not below " + sp.names[x]);
      for (Elem y = 0; y < sp.n; ++y) {
        if (comp[y] == -1 || !order.le(x, y)) continue;
        if (!order.le(comp[y], comp[x]))
          throw GstarViolation(p, x, "section " + sp.names[p] + ": comp is not antitone at " +
                                         sp.names[x] + " <= " + sp.names[y]);
      }
    }
  }

  OpTable a;
  a.n = sp.n;
  a.names = sp.names;
  a.sub.assign(static_cast<size_t>(sp.n) * sp.n, -1);
  ReconstructionFailure failure;
  for (Elem x = 0; x < sp.n; ++x)
    for (Elem y = 0; y < sp.n; ++y) {
      std::vector<Elem> candidates;
      for (Elem z = 0; z < sp.n; ++z)
        if (order.le(z, x) && order.le(z, y)) candidates.push_back(sp.comps[x][z]);
      Elem min = -1;
      for (Elem c : candidates) {
        bool below_all = true;
        for (Elem d : candidates)
          if (!order.le(c, d)) {
            below_all = false;
            break;
          }
        if (below_all) {
          min = c;
          break;
        }
      }
      if (min == -1)
        failure.pairs.emplace_back(x, y);
      else
        a.sub[static_cast<size_t>(x) * sp.n + y] = min;
    }
  if (!failure.pairs.empty()) return failure;

  if (!validate_wbck(a).holds || !(to_sectioned_poset(a) == sp))
    throw std::logic_error(
        "internal consistency: reconstruction produced a table that does not carry the input "
        "sectioned poset");
  return a;
}

}  // namespace wbck
