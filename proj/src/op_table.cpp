#include "wbck/op_table.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "wbck/derived_order.hpp"

namespace wbck {

namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ParseError::ParseError(int line_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}

std::optional<Elem> OpTable::element(const std::string& name) const {
  for (int i = 0; i < n; ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

std::string describe(const Counterwitness& cw, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [var, val] : cw.bindings) {
    if (!out.empty()) out += ", ";
    out += var + "=" + (val >= 0 && val < static_cast<int>(names.size()) ? names[val]
                                                                         : std::to_string(val));
  }
  if (!out.empty()) out += ": ";
  return out + cw.violated;
}

OpTable parse_table(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  auto next_significant = [&](std::string& out) -> bool {
    while (std::getline(in, raw)) {
      ++lineno;
      size_t i = raw.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;  // blank
      if (raw[i] == '#') continue;           // comment line
      out = raw;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      return true;
    }
    return false;
  };

  std::string line;
  if (!next_significant(line) || split_ws(line) != std::vector<std::string>{"wbck-table", "v1"})
    throw ParseError(lineno == 0 ? 1 : lineno, "malformed header, expected 'wbck-table v1'");

  if (!next_significant(line)) throw ParseError(lineno, "missing 'elements:' line");
  auto toks = split_ws(line);
  if (toks.empty() || toks[0] != "elements:")
    throw ParseError(lineno, "expected 'elements:' line");
  toks.erase(toks.begin());
  if (toks.empty()) throw ParseError(lineno, "no elements listed");

  OpTable a;
  a.n = static_cast<int>(toks.size());
  a.names = toks;
  std::map<std::string, Elem> index;
  for (int i = 0; i < a.n; ++i) {
    if (!valid_label(a.names[i]))
      throw ParseError(lineno, "invalid element label '" + a.names[i] + "'");
    if (!index.emplace(a.names[i], i).second)
      throw ParseError(lineno, "duplicate element name '" + a.names[i] + "'");
  }

  a.sub.assign(static_cast<size_t>(a.n) * a.n, -1);
  std::vector<bool> seen(a.n, false);
  for (int r = 0; r < a.n; ++r) {
    if (!next_significant(line)) throw ParseError(lineno, "missing table row");
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'label: entries...'");
    auto label_toks = split_ws(line.substr(0, colon));
    if (label_toks.size() != 1) throw ParseError(lineno, "expected a single row label");
    auto it = index.find(label_toks[0]);
    if (it == index.end())
      throw ParseError(lineno, "unknown element token '" + label_toks[0] + "'");
    Elem x = it->second;
    if (seen[x]) throw ParseError(lineno, "duplicate row for '" + label_toks[0] + "'");
    seen[x] = true;
    auto entries = split_ws(line.substr(colon + 1));
    if (static_cast<int>(entries.size()) != a.n)
      throw ParseError(lineno, "row length mismatch: expected " + std::to_string(a.n) +
                                   " entries, got " + std::to_string(entries.size()));
    for (int y = 0; y < a.n; ++y) {
      auto jt = index.find(entries[y]);
      if (jt == index.end())
        throw ParseError(lineno, "unknown element token '" + entries[y] + "'");
      a.sub[static_cast<size_t>(x) * a.n + y] = jt->second;
    }
  }
  if (next_significant(line)) throw ParseError(lineno, "unexpected trailing content");
  return a;
}

std::string format_table(const OpTable& a) {
  std::ostringstream out;
  out << "wbck-table v1\n";
  out << "elements:";
  for (const auto& name : a.names) out << ' ' << name;
  out << '\n';
  for (int x = 0; x < a.n; ++x) {
    out << a.names[x] << ':';
    for (int y = 0; y < a.n; ++y) out << ' ' << a.names[a.minus(x, y)];
    out << '\n';
  }
  return out.str();
}

OpTable permute_table(const OpTable& a, const std::vector<Elem>& perm) {
  OpTable b;
  b.n = a.n;
  b.names.resize(a.n);
  b.sub.resize(a.sub.size());
  for (int x = 0; x < a.n; ++x) b.names[perm[x]] = a.names[x];
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      b.sub[static_cast<size_t>(perm[x]) * a.n + perm[y]] = perm[a.minus(x, y)];
  return b;
}

OpTable canonical_form(const OpTable& a) {
  const int n = a.n;
  if (n <= 1) return a;

  // perm maps old index -> new position; index 0 stays fixed.
  std::vector<Elem> tail(n - 1);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<Elem> perm(n, 0);
  std::vector<Elem> best;
  std::vector<Elem> best_perm;
  std::vector<Elem> cand(a.sub.size());
  do {
    for (int i = 1; i < n; ++i) perm[i] = tail[i - 1];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        cand[static_cast<size_t>(perm[x]) * n + perm[y]] = perm[a.minus(x, y)];
    if (best.empty() || cand < best) {
      best = cand;
      best_perm = perm;
    }
  } while (std::next_permutation(tail.begin(), tail.end()));

  return permute_table(a, best_perm);
}

std::optional<std::vector<Elem>> is_isomorphic(const OpTable& a, const OpTable& b) {
  if (a.n != b.n) return std::nullopt;
  const int n = a.n;
  std::vector<Elem> tail(n > 0 ? n - 1 : 0);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<Elem> perm(n, 0);
  do {
    for (int i = 1; i < n; ++i) perm[i] = tail[i - 1];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (b.minus(perm[x], perm[y]) != perm[a.minus(x, y)]) ok = false;
    if (ok) return perm;
  } while (std::next_permutation(tail.begin(), tail.end()));
  return std::nullopt;
}

std::uint64_t table_hash(const OpTable& a) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(a.n));
  for (Elem e : a.sub) mix(static_cast<std::uint64_t>(e));
  return h;
}

}  // namespace wbck
