#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbck/verdict.hpp"

namespace wbck {

// A finite algebra (A, -, 0): n named elements, index 0 is the constant 0,
// and the full n-by-n subtraction table.
struct OpTable {
  int n = 0;
  std::vector<std::string> names;  // names[0] denotes the constant 0
  std::vector<Elem> sub;           // row-major, sub[x*n+y] = x - y

  Elem minus(Elem x, Elem y) const { return sub[x * n + y]; }
  // The induced relation: x <= y iff x - y = 0. Only a partial order once
  // derive_order has certified the table.
  bool rel_leq(Elem x, Elem y) const { return minus(x, y) == 0; }

  std::optional<Elem> element(const std::string& name) const;
  bool operator==(const OpTable&) const = default;
};

struct ParseError : std::runtime_error {
  int line;  // 1-based line in the input, 0 when not line-specific
  ParseError(int line_, const std::string& msg);
};

// wbck-table v1 reader/writer. The grammar is documented in docs/formats.md.
OpTable parse_table(const std::string& text);
std::string format_table(const OpTable& a);

// Relabels the carrier: perm[old] = new, perm[0] must be 0.
OpTable permute_table(const OpTable& a, const std::vector<Elem>& perm);

// Isomorphism-class representative: the lexicographically minimal flattened
// table over all carrier permutations fixing index 0.
OpTable canonical_form(const OpTable& a);

// Zero-fixing table-preserving bijection from a to b, if one exists.
std::optional<std::vector<Elem>> is_isomorphic(const OpTable& a, const OpTable& b);

// FNV-1a over the flattened table; used to name emitted files.
std::uint64_t table_hash(const OpTable& a);

}  // namespace wbck
