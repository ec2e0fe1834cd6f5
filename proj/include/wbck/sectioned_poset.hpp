#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wbck/derived_order.hpp"
#include "wbck/op_table.hpp"

namespace wbck {

// A poset with least element 0 and, for every p, a unary map on [0,p].
struct SectionedPoset {
  int n = 0;
  std::vector<std::string> names;
  DerivedOrder order;
  std::vector<std::vector<Elem>> comps;  // comps[p][x], -1 outside [0,p]

  bool operator==(const SectionedPoset&) const = default;
};

struct GstarViolation : std::runtime_error {
  Elem p, x;
  GstarViolation(Elem p_, Elem x_, const std::string& msg);
};

// Pairs (x, y) whose candidate set {comp_x(z) : z <= x, z <= y} has no
// minimum; every failing pair is listed.
struct ReconstructionFailure {
  std::vector<std::pair<Elem, Elem>> pairs;
};

// wbck-sections v1 reader/writer (docs/formats.md).
SectionedPoset parse_sectioned_poset(const std::string& text);
std::string format_sectioned_poset(const SectionedPoset& sp);

// The sectioned poset carried by a validated wBCK-algebra.
SectionedPoset to_sectioned_poset(const OpTable& a);

// Rebuilds subtraction as x - y = min{comp_x(z) : z <= x, z <= y}. Every
// comp must be a g*-complementation (GstarViolation otherwise). On success
// the result is a wBCK-algebra whose sections reproduce the input exactly.
std::variant<OpTable, ReconstructionFailure> reconstruct_subtraction(const SectionedPoset& sp);

}  // namespace wbck
