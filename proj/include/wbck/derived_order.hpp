#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wbck/op_table.hpp"

namespace wbck {

// Certified partial order with least element 0. For an algebra this is the
// relation x <= y iff x - y = 0; the Hasse covers come from transitive
// reduction.
struct DerivedOrder {
  int n = 0;
  std::vector<char> leq;                        // row-major n*n
  std::vector<std::pair<Elem, Elem>> hasse;     // (lower, upper) covering pairs
  Elem least = 0;

  bool le(Elem x, Elem y) const { return leq[x * n + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && le(x, y); }
  bool operator==(const DerivedOrder&) const = default;
};

struct OrderViolation {
  enum class Kind { NotReflexive, NotAntisymmetric, NotTransitive, NoLeastZero };
  Kind kind;
  Elem x = -1, y = -1, z = -1;

  std::string describe(const std::vector<std::string>& names) const;
};

// Checks that a reflexive relation given as a matrix is a partial order with
// least element 0 and builds the certificate.
std::variant<DerivedOrder, OrderViolation> order_from_relation(int n, const std::vector<char>& leq);

std::variant<DerivedOrder, OrderViolation> derive_order(const OpTable& a);

// Convenience for callers that have already validated the table.
DerivedOrder derive_order_checked(const OpTable& a);

}  // namespace wbck
