#pragma once

#include <optional>
#include <vector>

#include "wbck/derived_order.hpp"
#include "wbck/verdict.hpp"

namespace wbck {

// Order-theoretic summary of a derived order. is_distributive is only
// meaningful when is_lattice holds.
struct OrderProfile {
  bool is_meet_semilattice = false;
  bool is_nearlattice = false;  // every pair bounded above has a join
  bool is_lattice = false;
  bool is_bounded = false;
  bool is_distributive = false;
  bool is_0_distributive = false;
  std::vector<Elem> meet_tbl;  // n*n, -1 where the meet does not exist
  std::vector<Elem> join_tbl;
};

std::optional<Elem> meet(const DerivedOrder& order, Elem x, Elem y);
std::optional<Elem> join(const DerivedOrder& order, Elem x, Elem y);

OrderProfile profile(const DerivedOrder& order);

// Distributivity test for an explicitly given lattice fragment: no five
// elements of `members` closed under meet/join form a diamond or a pentagon.
bool distributive_sublattice_scan(const std::vector<Elem>& members,
                                  const DerivedOrder& order,
                                  const std::vector<Elem>& meet_tbl,
                                  const std::vector<Elem>& join_tbl);

// Holds iff x - (x - y) is the meet of x and y for all pairs.
// Pre: a is a validated wBCK-algebra.
Verdict meet_matches_subtraction(const OpTable& a);

}  // namespace wbck
