#pragma once

#include "wbck/derived_order.hpp"
#include "wbck/op_table.hpp"
#include "wbck/verdict.hpp"

namespace wbck {

// Decides whether the table is a weak BCK-algebra. The primary route checks
// the reduced base: x - 0 = x, the induced relation is a partial order with
// least 0, x - (x - y) <= y, and antitonicity in the second argument. The
// defining axioms (order + the exchange rule x - y <= z  =>  x - z <= y) are
// evaluated as an independent second route; any disagreement between the two
// routes aborts with an internal-consistency error.
//
// Structurally broken tables (relation not a poset) yield a failing verdict
// naming the violated axiom rather than an exception.
Verdict validate_wbck(const OpTable& a);

// The discrete algebra on a poset: x - y = 0 if x <= y, else x.
// Names are synthesized when not supplied.
OpTable discrete_wbck(const DerivedOrder& order, std::vector<std::string> names = {});

}  // namespace wbck
