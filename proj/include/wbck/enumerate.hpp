#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wbck/derived_order.hpp"
#include "wbck/law.hpp"
#include "wbck/op_table.hpp"

namespace wbck {

inline constexpr int kEnumerationCap = 7;
inline constexpr long long kDefaultNodeBudget = 100'000'000;

// All posets with least element 0 on n points, one representative per
// isomorphism class, deterministic order.
const std::vector<DerivedOrder>& enumerate_posets(int n);

// Every labeled poset with least element 0 on {0..n-1}.
std::vector<DerivedOrder> enumerate_labeled_posets(int n);

struct EnumSpec {
  int n = 1;
  std::vector<std::string> require;  // catalog law names that must hold
  std::vector<std::string> forbid;   // catalog law names that must fail
  long long node_budget = kDefaultNodeBudget;
};

struct EnumStats {
  long long nodes = 0;
  bool budget_exhausted = false;
};

// Sink returns false to stop enumeration early.
using TableSink = std::function<bool(const OpTable&)>;

// Streams all wBCK-algebras of size spec.n matching the filters, exactly one
// canonical representative per isomorphism class, ordered by poset and then
// by canonical table. Returns search statistics; budget_exhausted marks a
// partial result.
EnumStats enumerate_wbck(const EnumSpec& spec, const TableSink& sink);

long long count_wbck(const EnumSpec& spec, EnumStats* stats = nullptr);

// All valid subtraction tables on one labeled poset (no isomorphism
// rejection). Used by the labeled sweeps and relabeling-invariance tests.
EnumStats fill_wbck_tables(const DerivedOrder& poset, std::vector<std::string> names,
                           const std::vector<const Law*>& require,
                           const std::vector<const Law*>& forbid,
                           long long node_budget, const TableSink& sink);

// Every n-element table satisfying the given premise-free equations, found by
// backtracking that prunes exactly when a fully determined instance of one of
// the equations is violated.
EnumStats enumerate_tables_satisfying(int n, const std::vector<const Law*>& equations,
                                      long long node_budget, const TableSink& sink);

// Smallest (by size, then canonical order) wBCK-algebra satisfying every law
// in `satisfies` and violating every law in `violates`; nullopt when none
// exists within max_n and the budget.
std::optional<OpTable> search_counterexample(const std::vector<std::string>& satisfies,
                                             const std::vector<std::string>& violates,
                                             int max_n,
                                             long long node_budget = kDefaultNodeBudget,
                                             EnumStats* stats = nullptr);

}  // namespace wbck
