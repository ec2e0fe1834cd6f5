#pragma once

#include <map>
#include <string>
#include <vector>

#include "wbck/law.hpp"

namespace wbck {

using LawCatalog = std::map<std::string, Law>;

// Every named law of the workbench, keyed by its catalog name.
const LawCatalog& builtin_laws();

// Looks up a catalog law; returns nullptr for unknown names.
const Law* find_law(const std::string& name);

// Equational bases checked on bare groupoids: COMM4, COMM3a, COMM3b, OI3,
// IMPL4.
const std::map<std::string, std::vector<std::string>>& builtin_bases();

struct UnknownBasis : std::runtime_error {
  explicit UnknownBasis(const std::string& name)
      : std::runtime_error("unknown basis name: " + name) {}
};

// Conjunction of the named basis over the bare groupoid; the table need not
// be a wBCK-algebra.
Verdict check_basis(const OpTable& a, const std::string& basis);

}  // namespace wbck
