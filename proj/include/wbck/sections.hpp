#pragma once

#include <vector>

#include "wbck/derived_order.hpp"
#include "wbck/op_table.hpp"
#include "wbck/verdict.hpp"

namespace wbck {

// Lattice classification of one section [0,p]; the kind flags are only
// meaningful when is_lattice holds.
struct SectionLatticeKind {
  bool is_lattice = false;
  bool de_morgan = false;     // m-complemented lattice
  bool ortholattice = false;  // o-complemented lattice
  bool orthomodular = false;
  bool boolean = false;       // distributive ortholattice
};

// The complementation x -> p - x on the initial segment [0,p].
//   gstar: antitone, comp(comp(x)) <= x, comp(0) = p
//   s:     meet(x, comp(x)) = 0 and comp(x) = 0 only at x = p
//   bstar: gstar and the join of x, comp(x) inside [0,p] is p
//   m:     gstar and comp(comp(x)) = x
//   o:     both s and m; equivalently an idempotent bstar (both routes are
//          computed and must agree)
struct SectionProfile {
  Elem top = 0;
  std::vector<Elem> members;  // ascending element indices of [0,p]
  std::vector<Elem> comp;     // size n; comp[x] = p - x inside, -1 outside
  bool gstar = false, s = false, bstar = false, m = false, o = false;
  SectionLatticeKind kind;
};

// One profile per element. Pre: a is a validated wBCK-algebra.
std::vector<SectionProfile> section_profiles(const OpTable& a);

// Recomputes the lattice kind of a section; is_lattice = false reports a
// non-lattice section. Orthomodularity is evaluated through both of its
// characterizations (y = x v (y ^ comp(x)) for x <= y, and x <= y with
// comp(x) ^ y = 0 forcing x = y); a mismatch aborts.
SectionLatticeKind section_lattice_kind(const DerivedOrder& order, const SectionProfile& p);

// Holds iff for every x <= p the join of x and p - x taken in the whole
// algebra exists and equals p.
Verdict is_strongly_sectionally_bstar(const OpTable& a);

// Relative conditions on nested sections x <= p <= q:
//   ippo:  p - x equals the meet of p and q - x (fails when that meet is missing)
//   ippo': p - x <= q - x
Verdict check_ippo(const OpTable& a);
Verdict check_ippo_prime(const OpTable& a);

}  // namespace wbck
