#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gdelta/formula.hpp"
#include "gdelta/semantics.hpp"
#include "gdelta/signature.hpp"

namespace gdelta {

// Symbols introduced by one transformation, in creation order.
using SkolemSignature = std::vector<SymbolInfo>;

struct Skolemized {
  // The input formula.
  PrenexFormula original;
  PrenexFormula result;
  SkolemSignature generated;
  // Per position of the original prefix: the Skolem term that replaced the
  // variable there, or nothing if the variable was kept.
  std::vector<std::optional<Term>> skolem_terms;
};

// Replaces every universal variable by a fresh function of the existential
// variables to its left (a fresh constant if there are none). Symbols are
// registered in `sig` as sk_v_N.
Skolemized skolemize_validity(const PrenexFormula& a, Signature& sig);

// Replaces every existential variable x by a universal one guarded by q(x),
// substituting f(x, y1, ..., yk) for x in the matrix where y1..yk are the
// variables bound to its left, and wraps the guarded matrix in one D.
Skolemized skolemize_sat(const PrenexFormula& a, Symbol q, Signature& sig);

// For D-rooted matrices: existential variables become functions of the
// universal variables to their left.
Skolemized skolemize_sat_delta(const PrenexFormula& a, Signature& sig);

// One closed conjunct per predicate:
//   A y. (D (top -> p(y)) | ~ D (q(hexw_p(y)) -> p(y)))
std::vector<Formula> hex(Symbol q, const std::vector<std::pair<Symbol, int>>& predicates, Signature& sig);

// Ground terms of nesting depth <= depth over the function symbols of `sig`
// (predicates and endpoints excluded). A constant `c` and a unary `f` are
// added when the signature has no constant or no function symbol of positive
// arity. Sorted by depth, then term order.
std::vector<Term> herbrand_universe(const Signature& sig, std::size_t depth, std::size_t max_terms = 20000);

// A disjunction of instances of a Skolemized validity matrix.
struct HerbrandDisjunction {
  std::vector<QuantifiedVariable> original_prefix;
  // Matrix of the Skolemized formula; its free variables are the
  // existential variables of the original prefix.
  Formula matrix;
  std::vector<std::optional<Term>> skolem_terms;
  // One term per existential variable, in prefix order.
  std::vector<InstanceTuple> instances;
};

HerbrandDisjunction herbrand_disjunction(const Skolemized& sk, std::vector<InstanceTuple> instances);

// Re-introduces the original quantifiers into the disjunction, right to
// left, by the three-step procedure: bind existential positions, merge
// identical disjuncts, bind the universal position of a maximal Skolem term.
Formula deskolemize(const HerbrandDisjunction& h);

}  // namespace gdelta
