#pragma once

#include <optional>
#include <vector>

#include "gdelta/clause.hpp"
#include "gdelta/formula.hpp"
#include "gdelta/signature.hpp"

namespace gdelta {

// definiendum == lhs <shape> rhs, or definiendum == D lhs. Operands are atoms
// read as terms, endpoints, or other definienda.
struct DefEquivalence {
  Term definiendum;
  Connective shape;  // And, Or, Implies or Delta
  Term lhs;
  std::optional<Term> rhs;
};

struct Definitions {
  std::vector<DefEquivalence> defs;  // children before parents
  Term root = Term::bottom();
};

// One fresh predicate p1, p2, ... per distinct non-atomic subformula, applied
// to the subformula's variables in order of first occurrence.
Definitions definitional_defs(const Formula& m, Signature& sig);

ClauseSet clausify_def(const DefEquivalence& d);

// {root < top} plus the clauses of every definition.
ClauseSet cl_val(const Formula& m, Signature& sig);
// {top <= root} plus the clauses of every definition.
ClauseSet cl_sat(const Formula& m, Signature& sig);

// A y. (D (top -> p(y)) | ~ D (q(w(y)) -> p(y)))  becomes
// {top <= p(y), p(y) < q(w(y))}.
OrderClause hex_to_clause(const Formula& hex_conjunct);

// Endpoint axioms, density axioms over a fresh binary d, and one
// compatibility clause per symbol of positive arity other than d.
ClauseSet theory_clauses(Signature& sig);

}  // namespace gdelta
