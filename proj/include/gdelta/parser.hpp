#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gdelta/clause.hpp"
#include "gdelta/formula.hpp"

namespace gdelta {

// A conjunction of closed prenex formulas.
struct ProblemFile {
  std::vector<PrenexFormula> conjuncts;
};

// Problem text:
//   formula  ::= "A" ident "." formula | "E" ident "." formula | iff
//   iff      ::= imp ("<->" iff)?
//   imp      ::= or ("->" imp)?
//   or       ::= and ("|" and)*
//   and      ::= unary ("&" unary)*
//   unary    ::= "~" unary | "D" unary | "top" | "bot" | atom | "(" formula ")"
// Conjuncts are separated by ";" or line breaks, "#" starts a comment.
// Identifiers bound by a quantifier are variables. Unbound identifiers
// spelled like variables (u..z optionally followed by digits, primes or
// underscores) are free variables; every other unbound identifier is a
// constant, function or predicate symbol.
ProblemFile parse_problem(std::string_view text);

// A single formula, abbreviations expanded; need not be closed or prenex.
Formula parse_formula(std::string_view text);

bool is_variable_name(std::string_view name);

std::string render_formula(const Formula& f);
std::string render_term(const Term& t);
std::string render_literal(const OrderLiteral& l);
// `{s < t, u <= v}` with literals sorted by their rendered text.
std::string render_clause(const OrderClause& c);
// One clause per line, sorted.
std::string render_clause_set(const ClauseSet& clauses);

// Clause and term text as produced by the renderers. Identifiers spelled
// like variables are variables.
OrderClause parse_clause(std::string_view text);
Term parse_term(std::string_view text);
// `{x1 <- t, y2 <- s}`
Substitution parse_substitution(std::string_view text);

}  // namespace gdelta
