#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "gdelta/term.hpp"

namespace gdelta {

// `lhs < rhs` when strict, `lhs <= rhs` otherwise.
struct OrderLiteral {
  Term lhs;
  Term rhs;
  bool strict = false;

  static OrderLiteral less(Term a, Term b) { return {std::move(a), std::move(b), true}; }
  static OrderLiteral less_equal(Term a, Term b) { return {std::move(a), std::move(b), false}; }

  friend bool operator==(const OrderLiteral&, const OrderLiteral&) = default;
  friend std::strong_ordering operator<=>(const OrderLiteral& a, const OrderLiteral& b);
};

OrderLiteral apply(const OrderLiteral& l, const Substitution& sigma);
std::string to_string(const OrderLiteral& l);

// Disjunction of order literals with set semantics: literals are kept sorted
// and duplicates are dropped on construction.
class OrderClause {
 public:
  OrderClause() = default;
  explicit OrderClause(std::vector<OrderLiteral> literals);
  OrderClause(std::initializer_list<OrderLiteral> literals)
      : OrderClause(std::vector<OrderLiteral>(literals)) {}

  const std::vector<OrderLiteral>& literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }
  bool empty() const noexcept { return literals_.empty(); }
  bool is_ground() const;
  // Total number of symbol occurrences.
  std::size_t weight() const;
  std::set<Symbol> variables() const;
  // Distinct terms occurring as a side of some literal.
  std::vector<Term> basic_terms() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const OrderClause&, const OrderClause&) = default;
  friend std::strong_ordering operator<=>(const OrderClause& a, const OrderClause& b);

 private:
  std::vector<OrderLiteral> literals_;
};

OrderClause apply(const OrderClause& c, const Substitution& sigma);

// Renames variables to x1, x2, ... in order of first occurrence, after
// arranging literals by their shape with variables masked. Variants of a
// clause usually normalize to the same clause.
OrderClause normalize(const OrderClause& c);

// Renames every variable of `c` by prefixing `prefix` to its index in
// first-occurrence order (`y1`, `y2`, ...).
OrderClause rename_variables(const OrderClause& c, const std::string& prefix, Substitution* renaming = nullptr);

using ClauseSet = std::vector<OrderClause>;

// Sorts by rendered text and removes duplicates.
ClauseSet canonical_clause_set(ClauseSet clauses);

}  // namespace gdelta

template <>
struct std::hash<gdelta::OrderClause> {
  std::size_t operator()(const gdelta::OrderClause& c) const noexcept { return c.hash(); }
};
