#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "gdelta/signature.hpp"
#include "gdelta/term.hpp"

namespace gdelta {

// Lexicographic path order over a total precedence on function symbols.
class ReductionOrder {
 public:
  // bot < top < constants < symbols of positive arity; within a group by
  // arity, then registration index, then name.
  explicit ReductionOrder(const Signature& sig);
  // Explicit precedence, least symbol first.
  explicit ReductionOrder(const std::vector<std::pair<Symbol, int>>& ascending);

  bool greater(const Term& s, const Term& t) const;
  // Neither s > t nor s == t.
  bool not_greater_or_equal(const Term& s, const Term& t) const { return s != t && !greater(s, t); }

  // Precedence, least first, as `name/arity` pairs.
  const std::vector<std::pair<Symbol, int>>& precedence() const noexcept { return ascending_; }

 private:
  // <0, 0, >0 like strcmp; symbols outside the precedence come after it,
  // ordered by name.
  int compare_symbols(const Term& f, const Term& g) const;

  std::vector<std::pair<Symbol, int>> ascending_;
  std::unordered_map<Symbol, int> rank_;
};

bool lpo_greater(const ReductionOrder& order, const Term& s, const Term& t);

}  // namespace gdelta
