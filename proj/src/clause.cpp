#include "gdelta/clause.hpp"

#include <algorithm>
#include <map>

#include "gdelta/parser.hpp"

namespace gdelta {
namespace {

// Orders terms as if every variable were the same symbol.
std::strong_ordering compare_masked(const Term& a, const Term& b) {
  if (a.is_variable() || b.is_variable()) {
    if (a.is_variable() && b.is_variable()) return std::strong_ordering::equal;
    return a.is_variable() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.head() <=> b.head(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (auto c = compare_masked(a.args()[i], b.args()[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_masked(const OrderLiteral& a, const OrderLiteral& b) {
  if (auto c = compare_masked(a.lhs, b.lhs); c != 0) return c;
  if (auto c = compare_masked(a.rhs, b.rhs); c != 0) return c;
  return a.strict <=> b.strict;
}

}  // namespace

std::strong_ordering operator<=>(const OrderLiteral& a, const OrderLiteral& b) {
  if (auto c = a.lhs <=> b.lhs; c != 0) return c;
  if (auto c = a.rhs <=> b.rhs; c != 0) return c;
  return a.strict <=> b.strict;
}

OrderLiteral apply(const OrderLiteral& l, const Substitution& sigma) {
  return {gdelta::apply(l.lhs, sigma), gdelta::apply(l.rhs, sigma), l.strict};
}

std::string to_string(const OrderLiteral& l) {
  return to_string(l.lhs) + (l.strict ? " < " : " <= ") + to_string(l.rhs);
}

OrderClause::OrderClause(std::vector<OrderLiteral> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool OrderClause::is_ground() const {
  return std::all_of(literals_.begin(), literals_.end(),
                     [](const OrderLiteral& l) { return l.lhs.is_ground() && l.rhs.is_ground(); });
}

std::size_t OrderClause::weight() const {
  std::size_t w = 0;
  for (const OrderLiteral& l : literals_) w += l.lhs.size() + l.rhs.size();
  return w;
}

std::set<Symbol> OrderClause::variables() const {
  std::set<Symbol> out;
  for (const OrderLiteral& l : literals_) {
    l.lhs.collect_variables(out);
    l.rhs.collect_variables(out);
  }
  return out;
}

std::vector<Term> OrderClause::basic_terms() const {
  std::vector<Term> out;
  for (const OrderLiteral& l : literals_) {
    for (const Term* t : {&l.lhs, &l.rhs})
      if (std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
  }
  return out;
}

std::size_t OrderClause::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const OrderLiteral& l : literals_) {
    h ^= l.lhs.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= l.rhs.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(l.strict) + (h << 3);
  }
  return h;
}

std::strong_ordering operator<=>(const OrderClause& a, const OrderClause& b) {
  return std::lexicographical_compare_three_way(a.literals_.begin(), a.literals_.end(), b.literals_.begin(),
                                                b.literals_.end());
}

OrderClause apply(const OrderClause& c, const Substitution& sigma) {
  if (sigma.empty()) return c;
  std::vector<OrderLiteral> lits;
  lits.reserve(c.size());
  for (const OrderLiteral& l : c.literals()) lits.push_back(gdelta::apply(l, sigma));
  return OrderClause(std::move(lits));
}

OrderClause rename_variables(const OrderClause& c, const std::string& prefix, Substitution* renaming) {
  std::vector<Symbol> order;
  for (const OrderLiteral& l : c.literals()) {
    l.lhs.collect_variables_ordered(order);
    l.rhs.collect_variables_ordered(order);
  }
  Substitution sigma;
  for (std::size_t i = 0; i < order.size(); ++i)
    sigma.emplace(order[i], Term::variable(Symbol(prefix + std::to_string(i + 1))));
  if (renaming) *renaming = sigma;
  return gdelta::apply(c, sigma);
}

OrderClause normalize(const OrderClause& c) {
  if (c.is_ground()) return c;
  std::vector<OrderLiteral> lits = c.literals();
  std::stable_sort(lits.begin(), lits.end(),
                   [](const OrderLiteral& a, const OrderLiteral& b) { return compare_masked(a, b) < 0; });
  std::vector<Symbol> order;
  for (const OrderLiteral& l : lits) {
    l.lhs.collect_variables_ordered(order);
    l.rhs.collect_variables_ordered(order);
  }
  Substitution sigma;
  for (std::size_t i = 0; i < order.size(); ++i)
    sigma.emplace(order[i], Term::variable(Symbol("x" + std::to_string(i + 1))));
  std::vector<OrderLiteral> renamed;
  renamed.reserve(lits.size());
  for (const OrderLiteral& l : lits) renamed.push_back(gdelta::apply(l, sigma));
  return OrderClause(std::move(renamed));
}

ClauseSet canonical_clause_set(ClauseSet clauses) {
  std::vector<std::pair<std::string, OrderClause>> keyed;
  keyed.reserve(clauses.size());
  for (OrderClause& c : clauses) keyed.emplace_back(render_clause(c), std::move(c));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  ClauseSet out;
  out.reserve(keyed.size());
  for (auto& [_, c] : keyed) out.push_back(std::move(c));
  return out;
}

}  // namespace gdelta
