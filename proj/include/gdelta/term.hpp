#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gdelta/symbol.hpp"

namespace gdelta {

// First-order term. Predicate symbols become ordinary function symbols once
// atoms are read as terms, and the truth constants are the nullary symbols
// `top` and `bot`. Immutable; copies share structure.
class Term {
 public:
  static Term variable(Symbol name);
  static Term application(Symbol head, std::vector<Term> args);
  static Term constant(Symbol name) { return application(name, {}); }
  static Term top();
  static Term bottom();

  bool is_variable() const noexcept { return node_->variable; }
  bool is_application() const noexcept { return !node_->variable; }
  bool is_constant() const noexcept { return !node_->variable && node_->args.empty(); }
  bool is_top() const noexcept;
  bool is_bottom() const noexcept;
  bool is_endpoint() const noexcept { return is_top() || is_bottom(); }
  bool is_ground() const noexcept { return node_->ground; }

  // Variable name or function symbol.
  Symbol head() const noexcept { return node_->head; }
  std::span<const Term> args() const noexcept { return node_->args; }
  std::size_t arity() const noexcept { return node_->args.size(); }

  // Number of symbol occurrences.
  std::uint32_t size() const noexcept { return node_->size; }
  // 0 for variables and constants.
  std::uint32_t depth() const noexcept { return node_->depth; }
  std::size_t hash() const noexcept { return node_->hash; }

  bool occurs(Symbol var) const;
  bool contains(const Term& sub) const;
  void collect_variables(std::set<Symbol>& out) const;
  // Variables in order of first occurrence, left to right.
  void collect_variables_ordered(std::vector<Symbol>& out) const;
  void collect_subterms(std::vector<Term>& out) const;

  friend bool operator==(const Term& a, const Term& b) noexcept;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

 private:
  struct Node {
    bool variable = false;
    bool ground = true;
    Symbol head;
    std::vector<Term> args;
    std::uint32_t size = 1;
    std::uint32_t depth = 0;
    std::size_t hash = 0;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using Substitution = std::unordered_map<Symbol, Term>;

Term apply(const Term& t, const Substitution& sigma);

// `f(x, g(c))`; variables and constants print as their names.
std::string to_string(const Term& t);

// Deterministic rendering: `{x <- t, y <- s}`, bindings sorted by variable.
std::string render_substitution(const Substitution& sigma);

}  // namespace gdelta

template <>
struct std::hash<gdelta::Term> {
  std::size_t operator()(const gdelta::Term& t) const noexcept { return t.hash(); }
};
