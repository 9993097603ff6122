#pragma once

#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gdelta/signature.hpp"
#include "gdelta/symbol.hpp"
#include "gdelta/term.hpp"

namespace gdelta {

enum class Connective {
  Atom,
  Bottom,
  Top,
  And,
  Or,
  Implies,
  Delta,
  Forall,
  Exists,
  // Abbreviations; removed by expand_abbreviations.
  Not,
  Iff,
};

enum class Quantifier { Forall, Exists };

// Formula of first-order Goedel logic with Delta. Immutable and structurally
// shared.
class Formula {
 public:
  // `top`.
  Formula();
  static Formula atom(Symbol predicate, std::vector<Term> args = {});
  static Formula bottom();
  static Formula top();
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula delta(Formula body);
  static Formula negation(Formula body);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula forall(Symbol var, Formula body);
  static Formula exists(Symbol var, Formula body);
  static Formula quantified(Quantifier q, Symbol var, Formula body);
  static Formula binary(Connective c, Formula lhs, Formula rhs);

  Connective kind() const noexcept { return node_->kind; }
  bool is_atomic() const noexcept;  // Atom, Top or Bottom
  bool is_quantifier() const noexcept;
  bool is_binary() const noexcept;
  bool is_unary() const noexcept;

  Symbol predicate() const noexcept { return node_->symbol; }
  std::span<const Term> args() const noexcept { return node_->args; }
  Symbol bound_variable() const noexcept { return node_->symbol; }
  // Left operand, body of a unary connective, or body of a quantifier.
  const Formula& lhs() const noexcept { return node_->children[0]; }
  const Formula& rhs() const noexcept { return node_->children[1]; }
  const Formula& body() const noexcept { return node_->children[0]; }

  bool is_quantifier_free() const noexcept { return node_->quantifier_free; }
  std::size_t hash() const noexcept { return node_->hash; }
  // Number of connective, quantifier and atom nodes.
  std::size_t size() const noexcept { return node_->size; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node {
    Connective kind = Connective::Top;
    Symbol symbol;
    std::vector<Term> args;
    std::vector<Formula> children;
    bool quantifier_free = true;
    std::size_t size = 1;
    std::size_t hash = 0;
  };

  static Formula make(Connective kind, Symbol symbol, std::vector<Term> args,
                      std::vector<Formula> children);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct QuantifiedVariable {
  Quantifier quantifier;
  Symbol variable;
  friend bool operator==(const QuantifiedVariable&, const QuantifiedVariable&) = default;
};

// Closed formula Q1 x1 ... Qn xn M with M quantifier-free.
struct PrenexFormula {
  std::vector<QuantifiedVariable> prefix;
  Formula matrix;

  Formula rebuild() const;
  bool only(Quantifier q) const;
};

// Replaces `~A` by `A -> bot` and `A <-> B` by `(A -> B) & (B -> A)`.
Formula expand_abbreviations(const Formula& f);

std::set<Symbol> free_vars(const Formula& f);
// Variables of a quantifier-free formula in order of first occurrence.
std::vector<Symbol> variables_in_order(const Formula& f);

// Splits a closed formula whose quantifiers all sit at the top.
// Throws NotPrenex or NotClosed.
PrenexFormula to_prenex_decomposition(const Formula& f);

// Non-atomic subformulas of a quantifier-free formula; children come before
// parents and syntactically equal subformulas appear once.
std::vector<Formula> subformulas(const Formula& m);

// Atoms read as terms; `top`/`bot` become the endpoint constants.
std::vector<Term> atoms_as_terms(const Formula& m);

Formula substitute(const Formula& f, const Substitution& sigma);

// Equality up to consistent renaming of bound variables.
bool alpha_equivalent(const Formula& a, const Formula& b);

// Predicate symbols with arity, in order of first occurrence.
std::vector<std::pair<Symbol, int>> predicates_of(const Formula& f);
// Function symbols and constants occurring inside atoms (not predicates).
std::vector<std::pair<Symbol, int>> functions_of(const Formula& f);

// Registers the predicates and function symbols of `f` in `sig`.
void declare_symbols(const Formula& f, Signature& sig);

}  // namespace gdelta

template <>
struct std::hash<gdelta::Formula> {
  std::size_t operator()(const gdelta::Formula& f) const noexcept { return f.hash(); }
};
