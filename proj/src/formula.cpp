#include "gdelta/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>
#include <utility>

#include "gdelta/errors.hpp"

namespace gdelta {
namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Connective kind, Symbol symbol, std::vector<Term> args,
                      std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->symbol = symbol;
  std::size_t h = mix(0x1f83d9ab, static_cast<std::size_t>(kind));
  h = mix(h, symbol.hash());
  for (const Term& a : args) h = mix(h, a.hash());
  node->quantifier_free = kind != Connective::Forall && kind != Connective::Exists;
  for (const Formula& c : children) {
    h = mix(h, c.hash());
    node->size += c.size();
    node->quantifier_free = node->quantifier_free && c.is_quantifier_free();
  }
  node->hash = h;
  node->args = std::move(args);
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::atom(Symbol predicate, std::vector<Term> args) {
  return make(Connective::Atom, predicate, std::move(args), {});
}
Formula Formula::bottom() {
  static const Formula f = make(Connective::Bottom, Symbol(), {}, {});
  return f;
}
Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const Formula f = make(Connective::Top, Symbol(), {}, {});
  return f;
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Connective::And, Symbol(), {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Connective::Or, Symbol(), {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Connective::Implies, Symbol(), {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::delta(Formula body) { return make(Connective::Delta, Symbol(), {}, {std::move(body)}); }
Formula Formula::negation(Formula body) { return make(Connective::Not, Symbol(), {}, {std::move(body)}); }
Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return make(Connective::Iff, Symbol(), {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::forall(Symbol var, Formula body) {
  return make(Connective::Forall, var, {}, {std::move(body)});
}
Formula Formula::exists(Symbol var, Formula body) {
  return make(Connective::Exists, var, {}, {std::move(body)});
}
Formula Formula::quantified(Quantifier q, Symbol var, Formula body) {
  return q == Quantifier::Forall ? forall(var, std::move(body)) : exists(var, std::move(body));
}
Formula Formula::binary(Connective c, Formula lhs, Formula rhs) {
  return make(c, Symbol(), {}, {std::move(lhs), std::move(rhs)});
}

bool Formula::is_atomic() const noexcept {
  return kind() == Connective::Atom || kind() == Connective::Top || kind() == Connective::Bottom;
}
bool Formula::is_quantifier() const noexcept {
  return kind() == Connective::Forall || kind() == Connective::Exists;
}
bool Formula::is_binary() const noexcept {
  switch (kind()) {
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
    case Connective::Iff: return true;
    default: return false;
  }
}
bool Formula::is_unary() const noexcept {
  return kind() == Connective::Delta || kind() == Connective::Not;
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.node_->symbol != b.node_->symbol ||
      a.node_->args != b.node_->args || a.node_->children.size() != b.node_->children.size())
    return false;
  return std::equal(a.node_->children.begin(), a.node_->children.end(), b.node_->children.begin());
}

Formula PrenexFormula::rebuild() const {
  Formula f = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) f = Formula::quantified(it->quantifier, it->variable, f);
  return f;
}

bool PrenexFormula::only(Quantifier q) const {
  return std::all_of(prefix.begin(), prefix.end(), [&](const QuantifiedVariable& v) { return v.quantifier == q; });
}

Formula expand_abbreviations(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Top:
    case Connective::Bottom: return f;
    case Connective::Not: return Formula::implication(expand_abbreviations(f.body()), Formula::bottom());
    case Connective::Iff: {
      Formula a = expand_abbreviations(f.lhs());
      Formula b = expand_abbreviations(f.rhs());
      return Formula::conjunction(Formula::implication(a, b), Formula::implication(b, a));
    }
    case Connective::Delta: return Formula::delta(expand_abbreviations(f.body()));
    case Connective::Forall:
    case Connective::Exists:
      return Formula::quantified(f.kind() == Connective::Forall ? Quantifier::Forall : Quantifier::Exists,
                                 f.bound_variable(), expand_abbreviations(f.body()));
    default: return Formula::binary(f.kind(), expand_abbreviations(f.lhs()), expand_abbreviations(f.rhs()));
  }
}

namespace {

void collect_free(const Formula& f, std::vector<Symbol>& bound, std::set<Symbol>& out) {
  switch (f.kind()) {
    case Connective::Atom: {
      std::set<Symbol> vars;
      for (const Term& t : f.args()) t.collect_variables(vars);
      for (Symbol v : vars)
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
      return;
    }
    case Connective::Top:
    case Connective::Bottom: return;
    case Connective::Forall:
    case Connective::Exists:
      bound.push_back(f.bound_variable());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
    case Connective::Delta:
    case Connective::Not: collect_free(f.body(), bound, out); return;
    default:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
  }
}

void collect_vars_ordered(const Formula& f, std::vector<Symbol>& out) {
  if (f.kind() == Connective::Atom) {
    for (const Term& t : f.args()) t.collect_variables_ordered(out);
    return;
  }
  if (f.is_atomic()) return;
  if (f.is_binary()) {
    collect_vars_ordered(f.lhs(), out);
    collect_vars_ordered(f.rhs(), out);
    return;
  }
  collect_vars_ordered(f.body(), out);
}

}  // namespace

std::set<Symbol> free_vars(const Formula& f) {
  std::vector<Symbol> bound;
  std::set<Symbol> out;
  collect_free(f, bound, out);
  return out;
}

std::vector<Symbol> variables_in_order(const Formula& f) {
  std::vector<Symbol> out;
  collect_vars_ordered(f, out);
  return out;
}

PrenexFormula to_prenex_decomposition(const Formula& f) {
  PrenexFormula result;
  Formula cur = f;
  while (cur.is_quantifier()) {
    result.prefix.push_back({cur.kind() == Connective::Forall ? Quantifier::Forall : Quantifier::Exists,
                             cur.bound_variable()});
    cur = cur.body();
  }
  if (!cur.is_quantifier_free()) throw Error(ErrorKind::NotPrenex, "quantifier below a connective");
  if (!free_vars(f).empty()) {
    std::string names;
    for (Symbol v : free_vars(f)) names += (names.empty() ? "" : ", ") + v.name();
    throw Error(ErrorKind::NotClosed, "free variables: " + names);
  }
  result.matrix = cur;
  return result;
}

namespace {

void collect_subformulas(const Formula& m, std::vector<Formula>& out, std::unordered_set<Formula>& seen) {
  if (m.is_atomic()) return;
  if (m.is_binary()) {
    collect_subformulas(m.lhs(), out, seen);
    collect_subformulas(m.rhs(), out, seen);
  } else {
    collect_subformulas(m.body(), out, seen);
  }
  if (seen.insert(m).second) out.push_back(m);
}

void collect_atoms(const Formula& m, std::vector<Term>& out, std::unordered_set<Term>& seen) {
  switch (m.kind()) {
    case Connective::Atom: {
      Term t = Term::application(m.predicate(), {m.args().begin(), m.args().end()});
      if (seen.insert(t).second) out.push_back(t);
      return;
    }
    case Connective::Top:
      if (seen.insert(Term::top()).second) out.push_back(Term::top());
      return;
    case Connective::Bottom:
      if (seen.insert(Term::bottom()).second) out.push_back(Term::bottom());
      return;
    default:
      if (m.is_binary()) {
        collect_atoms(m.lhs(), out, seen);
        collect_atoms(m.rhs(), out, seen);
      } else {
        collect_atoms(m.body(), out, seen);
      }
  }
}

}  // namespace

std::vector<Formula> subformulas(const Formula& m) {
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  collect_subformulas(m, out, seen);
  return out;
}

std::vector<Term> atoms_as_terms(const Formula& m) {
  std::vector<Term> out;
  std::unordered_set<Term> seen;
  collect_atoms(m, out, seen);
  return out;
}

Formula substitute(const Formula& f, const Substitution& sigma) {
  if (sigma.empty()) return f;
  switch (f.kind()) {
    case Connective::Atom: {
      std::vector<Term> args;
      for (const Term& t : f.args()) args.push_back(gdelta::apply(t, sigma));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Connective::Top:
    case Connective::Bottom: return f;
    case Connective::Forall:
    case Connective::Exists: {
      Substitution inner = sigma;
      inner.erase(f.bound_variable());
      return Formula::quantified(f.kind() == Connective::Forall ? Quantifier::Forall : Quantifier::Exists,
                                 f.bound_variable(), substitute(f.body(), inner));
    }
    case Connective::Delta: return Formula::delta(substitute(f.body(), sigma));
    case Connective::Not: return Formula::negation(substitute(f.body(), sigma));
    default: return Formula::binary(f.kind(), substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
  }
}

namespace {

bool alpha_terms(const Term& a, const Term& b, std::vector<std::pair<Symbol, Symbol>>& env) {
  if (a.is_variable() != b.is_variable()) return false;
  if (a.is_variable()) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->first == a.head() || it->second == b.head()) return it->first == a.head() && it->second == b.head();
    }
    return a.head() == b.head();
  }
  if (a.head() != b.head() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!alpha_terms(a.args()[i], b.args()[i], env)) return false;
  return true;
}

bool alpha(const Formula& a, const Formula& b, std::vector<std::pair<Symbol, Symbol>>& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Connective::Atom:
      if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_terms(a.args()[i], b.args()[i], env)) return false;
      return true;
    case Connective::Top:
    case Connective::Bottom: return true;
    case Connective::Forall:
    case Connective::Exists: {
      env.emplace_back(a.bound_variable(), b.bound_variable());
      bool ok = alpha(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
    case Connective::Delta:
    case Connective::Not: return alpha(a.body(), b.body(), env);
    default: return alpha(a.lhs(), b.lhs(), env) && alpha(a.rhs(), b.rhs(), env);
  }
}

void visit_atoms(const Formula& f, const std::function<void(const Formula&)>& fn) {
  if (f.kind() == Connective::Atom) {
    fn(f);
    return;
  }
  if (f.is_atomic()) return;
  if (f.is_binary()) {
    visit_atoms(f.lhs(), fn);
    visit_atoms(f.rhs(), fn);
  } else {
    visit_atoms(f.body(), fn);
  }
}

void visit_functions(const Term& t, std::vector<std::pair<Symbol, int>>& out) {
  if (t.is_variable()) return;
  std::pair<Symbol, int> entry{t.head(), static_cast<int>(t.arity())};
  if (std::find(out.begin(), out.end(), entry) == out.end()) out.push_back(entry);
  for (const Term& a : t.args()) visit_functions(a, out);
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
  std::vector<std::pair<Symbol, Symbol>> env;
  return alpha(a, b, env);
}

std::vector<std::pair<Symbol, int>> predicates_of(const Formula& f) {
  std::vector<std::pair<Symbol, int>> out;
  visit_atoms(f, [&](const Formula& atom) {
    std::pair<Symbol, int> entry{atom.predicate(), static_cast<int>(atom.args().size())};
    if (std::find(out.begin(), out.end(), entry) == out.end()) out.push_back(entry);
  });
  return out;
}

std::vector<std::pair<Symbol, int>> functions_of(const Formula& f) {
  std::vector<std::pair<Symbol, int>> out;
  visit_atoms(f, [&](const Formula& atom) {
    for (const Term& t : atom.args()) visit_functions(t, out);
  });
  return out;
}

void declare_symbols(const Formula& f, Signature& sig) {
  for (auto [sym, arity] : predicates_of(f)) sig.declare(sym, arity, Origin::OriginalPredicate);
  for (auto [sym, arity] : functions_of(f))
    sig.declare(sym, arity, arity == 0 ? Origin::Constant : Origin::OriginalFunction);
}

}  // namespace gdelta
