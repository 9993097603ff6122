#include "gdelta/unify.hpp"

namespace gdelta {
namespace {

Term walk(Term t, const Substitution& sigma) {
  while (t.is_variable()) {
    auto it = sigma.find(t.head());
    if (it == sigma.end()) break;
    t = it->second;
  }
  return t;
}

bool occurs(Symbol var, const Term& t, const Substitution& sigma) {
  Term w = walk(t, sigma);
  if (w.is_variable()) return w.head() == var;
  for (const Term& a : w.args())
    if (occurs(var, a, sigma)) return true;
  return false;
}

bool unify_triangular(const Term& a, const Term& b, Substitution& sigma) {
  Term s = walk(a, sigma), t = walk(b, sigma);
  if (s == t) return true;
  if (s.is_variable()) {
    if (occurs(s.head(), t, sigma)) return false;
    sigma.insert_or_assign(s.head(), t);
    return true;
  }
  if (t.is_variable()) return unify_triangular(t, s, sigma);
  if (s.head() != t.head() || s.arity() != t.arity()) return false;
  for (std::size_t i = 0; i < s.arity(); ++i)
    if (!unify_triangular(s.args()[i], t.args()[i], sigma)) return false;
  return true;
}

Term resolve(const Term& t, const Substitution& sigma) {
  Term w = walk(t, sigma);
  if (w.is_variable() || w.is_ground()) return w;
  std::vector<Term> args;
  args.reserve(w.arity());
  for (const Term& a : w.args()) args.push_back(resolve(a, sigma));
  return Term::application(w.head(), std::move(args));
}

}  // namespace

bool unify(const Term& a, const Term& b, Substitution& sigma) {
  if (!unify_triangular(a, b, sigma)) return false;
  Substitution solved;
  for (const auto& [var, term] : sigma) solved.emplace(var, resolve(term, sigma));
  sigma = std::move(solved);
  return true;
}

std::optional<Substitution> mgu(const std::vector<Term>& terms) {
  Substitution sigma;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (!unify_triangular(terms[0], terms[i], sigma)) return std::nullopt;
  Substitution solved;
  for (const auto& [var, term] : sigma) solved.emplace(var, resolve(term, sigma));
  return solved;
}

std::optional<Substitution> mgu(const Term& a, const Term& b) { return mgu(std::vector<Term>{a, b}); }

bool match(const Term& pattern, const Term& target, Substitution& sigma) {
  if (pattern.is_variable()) {
    auto [it, fresh] = sigma.emplace(pattern.head(), target);
    return fresh || it->second == target;
  }
  if (target.is_variable() || pattern.head() != target.head() || pattern.arity() != target.arity()) return false;
  if (pattern.is_ground()) return pattern == target;
  for (std::size_t i = 0; i < pattern.arity(); ++i)
    if (!match(pattern.args()[i], target.args()[i], sigma)) return false;
  return true;
}

}  // namespace gdelta
