#include "gdelta/chaining.hpp"

#include <algorithm>

#include "gdelta/unify.hpp"

namespace gdelta {
namespace {

std::vector<OrderLiteral> leftover(const OrderClause& c, const std::vector<std::size_t>& selected) {
  std::vector<OrderLiteral> rest;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (std::find(selected.begin(), selected.end(), k) == selected.end()) rest.push_back(c.literals()[k]);
  return rest;
}

// No basic term of `c` lies above `t`. Since the order is stable under
// substitution, a term failing this never survives the maximality checks.
bool not_dominated(const Term& t, const OrderClause& c, const ReductionOrder& o) {
  for (const OrderLiteral& l : c.literals())
    if (o.greater(l.lhs, t) || o.greater(l.rhs, t)) return false;
  return true;
}

void extend(const OrderClause& c, const std::vector<std::size_t>& c_cand, std::size_t ci,
            const OrderClause& d, const std::vector<std::size_t>& d_cand, std::size_t di,
            std::vector<std::size_t>& c_sel, std::vector<std::size_t>& d_sel, const Substitution& sigma,
            const ReductionOrder& o, std::vector<Inference>& out) {
  if (ci < c_cand.size()) {
    extend(c, c_cand, ci + 1, d, d_cand, di, c_sel, d_sel, sigma, o, out);
    Substitution next = sigma;
    if (unify(c.literals()[c_sel.front()].rhs, c.literals()[c_cand[ci]].rhs, next)) {
      c_sel.push_back(c_cand[ci]);
      extend(c, c_cand, ci + 1, d, d_cand, di, c_sel, d_sel, next, o, out);
      c_sel.pop_back();
    }
    return;
  }
  if (di < d_cand.size()) {
    extend(c, c_cand, ci, d, d_cand, di + 1, c_sel, d_sel, sigma, o, out);
    Substitution next = sigma;
    if (unify(d.literals()[d_sel.front()].lhs, d.literals()[d_cand[di]].lhs, next)) {
      d_sel.push_back(d_cand[di]);
      extend(c, c_cand, ci, d, d_cand, di + 1, c_sel, d_sel, next, o, out);
      d_sel.pop_back();
    }
    return;
  }
  if (auto inf = chaining(c, c_sel, d, d_sel, o)) out.push_back(std::move(*inf));
}

}  // namespace

std::optional<Inference> irreflexivity_resolution(const OrderClause& c, std::size_t lit, const ReductionOrder& o) {
  const OrderLiteral& l = c.literals().at(lit);
  if (!l.strict) return std::nullopt;
  auto sigma = mgu(l.lhs, l.rhs);
  if (!sigma) return std::nullopt;
  Term s = gdelta::apply(l.lhs, *sigma);
  std::vector<OrderLiteral> rest;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == lit) continue;
    OrderLiteral r = gdelta::apply(c.literals()[k], *sigma);
    if (o.greater(r.lhs, s) || o.greater(r.rhs, s)) return std::nullopt;
    rest.push_back(std::move(r));
  }
  return Inference{OrderClause(std::move(rest)), std::move(*sigma)};
}

std::vector<Inference> irreflexivity_conclusions(const OrderClause& c, const ReductionOrder& o) {
  std::vector<Inference> out;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (auto inf = irreflexivity_resolution(c, k, o)) out.push_back(std::move(*inf));
  return out;
}

std::optional<Inference> chaining(const OrderClause& c, const std::vector<std::size_t>& c_lits, const OrderClause& d,
                                  const std::vector<std::size_t>& d_lits, const ReductionOrder& o) {
  if (c_lits.empty() || d_lits.empty()) return std::nullopt;
  std::vector<Term> chained;
  for (std::size_t i : c_lits) chained.push_back(c.literals().at(i).rhs);
  for (std::size_t j : d_lits) chained.push_back(d.literals().at(j).lhs);
  auto sigma = mgu(chained);
  if (!sigma) return std::nullopt;
  const Term m = gdelta::apply(chained.front(), *sigma);

  std::vector<OrderLiteral> result;
  for (const OrderLiteral& l : leftover(c, c_lits)) {
    OrderLiteral r = gdelta::apply(l, *sigma);
    if (!o.not_greater_or_equal(r.lhs, m) || !o.not_greater_or_equal(r.rhs, m)) return std::nullopt;
    result.push_back(std::move(r));
  }
  // The chained term may survive in the right premise, but only on the
  // right-hand side of a literal.
  for (const OrderLiteral& l : leftover(d, d_lits)) {
    OrderLiteral r = gdelta::apply(l, *sigma);
    if (r.lhs == m || o.greater(r.lhs, m) || o.greater(r.rhs, m)) return std::nullopt;
    result.push_back(std::move(r));
  }
  std::vector<Term> us, rs;
  for (std::size_t i : c_lits) {
    us.push_back(gdelta::apply(c.literals()[i].lhs, *sigma));
    if (!o.not_greater_or_equal(us.back(), m)) return std::nullopt;
  }
  for (std::size_t j : d_lits) {
    rs.push_back(gdelta::apply(d.literals()[j].rhs, *sigma));
    if (!o.not_greater_or_equal(rs.back(), m)) return std::nullopt;
  }
  for (std::size_t a = 0; a < c_lits.size(); ++a)
    for (std::size_t b = 0; b < d_lits.size(); ++b)
      result.push_back({us[a], rs[b], c.literals()[c_lits[a]].strict || d.literals()[d_lits[b]].strict});
  return Inference{OrderClause(std::move(result)), std::move(*sigma)};
}

std::vector<Inference> chaining_conclusions(const OrderClause& c, const OrderClause& d, const ReductionOrder& o) {
  std::vector<std::size_t> c_cand, d_cand;
  // A variable is chained on only in unit clauses such as the endpoint
  // axioms.
  auto eligible = [&](const Term& t, const OrderClause& cl) {
    return (!t.is_variable() || cl.size() == 1) && not_dominated(t, cl, o);
  };
  for (std::size_t k = 0; k < c.size(); ++k)
    if (eligible(c.literals()[k].rhs, c)) c_cand.push_back(k);
  for (std::size_t k = 0; k < d.size(); ++k)
    if (eligible(d.literals()[k].lhs, d)) d_cand.push_back(k);

  std::vector<Inference> out;
  std::vector<std::size_t> c_sel, d_sel;
  for (std::size_t a = 0; a < c_cand.size(); ++a) {
    for (std::size_t b = 0; b < d_cand.size(); ++b) {
      auto sigma = mgu(c.literals()[c_cand[a]].rhs, d.literals()[d_cand[b]].lhs);
      if (!sigma) continue;
      c_sel = {c_cand[a]};
      d_sel = {d_cand[b]};
      std::vector<std::size_t> c_more(c_cand.begin() + a + 1, c_cand.end());
      std::vector<std::size_t> d_more(d_cand.begin() + b + 1, d_cand.end());
      extend(c, c_more, 0, d, d_more, 0, c_sel, d_sel, *sigma, o, out);
    }
  }
  return out;
}

bool has_reflexive(const OrderClause& c) {
  return std::any_of(c.literals().begin(), c.literals().end(),
                     [](const OrderLiteral& l) { return l.strict && l.lhs == l.rhs; });
}

OrderClause strip_reflexive(const OrderClause& c) {
  std::vector<OrderLiteral> rest;
  for (const OrderLiteral& l : c.literals())
    if (!(l.strict && l.lhs == l.rhs)) rest.push_back(l);
  return OrderClause(std::move(rest));
}

bool is_tautology(const OrderClause& c) {
  const auto& lits = c.literals();
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (!lits[i].strict && lits[i].lhs == lits[i].rhs) return true;
    for (std::size_t j = i + 1; j < lits.size(); ++j)
      if (lits[i].lhs == lits[j].rhs && lits[i].rhs == lits[j].lhs && (!lits[i].strict || !lits[j].strict))
        return true;
  }
  return false;
}

namespace {

// Bindings of a one-way match, undone by truncation.
using Bindings = std::vector<std::pair<Symbol, Term>>;

bool match_flat(const Term& pattern, const Term& target, Bindings& b) {
  if (pattern.is_variable()) {
    for (const auto& [v, t] : b)
      if (v == pattern.head()) return t == target;
    b.emplace_back(pattern.head(), target);
    return true;
  }
  if (target.is_variable() || pattern.head() != target.head() || pattern.arity() != target.arity()) return false;
  if (pattern.is_ground()) return pattern == target;
  for (std::size_t i = 0; i < pattern.arity(); ++i)
    if (!match_flat(pattern.args()[i], target.args()[i], b)) return false;
  return true;
}

bool match_literal(const OrderLiteral& l, const OrderLiteral& target, Bindings& b) {
  // c-literal s <= t cannot imply s < t.
  if (!l.strict && target.strict) return false;
  std::size_t mark = b.size();
  if (match_flat(l.lhs, target.lhs, b) && match_flat(l.rhs, target.rhs, b)) return true;
  b.erase(b.begin() + static_cast<std::ptrdiff_t>(mark), b.end());
  return false;
}

// Matches literals of c to distinct literals of d. Gives up (reporting no
// subsumption) after a fixed number of match attempts.
struct SubsumptionSearch {
  std::vector<const OrderLiteral*> lits;
  std::vector<std::vector<const OrderLiteral*>> candidates;
  Bindings bindings;
  std::vector<const OrderLiteral*> used;
  long budget = 300;

  bool run(std::size_t k) {
    if (k == lits.size()) return true;
    for (const OrderLiteral* target : candidates[k]) {
      if (std::find(used.begin(), used.end(), target) != used.end()) continue;
      if (--budget < 0) return false;
      std::size_t mark = bindings.size();
      if (match_literal(*lits[k], *target, bindings)) {
        used.push_back(target);
        if (run(k + 1)) return true;
        used.pop_back();
        bindings.erase(bindings.begin() + static_cast<std::ptrdiff_t>(mark), bindings.end());
      }
      if (budget < 0) return false;
    }
    return false;
  }
};

void add_symbols(const Term& t, std::uint64_t& mask) {
  if (t.is_variable()) return;
  mask |= std::uint64_t{1} << (std::hash<std::string>{}(t.head().name()) % 64);
  for (const Term& a : t.args()) add_symbols(a, mask);
}

}  // namespace

std::uint64_t symbol_mask(const OrderClause& c) {
  std::uint64_t mask = 0;
  for (const OrderLiteral& l : c.literals()) {
    add_symbols(l.lhs, mask);
    add_symbols(l.rhs, mask);
  }
  return mask;
}

bool subsumes(const OrderClause& c, const OrderClause& d) {
  if (c.size() > d.size()) return false;
  // Candidate targets per literal, each checked in isolation; literals with
  // fewest candidates are matched first.
  std::vector<std::pair<const OrderLiteral*, std::vector<const OrderLiteral*>>> table;
  Bindings probe;
  for (const OrderLiteral& l : c.literals()) {
    std::vector<const OrderLiteral*> cands;
    for (const OrderLiteral& target : d.literals()) {
      probe.clear();
      if (match_literal(l, target, probe)) cands.push_back(&target);
    }
    if (cands.empty()) return false;
    table.emplace_back(&l, std::move(cands));
  }
  std::stable_sort(table.begin(), table.end(),
                   [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  SubsumptionSearch search;
  for (auto& [l, cands] : table) {
    search.lits.push_back(l);
    search.candidates.push_back(std::move(cands));
  }
  return search.run(0);
}

}  // namespace gdelta
