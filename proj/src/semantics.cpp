#include "gdelta/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"
#include "gdelta/signature.hpp"
#include "gdelta/skolem.hpp"

namespace gdelta {
namespace {

std::vector<Term> distinct_inner(const std::vector<Term>& atoms) {
  std::vector<Term> out;
  std::unordered_set<Term> seen;
  for (const Term& t : atoms) {
    if (t.is_endpoint()) continue;
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

void require_ground(const Formula& m) {
  if (!m.is_quantifier_free()) throw Error(ErrorKind::NotGround, "formula contains quantifiers: " + render_formula(m));
  if (!free_vars(m).empty()) throw Error(ErrorKind::NotGround, "formula contains variables: " + render_formula(m));
}

}  // namespace

Valuation OrderType::representative() const {
  Valuation v;
  const auto top = static_cast<std::int64_t>(levels());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (const Term& t : blocks[i]) v.insert_or_assign(t, Rational(static_cast<std::int64_t>(i), top));
  return v;
}

Rational eval(const Formula& m, const Valuation& v) {
  switch (m.kind()) {
    case Connective::Top: return Rational(1);
    case Connective::Bottom: return Rational(0);
    case Connective::Atom: {
      Term t = Term::application(m.predicate(), {m.args().begin(), m.args().end()});
      auto it = v.find(t);
      if (it == v.end()) throw Error(ErrorKind::MissingAtom, "no value for " + render_term(t));
      return it->second;
    }
    case Connective::And: return std::min(eval(m.lhs(), v), eval(m.rhs(), v));
    case Connective::Or: return std::max(eval(m.lhs(), v), eval(m.rhs(), v));
    case Connective::Implies: {
      Rational a = eval(m.lhs(), v), b = eval(m.rhs(), v);
      return a <= b ? Rational(1) : b;
    }
    case Connective::Delta: return eval(m.body(), v) == Rational(1) ? Rational(1) : Rational(0);
    case Connective::Not: return eval(m.body(), v) == Rational(0) ? Rational(1) : Rational(0);
    case Connective::Iff: {
      Rational a = eval(m.lhs(), v), b = eval(m.rhs(), v);
      return a == b ? Rational(1) : std::min(a, b);
    }
    case Connective::Forall:
    case Connective::Exists: break;
  }
  throw Error(ErrorKind::NotGround, "cannot evaluate quantified formula " + render_formula(m));
}

bool for_each_order_type(const std::vector<Term>& atoms, const std::function<bool(const OrderType&)>& visit,
                         const OracleConfig& config) {
  std::vector<Term> inner = distinct_inner(atoms);
  const std::size_t n = inner.size();
  if (n > config.max_atoms)
    throw Error(ErrorKind::TooManyAtoms, std::to_string(n) + " atoms exceed the cap of " + std::to_string(config.max_atoms));

  // Level assignment per atom; levels 1..L-1 must all be used.
  for (std::size_t levels = 1; levels <= n + 1; ++levels) {
    std::vector<std::size_t> level(n, 0);
    while (true) {
      std::vector<std::size_t> used(levels + 1, 0);
      for (std::size_t l : level) ++used[l];
      bool onto = true;
      for (std::size_t l = 1; l < levels; ++l) onto = onto && used[l] > 0;
      if (onto) {
        OrderType ot;
        ot.blocks.resize(levels + 1);
        ot.blocks.front().push_back(Term::bottom());
        for (std::size_t i = 0; i < n; ++i) ot.blocks[level[i]].push_back(inner[i]);
        ot.blocks.back().push_back(Term::top());
        if (!visit(ot)) return false;
      }
      std::size_t i = 0;
      while (i < n && level[i] == levels) level[i++] = 0;
      if (i == n) break;
      ++level[i];
    }
  }
  return true;
}

std::vector<OrderType> order_types(const std::vector<Term>& atoms, const OracleConfig& config) {
  std::vector<OrderType> out;
  for_each_order_type(atoms, [&](const OrderType& ot) {
    out.push_back(ot);
    return true;
  }, config);
  return out;
}

bool ground_valid(const Formula& m, const OracleConfig& config) {
  require_ground(m);
  return for_each_order_type(atoms_as_terms(m), [&](const OrderType& ot) {
    return eval(m, ot.representative()) == Rational(1);
  }, config);
}

bool ground_sat(const Formula& m, const OracleConfig& config) {
  require_ground(m);
  return !for_each_order_type(atoms_as_terms(m), [&](const OrderType& ot) {
    return eval(m, ot.representative()) != Rational(1);
  }, config);
}

namespace {

// Incremental weak order: terms are inserted one at a time into an existing
// block or a new block between two existing ones; a clause is checked as soon
// as all of its terms are placed.
class ClauseSearch {
 public:
  ClauseSearch(const ClauseSet& clauses, const OracleConfig& config) {
    index_of(Term::bottom());
    index_of(Term::top());
    for (const OrderClause& c : clauses) {
      if (!c.is_ground()) throw Error(ErrorKind::NonGround, "clause is not ground: " + render_clause(c));
      std::vector<Lit> lits;
      for (const OrderLiteral& l : c.literals()) lits.push_back({index_of(l.lhs), index_of(l.rhs), l.strict});
      clauses_.push_back(std::move(lits));
    }
    const std::size_t inner = terms_.size() - 2;
    if (inner > config.max_terms)
      throw Error(ErrorKind::TooManyTerms, std::to_string(inner) + " terms exceed the cap of " + std::to_string(config.max_terms));
    plan();
  }

  bool run() {
    // Block numbers are kept as fractions of a growing list: rank_[t] is the
    // position of t's block in `blocks_`.
    blocks_ = {{0}, {1}};
    rank_.assign(terms_.size(), -1);
    rank_[0] = 0;
    rank_[1] = 1;
    for (std::size_t c : due_[0])
      if (!satisfied(c)) return false;
    return place(0);
  }

 private:
  struct Lit {
    std::size_t lhs, rhs;
    bool strict;
  };

  std::size_t index_of(const Term& t) {
    auto [it, fresh] = ids_.emplace(t, terms_.size());
    if (fresh) terms_.push_back(t);
    return it->second;
  }

  // Chooses the insertion order greedily: next is the term that completes the
  // most clauses. due_[k] lists the clauses completed after k insertions.
  void plan() {
    const std::size_t n = terms_.size();
    std::vector<std::vector<std::size_t>> terms_of(clauses_.size());
    std::vector<std::vector<std::size_t>> clauses_of(n);
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      std::vector<std::size_t> ts;
      for (const Lit& l : clauses_[c]) {
        ts.push_back(l.lhs);
        ts.push_back(l.rhs);
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      for (std::size_t t : ts) clauses_of[t].push_back(c);
      terms_of[c] = std::move(ts);
    }
    std::vector<bool> placed(n, false);
    placed[0] = placed[1] = true;
    std::vector<std::size_t> missing(clauses_.size());
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      missing[c] = 0;
      for (std::size_t t : terms_of[c]) missing[c] += placed[t] ? 0 : 1;
    }
    due_.assign(n - 1, {});
    for (std::size_t c = 0; c < clauses_.size(); ++c)
      if (missing[c] == 0) due_[0].push_back(c);
    for (std::size_t step = 1; step < n - 1; ++step) {
      std::size_t best = 0;
      long best_score = -1;
      for (std::size_t t = 2; t < n; ++t) {
        if (placed[t]) continue;
        long completes = 0, touches = 0;
        for (std::size_t c : clauses_of[t]) {
          completes += missing[c] == 1;
          touches += 1;
        }
        long score = completes * 100000 + touches;
        if (score > best_score) {
          best_score = score;
          best = t;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t c : clauses_of[best])
        if (--missing[c] == 0) due_[step].push_back(c);
    }
  }

  bool satisfied(std::size_t c) const {
    for (const Lit& l : clauses_[c]) {
      int a = rank_[l.lhs], b = rank_[l.rhs];
      if (l.strict ? a < b : a <= b) return true;
    }
    return false;
  }

  void renumber() {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (std::size_t t : blocks_[i]) rank_[t] = static_cast<int>(i);
  }

  bool check(std::size_t step) const {
    for (std::size_t c : due_[step])
      if (!satisfied(c)) return false;
    return true;
  }

  bool place(std::size_t k) {
    if (k == order_.size()) return true;
    const std::size_t t = order_[k];
    const std::size_t count = blocks_.size();
    // Into block i.
    for (std::size_t i = 0; i < count; ++i) {
      blocks_[i].push_back(t);
      rank_[t] = static_cast<int>(i);
      bool ok = check(k + 1) && place(k + 1);
      blocks_[i].pop_back();
      if (ok) return true;
    }
    // As a new block right after block i.
    for (std::size_t i = 0; i + 1 < count; ++i) {
      blocks_.insert(blocks_.begin() + static_cast<long>(i) + 1, std::vector<std::size_t>{t});
      renumber();
      bool ok = check(k + 1) && place(k + 1);
      blocks_.erase(blocks_.begin() + static_cast<long>(i) + 1);
      renumber();
      if (ok) return true;
    }
    rank_[t] = -1;
    return false;
  }

  std::unordered_map<Term, std::size_t> ids_;
  std::vector<Term> terms_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> due_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<int> rank_;
};

}  // namespace

bool ground_clause_sat(const ClauseSet& clauses, const OracleConfig& config) {
  return ClauseSearch(clauses, config).run();
}

Formula instance_disjunction(const PrenexFormula& sk, const std::vector<InstanceTuple>& instances) {
  std::optional<Formula> out;
  for (const InstanceTuple& tuple : instances) {
    Substitution sigma;
    for (std::size_t i = 0; i < sk.prefix.size(); ++i) sigma.insert_or_assign(sk.prefix[i].variable, tuple.at(i));
    Formula inst = substitute(sk.matrix, sigma);
    out = out ? Formula::disjunction(*out, inst) : inst;
  }
  return out ? *out : Formula::bottom();
}

std::optional<std::vector<InstanceTuple>> herbrand_validity_search(const PrenexFormula& sk, std::size_t depth,
                                                                   std::size_t width, const OracleConfig& config) {
  if (!sk.only(Quantifier::Exists))
    throw Error(ErrorKind::NotPrenex, "instance search needs a purely existential prefix");
  Signature sig;
  declare_symbols(sk.matrix, sig);
  std::vector<Term> universe = herbrand_universe(sig, depth, config.max_universe);

  const std::size_t n = sk.prefix.size();
  // Tuples in order of (depth, components).
  std::vector<std::pair<std::uint32_t, InstanceTuple>> tuples;
  {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      InstanceTuple tuple;
      std::uint32_t d = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tuple.push_back(universe[idx[i]]);
        d = std::max(d, universe[idx[i]].depth());
      }
      tuples.emplace_back(d, std::move(tuple));
      if (tuples.size() > config.max_universe)
        throw Error(ErrorKind::TooManyTerms, "instance tuples exceed " + std::to_string(config.max_universe));
      std::size_t i = 0;
      while (i < n && ++idx[i] == universe.size()) idx[i++] = 0;
      if (i == n) break;
    }
    std::stable_sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  for (std::size_t k = 1; k <= width; ++k) {
    for (std::uint32_t d = 0; d <= depth; ++d) {
      std::size_t avail = 0;
      while (avail < tuples.size() && tuples[avail].first <= d) ++avail;
      if (avail < k) continue;
      std::vector<std::size_t> pick(k);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        if (tuples[pick.back()].first == d) {
          std::vector<InstanceTuple> chosen;
          for (std::size_t i : pick) chosen.push_back(tuples[i].second);
          if (ground_valid(instance_disjunction(sk, chosen), config)) return chosen;
        }
        // Next k-combination of [0, avail).
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == avail - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

}  // namespace gdelta
