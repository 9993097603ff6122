#include "gdelta/skolem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"

namespace gdelta {
namespace {

Term fresh_skolem(Signature& sig, const char* prefix, std::vector<Term> args, int position, SkolemSignature& out) {
  Symbol name = sig.next_name(prefix);
  out.push_back(sig.declare(name, static_cast<int>(args.size()), Origin::Skolem, position));
  return Term::application(name, std::move(args));
}

void declare_input(const PrenexFormula& a, Signature& sig) { declare_symbols(a.matrix, sig); }

}  // namespace

Skolemized skolemize_validity(const PrenexFormula& a, Signature& sig) {
  declare_input(a, sig);
  Skolemized out{a, {}, {}, std::vector<std::optional<Term>>(a.prefix.size())};
  Substitution sigma;
  std::vector<Term> existentials;
  for (std::size_t i = 0; i < a.prefix.size(); ++i) {
    const QuantifiedVariable& qv = a.prefix[i];
    if (qv.quantifier == Quantifier::Exists) {
      out.result.prefix.push_back(qv);
      existentials.push_back(Term::variable(qv.variable));
    } else {
      Term sk = fresh_skolem(sig, "sk_v_", existentials, static_cast<int>(i), out.generated);
      sigma.insert_or_assign(qv.variable, sk);
      out.skolem_terms[i] = sk;
    }
  }
  out.result.matrix = substitute(a.matrix, sigma);
  return out;
}

Skolemized skolemize_sat(const PrenexFormula& a, Symbol q, Signature& sig) {
  declare_input(a, sig);
  Skolemized out{a, {}, {}, std::vector<std::optional<Term>>(a.prefix.size())};
  Substitution sigma;
  std::vector<Term> guards;
  for (std::size_t i = 0; i < a.prefix.size(); ++i) {
    const QuantifiedVariable& qv = a.prefix[i];
    out.result.prefix.push_back({Quantifier::Forall, qv.variable});
    if (qv.quantifier == Quantifier::Forall) continue;
    std::vector<Term> args{Term::variable(qv.variable)};
    for (std::size_t j = 0; j < i; ++j) args.push_back(Term::variable(a.prefix[j].variable));
    Term sk = fresh_skolem(sig, "sk_s_", std::move(args), static_cast<int>(i), out.generated);
    sigma.insert_or_assign(qv.variable, sk);
    out.skolem_terms[i] = sk;
    guards.push_back(Term::variable(qv.variable));
  }
  if (!guards.empty()) sig.declare(q, 1, Origin::SatPredicate);
  Formula body = substitute(a.matrix, sigma);
  for (auto it = guards.rbegin(); it != guards.rend(); ++it)
    body = Formula::implication(Formula::atom(q, {*it}), body);
  out.result.matrix = Formula::delta(body);
  return out;
}

Skolemized skolemize_sat_delta(const PrenexFormula& a, Signature& sig) {
  if (a.matrix.kind() != Connective::Delta)
    throw Error(ErrorKind::NotDeltaPrefixed, "matrix is not D-rooted: " + render_formula(a.matrix));
  declare_input(a, sig);
  Skolemized out{a, {}, {}, std::vector<std::optional<Term>>(a.prefix.size())};
  Substitution sigma;
  std::vector<Term> universals;
  for (std::size_t i = 0; i < a.prefix.size(); ++i) {
    const QuantifiedVariable& qv = a.prefix[i];
    if (qv.quantifier == Quantifier::Forall) {
      out.result.prefix.push_back(qv);
      universals.push_back(Term::variable(qv.variable));
    } else {
      Term sk = fresh_skolem(sig, "sk_s_", universals, static_cast<int>(i), out.generated);
      sigma.insert_or_assign(qv.variable, sk);
      out.skolem_terms[i] = sk;
    }
  }
  out.result.matrix = substitute(a.matrix, sigma);
  return out;
}

std::vector<Formula> hex(Symbol q, const std::vector<std::pair<Symbol, int>>& predicates, Signature& sig) {
  sig.declare(q, 1, Origin::SatPredicate);
  std::vector<Formula> out;
  for (const auto& [p, arity] : predicates) {
    sig.declare(p, arity, p == q ? Origin::SatPredicate : Origin::OriginalPredicate);
    Symbol witness = sig.fresh_name("hexw_" + p.name());
    sig.declare(witness, arity, Origin::HexWitness);
    std::vector<Symbol> vars;
    std::vector<Term> args;
    for (int i = 1; i <= arity; ++i) {
      vars.emplace_back("y" + std::to_string(i));
      args.push_back(Term::variable(vars.back()));
    }
    Formula atom = Formula::atom(p, args);
    Formula guard = Formula::atom(q, {Term::application(witness, args)});
    Formula body = Formula::disjunction(
        Formula::delta(Formula::implication(Formula::top(), atom)),
        Formula::implication(Formula::delta(Formula::implication(guard, atom)), Formula::bottom()));
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(*it, body);
    out.push_back(body);
  }
  return out;
}

std::vector<Term> herbrand_universe(const Signature& sig, std::size_t depth, std::size_t max_terms) {
  std::vector<std::pair<Symbol, int>> constants, functions;
  for (const SymbolInfo& info : sig.symbols()) {
    switch (info.origin) {
      case Origin::OriginalFunction:
      case Origin::Constant:
      case Origin::Skolem:
      case Origin::HexWitness:
      case Origin::Density: (info.arity == 0 ? constants : functions).emplace_back(info.symbol, info.arity); break;
      default: break;
    }
  }
  if (constants.empty()) constants.emplace_back(sig.fresh_name("c"), 0);
  if (functions.empty()) functions.emplace_back(sig.fresh_name("f"), 1);

  std::vector<Term> all;
  std::vector<Term> frontier;
  for (const auto& [c, arity] : constants) frontier.push_back(Term::constant(c));
  std::sort(frontier.begin(), frontier.end());
  all = frontier;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Term> next;
    for (const auto& [f, arity] : functions) {
      // Argument tuples over `all` with at least one argument at depth d-1.
      std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
      while (true) {
        bool fresh = false;
        std::vector<Term> args;
        for (std::size_t i : idx) {
          args.push_back(all[i]);
          fresh = fresh || all[i].depth() + 1 == d;
        }
        if (fresh) {
          next.push_back(Term::application(f, std::move(args)));
          if (all.size() + next.size() > max_terms)
            throw Error(ErrorKind::TooManyTerms, "Herbrand universe exceeds " + std::to_string(max_terms) + " terms");
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == all.size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
    }
    std::sort(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
  }
  return all;
}

HerbrandDisjunction herbrand_disjunction(const Skolemized& sk, std::vector<InstanceTuple> instances) {
  return {sk.original.prefix, sk.result.matrix, sk.skolem_terms, std::move(instances)};
}

namespace {

// A disjunct during de-Skolemization: positions >= bound_from carry their
// variable; the others carry the term instantiating them.
struct Disjunct {
  std::vector<Term> terms;
  std::size_t bound_from;

  bool operator==(const Disjunct& o) const {
    if (bound_from != o.bound_from) return false;
    for (std::size_t i = 0; i < bound_from; ++i)
      if (terms[i] != o.terms[i]) return false;
    return true;
  }
};

Formula replace_terms(const Formula& f, const std::vector<std::pair<Term, Term>>& repl);

Term replace_term(const Term& t, const std::vector<std::pair<Term, Term>>& repl) {
  for (const auto& [from, to] : repl)
    if (t == from) return to;
  if (t.is_variable() || t.arity() == 0) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(replace_term(a, repl));
  return Term::application(t.head(), std::move(args));
}

Formula replace_terms(const Formula& f, const std::vector<std::pair<Term, Term>>& repl) {
  switch (f.kind()) {
    case Connective::Atom: {
      std::vector<Term> args;
      for (const Term& a : f.args()) args.push_back(replace_term(a, repl));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Connective::Top:
    case Connective::Bottom: return f;
    case Connective::Delta: return Formula::delta(replace_terms(f.body(), repl));
    case Connective::Not: return Formula::negation(replace_terms(f.body(), repl));
    case Connective::Forall:
    case Connective::Exists: return Formula::quantified(f.kind() == Connective::Forall ? Quantifier::Forall : Quantifier::Exists,
                                                        f.bound_variable(), replace_terms(f.body(), repl));
    default: return Formula::binary(f.kind(), replace_terms(f.lhs(), repl), replace_terms(f.rhs(), repl));
  }
}

}  // namespace

Formula deskolemize(const HerbrandDisjunction& h) {
  const std::size_t n = h.original_prefix.size();
  if (h.skolem_terms.size() != n) throw Error(ErrorKind::MalformedWitness, "Skolem term table does not match the prefix");
  std::unordered_map<Symbol, std::size_t> position_of;
  for (std::size_t i = 0; i < n; ++i) {
    bool universal = h.original_prefix[i].quantifier == Quantifier::Forall;
    if (universal != h.skolem_terms[i].has_value())
      throw Error(ErrorKind::MalformedWitness, "Skolem term table does not match the prefix");
    if (universal) position_of.emplace(h.skolem_terms[i]->head(), i);
  }
  auto skolem_position = [&](const Term& t) -> std::optional<std::size_t> {
    if (t.is_variable()) return std::nullopt;
    auto it = position_of.find(t.head());
    if (it == position_of.end()) return std::nullopt;
    return it->second;
  };

  std::vector<Disjunct> current;
  for (const InstanceTuple& tuple : h.instances) {
    Substitution sigma;
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (h.original_prefix[i].quantifier == Quantifier::Exists) sigma.insert_or_assign(h.original_prefix[i].variable, tuple.at(e++));
    if (e != tuple.size()) throw Error(ErrorKind::MalformedWitness, "instance tuple has the wrong length");
    Disjunct d{{}, n};
    for (std::size_t i = 0; i < n; ++i)
      d.terms.push_back(h.skolem_terms[i] ? gdelta::apply(*h.skolem_terms[i], sigma)
                                          : sigma.at(h.original_prefix[i].variable));
    current.push_back(std::move(d));
  }
  if (current.empty()) throw Error(ErrorKind::MalformedWitness, "empty disjunction");

  while (true) {
    // Step 1.
    for (Disjunct& d : current)
      while (d.bound_from > 0 && h.original_prefix[d.bound_from - 1].quantifier == Quantifier::Exists) --d.bound_from;
    // Step 2.
    std::vector<Disjunct> merged;
    for (Disjunct& d : current)
      if (std::find(merged.begin(), merged.end(), d) == merged.end()) merged.push_back(std::move(d));
    current = std::move(merged);
    if (std::all_of(current.begin(), current.end(), [](const Disjunct& d) { return d.bound_from == 0; })) break;

    // Step 3: Skolem terms still present, and a maximal one under the order
    // "proper subterm of, or replaces an earlier prefix position".
    std::vector<Term> skt;
    for (const Disjunct& d : current)
      for (std::size_t i = 0; i < d.bound_from; ++i) {
        std::vector<Term> subs;
        d.terms[i].collect_subterms(subs);
        for (const Term& s : subs)
          if (skolem_position(s) && std::find(skt.begin(), skt.end(), s) == skt.end()) skt.push_back(s);
      }
    auto below = [&](const Term& s, const Term& t) {
      if (s != t && t.contains(s)) return true;
      return *skolem_position(s) < *skolem_position(t);
    };
    std::vector<Term> maximal;
    for (const Term& t : skt)
      if (std::none_of(skt.begin(), skt.end(), [&](const Term& s) { return below(t, s); })) maximal.push_back(t);
    if (maximal.empty()) throw Error(ErrorKind::MalformedWitness, "no maximal Skolem term");
    std::sort(maximal.begin(), maximal.end(),
              [](const Term& a, const Term& b) { return render_term(a) < render_term(b); });
    const Term t = maximal.front();

    Disjunct* home = nullptr;
    for (Disjunct& d : current) {
      bool occurs = false;
      for (std::size_t i = 0; i < d.bound_from; ++i) occurs = occurs || d.terms[i].contains(t);
      if (!occurs) continue;
      if (home) throw Error(ErrorKind::MalformedWitness, render_term(t) + " occurs in two disjuncts");
      home = &d;
    }
    const std::size_t k = home->bound_from - 1;
    if (h.original_prefix[k].quantifier != Quantifier::Forall || home->terms[k] != t)
      throw Error(ErrorKind::MalformedWitness, render_term(t) + " is not at the next universal position");
    for (std::size_t i = 0; i < k; ++i)
      if (home->terms[i].contains(t))
        throw Error(ErrorKind::MalformedWitness, render_term(t) + " occurs outside its variable's positions");
    home->bound_from = k;
  }
  if (current.size() != 1) throw Error(ErrorKind::MalformedWitness, "disjuncts did not merge");

  std::vector<std::pair<Term, Term>> repl;
  for (std::size_t i = 0; i < n; ++i)
    if (h.skolem_terms[i]) repl.emplace_back(*h.skolem_terms[i], Term::variable(h.original_prefix[i].variable));
  PrenexFormula out{h.original_prefix, replace_terms(h.matrix, repl)};
  return out.rebuild();
}

}  // namespace gdelta
