#include "gdelta/clausify.hpp"

#include <unordered_map>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"

namespace gdelta {
namespace {

OrderLiteral le(Term a, Term b) { return OrderLiteral::less_equal(std::move(a), std::move(b)); }
OrderLiteral lt(Term a, Term b) { return OrderLiteral::less(std::move(a), std::move(b)); }

Term atom_term(const Formula& f) {
  if (f.kind() == Connective::Top) return Term::top();
  if (f.kind() == Connective::Bottom) return Term::bottom();
  return Term::application(f.predicate(), {f.args().begin(), f.args().end()});
}

ClauseSet with_root(OrderClause root, const Definitions& d) {
  ClauseSet out{normalize(root)};
  for (const DefEquivalence& def : d.defs)
    for (OrderClause& c : clausify_def(def)) out.push_back(std::move(c));
  return out;
}

}  // namespace

Definitions definitional_defs(const Formula& input, Signature& sig) {
  Formula m = expand_abbreviations(input);
  if (!m.is_quantifier_free()) throw Error(ErrorKind::NotPrenex, "matrix contains quantifiers: " + render_formula(m));
  declare_symbols(m, sig);
  Definitions out;
  std::unordered_map<Formula, Term> names;
  auto name_of = [&](const Formula& f) { return f.is_atomic() ? atom_term(f) : names.at(f); };
  for (const Formula& f : subformulas(m)) {
    std::vector<Term> vars;
    for (Symbol v : variables_in_order(f)) vars.push_back(Term::variable(v));
    Symbol p = sig.next_name("p", 1);
    sig.declare(p, static_cast<int>(vars.size()), Origin::Definitional);
    Term c = Term::application(p, std::move(vars));
    names.emplace(f, c);
    if (f.kind() == Connective::Delta) out.defs.push_back({c, Connective::Delta, name_of(f.body()), std::nullopt});
    else out.defs.push_back({c, f.kind(), name_of(f.lhs()), name_of(f.rhs())});
  }
  out.root = name_of(m);
  return out;
}

ClauseSet clausify_def(const DefEquivalence& d) {
  const Term& c = d.definiendum;
  const Term& a = d.lhs;
  const Term top = Term::top(), bot = Term::bottom();
  ClauseSet out;
  switch (d.shape) {
    case Connective::And: {
      const Term& b = *d.rhs;
      out = {{le(c, a)}, {le(c, b)}, {le(a, c), le(b, c)}};
      break;
    }
    case Connective::Or: {
      const Term& b = *d.rhs;
      out = {{le(a, c)}, {le(b, c)}, {le(c, a), le(c, b)}};
      break;
    }
    case Connective::Implies: {
      const Term& b = *d.rhs;
      out = {{le(a, b), le(c, b)}, {le(top, c), lt(b, a)}, {le(top, c), le(c, b)}, {le(b, c)}};
      break;
    }
    case Connective::Delta: out = {{le(c, bot), le(top, a)}, {le(top, c), lt(a, top)}}; break;
    default: throw Error(ErrorKind::NotHexShape, "no clause table for this connective");
  }
  for (OrderClause& cl : out) cl = normalize(cl);
  return out;
}

ClauseSet cl_val(const Formula& m, Signature& sig) {
  Definitions d = definitional_defs(m, sig);
  return with_root({lt(d.root, Term::top())}, d);
}

ClauseSet cl_sat(const Formula& m, Signature& sig) {
  Definitions d = definitional_defs(m, sig);
  return with_root({le(Term::top(), d.root)}, d);
}

OrderClause hex_to_clause(const Formula& hex_conjunct) {
  auto fail = [&]() -> OrderClause {
    throw Error(ErrorKind::NotHexShape, "not a Hex conjunct: " + render_formula(hex_conjunct));
  };
  Formula f = hex_conjunct;
  while (f.kind() == Connective::Forall) f = f.body();
  if (f.kind() != Connective::Or) return fail();
  // D (top -> p)
  const Formula& first = f.lhs();
  if (first.kind() != Connective::Delta || first.body().kind() != Connective::Implies ||
      first.body().lhs().kind() != Connective::Top || first.body().rhs().kind() != Connective::Atom)
    return fail();
  Term p = atom_term(first.body().rhs());
  // ~ D (q(w) -> p), possibly with the negation expanded.
  Formula second = f.rhs();
  if (second.kind() == Connective::Not) second = second.body();
  else if (second.kind() == Connective::Implies && second.rhs().kind() == Connective::Bottom) second = second.lhs();
  else return fail();
  if (second.kind() != Connective::Delta || second.body().kind() != Connective::Implies) return fail();
  const Formula& guard = second.body().lhs();
  if (guard.kind() != Connective::Atom || second.body().rhs().kind() != Connective::Atom ||
      atom_term(second.body().rhs()) != p)
    return fail();
  return normalize(OrderClause{le(Term::top(), p), lt(p, atom_term(guard))});
}

ClauseSet theory_clauses(Signature& sig) {
  const Term top = Term::top(), bot = Term::bottom();
  const Term x = Term::variable(Symbol("x1")), y = Term::variable(Symbol("x2"));
  ClauseSet out{{le(bot, x)}, {le(x, top)}, {lt(bot, top)}};
  std::vector<SymbolInfo> symbols = sig.symbols();
  Symbol d = sig.fresh_name("d");
  sig.declare(d, 2, Origin::Density);
  Term dxy = Term::application(d, {x, y});
  out.push_back(normalize({le(y, x), lt(dxy, y)}));
  out.push_back(normalize({le(y, x), lt(x, dxy)}));
  for (const SymbolInfo& info : symbols) {
    if (info.arity == 0 || info.origin == Origin::Density) continue;
    std::vector<OrderLiteral> lits;
    std::vector<Term> xs, ys;
    for (int i = 1; i <= info.arity; ++i) {
      xs.push_back(Term::variable(Symbol("x" + std::to_string(i))));
      ys.push_back(Term::variable(Symbol("y" + std::to_string(i))));
      lits.push_back(lt(xs.back(), ys.back()));
      lits.push_back(lt(ys.back(), xs.back()));
    }
    lits.push_back(le(Term::application(info.symbol, xs), Term::application(info.symbol, ys)));
    out.push_back(normalize(OrderClause(std::move(lits))));
  }
  return out;
}

}  // namespace gdelta
