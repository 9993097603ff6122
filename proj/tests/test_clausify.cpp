#include <doctest.h>

#include <random>

#include "gdelta/clausify.hpp"
#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"
#include "gdelta/semantics.hpp"
#include "gdelta/skolem.hpp"

using namespace gdelta;

namespace {
Formula F(const char* text) { return parse_formula(text); }
Term T(const char* text) { return parse_term(text); }

std::string canon(ClauseSet cs) {
  for (OrderClause& c : cs) c = normalize(c);
  return render_clause_set(cs);
}

std::string canon(std::initializer_list<const char*> texts) {
  ClauseSet cs;
  for (const char* t : texts) cs.push_back(parse_clause(t));
  return canon(cs);
}

// Truth of a ground clause set under a valuation that covers its terms.
bool holds(const ClauseSet& cs, Valuation v) {
  v[Term::top()] = Rational(1);
  v[Term::bottom()] = Rational(0);
  for (const OrderClause& c : cs) {
    bool sat = false;
    for (const OrderLiteral& l : c.literals()) sat = sat || (l.strict ? v.at(l.lhs) < v.at(l.rhs) : v.at(l.lhs) <= v.at(l.rhs));
    if (!sat) return false;
  }
  return true;
}

OracleConfig wide() {
  OracleConfig c;
  c.max_terms = 64;
  return c;
}
}  // namespace

TEST_CASE("definitions of the worked example") {
  Signature sig;
  Definitions d = definitional_defs(F("D p(f(x)) -> p(x)"), sig);
  REQUIRE(d.defs.size() == 2);
  CHECK(d.defs[0].definiendum == T("p1(x)"));
  CHECK(d.defs[0].shape == Connective::Delta);
  CHECK(d.defs[0].lhs == T("p(f(x))"));
  CHECK(d.defs[1].definiendum == T("p2(x)"));
  CHECK(d.defs[1].shape == Connective::Implies);
  CHECK(d.defs[1].lhs == T("p1(x)"));
  CHECK(*d.defs[1].rhs == T("p(x)"));
  CHECK(d.root == T("p2(x)"));

  Signature s2;
  Definitions atom = definitional_defs(F("p(c)"), s2);
  CHECK(atom.defs.empty());
  CHECK(atom.root == T("p(c)"));

  Signature s3;
  Definitions aa = definitional_defs(F("a & a"), s3);
  REQUIRE(aa.defs.size() == 1);
  CHECK(aa.root == T("p1"));
}

TEST_CASE("definitional names skip input symbols") {
  Signature sig;
  Definitions d = definitional_defs(F("p1 & p2"), sig);
  CHECK(d.root == T("p3"));
}

TEST_CASE("clause tables") {
  CHECK(canon(clausify_def({T("p2(x)"), Connective::Implies, T("p1(x)"), T("p(x)")})) ==
        canon({"{p1(x) <= p(x), p2(x) <= p(x)}", "{top <= p2(x), p(x) < p1(x)}", "{top <= p2(x), p2(x) <= p(x)}",
               "{p(x) <= p2(x)}"}));
  CHECK(canon(clausify_def({T("p1(x)"), Connective::Delta, T("p(f(x))"), std::nullopt})) ==
        canon({"{p1(x) <= bot, top <= p(f(x))}", "{top <= p1(x), p(f(x)) < top}"}));
  CHECK(canon(clausify_def({T("c"), Connective::And, T("a"), T("b")})) ==
        canon({"{c <= a}", "{c <= b}", "{a <= c, b <= c}"}));
  CHECK(canon(clausify_def({T("c"), Connective::Or, T("a"), T("b")})) ==
        canon({"{a <= c}", "{b <= c}", "{c <= a, c <= b}"}));
}

TEST_CASE("each table agrees with D (C <-> F) on all order types") {
  const Connective shapes[] = {Connective::And, Connective::Or, Connective::Implies, Connective::Delta};
  for (Connective shape : shapes) {
    DefEquivalence d{T("c"), shape, T("a"), shape == Connective::Delta ? std::nullopt : std::optional<Term>(T("b"))};
    Formula body = shape == Connective::Delta ? Formula::delta(F("a")) : Formula::binary(shape, F("a"), F("b"));
    Formula spec = Formula::delta(expand_abbreviations(Formula::equivalence(F("c"), body)));
    ClauseSet cs = clausify_def(d);
    for (const OrderType& ot : order_types({T("a"), T("b"), T("c")})) {
      Valuation v = ot.representative();
      CHECK(holds(cs, v) == (eval(spec, v) == Rational(1)));
    }
  }
}

TEST_CASE("cl_val and cl_sat") {
  Signature sig;
  CHECK(canon(cl_val(F("D p(f(x)) -> p(x)"), sig)) ==
        canon({"{p1(x) <= bot, top <= p(f(x))}", "{top <= p1(x), p(f(x)) < top}", "{p1(x) <= p(x), p2(x) <= p(x)}",
               "{top <= p2(x), p(x) < p1(x)}", "{top <= p2(x), p2(x) <= p(x)}", "{p(x) <= p2(x)}", "{p2(x) < top}"}));
  Signature s2;
  CHECK(canon(cl_val(F("a"), s2)) == canon({"{a < top}"}));
  Signature s3;
  ClauseSet aa = cl_val(F("a -> a"), s3);
  CHECK(aa.size() == 5);
  CHECK_FALSE(ground_clause_sat(aa, wide()));

  Signature s4;
  CHECK_FALSE(ground_clause_sat(cl_sat(F("b & ~ D b"), s4), wide()));
  Signature s5;
  CHECK(canon(cl_sat(F("a"), s5)) == canon({"{top <= a}"}));
  Signature s6;
  ClauseSet da = cl_sat(F("D a"), s6);
  CHECK(canon(da) == canon({"{top <= p1}", "{p1 <= bot, top <= a}", "{top <= p1, a < top}"}));
  for (const OrderType& ot : order_types({T("a"), T("p1")}))
    if (holds(da, ot.representative())) CHECK(ot.representative().at(T("a")) == Rational(1));
}

TEST_CASE("hex clauses") {
  Signature sig;
  sig.declare(Symbol("p"), 1, Origin::OriginalPredicate);
  sig.declare(Symbol("r"), 2, Origin::OriginalPredicate);
  auto h = hex(Symbol("q"), {{Symbol("q"), 1}, {Symbol("p"), 1}, {Symbol("r"), 2}}, sig);
  CHECK(canon({hex_to_clause(h[0])}) == canon({"{top <= q(y), q(y) < q(hexw_q(y))}"}));
  CHECK(canon({hex_to_clause(h[1])}) == canon({"{top <= p(y), p(y) < q(hexw_p(y))}"}));
  CHECK(canon({hex_to_clause(h[2])}) == canon({"{top <= r(y, z), r(y, z) < q(hexw_r(y, z))}"}));
  CHECK(hex_to_clause(expand_abbreviations(h[1])) == hex_to_clause(h[1]));
  try {
    hex_to_clause(F("A y. p(y)"));
    FAIL("expected NotHexShape");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHexShape);
  }
}

TEST_CASE("theory clauses") {
  Signature sig;
  sig.declare(Symbol("p"), 1, Origin::OriginalPredicate);
  CHECK(canon(theory_clauses(sig)) == canon({"{bot <= y}", "{y <= top}", "{bot < top}", "{y <= x, d(x, y) < y}",
                                             "{y <= x, x < d(x, y)}", "{x1 < y1, y1 < x1, p(x1) <= p(y1)}"}));
  Signature empty;
  CHECK(theory_clauses(empty).size() == 5);
  Signature g;
  g.declare(Symbol("g"), 2, Origin::OriginalFunction);
  g.declare(Symbol("c"), 0, Origin::Constant);
  ClauseSet t = theory_clauses(g);
  CHECK(t.size() == 6);
  CHECK(canon({t.back()}) == canon({"{x1 < y1, y1 < x1, x2 < y2, y2 < x2, g(x1, x2) <= g(y1, y2)}"}));
  Signature taken;
  taken.declare(Symbol("d"), 0, Origin::Constant);
  ClauseSet t2 = theory_clauses(taken);
  CHECK(render_clause_set(t2).find("d_1(") != std::string::npos);
}

namespace {
Formula random_ground(std::mt19937& rng, int depth) {
  static const char* atoms[] = {"a", "b", "c", "e"};
  int k = static_cast<int>(rng() % (depth <= 0 ? 6 : 12));
  if (k < 4) return parse_formula(atoms[k]);
  if (k == 4) return Formula::top();
  if (k == 5) return Formula::bottom();
  Formula a = random_ground(rng, depth - 1);
  switch (k) {
    case 6:
    case 7: return Formula::conjunction(a, random_ground(rng, depth - 1));
    case 8: return Formula::disjunction(a, random_ground(rng, depth - 1));
    case 9: return Formula::implication(a, random_ground(rng, depth - 1));
    case 10: return Formula::delta(a);
    default: return Formula::negation(a);
  }
}
}  // namespace

TEST_CASE("ground soundness against the oracle") {
  std::mt19937 rng(13);
  for (int i = 0; i < 150; ++i) {
    Formula m = expand_abbreviations(random_ground(rng, 3));
    Signature s1, s2;
    INFO(render_formula(m));
    CHECK(ground_clause_sat(cl_sat(m, s1), wide()) == ground_sat(m));
    CHECK(ground_clause_sat(cl_val(m, s2), wide()) == !ground_valid(m));
  }
}

TEST_CASE("clause count is linear in the subformulas") {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    Formula m = expand_abbreviations(random_ground(rng, 6));
    Signature sig;
    CHECK(cl_val(m, sig).size() <= 4 * subformulas(m).size() + 1);
  }
}
