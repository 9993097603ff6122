#include <doctest.h>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"
#include "gdelta/semantics.hpp"
#include "gdelta/skolem.hpp"

using namespace gdelta;

namespace {
PrenexFormula P(const char* text) { return to_prenex_decomposition(parse_formula(text)); }
Term T(const char* text) { return parse_term(text); }

// Renames generated symbols so results can be compared with hand-written
// formulas.
Formula rename(const Formula& f, const std::vector<std::pair<std::string, std::string>>& names) {
  std::string text = render_formula(f);
  for (const auto& [from, to] : names) {
    for (std::size_t pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size()))
      text.replace(pos, from.size(), to);
  }
  return parse_formula(text);
}
}  // namespace

TEST_CASE("validity skolemization") {
  Signature sig;
  Skolemized s = skolemize_validity(P("E x. A y. (D p(y) -> p(x))"), sig);
  CHECK(alpha_equivalent(rename(s.result.rebuild(), {{"sk_v_0", "f"}}), parse_formula("E x. (D p(f(x)) -> p(x))")));
  REQUIRE(s.generated.size() == 1);
  CHECK(s.generated[0].arity == 1);
  CHECK(s.generated[0].prefix_position == 1);
  CHECK(s.generated[0].origin == Origin::Skolem);

  Signature sig2;
  CHECK(rename(skolemize_validity(P("A x. p(x)"), sig2).result.rebuild(), {{"sk_v_0", "c"}}) == parse_formula("p(c)"));
  Signature sig3;
  CHECK(alpha_equivalent(rename(skolemize_validity(P("A x. E y. p(x, y)"), sig3).result.rebuild(), {{"sk_v_0", "c"}}),
                         parse_formula("E y. p(c, y)")));
}

TEST_CASE("sat skolemization") {
  Signature sig;
  Skolemized s = skolemize_sat(P("E x. p(x)"), Symbol("q"), sig);
  CHECK(alpha_equivalent(rename(s.result.rebuild(), {{"sk_s_0", "f"}}), parse_formula("A x. D (q(x) -> p(f(x)))")));

  Signature sig2;
  CHECK(alpha_equivalent(skolemize_sat(P("A y. ~ D p(y)"), Symbol("q"), sig2).result.rebuild(),
                         parse_formula("A y. D (~ D p(y))")));
  CHECK_FALSE(sig2.contains(Symbol("q")));

  Signature sig3;
  Skolemized two = skolemize_sat(P("E x. E y. r(x, y)"), Symbol("q"), sig3);
  CHECK(alpha_equivalent(rename(two.result.rebuild(), {{"sk_s_0", "f1"}, {"sk_s_1", "f2"}}),
                         parse_formula("A x. A y. D (q(x) -> q(y) -> r(f1(x), f2(y, x)))")));
}

TEST_CASE("dual skolemization of D-rooted formulas") {
  Signature sig;
  CHECK(alpha_equivalent(rename(skolemize_sat_delta(P("A x. E y. D r(x, y)"), sig).result.rebuild(), {{"sk_s_0", "g"}}),
                         parse_formula("A x. D r(x, g(x))")));
  Signature sig2;
  CHECK(rename(skolemize_sat_delta(P("E y. D p(y)"), sig2).result.rebuild(), {{"sk_s_0", "c"}}) ==
        parse_formula("D p(c)"));
  Signature sig3;
  CHECK(alpha_equivalent(rename(skolemize_sat_delta(P("E y. A x. D r(x, y)"), sig3).result.rebuild(), {{"sk_s_0", "c"}}),
                         parse_formula("A x. D r(x, c)")));
  Signature sig4;
  try {
    skolemize_sat_delta(P("E y. p(y)"), sig4);
    FAIL("expected NotDeltaPrefixed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDeltaPrefixed);
  }
}

TEST_CASE("hex conjuncts") {
  Signature sig;
  sig.declare(Symbol("p"), 1, Origin::OriginalPredicate);
  auto h = hex(Symbol("q"), {{Symbol("q"), 1}, {Symbol("p"), 1}}, sig);
  REQUIRE(h.size() == 2);
  CHECK(alpha_equivalent(h[0], parse_formula("A y. (D (top -> q(y)) | ~ D (q(hexw_q(y)) -> q(y)))")));
  CHECK(alpha_equivalent(h[1], parse_formula("A y. (D (top -> p(y)) | ~ D (q(hexw_p(y)) -> p(y)))")));
  CHECK(sig.find(Symbol("hexw_p"))->origin == Origin::HexWitness);

  Signature sig2;
  CHECK(hex(Symbol("q"), {{Symbol("q"), 1}}, sig2).size() == 1);

  Signature sig3;
  auto h3 = hex(Symbol("q"), {{Symbol("q"), 1}, {Symbol("r"), 2}}, sig3);
  CHECK(alpha_equivalent(h3[1], parse_formula("A y. A z. (D (top -> r(y, z)) | ~ D (q(hexw_r(y, z)) -> r(y, z)))")));
  CHECK(sig3.find(Symbol("hexw_r"))->arity == 2);
}

TEST_CASE("generated names avoid input symbols") {
  Signature sig;
  Skolemized s = skolemize_validity(P("A x. sk_v_0(x)"), sig);
  REQUIRE(s.generated.size() == 1);
  CHECK(s.generated[0].symbol != Symbol("sk_v_0"));
  Signature sig2;
  sig2.declare(Symbol("hexw_p"), 0, Origin::Constant);
  auto h = hex(Symbol("q"), {{Symbol("p"), 1}}, sig2);
  CHECK(render_formula(h[0]).find("hexw_p_1") != std::string::npos);
}

TEST_CASE("herbrand universe") {
  Signature only_p;
  only_p.declare(Symbol("p"), 1, Origin::OriginalPredicate);
  CHECK(herbrand_universe(only_p, 1) == std::vector<Term>{T("c"), T("f(c)")});

  Signature cf;
  cf.declare(Symbol("c"), 0, Origin::Constant);
  cf.declare(Symbol("f"), 1, Origin::OriginalFunction);
  CHECK(herbrand_universe(cf, 2) == std::vector<Term>{T("c"), T("f(c)"), T("f(f(c))")});

  Signature cg;
  cg.declare(Symbol("c"), 0, Origin::Constant);
  cg.declare(Symbol("g"), 2, Origin::OriginalFunction);
  CHECK(herbrand_universe(cg, 1) == std::vector<Term>{T("c"), T("g(c, c)")});
}

TEST_CASE("de-skolemization") {
  Signature sig;
  Skolemized single = skolemize_validity(P("A z. p(z)"), sig);
  CHECK(alpha_equivalent(deskolemize(herbrand_disjunction(single, {{}})), parse_formula("A z. p(z)")));

  Signature sig2;
  PrenexFormula a = P("E x. A y. (D p(y) -> p(x))");
  Skolemized s = skolemize_validity(a, sig2);
  Term c = Term::constant(Symbol("c"));
  Term fc = Term::application(s.generated[0].symbol, {c});
  HerbrandDisjunction h = herbrand_disjunction(s, {{c}, {fc}});
  CHECK(ground_valid(instance_disjunction(s.result, h.instances)));
  CHECK(alpha_equivalent(deskolemize(h), a.rebuild()));

  // x := g(c) makes g(c) and f(g(c)) mutually below each other: no
  // maximal Skolem term remains once the z position is bound.
  Signature sig3;
  Skolemized w = skolemize_validity(P("E x. A y. A z. r(x, y, z)"), sig3);
  Symbol g = w.generated[1].symbol;
  try {
    deskolemize(herbrand_disjunction(w, {{Term::application(g, {c})}}));
    FAIL("expected MalformedWitness");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedWitness);
  }
  try {
    deskolemize(herbrand_disjunction(w, {{c, c}}));
    FAIL("expected MalformedWitness");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedWitness);
  }
  // Two instances whose Skolem terms interleave still merge.
  Term f = Term::application(w.generated[0].symbol, {c});
  CHECK(alpha_equivalent(deskolemize(herbrand_disjunction(w, {{c}, {f}})), parse_formula("E x. A y. A z. r(x, y, z)")));
}
