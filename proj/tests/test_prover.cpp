#include <doctest.h>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"
#include "gdelta/prover.hpp"

using namespace gdelta;

namespace {
ProblemFile P(const char* text) { return parse_problem(text); }
const SaturationLimits kShort{20000, std::chrono::milliseconds(1500)};
}  // namespace

TEST_CASE("validity pipeline") {
  Verdict v = prove_valid(P("E x. A y. (D p(y) -> p(x))"));
  REQUIRE(v.kind == VerdictKind::Valid);
  REQUIRE(v.traces.size() == 1);
  CHECK(v.traces[0].steps.back().clause.empty());
  replay(v.traces[0], v.clause_sets[0]);

  CHECK(prove_valid(P("E x. A y. (p(y) -> p(x))"), kShort).kind != VerdictKind::Valid);

  // One clause set per conjunct.
  Verdict both = prove_valid(P("A x. p(x) ; E y. p(y)"), kShort);
  CHECK(both.kind != VerdictKind::Valid);
  Verdict two = prove_valid(P("E x. (p(x) -> p(x)) ; D a -> a"));
  CHECK(two.kind == VerdictKind::Valid);
  CHECK(two.traces.size() == 2);
  CHECK(translate_valid(P("A x. p(x) ; E y. p(y)")).size() == 2);

  // Ground problems: the saturation agrees with the oracle when decisive.
  for (const char* text : {"D a -> a", "a -> D a", "~(b & ~ D b)", "(a -> b) | (b -> a)", "D (a | b) -> D a | D b",
                           "~ ~ a -> a", "D a | ~ D a"}) {
    INFO(text);
    Verdict s = prove_valid(P(text), kShort);
    Verdict o = oracle_mode(P(text), Question::Validity);
    if (s.kind != VerdictKind::Unknown) CHECK(s.kind == o.kind);
  }
}

TEST_CASE("satisfiability pipeline") {
  CHECK(check_sat(P("p(c) ; A y. ~ D p(y)")).kind == VerdictKind::Unsat);
  CHECK(check_sat(P("E x. p(x) ; A y. ~ D p(y)"), kShort).kind != VerdictKind::Unsat);
  Verdict b = check_sat(P("b & ~ D b"));
  REQUIRE(b.kind == VerdictKind::Unsat);
  replay(b.traces[0], b.clause_sets[0]);
  CHECK(check_sat(P("a & ~ b"), kShort).kind == VerdictKind::Sat);

  // Without existential quantifiers q is never used and no Hex is added.
  std::string dump = render_clause_set(translate_sat(P("A y. D p(y)")).clauses);
  CHECK(dump.find("hexw") == std::string::npos);
  dump = render_clause_set(translate_sat(P("E x. p(x)")).clauses);
  CHECK(dump.find("{p(x1) < q(hexw_p(x1)), top <= p(x1)}") != std::string::npos);
  CHECK(dump.find("{q(x1) < q(hexw_q(x1)), top <= q(x1)}") != std::string::npos);

  for (const char* text : {"b & ~ D b", "a & ~ a", "D a & (a -> b) & ~ D b", "a | b", "D (a -> b) & D a & ~ D b"}) {
    INFO(text);
    Verdict s = check_sat(P(text), kShort);
    Verdict o = oracle_mode(P(text), Question::Satisfiability);
    if (s.kind != VerdictKind::Unknown) CHECK(s.kind == o.kind);
  }
}

TEST_CASE("herbrand mode") {
  Verdict v = herbrand_mode(P("E x. A y. (D p(y) -> p(x))"), 2, 2);
  REQUIRE(v.kind == VerdictKind::Valid);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].instances.size() == 2);
  CHECK(render_term(v.witnesses[0].instances[0][0]) == "c");
  CHECK(render_term(v.witnesses[0].instances[1][0]) == "sk_v_0(c)");
  CHECK(v.witnesses[0].reconstruction_matches);

  CHECK(herbrand_mode(P("A x. p(x)"), 2, 3).kind == VerdictKind::Unknown);
  Verdict t = herbrand_mode(P("E x. (p(x) -> p(x))"), 1, 1);
  REQUIRE(t.kind == VerdictKind::Valid);
  CHECK(t.witnesses[0].reconstruction_matches);
}

TEST_CASE("oracle mode") {
  CHECK(oracle_mode(P("~(b & ~ D b)"), Question::Validity).kind == VerdictKind::NotValid);
  CHECK(oracle_mode(P("D a -> a"), Question::Validity).kind == VerdictKind::Valid);
  CHECK(oracle_mode(P("b & ~ D b"), Question::Satisfiability).kind == VerdictKind::Unsat);
  CHECK_THROWS_AS(oracle_mode(P("A x. p(x)"), Question::Validity), Error);
  CHECK(to_string(VerdictKind::NotValid) == "NOT_VALID");
}
