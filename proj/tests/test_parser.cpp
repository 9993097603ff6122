#include <doctest.h>

#include <random>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"

using namespace gdelta;

namespace {
ErrorKind kind_of(const char* text) {
  try {
    parse_problem(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for: " << text);
  return ErrorKind::Syntax;
}
}  // namespace

TEST_CASE("parse problems") {
  ProblemFile p = parse_problem("E x. A y. (D p(y) -> p(x))");
  REQUIRE(p.conjuncts.size() == 1);
  CHECK(p.conjuncts[0].prefix.size() == 2);
  CHECK(alpha_equivalent(p.conjuncts[0].rebuild(), parse_formula("E x. A y. (D p(y) -> p(x))")));

  ProblemFile two = parse_problem("E x. p(x) ; A y. ~ D p(y)");
  REQUIRE(two.conjuncts.size() == 2);
  CHECK(alpha_equivalent(two.conjuncts[0].rebuild(), parse_formula("E x. p(x)")));
  CHECK(alpha_equivalent(two.conjuncts[1].rebuild(), parse_formula("A y. (D p(y) -> bot)")));

  ProblemFile lines = parse_problem("# comment\nE x. p(x)\nA y. ~ D p(y) &\n  q\n");
  CHECK(lines.conjuncts.size() == 2);
}

TEST_CASE("parse errors") {
  CHECK(kind_of("p(x)") == ErrorKind::NotClosed);
  CHECK(kind_of("p(c) & A x. p(x)") == ErrorKind::NotPrenex);
  CHECK(kind_of("p(c) &") == ErrorKind::Syntax);
  CHECK(kind_of("") == ErrorKind::Syntax);
  CHECK(kind_of("p(c) $ q") == ErrorKind::Syntax);
  CHECK(kind_of("p(c) & p(c, c)") == ErrorKind::ArityMismatch);
  CHECK(kind_of("p(p(c))") == ErrorKind::ArityMismatch);
  try {
    parse_problem("p(c) &\n  (q | )");
    FAIL("expected syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("shadowed binders are renamed apart") {
  Formula f = parse_formula("A x. (p(x) & E x. q(x))");
  PrenexFormula pf{{{Quantifier::Forall, Symbol("x")}}, f.body()};
  CHECK(f.body().rhs().bound_variable() != Symbol("x"));
  CHECK(free_vars(f).empty());
}

TEST_CASE("render formulas") {
  CHECK(render_formula(parse_formula("E x. p(x)")) == "E x. p(x)");
  CHECK(render_formula(parse_formula("D p(c)")) == "D p(c)");
  CHECK(render_formula(parse_formula("bot")) == "bot");
  CHECK(render_formula(parse_formula("(a -> b) -> c")) == "(a -> b) -> c");
  CHECK(render_formula(parse_formula("a -> (b -> c)")) == "a -> b -> c");
  CHECK(render_formula(parse_formula("D (a & b) | c & d")) == "D (a & b) | c & d");
  CHECK(render_formula(Formula::negation(Formula::atom(Symbol("p")))) == "~ p");
}

TEST_CASE("render and parse clauses") {
  OrderClause c{OrderLiteral::less_equal(parse_term("p1(x)"), Term::bottom()),
                OrderLiteral::less_equal(Term::top(), parse_term("p(f(x))"))};
  CHECK(render_clause(c) == "{p1(x) <= bot, top <= p(f(x))}");
  CHECK(parse_clause("{p1(x) <= bot, top <= p(f(x))}") == c);
  CHECK(render_clause(OrderClause{}) == "{}");
  CHECK(parse_clause("{}").empty());
  CHECK(parse_clause("{a < b}").literals()[0].strict);
  CHECK(parse_term("x1").is_variable());
  CHECK(parse_term("c").is_constant());
  Substitution s = parse_substitution("{x1 <- f(y2), y2 <- c}");
  CHECK(render_substitution(s) == "{x1 <- f(y2), y2 <- c}");
}

namespace {
Formula random_formula(std::mt19937& rng, int depth, std::vector<Symbol>& bound, int& fresh) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
  int k = pick(rng);
  auto arg = [&]() {
    if (!bound.empty() && rng() % 2) return Term::variable(bound[rng() % bound.size()]);
    return rng() % 2 ? Term::constant(Symbol("c")) : Term::application(Symbol("f"), {Term::constant(Symbol("c"))});
  };
  switch (k) {
    case 0: return Formula::atom(Symbol("p"), {arg()});
    case 1: return rng() % 2 ? Formula::top() : Formula::bottom();
    case 2: return Formula::atom(Symbol("r"));
    case 3: return Formula::conjunction(random_formula(rng, depth - 1, bound, fresh), random_formula(rng, depth - 1, bound, fresh));
    case 4: return Formula::disjunction(random_formula(rng, depth - 1, bound, fresh), random_formula(rng, depth - 1, bound, fresh));
    case 5: return Formula::implication(random_formula(rng, depth - 1, bound, fresh), random_formula(rng, depth - 1, bound, fresh));
    case 6: return Formula::delta(random_formula(rng, depth - 1, bound, fresh));
    default: {
      Symbol v("v" + std::to_string(fresh++));
      bound.push_back(v);
      Formula body = random_formula(rng, depth - 1, bound, fresh);
      bound.pop_back();
      return Formula::quantified(k == 7 ? Quantifier::Forall : Quantifier::Exists, v, body);
    }
  }
}
}  // namespace

TEST_CASE("render then parse reproduces the formula") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    std::vector<Symbol> bound;
    int fresh = 0;
    Formula f = random_formula(rng, 5, bound, fresh);
    std::string text = render_formula(f);
    INFO(text);
    CHECK(alpha_equivalent(parse_formula(text), f));
  }
}
