#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"
#include "gdelta/semantics.hpp"
#include "gdelta/skolem.hpp"

using namespace gdelta;

namespace {
Formula F(const char* text) { return parse_formula(text); }
Term T(const char* text) { return parse_term(text); }
Rational R(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

// Distinct weak-order patterns of the atoms induced by all maps into the
// grid {0, 1/(n+1), ..., 1}. Every order type is realized on that grid.
std::size_t brute_force_order_type_count(std::size_t n) {
  const std::size_t g = n + 2;
  std::set<std::vector<int>> patterns;
  std::vector<std::size_t> val(n, 0);
  while (true) {
    // Pattern: dense rank of each value among {0, values..., g-1}.
    std::set<std::size_t> vs(val.begin(), val.end());
    vs.insert(0);
    vs.insert(g - 1);
    std::vector<int> pattern;
    for (std::size_t v : val) pattern.push_back(static_cast<int>(std::distance(vs.begin(), vs.find(v))));
    pattern.push_back(static_cast<int>(vs.size()));
    patterns.insert(pattern);
    std::size_t i = 0;
    while (i < n && ++val[i] == g) val[i++] = 0;
    if (i == n) break;
  }
  return patterns.size();
}
}  // namespace

TEST_CASE("eval follows the truth functions") {
  CHECK(eval(F("a -> b"), {{T("a"), R(3, 10)}, {T("b"), R(7, 10)}}) == R(1));
  CHECK(eval(F("b -> a"), {{T("a"), R(3, 10)}, {T("b"), R(7, 10)}}) == R(3, 10));
  CHECK(eval(F("D a"), {{T("a"), R(1, 2)}}) == R(0));
  CHECK(eval(F("D a"), {{T("a"), R(1)}}) == R(1));
  CHECK(eval(F("~ (b & ~ D b)"), {{T("b"), R(1, 2)}}) == R(0));
  CHECK(eval(F("a & b"), {{T("a"), R(1, 3)}, {T("b"), R(1, 2)}}) == R(1, 3));
  CHECK(eval(F("a | b"), {{T("a"), R(1, 3)}, {T("b"), R(1, 2)}}) == R(1, 2));
  CHECK(eval(F("top -> bot"), {}) == R(0));
  try {
    eval(F("a & b"), {{T("a"), R(1)}});
    FAIL("expected MissingAtom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingAtom);
  }
}

TEST_CASE("eval per connective over a value table") {
  const Rational vals[] = {R(0), R(1, 4), R(1, 2), R(1)};
  for (Rational a : vals)
    for (Rational b : vals) {
      Valuation v{{T("a"), a}, {T("b"), b}};
      CHECK(eval(F("a & b"), v) == std::min(a, b));
      CHECK(eval(F("a | b"), v) == std::max(a, b));
      CHECK(eval(F("a -> b"), v) == (a <= b ? R(1) : b));
      CHECK(eval(F("~ a"), v) == (a == R(0) ? R(1) : R(0)));
      CHECK(eval(F("D a"), v) == (a == R(1) ? R(1) : R(0)));
      CHECK(eval(F("a <-> b"), v) == eval(F("(a -> b) & (b -> a)"), v));
    }
}

TEST_CASE("order types") {
  CHECK(order_types({}).size() == 1);
  CHECK(order_types({}).front().blocks.size() == 2);
  // One atom: equal to bot, strictly between, or equal to top.
  CHECK(order_types({T("a")}).size() == 3);
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<Term> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back(Term::constant(Symbol("a" + std::to_string(i))));
    CHECK(order_types(atoms).size() == brute_force_order_type_count(n));
  }
  auto two = order_types({T("a"), T("b")});
  bool chain = false, merged = false;
  for (const OrderType& ot : two) {
    Valuation v = ot.representative();
    if (R(0) < v[T("a")] && v[T("a")] < v[T("b")] && v[T("b")] < R(1)) chain = true;
    if (R(0) < v[T("a")] && v[T("a")] == v[T("b")] && v[T("b")] < R(1)) merged = true;
  }
  CHECK(chain);
  CHECK(merged);
  std::vector<Term> eight;
  for (int i = 0; i < 8; ++i) eight.push_back(Term::constant(Symbol("a" + std::to_string(i))));
  CHECK_THROWS_AS(order_types(eight), Error);
  OracleConfig big;
  big.max_atoms = 8;
  CHECK_NOTHROW(for_each_order_type(eight, [](const OrderType&) { return false; }, big));
}

TEST_CASE("ground validity and satisfiability") {
  CHECK(ground_valid(F("D a -> a")));
  CHECK_FALSE(ground_valid(F("~ (b & ~ D b)")));
  CHECK(ground_valid(F("a -> a")));
  CHECK_FALSE(ground_sat(F("b & ~ D b")));
  CHECK(ground_sat(F("a | ~ a")));
  CHECK_FALSE(ground_sat(F("bot")));
  CHECK_FALSE(ground_valid(F("a | ~ a")));
  try {
    ground_valid(F("A x. p(x)"));
    FAIL("expected NotGround");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGround);
  }
}

TEST_CASE("ground clause satisfiability") {
  auto C = [](std::initializer_list<const char*> cs) {
    ClauseSet out;
    for (const char* c : cs) out.push_back(parse_clause(c));
    return out;
  };
  CHECK(ground_clause_sat(C({"{bot < top}"})));
  CHECK_FALSE(ground_clause_sat(C({"{a < b}", "{b < a}"})));
  CHECK(ground_clause_sat(C({"{a <= b, b <= a}"})));
  CHECK_FALSE(ground_clause_sat(C({"{}"})));
  CHECK_FALSE(ground_clause_sat(C({"{top <= a}", "{a < top}"})));
  CHECK(ground_clause_sat(C({"{a < b}", "{b < c}", "{a <= bot}", "{top <= c}"})));
  CHECK_FALSE(ground_clause_sat(C({"{a < b}", "{b < c}", "{c <= a}"})));
  CHECK_THROWS_AS(ground_clause_sat(C({"{x1 < a}"})), Error);

  // Against plain enumeration of order types.
  std::mt19937 rng(3);
  const char* names[] = {"bot", "top", "a", "b", "c", "e"};
  for (int round = 0; round < 300; ++round) {
    ClauseSet cs;
    int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      std::vector<OrderLiteral> lits;
      int len = static_cast<int>(rng() % 3);
      for (int j = 0; j <= len; ++j)
        lits.push_back({Term::constant(Symbol(names[rng() % 6])), Term::constant(Symbol(names[rng() % 6])), rng() % 2 == 0});
      cs.push_back(OrderClause(std::move(lits)));
    }
    bool expected = !for_each_order_type({T("a"), T("b"), T("c"), T("e")}, [&](const OrderType& ot) {
      Valuation v = ot.representative();
      v[Term::top()] = R(1);
      v[Term::bottom()] = R(0);
      for (const OrderClause& c : cs) {
        bool sat = false;
        for (const OrderLiteral& l : c.literals())
          sat = sat || (l.strict ? v[l.lhs] < v[l.rhs] : v[l.lhs] <= v[l.rhs]);
        if (!sat) return true;
      }
      return false;
    });
    CHECK(ground_clause_sat(cs) == expected);
  }
}

TEST_CASE("herbrand validity search") {
  PrenexFormula ex = to_prenex_decomposition(F("E x. (D p(f(x)) -> p(x))"));
  auto found = herbrand_validity_search(ex, 2, 2);
  REQUIRE(found);
  REQUIRE(found->size() == 2);
  CHECK((*found)[0] == std::vector<Term>{T("c")});
  CHECK((*found)[1] == std::vector<Term>{T("f(c)")});
  CHECK(ground_valid(instance_disjunction(ex, *found)));

  for (std::size_t d = 0; d <= 2; ++d)
    CHECK_FALSE(herbrand_validity_search(to_prenex_decomposition(F("E x. p(x)")), d, 3));

  auto trivial = herbrand_validity_search(to_prenex_decomposition(F("E x. (p(x) -> p(x))")), 1, 1);
  REQUIRE(trivial);
  CHECK(*trivial == std::vector<InstanceTuple>{{T("c")}});
}

TEST_CASE("value depends only on the order type") {
  std::mt19937 rng(5);
  const char* pool[] = {"a", "b", "c"};
  auto random_formula = [&](auto&& self, int depth) -> Formula {
    int k = static_cast<int>(rng() % (depth <= 0 ? 3 : 8));
    if (k < 3) return parse_formula(pool[k]);
    Formula a = self(self, depth - 1);
    switch (k) {
      case 3: return Formula::conjunction(a, self(self, depth - 1));
      case 4: return Formula::disjunction(a, self(self, depth - 1));
      case 5: return Formula::implication(a, self(self, depth - 1));
      case 6: return Formula::delta(a);
      default: return Formula::implication(a, Formula::bottom());
    }
  };
  auto classify = [](Rational r) { return r == R(0) ? 0 : r == R(1) ? 2 : 1; };
  for (int round = 0; round < 200; ++round) {
    Formula m = random_formula(random_formula, 4);
    for (const OrderType& ot : order_types({T("a"), T("b"), T("c")})) {
      // A second strictly increasing assignment of block values.
      Valuation rep = ot.representative(), other;
      const std::int64_t L = static_cast<std::int64_t>(ot.levels());
      for (std::size_t i = 0; i < ot.blocks.size(); ++i) {
        std::int64_t i64 = static_cast<std::int64_t>(i);
        Rational value = i64 == L ? R(1) : R(i64 * i64, L * L + 1);
        for (const Term& t : ot.blocks[i]) other[t] = value;
      }
      for (const Formula& s : subformulas(m)) CHECK(classify(eval(s, rep)) == classify(eval(s, other)));
      // Squeezing the inner blocks below c keeps a non-1 value below c.
      Rational bound(1, 3);
      Valuation squeezed;
      for (std::size_t i = 0; i < ot.blocks.size(); ++i) {
        std::int64_t i64 = static_cast<std::int64_t>(i);
        Rational value = i64 == L ? R(1) : bound * R(i64, L);
        for (const Term& t : ot.blocks[i]) squeezed[t] = value;
      }
      if (eval(m, rep) < R(1)) CHECK(eval(m, squeezed) <= bound);
    }
  }
}
