#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "gdelta/clause.hpp"
#include "gdelta/formula.hpp"

namespace gdelta {

using Rational = boost::rational<std::int64_t>;

// Values of ground atoms, atoms read as terms. The endpoints are implicit.
using Valuation = std::unordered_map<Term, Rational>;

struct OracleConfig {
  // Distinct atoms (or terms) an enumeration may range over.
  std::size_t max_atoms = 7;
  std::size_t max_terms = 7;
  // Herbrand universe size limit for the instance search.
  std::size_t max_universe = 20000;
};

// A weak order of atoms strictly between or merged with the endpoints.
// blocks[0] holds the atoms equal to bot, blocks.back() those equal to top;
// consecutive blocks are strictly increasing.
struct OrderType {
  std::vector<std::vector<Term>> blocks;

  std::size_t levels() const { return blocks.size() - 1; }
  // Block i gets the value i / levels().
  Valuation representative() const;
};

// Exact value; quantifiers are rejected.
Rational eval(const Formula& m, const Valuation& v);

// Calls `visit` on every order type over the distinct non-endpoint atoms,
// stopping early when it returns false. Returns false iff stopped early.
bool for_each_order_type(const std::vector<Term>& atoms, const std::function<bool(const OrderType&)>& visit,
                         const OracleConfig& config = {});
std::vector<OrderType> order_types(const std::vector<Term>& atoms, const OracleConfig& config = {});

bool ground_valid(const Formula& m, const OracleConfig& config = {});
bool ground_sat(const Formula& m, const OracleConfig& config = {});

// Satisfiability of ground order clauses in a dense total order with
// endpoints, every occurring term being an element of the order.
bool ground_clause_sat(const ClauseSet& clauses, const OracleConfig& config = {});

// Ground instance tuples of an existential prefix.
using InstanceTuple = std::vector<Term>;

// Searches for a valid disjunction of instances of `sk` (existential prefix
// only) over Herbrand terms of depth <= `depth`, with at most `width`
// disjuncts. Smaller widths are tried first, then smaller depths.
std::optional<std::vector<InstanceTuple>> herbrand_validity_search(const PrenexFormula& sk, std::size_t depth,
                                                                   std::size_t width,
                                                                   const OracleConfig& config = {});

// The disjunction of the instances of a quantifier-free matrix.
Formula instance_disjunction(const PrenexFormula& sk, const std::vector<InstanceTuple>& instances);

}  // namespace gdelta
