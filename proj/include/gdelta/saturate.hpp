#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "gdelta/chaining.hpp"
#include "gdelta/clause.hpp"
#include "gdelta/order.hpp"

namespace gdelta {

enum class Rule { Input, IrreflexivityResolution, Chaining };

struct ProofStep {
  int id = 0;
  Rule rule = Rule::Input;
  std::vector<int> parents;
  Substitution unifier;
  OrderClause clause;
};

// Steps in dependency order, numbered from 1. The precedence is part of the
// trace so that it can be replayed without the original problem.
struct ProofTrace {
  std::vector<std::pair<Symbol, int>> precedence;
  std::vector<ProofStep> steps;
};

struct SaturationLimits {
  std::size_t max_clauses = 100000;
  std::chrono::milliseconds timeout{10000};
};

struct SaturationStats {
  std::size_t generated = 0;  // conclusions of all inferences
  std::size_t kept = 0;       // clauses that entered the passive set
  std::size_t given = 0;      // clauses that were activated
  double seconds = 0;
};

struct SaturationResult {
  enum class Status { Unsat, Saturated, ResourceOut };
  Status status = Status::ResourceOut;
  ProofTrace trace;        // Unsat only; ends in the empty clause
  ClauseSet saturated;     // Saturated only; the active set
  SaturationStats stats;
  std::string exhausted;   // ResourceOut only: "clauses" or "time"
};

// Given-clause saturation under chaining and irreflexivity resolution with
// tautology deletion and forward subsumption. Literals s < s are removed
// as soon as they appear; the trace shows this as irreflexivity resolution
// with the empty unifier.
SaturationResult saturate(const ClauseSet& input, const ReductionOrder& order, const SaturationLimits& limits = {});
// Precedence from the symbols of `input`, in order of first occurrence.
SaturationResult saturate(const ClauseSet& input, const SaturationLimits& limits = {});
ReductionOrder order_for(const ClauseSet& clauses);

std::string to_string(Rule rule);
std::string render_trace(const ProofTrace& trace);
// Throws Error(BadTrace) on malformed text.
ProofTrace parse_trace(std::string_view text);
// Several traces written one after another; each starts at its header.
std::vector<ProofTrace> parse_traces(std::string_view text);
// Re-executes every step against its parents and throws Error(BadTrace) on
// the first step whose clause or unifier is not reproduced. Input steps are
// checked against `input` when it is nonempty.
void replay(const ProofTrace& trace, const ClauseSet& input = {});

}  // namespace gdelta
