#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdelta/parser.hpp"
#include "gdelta/saturate.hpp"
#include "gdelta/semantics.hpp"
#include "gdelta/signature.hpp"

namespace gdelta {

enum class VerdictKind { Valid, NotValid, Sat, Unsat, Unknown };
std::string to_string(VerdictKind kind);

enum class Question { Validity, Satisfiability };

// The clause set handed to one saturation, with the signature it lives in.
struct Translation {
  ClauseSet clauses;
  Signature signature;
};

struct HerbrandWitness {
  std::vector<InstanceTuple> instances;
  Formula disjunction;
  Formula reconstructed;
  bool reconstruction_matches = false;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  // Valid: one refutation per conjunct. Unsat: one refutation.
  std::vector<ProofTrace> traces;
  // NotValid / Sat: the saturated set that decided it.
  ClauseSet saturated;
  // Every clause set that was saturated, in order.
  std::vector<ClauseSet> clause_sets;
  // Herbrand mode: one per conjunct.
  std::vector<HerbrandWitness> witnesses;
  SaturationStats stats;
  // Unknown: which limit ran out.
  std::string exhausted;
};

// One clause set per conjunct: validity Skolemization, cl_val, theory
// clauses over the conjunct's own signature.
std::vector<Translation> translate_valid(const ProblemFile& p);
// One clause set for the whole problem: skq (dual Skolemization for
// D-rooted matrices), Hex over the resulting predicates, cl_sat, theory
// clauses.
Translation translate_sat(const ProblemFile& p);

Verdict prove_valid(const ProblemFile& p, const SaturationLimits& limits = {});
Verdict check_sat(const ProblemFile& p, const SaturationLimits& limits = {});
Verdict herbrand_mode(const ProblemFile& p, std::size_t depth, std::size_t width, const OracleConfig& config = {});
// Ground problems only; throws NotGround or TooManyAtoms.
Verdict oracle_mode(const ProblemFile& p, Question question, const OracleConfig& config = {});

}  // namespace gdelta
