#include "gdelta/prover.hpp"

#include <algorithm>

#include "gdelta/clausify.hpp"
#include "gdelta/errors.hpp"
#include "gdelta/skolem.hpp"

namespace gdelta {
namespace {

void add_stats(SaturationStats& total, const SaturationStats& s) {
  total.generated += s.generated;
  total.kept += s.kept;
  total.given += s.given;
  total.seconds += s.seconds;
}

void append(ClauseSet& out, const ClauseSet& more) { out.insert(out.end(), more.begin(), more.end()); }

Formula conjunction_of_matrices(const ProblemFile& p) {
  if (p.conjuncts.empty()) return Formula::top();
  Formula f = p.conjuncts.front().matrix;
  for (std::size_t i = 1; i < p.conjuncts.size(); ++i) f = Formula::conjunction(f, p.conjuncts[i].matrix);
  return f;
}

}  // namespace

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Valid: return "VALID";
    case VerdictKind::NotValid: return "NOT_VALID";
    case VerdictKind::Sat: return "SAT";
    case VerdictKind::Unsat: return "UNSAT";
    case VerdictKind::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::vector<Translation> translate_valid(const ProblemFile& p) {
  std::vector<Translation> out;
  for (const PrenexFormula& conjunct : p.conjuncts) {
    Translation t;
    declare_symbols(conjunct.matrix, t.signature);
    Skolemized sk = skolemize_validity(conjunct, t.signature);
    t.clauses = cl_val(sk.result.matrix, t.signature);
    append(t.clauses, theory_clauses(t.signature));
    out.push_back(std::move(t));
  }
  return out;
}

Translation translate_sat(const ProblemFile& p) {
  Translation t;
  for (const PrenexFormula& conjunct : p.conjuncts) declare_symbols(conjunct.matrix, t.signature);
  const Symbol q = t.signature.fresh_name("q");

  std::vector<Formula> matrices;
  for (const PrenexFormula& conjunct : p.conjuncts) {
    bool delta_rooted = conjunct.matrix.kind() == Connective::Delta;
    Skolemized sk = delta_rooted ? skolemize_sat_delta(conjunct, t.signature) : skolemize_sat(conjunct, q, t.signature);
    matrices.push_back(sk.result.matrix);
  }

  // Hex is only needed when some witness is guarded by q.
  std::vector<std::pair<Symbol, int>> predicates;
  bool uses_q = false;
  for (const Formula& m : matrices)
    for (const auto& pa : predicates_of(m)) {
      uses_q = uses_q || pa.first == q;
      if (std::find(predicates.begin(), predicates.end(), pa) == predicates.end()) predicates.push_back(pa);
    }

  for (const Formula& m : matrices) append(t.clauses, cl_sat(m, t.signature));
  if (uses_q)
    for (const Formula& h : hex(q, predicates, t.signature)) t.clauses.push_back(hex_to_clause(h));
  append(t.clauses, theory_clauses(t.signature));
  return t;
}

Verdict prove_valid(const ProblemFile& p, const SaturationLimits& limits) {
  Verdict v;
  bool all_refuted = true;
  for (Translation& t : translate_valid(p)) {
    v.clause_sets.push_back(t.clauses);
    SaturationResult r = saturate(t.clauses, ReductionOrder(t.signature), limits);
    add_stats(v.stats, r.stats);
    switch (r.status) {
      case SaturationResult::Status::Unsat:
        v.traces.push_back(std::move(r.trace));
        break;
      case SaturationResult::Status::Saturated:
        v.kind = VerdictKind::NotValid;
        v.traces.clear();
        v.saturated = std::move(r.saturated);
        return v;
      case SaturationResult::Status::ResourceOut:
        all_refuted = false;
        if (v.exhausted.empty()) v.exhausted = r.exhausted;
        break;
    }
  }
  v.kind = all_refuted ? VerdictKind::Valid : VerdictKind::Unknown;
  if (!all_refuted) v.traces.clear();
  return v;
}

Verdict check_sat(const ProblemFile& p, const SaturationLimits& limits) {
  Verdict v;
  Translation t = translate_sat(p);
  v.clause_sets.push_back(t.clauses);
  SaturationResult r = saturate(t.clauses, ReductionOrder(t.signature), limits);
  v.stats = r.stats;
  switch (r.status) {
    case SaturationResult::Status::Unsat:
      v.kind = VerdictKind::Unsat;
      v.traces.push_back(std::move(r.trace));
      break;
    case SaturationResult::Status::Saturated:
      v.kind = VerdictKind::Sat;
      v.saturated = std::move(r.saturated);
      break;
    case SaturationResult::Status::ResourceOut:
      v.kind = VerdictKind::Unknown;
      v.exhausted = r.exhausted;
      break;
  }
  return v;
}

Verdict herbrand_mode(const ProblemFile& p, std::size_t depth, std::size_t width, const OracleConfig& config) {
  Verdict v;
  for (const PrenexFormula& conjunct : p.conjuncts) {
    Signature sig;
    declare_symbols(conjunct.matrix, sig);
    Skolemized sk = skolemize_validity(conjunct, sig);
    auto instances = herbrand_validity_search(sk.result, depth, width, config);
    if (!instances) {
      v.kind = VerdictKind::Unknown;
      v.exhausted = "herbrand bounds";
      v.witnesses.clear();
      return v;
    }
    HerbrandWitness w;
    w.instances = *instances;
    w.disjunction = instance_disjunction(sk.result, w.instances);
    w.reconstructed = deskolemize(herbrand_disjunction(sk, w.instances));
    w.reconstruction_matches = alpha_equivalent(w.reconstructed, conjunct.rebuild());
    v.witnesses.push_back(std::move(w));
  }
  v.kind = VerdictKind::Valid;
  return v;
}

Verdict oracle_mode(const ProblemFile& p, Question question, const OracleConfig& config) {
  for (const PrenexFormula& conjunct : p.conjuncts)
    if (!conjunct.prefix.empty())
      throw Error(ErrorKind::NotGround, "oracle mode needs quantifier-free conjuncts: " + render_formula(conjunct.rebuild()));
  Formula m = conjunction_of_matrices(p);
  Verdict v;
  if (question == Question::Validity)
    v.kind = ground_valid(m, config) ? VerdictKind::Valid : VerdictKind::NotValid;
  else
    v.kind = ground_sat(m, config) ? VerdictKind::Sat : VerdictKind::Unsat;
  return v;
}

}  // namespace gdelta
