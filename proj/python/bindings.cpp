#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <sstream>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"
#include "gdelta/prover.hpp"
#include "gdelta/saturate.hpp"
#include "gdelta/semantics.hpp"

namespace py = pybind11;
using namespace gdelta;

namespace {

SaturationLimits limits_from(std::size_t max_clauses, long timeout_ms) {
  SaturationLimits l;
  l.max_clauses = max_clauses;
  l.timeout = std::chrono::milliseconds(timeout_ms);
  return l;
}

ClauseSet clauses_from(const std::vector<std::string>& texts) {
  ClauseSet cs;
  for (const std::string& t : texts) cs.push_back(parse_clause(t));
  return cs;
}

std::vector<std::string> clause_texts(const ClauseSet& cs) {
  std::vector<std::string> out;
  for (const OrderClause& c : cs) out.push_back(render_clause(c));
  return out;
}

Question question_from(const std::string& q) {
  if (q == "valid") return Question::Validity;
  if (q == "sat") return Question::Satisfiability;
  throw py::value_error("question must be 'valid' or 'sat'");
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["verdict"] = to_string(v.kind);
  std::vector<std::string> traces;
  for (const ProofTrace& t : v.traces) traces.push_back(render_trace(t));
  d["traces"] = traces;
  py::list sets;
  for (const ClauseSet& cs : v.clause_sets) sets.append(clause_texts(cs));
  d["clause_sets"] = sets;
  py::list witnesses;
  for (const HerbrandWitness& w : v.witnesses) {
    py::dict wd;
    py::list instances;
    for (const InstanceTuple& tuple : w.instances) {
      std::vector<std::string> terms;
      for (const Term& t : tuple) terms.push_back(render_term(t));
      instances.append(terms);
    }
    wd["instances"] = instances;
    wd["disjunction"] = render_formula(w.disjunction);
    wd["reconstructed"] = render_formula(w.reconstructed);
    wd["reconstruction_matches"] = w.reconstruction_matches;
    witnesses.append(wd);
  }
  d["witnesses"] = witnesses;
  d["generated"] = v.stats.generated;
  d["kept"] = v.stats.kept;
  d["given"] = v.stats.given;
  d["seconds"] = v.stats.seconds;
  d["exhausted"] = v.exhausted;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Resolution-style prover for Goedel logic with Delta";

  py::register_exception<Error>(m, "GdeltaError", PyExc_ValueError);

  m.def("render_formula", [](const std::string& text) { return render_formula(parse_formula(text)); },
        "Parses a formula and prints it back.", py::arg("text"));
  m.def("ground_valid", [](const std::string& text) { return ground_valid(parse_formula(text)); }, py::arg("formula"));
  m.def("ground_sat", [](const std::string& text) { return ground_sat(parse_formula(text)); }, py::arg("formula"));
  m.def("ground_clause_sat", [](const std::vector<std::string>& clauses) { return ground_clause_sat(clauses_from(clauses)); },
        py::arg("clauses"));

  m.def(
      "clausify",
      [](const std::string& problem, const std::string& question) {
        ProblemFile p = parse_problem(problem);
        if (question_from(question) == Question::Satisfiability) return std::vector<std::vector<std::string>>{clause_texts(translate_sat(p).clauses)};
        std::vector<std::vector<std::string>> out;
        for (const Translation& t : translate_valid(p)) out.push_back(clause_texts(t.clauses));
        return out;
      },
      "Clause sets given to saturation, one per conjunct for validity.", py::arg("problem"), py::arg("question") = "valid");

  m.def(
      "prove",
      [](const std::string& problem, const std::string& mode, const std::string& question, std::size_t depth,
         std::size_t width, std::size_t max_clauses, long timeout_ms) {
        ProblemFile p = parse_problem(problem);
        Verdict v;
        {
          py::gil_scoped_release release;
          if (mode == "valid")
            v = prove_valid(p, limits_from(max_clauses, timeout_ms));
          else if (mode == "sat")
            v = check_sat(p, limits_from(max_clauses, timeout_ms));
          else if (mode == "herbrand")
            v = herbrand_mode(p, depth, width);
          else if (mode == "oracle")
            v = oracle_mode(p, question_from(question));
          else
            throw Error(ErrorKind::Syntax, "unknown mode " + mode);
        }
        return verdict_dict(v);
      },
      py::arg("problem"), py::arg("mode") = "valid", py::arg("question") = "valid", py::arg("depth") = 2,
      py::arg("width") = 2, py::arg("max_clauses") = 100000, py::arg("timeout_ms") = 10000);

  m.def(
      "saturate",
      [](const std::vector<std::string>& clauses, std::size_t max_clauses, long timeout_ms) {
        SaturationResult r = saturate(clauses_from(clauses), limits_from(max_clauses, timeout_ms));
        py::dict d;
        d["status"] = r.status == SaturationResult::Status::Unsat      ? "unsat"
                      : r.status == SaturationResult::Status::Saturated ? "saturated"
                                                                         : "resource_out";
        d["trace"] = r.status == SaturationResult::Status::Unsat ? render_trace(r.trace) : std::string();
        d["saturated"] = clause_texts(r.saturated);
        d["generated"] = r.stats.generated;
        return d;
      },
      py::arg("clauses"), py::arg("max_clauses") = 100000, py::arg("timeout_ms") = 10000);

  m.def(
      "replay",
      [](const std::string& trace, const std::vector<std::string>& input) {
        for (const ProofTrace& t : parse_traces(trace)) replay(t, clauses_from(input));
      },
      "Raises GdeltaError if a step does not recompute.", py::arg("trace"), py::arg("input") = std::vector<std::string>{});
}
