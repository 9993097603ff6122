#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"
#include "gdelta/prover.hpp"

using namespace gdelta;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string dump_clause_sets(const std::vector<ClauseSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets.size() > 1) out += "# conjunct " + std::to_string(i + 1) + "\n";
    out += render_clause_set(sets[i]);
  }
  return out;
}

std::string render_instances(const std::vector<InstanceTuple>& instances) {
  std::string out;
  for (const InstanceTuple& tuple : instances) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t i = 0; i < tuple.size(); ++i) out += (i ? ", " : "") + render_term(tuple[i]);
    out += ')';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prover for prenex Goedel logic with Delta"};
  std::string mode = "valid", question = "valid", file, trace_path, clauses_path;
  std::size_t max_clauses = 100000, depth = 2, width = 2;
  long timeout_ms = 10000;
  app.add_option("--mode", mode, "valid, sat, herbrand or oracle")
      ->check(CLI::IsMember({"valid", "sat", "herbrand", "oracle"}));
  app.add_option("--question", question, "question decided by the oracle mode")
      ->check(CLI::IsMember({"valid", "sat"}));
  app.add_option("--max-clauses", max_clauses, "generated clauses per saturation");
  app.add_option("--timeout-ms", timeout_ms, "wall clock per saturation");
  app.add_option("--depth", depth, "Herbrand term depth");
  app.add_option("--width", width, "Herbrand disjunction width");
  app.add_option("--trace", trace_path, "write refutation traces here");
  app.add_option("--clauses", clauses_path, "write the translated clause sets here");
  app.add_option("FILE", file, "problem file")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    ProblemFile problem = parse_problem(read_file(file));
    SaturationLimits limits{max_clauses, std::chrono::milliseconds(timeout_ms)};
    Verdict v;
    if (mode == "valid") {
      v = prove_valid(problem, limits);
    } else if (mode == "sat") {
      v = check_sat(problem, limits);
    } else if (mode == "herbrand") {
      v = herbrand_mode(problem, depth, width);
    } else {
      v = oracle_mode(problem, question == "valid" ? Question::Validity : Question::Satisfiability);
    }

    if (!clauses_path.empty()) {
      std::vector<ClauseSet> sets;
      if (mode == "valid")
        for (Translation& t : translate_valid(problem)) sets.push_back(std::move(t.clauses));
      else if (mode == "sat")
        sets.push_back(translate_sat(problem).clauses);
      write_file(clauses_path, dump_clause_sets(sets));
    }
    if (!trace_path.empty()) {
      std::string text;
      for (const ProofTrace& t : v.traces) text += render_trace(t);
      write_file(trace_path, text);
    }

    std::cout << to_string(v.kind) << '\n';
    if (mode == "valid" || mode == "sat")
      std::cout << "generated " << v.stats.generated << " clauses, kept " << v.stats.kept << ", activated "
                << v.stats.given << ", " << v.stats.seconds << " s\n";
    if (v.kind == VerdictKind::NotValid || v.kind == VerdictKind::Sat)
      if (!v.saturated.empty()) std::cout << "saturated set: " << v.saturated.size() << " clauses\n";
    if (!v.exhausted.empty()) std::cout << "exhausted: " << v.exhausted << '\n';
    for (const HerbrandWitness& w : v.witnesses) {
      std::cout << "instances: " << render_instances(w.instances) << '\n';
      std::cout << "disjunction: " << render_formula(w.disjunction) << '\n';
      std::cout << "reconstructed: " << render_formula(w.reconstructed)
                << (w.reconstruction_matches ? "" : "  (differs from input)") << '\n';
    }
    return v.kind == VerdictKind::Unknown ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
