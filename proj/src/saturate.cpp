#include "gdelta/saturate.hpp"

#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gdelta/errors.hpp"
#include "gdelta/parser.hpp"
#include "gdelta/signature.hpp"

namespace gdelta {
namespace {

using Clock = std::chrono::steady_clock;

const std::string kRightPrefix = "y";

struct Saturator {
  Saturator(const ReductionOrder& o, const SaturationLimits& l) : order(o), limits(l) {}

  const ReductionOrder& order;
  SaturationLimits limits;
  Clock::time_point start = Clock::now();

  std::vector<ProofStep> steps;  // index = id - 1
  std::vector<int> active;       // step ids
  std::vector<std::uint64_t> active_masks;
  std::unordered_set<OrderClause> seen;
  using Key = std::pair<std::size_t, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> passive;
  SaturationStats stats;
  int empty_step = 0;

  int add_step(Rule rule, std::vector<int> parents, Substitution unifier, OrderClause clause) {
    int id = static_cast<int>(steps.size()) + 1;
    steps.push_back({id, rule, std::move(parents), std::move(unifier), std::move(clause)});
    return id;
  }

  const OrderClause& clause(int id) const { return steps[id - 1].clause; }

  bool subsumed_by_active(const OrderClause& c) const {
    const std::uint64_t mask = symbol_mask(c);
    for (std::size_t k = 0; k < active.size(); ++k)
      if ((active_masks[k] & ~mask) == 0 && subsumes(clause(active[k]), c)) return true;
    return false;
  }

  // Records a conclusion unless it is redundant; returns false once the
  // empty clause is found.
  bool keep(Rule rule, std::vector<int> parents, Substitution unifier, const OrderClause& conclusion) {
    OrderClause c = normalize(conclusion);
    OrderClause stripped = has_reflexive(c) ? normalize(strip_reflexive(c)) : c;
    if (!stripped.empty() && (is_tautology(stripped) || seen.contains(stripped) || subsumed_by_active(stripped)))
      return true;
    int id = add_step(rule, std::move(parents), std::move(unifier), c);
    if (has_reflexive(c)) id = add_step(Rule::IrreflexivityResolution, {id}, {}, stripped);
    if (stripped.empty()) {
      empty_step = id;
      return false;
    }
    seen.insert(stripped);
    passive.emplace(stripped.weight(), id);
    ++stats.kept;
    return true;
  }

  std::string out_of_resources() const {
    if (stats.generated > limits.max_clauses) return "clauses";
    if (Clock::now() - start > limits.timeout) return "time";
    return {};
  }

  bool emit(const std::vector<Inference>& conclusions, Rule rule, const std::vector<int>& parents) {
    for (const Inference& inf : conclusions) {
      ++stats.generated;
      if (!keep(rule, parents, inf.unifier, inf.clause)) return false;
    }
    return true;
  }

  SaturationResult run(const ClauseSet& input) {
    SaturationResult result;
    bool open = true;
    for (const OrderClause& c : input)
      if (!(open = keep(Rule::Input, {}, {}, c))) break;
    while (open) {
      if (std::string why = out_of_resources(); !why.empty()) {
        result.exhausted = why;
        return finish(std::move(result), SaturationResult::Status::ResourceOut);
      }
      if (passive.empty()) {
        for (int a : active) result.saturated.push_back(clause(a));
        return finish(std::move(result), SaturationResult::Status::Saturated);
      }
      int given = passive.top().second;
      passive.pop();
      const OrderClause g = clause(given);
      if (subsumed_by_active(g)) continue;
      active.push_back(given);
      active_masks.push_back(symbol_mask(g));
      ++stats.given;

      open = emit(irreflexivity_conclusions(g, order), Rule::IrreflexivityResolution, {given});
      for (std::size_t k = 0; open && k < active.size(); ++k) {
        int other = active[k];
        OrderClause right = rename_variables(clause(other), kRightPrefix);
        open = emit(chaining_conclusions(g, right, order), Rule::Chaining, {given, other});
        if (open && other != given) {
          OrderClause given_right = rename_variables(g, kRightPrefix);
          open = emit(chaining_conclusions(clause(other), given_right, order), Rule::Chaining, {other, given});
        }
        if (open && !out_of_resources().empty()) break;
      }
    }
    if (!empty_step) return run_out(std::move(result));
    result.trace = extract_proof();
    return finish(std::move(result), SaturationResult::Status::Unsat);
  }

  SaturationResult run_out(SaturationResult result) {
    result.exhausted = out_of_resources();
    return finish(std::move(result), SaturationResult::Status::ResourceOut);
  }

  SaturationResult finish(SaturationResult result, SaturationResult::Status status) {
    stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.status = status;
    result.stats = stats;
    return result;
  }

  ProofTrace extract_proof() const {
    std::vector<char> needed(steps.size() + 1);
    std::vector<int> stack{empty_step};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      if (needed[id]) continue;
      needed[id] = 1;
      for (int p : steps[id - 1].parents) stack.push_back(p);
    }
    ProofTrace trace;
    trace.precedence = order.precedence();
    std::unordered_map<int, int> renumber;
    for (const ProofStep& s : steps) {
      if (!needed[s.id]) continue;
      ProofStep copy = s;
      copy.id = static_cast<int>(trace.steps.size()) + 1;
      for (int& p : copy.parents) p = renumber.at(p);
      renumber.emplace(s.id, copy.id);
      trace.steps.push_back(std::move(copy));
    }
    return trace;
  }
};

void collect_symbols(const Term& t, Signature& sig) {
  if (t.is_variable()) return;
  if (!t.is_endpoint())
    sig.declare(t.head(), static_cast<int>(t.arity()), t.arity() == 0 ? Origin::Constant : Origin::OriginalFunction);
  for (const Term& a : t.args()) collect_symbols(a, sig);
}

[[noreturn]] void bad_trace(const std::string& what) { throw Error(ErrorKind::BadTrace, what); }

}  // namespace

SaturationResult saturate(const ClauseSet& input, const ReductionOrder& order, const SaturationLimits& limits) {
  Saturator s(order, limits);
  return s.run(input);
}

ReductionOrder order_for(const ClauseSet& clauses) {
  Signature sig;
  for (const OrderClause& c : clauses)
    for (const OrderLiteral& l : c.literals()) {
      collect_symbols(l.lhs, sig);
      collect_symbols(l.rhs, sig);
    }
  return ReductionOrder(sig);
}

SaturationResult saturate(const ClauseSet& input, const SaturationLimits& limits) {
  return saturate(input, order_for(input), limits);
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::Input: return "input";
    case Rule::IrreflexivityResolution: return "irreflexivity";
    case Rule::Chaining: return "chaining";
  }
  return "?";
}

std::string render_trace(const ProofTrace& trace) {
  std::ostringstream out;
  out << "# precedence:";
  for (const auto& [sym, arity] : trace.precedence) out << ' ' << sym.name() << '/' << arity;
  out << '\n';
  for (const ProofStep& s : trace.steps) {
    out << s.id << ": " << render_clause(s.clause) << " [" << to_string(s.rule);
    for (int p : s.parents) out << ' ' << p;
    if (s.rule != Rule::Input) out << ' ' << render_substitution(s.unifier);
    out << "]\n";
  }
  return out.str();
}

ProofTrace parse_trace(std::string_view text) {
  ProofTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# precedence:", 0) == 0) {
      std::istringstream words(line.substr(13));
      std::string w;
      while (words >> w) {
        auto slash = w.rfind('/');
        if (slash == std::string::npos) bad_trace("bad precedence entry '" + w + "'");
        trace.precedence.emplace_back(Symbol(w.substr(0, slash)), std::stoi(w.substr(slash + 1)));
      }
      header = true;
      continue;
    }
    if (line[0] == '#') continue;
    auto colon = line.find(": ");
    auto open = line.rfind(" [");
    if (colon == std::string::npos || open == std::string::npos || open < colon || line.back() != ']')
      bad_trace("malformed step '" + line + "'");
    ProofStep step;
    try {
      step.id = std::stoi(line.substr(0, colon));
      step.clause = parse_clause(line.substr(colon + 2, open - colon - 2));
      std::string body = line.substr(open + 2, line.size() - open - 3);
      auto brace = body.find('{');
      std::istringstream head(body.substr(0, brace));
      std::string rule;
      head >> rule;
      if (rule == "input") step.rule = Rule::Input;
      else if (rule == "irreflexivity") step.rule = Rule::IrreflexivityResolution;
      else if (rule == "chaining") step.rule = Rule::Chaining;
      else bad_trace("unknown rule '" + rule + "'");
      int p;
      while (head >> p) step.parents.push_back(p);
      if (brace != std::string::npos) step.unifier = parse_substitution(body.substr(brace));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BadTrace) throw;
      bad_trace("step '" + line + "': " + e.what());
    } catch (const std::exception&) {
      bad_trace("malformed step '" + line + "'");
    }
    trace.steps.push_back(std::move(step));
  }
  if (!header) bad_trace("missing precedence header");
  return trace;
}

std::vector<ProofTrace> parse_traces(std::string_view text) {
  std::vector<ProofTrace> out;
  std::size_t start = text.find("# precedence:");
  // Anything before the first header is a trace without one.
  if (text.find_first_not_of(" \t\r\n") < start) parse_trace(text.substr(0, start));
  while (start != std::string_view::npos) {
    std::size_t next = text.find("\n# precedence:", start);
    std::size_t end = next == std::string_view::npos ? text.size() : next + 1;
    out.push_back(parse_trace(text.substr(start, end - start)));
    start = next == std::string_view::npos ? next : next + 1;
  }
  return out;
}

void replay(const ProofTrace& trace, const ClauseSet& input) {
  ReductionOrder order(trace.precedence);
  std::unordered_set<OrderClause> inputs;
  for (const OrderClause& c : input) inputs.insert(normalize(c));
  std::unordered_map<int, const ProofStep*> by_id;
  for (const ProofStep& s : trace.steps) {
    auto fail = [&](const std::string& why) { bad_trace("step " + std::to_string(s.id) + ": " + why); };
    if (by_id.contains(s.id)) fail("duplicate id");
    std::vector<const OrderClause*> parents;
    for (int p : s.parents) {
      auto it = by_id.find(p);
      if (it == by_id.end()) fail("parent " + std::to_string(p) + " does not precede it");
      parents.push_back(&it->second->clause);
    }
    const std::string clause_text = render_clause(s.clause);
    const std::string sigma_text = render_substitution(s.unifier);
    auto reproduced = [&](const std::vector<Inference>& conclusions) {
      for (const Inference& inf : conclusions)
        if (render_clause(normalize(inf.clause)) == clause_text && render_substitution(inf.unifier) == sigma_text)
          return true;
      return false;
    };
    switch (s.rule) {
      case Rule::Input:
        if (!parents.empty()) fail("input step with parents");
        if (!input.empty() && !inputs.contains(normalize(s.clause))) fail("not an input clause");
        break;
      case Rule::IrreflexivityResolution: {
        if (parents.size() != 1) fail("irreflexivity needs one parent");
        std::vector<Inference> options = irreflexivity_conclusions(*parents[0], order);
        if (has_reflexive(*parents[0])) options.push_back({strip_reflexive(*parents[0]), {}});
        if (!reproduced(options)) fail("conclusion not reproduced");
        break;
      }
      case Rule::Chaining: {
        if (parents.size() != 2) fail("chaining needs two parents");
        OrderClause right = rename_variables(*parents[1], kRightPrefix);
        if (!reproduced(chaining_conclusions(*parents[0], right, order))) fail("conclusion not reproduced");
        break;
      }
    }
    by_id.emplace(s.id, &s);
  }
}

}  // namespace gdelta
