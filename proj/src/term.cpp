#include "gdelta/term.hpp"

#include <algorithm>
#include <utility>

namespace gdelta {
namespace {

const Symbol& top_symbol() {
  static const Symbol s("top");
  return s;
}

const Symbol& bottom_symbol() {
  static const Symbol s("bot");
  return s;
}

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void render_into(const Term& t, std::string& out) {
  out += t.head().name();
  if (t.is_variable() || t.arity() == 0) return;
  out += '(';
  bool first = true;
  for (const Term& a : t.args()) {
    if (!first) out += ", ";
    first = false;
    render_into(a, out);
  }
  out += ')';
}

}  // namespace

Term Term::variable(Symbol name) {
  auto node = std::make_shared<Node>();
  node->variable = true;
  node->ground = false;
  node->head = name;
  node->hash = mix(0x51ed270b, name.hash());
  return Term(std::move(node));
}

Term Term::application(Symbol head, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->head = head;
  std::size_t h = mix(0x2545f491, head.hash());
  h = mix(h, args.size());
  for (const Term& a : args) {
    node->ground = node->ground && a.is_ground();
    node->size += a.size();
    node->depth = std::max(node->depth, a.depth() + 1);
    h = mix(h, a.hash());
  }
  node->hash = h;
  node->args = std::move(args);
  return Term(std::move(node));
}

Term Term::top() {
  static const Term t = constant(top_symbol());
  return t;
}

Term Term::bottom() {
  static const Term t = constant(bottom_symbol());
  return t;
}

bool Term::is_top() const noexcept { return is_constant() && head() == top_symbol(); }
bool Term::is_bottom() const noexcept { return is_constant() && head() == bottom_symbol(); }

bool Term::occurs(Symbol var) const {
  if (is_ground()) return false;
  if (is_variable()) return head() == var;
  return std::any_of(args().begin(), args().end(), [&](const Term& a) { return a.occurs(var); });
}

bool Term::contains(const Term& sub) const {
  if (*this == sub) return true;
  if (sub.size() >= size()) return false;
  return std::any_of(args().begin(), args().end(), [&](const Term& a) { return a.contains(sub); });
}

void Term::collect_variables(std::set<Symbol>& out) const {
  if (is_ground()) return;
  if (is_variable()) {
    out.insert(head());
    return;
  }
  for (const Term& a : args()) a.collect_variables(out);
}

void Term::collect_variables_ordered(std::vector<Symbol>& out) const {
  if (is_ground()) return;
  if (is_variable()) {
    if (std::find(out.begin(), out.end(), head()) == out.end()) out.push_back(head());
    return;
  }
  for (const Term& a : args()) a.collect_variables_ordered(out);
}

void Term::collect_subterms(std::vector<Term>& out) const {
  out.push_back(*this);
  for (const Term& a : args()) a.collect_subterms(out);
}

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->variable != b.node_->variable ||
      a.node_->head != b.node_->head || a.node_->args.size() != b.node_->args.size())
    return false;
  return std::equal(a.node_->args.begin(), a.node_->args.end(), b.node_->args.begin());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_variable() != b.is_variable())
    return a.is_variable() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.head() <=> b.head(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Term apply(const Term& t, const Substitution& sigma) {
  if (t.is_ground() || sigma.empty()) return t;
  if (t.is_variable()) {
    auto it = sigma.find(t.head());
    return it == sigma.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(gdelta::apply(a, sigma));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::application(t.head(), std::move(args)) : t;
}

std::string to_string(const Term& t) {
  std::string out;
  render_into(t, out);
  return out;
}

std::string render_substitution(const Substitution& sigma) {
  std::vector<std::pair<Symbol, Term>> bindings(sigma.begin(), sigma.end());
  std::sort(bindings.begin(), bindings.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out = "{";
  bool first = true;
  for (const auto& [var, term] : bindings) {
    if (!first) out += ", ";
    first = false;
    out += var.name();
    out += " <- ";
    out += to_string(term);
  }
  out += '}';
  return out;
}

}  // namespace gdelta
