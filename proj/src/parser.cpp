#include "gdelta/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "gdelta/errors.hpp"
#include "gdelta/signature.hpp"

namespace gdelta {
namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Dot,
  Semi,
  Newline,
  And,
  Or,
  Implies,
  Iff,
  Not,
  Delta,
  Forall,
  Exists,
  Top,
  Bottom,
  Less,
  LessEq,
  Arrow,  // "<-" in substitutions
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    int depth = 0;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      std::size_t line = line_, col = col_;
      if (c == '\n') {
        advance();
        bool continuation = out.empty() || depth > 0;
        if (!continuation) {
          switch (out.back().kind) {
            case Tok::Semi:
            case Tok::Newline:
            case Tok::And:
            case Tok::Or:
            case Tok::Implies:
            case Tok::Iff:
            case Tok::Not:
            case Tok::Delta:
            case Tok::Dot:
            case Tok::Comma:
            case Tok::Forall:
            case Tok::Exists:
            case Tok::Less:
            case Tok::LessEq:
            case Tok::Arrow: continuation = true; break;
            default: break;
          }
        }
        if (!continuation) out.push_back({Tok::Newline, "\n", line, col});
        continue;
      }
      if (ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
        std::string word(text_.substr(start, pos_ - start));
        Tok kind = Tok::Ident;
        if (word == "A") kind = Tok::Forall;
        else if (word == "E") kind = Tok::Exists;
        else if (word == "D") kind = Tok::Delta;
        else if (word == "top") kind = Tok::Top;
        else if (word == "bot") kind = Tok::Bottom;
        out.push_back({kind, std::move(word), line, col});
        continue;
      }
      auto take = [&](Tok kind, std::size_t len) {
        out.push_back({kind, std::string(text_.substr(pos_, len)), line, col});
        for (std::size_t i = 0; i < len; ++i) advance();
      };
      if (text_.compare(pos_, 3, "<->") == 0) take(Tok::Iff, 3);
      else if (text_.compare(pos_, 2, "->") == 0) take(Tok::Implies, 2);
      else if (text_.compare(pos_, 2, "<=") == 0) take(Tok::LessEq, 2);
      else if (text_.compare(pos_, 2, "<-") == 0) take(Tok::Arrow, 2);
      else if (c == '<') take(Tok::Less, 1);
      else if (c == '(') { take(Tok::LParen, 1); ++depth; }
      else if (c == ')') { take(Tok::RParen, 1); --depth; }
      else if (c == '{') take(Tok::LBrace, 1);
      else if (c == '}') take(Tok::RBrace, 1);
      else if (c == ',') take(Tok::Comma, 1);
      else if (c == '.') take(Tok::Dot, 1);
      else if (c == ';') take(Tok::Semi, 1);
      else if (c == '&') take(Tok::And, 1);
      else if (c == '|') take(Tok::Or, 1);
      else if (c == '~') take(Tok::Not, 1);
      else throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", line_, col_});
    return out;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(peek().line, peek().column, message + (at(Tok::End) ? " at end of input" : " near '" + peek().text + "'"));
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return next();
  }

  std::vector<Formula> problem() {
    std::vector<Formula> out;
    while (true) {
      while (at(Tok::Semi) || at(Tok::Newline)) next();
      if (at(Tok::End)) break;
      out.push_back(formula());
      if (!at(Tok::Semi) && !at(Tok::Newline) && !at(Tok::End)) fail("expected ';' or end of line");
    }
    return out;
  }

  Formula single() {
    while (at(Tok::Newline)) next();
    Formula f = formula();
    while (at(Tok::Newline)) next();
    if (!at(Tok::End)) fail("unexpected input after formula");
    return f;
  }

  Formula formula() {
    if (at(Tok::Forall) || at(Tok::Exists)) {
      Quantifier q = next().kind == Tok::Forall ? Quantifier::Forall : Quantifier::Exists;
      Token name = expect(Tok::Ident, "variable name");
      expect(Tok::Dot, "'.' after quantified variable");
      Symbol original(name.text);
      Symbol bound = fresh_bound(original);
      scope_.emplace_back(original, bound);
      Formula body = formula();
      scope_.pop_back();
      return Formula::quantified(q, bound, body);
    }
    return iff();
  }

  OrderClause clause() {
    expect(Tok::LBrace, "'{'");
    std::vector<OrderLiteral> lits;
    if (!at(Tok::RBrace)) {
      while (true) {
        Term lhs = term();
        bool strict;
        if (at(Tok::Less)) strict = true;
        else if (at(Tok::LessEq)) strict = false;
        else fail("expected '<' or '<='");
        next();
        Term rhs = term();
        lits.push_back({lhs, rhs, strict});
        if (!at(Tok::Comma)) break;
        next();
      }
    }
    expect(Tok::RBrace, "'}'");
    return OrderClause(std::move(lits));
  }

  Substitution substitution() {
    expect(Tok::LBrace, "'{'");
    Substitution sigma;
    if (!at(Tok::RBrace)) {
      while (true) {
        Token var = expect(Tok::Ident, "variable");
        expect(Tok::Arrow, "'<-'");
        sigma.insert_or_assign(Symbol(var.text), term());
        if (!at(Tok::Comma)) break;
        next();
      }
    }
    expect(Tok::RBrace, "'}'");
    return sigma;
  }

  // Terms outside formulas: variable-like identifiers are variables.
  Term term() {
    if (at(Tok::Top)) {
      next();
      return Term::top();
    }
    if (at(Tok::Bottom)) {
      next();
      return Term::bottom();
    }
    Token name = expect(Tok::Ident, "term");
    if (at(Tok::LParen)) return Term::application(Symbol(name.text), arguments(/*in_formula=*/false));
    if (is_variable_name(name.text)) return Term::variable(Symbol(name.text));
    return Term::constant(Symbol(name.text));
  }

  bool done() const { return at(Tok::End); }

 private:
  Formula iff() {
    Formula lhs = implication();
    if (at(Tok::Iff)) {
      next();
      return Formula::equivalence(lhs, iff_operand());
    }
    return lhs;
  }

  Formula iff_operand() {
    if (at(Tok::Forall) || at(Tok::Exists)) return formula();
    return iff();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (at(Tok::Implies)) {
      next();
      Formula rhs = (at(Tok::Forall) || at(Tok::Exists)) ? formula() : implication();
      return Formula::implication(lhs, rhs);
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (at(Tok::Or)) {
      next();
      if (at(Tok::Forall) || at(Tok::Exists)) return Formula::disjunction(f, formula());
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (at(Tok::And)) {
      next();
      if (at(Tok::Forall) || at(Tok::Exists)) return Formula::conjunction(f, formula());
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not: next(); return Formula::negation(unary_operand());
      case Tok::Delta: next(); return Formula::delta(unary_operand());
      case Tok::Top: next(); return Formula::top();
      case Tok::Bottom: next(); return Formula::bottom();
      case Tok::LParen: {
        next();
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident: {
        Token name = next();
        if (lookup(Symbol(name.text))) fail("variable '" + name.text + "' used as a predicate");
        std::vector<Term> args;
        if (at(Tok::LParen)) args = arguments(/*in_formula=*/true);
        return Formula::atom(Symbol(name.text), std::move(args));
      }
      default: fail("expected a formula");
    }
  }

  Formula unary_operand() {
    if (at(Tok::Forall) || at(Tok::Exists)) return formula();
    return unary();
  }

  std::vector<Term> arguments(bool in_formula) {
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    while (true) {
      args.push_back(in_formula ? formula_term() : term());
      if (!at(Tok::Comma)) break;
      next();
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  Term formula_term() {
    if (at(Tok::Top) || at(Tok::Bottom)) fail("truth constant used as a term");
    Token name = expect(Tok::Ident, "term");
    Symbol sym(name.text);
    if (at(Tok::LParen)) {
      if (lookup(sym)) fail("variable '" + name.text + "' applied to arguments");
      return Term::application(sym, arguments(true));
    }
    if (auto bound = lookup(sym)) return Term::variable(*bound);
    if (is_variable_name(name.text)) return Term::variable(sym);
    return Term::constant(sym);
  }

  std::optional<Symbol> lookup(Symbol name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return it->second;
    return std::nullopt;
  }

  // Renames a binder that would shadow an enclosing binder of the same name.
  Symbol fresh_bound(Symbol name) {
    auto in_scope = [&](Symbol s) {
      return std::any_of(scope_.begin(), scope_.end(), [&](const auto& e) { return e.second == s || e.first == s; });
    };
    if (!in_scope(name)) return name;
    for (int n = 1;; ++n) {
      Symbol candidate(name.name() + "_" + std::to_string(n));
      if (!in_scope(candidate)) return candidate;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::pair<Symbol, Symbol>> scope_;
};

// Binding strength, loosest first.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Connective::Forall:
    case Connective::Exists: return 0;
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Delta:
    case Connective::Not: return 5;
    default: return 6;
  }
}

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out += render_term(Term::application(f.predicate(), {f.args().begin(), f.args().end()}));
      return;
    case Connective::Top: out += "top"; return;
    case Connective::Bottom: out += "bot"; return;
    case Connective::Forall:
    case Connective::Exists:
      out += f.kind() == Connective::Forall ? "A " : "E ";
      out += f.bound_variable().name();
      out += ". ";
      render_into(f.body(), out);
      return;
    case Connective::Delta:
    case Connective::Not:
      out += f.kind() == Connective::Delta ? "D " : "~ ";
      render_operand(f.body(), precedence(f.body()) < 5, out);
      return;
    default: break;
  }
  const int p = precedence(f);
  const bool right_assoc = f.kind() == Connective::Implies || f.kind() == Connective::Iff;
  const int lp = precedence(f.lhs());
  const int rp = precedence(f.rhs());
  render_operand(f.lhs(), lp == 0 || lp < p || (lp == p && right_assoc), out);
  switch (f.kind()) {
    case Connective::And: out += " & "; break;
    case Connective::Or: out += " | "; break;
    case Connective::Implies: out += " -> "; break;
    default: out += " <-> "; break;
  }
  render_operand(f.rhs(), rp == 0 || rp < p || (rp == p && !right_assoc), out);
}

}  // namespace

bool is_variable_name(std::string_view name) {
  if (name.empty() || name[0] < 'u' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

ProblemFile parse_problem(std::string_view text) {
  Parser parser(Lexer(text).run());
  std::vector<Formula> formulas = parser.problem();
  if (formulas.empty()) throw SyntaxError(1, 1, "problem contains no formula");
  ProblemFile problem;
  Signature sig;
  std::set<Symbol> predicates;
  for (const Formula& f : formulas) {
    Formula expanded = expand_abbreviations(f);
    problem.conjuncts.push_back(to_prenex_decomposition(expanded));
    for (auto [sym, arity] : predicates_of(expanded)) predicates.insert(sym);
    declare_symbols(expanded, sig);
  }
  for (const Formula& f : formulas)
    for (auto [sym, arity] : functions_of(f))
      if (predicates.count(sym))
        throw Error(ErrorKind::ArityMismatch, "'" + sym.name() + "' used both as predicate and as function symbol");
  return problem;
}

Formula parse_formula(std::string_view text) {
  Parser parser(Lexer(text).run());
  return expand_abbreviations(parser.single());
}

std::string render_formula(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::string render_term(const Term& t) { return to_string(t); }

std::string render_literal(const OrderLiteral& l) { return to_string(l); }

std::string render_clause(const OrderClause& c) {
  std::vector<std::string> parts;
  parts.reserve(c.size());
  for (const OrderLiteral& l : c.literals()) parts.push_back(render_literal(l));
  std::sort(parts.begin(), parts.end());
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  out += '}';
  return out;
}

std::string render_clause_set(const ClauseSet& clauses) {
  std::vector<std::string> lines;
  lines.reserve(clauses.size());
  for (const OrderClause& c : clauses) lines.push_back(render_clause(c));
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

OrderClause parse_clause(std::string_view text) {
  Parser parser(Lexer(text).run());
  OrderClause c = parser.clause();
  if (!parser.done()) parser.fail("unexpected input after clause");
  return c;
}

Term parse_term(std::string_view text) {
  Parser parser(Lexer(text).run());
  Term t = parser.term();
  if (!parser.done()) parser.fail("unexpected input after term");
  return t;
}

Substitution parse_substitution(std::string_view text) {
  Parser parser(Lexer(text).run());
  Substitution s = parser.substitution();
  if (!parser.done()) parser.fail("unexpected input after substitution");
  return s;
}

}  // namespace gdelta
