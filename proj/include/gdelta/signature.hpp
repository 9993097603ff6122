#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gdelta/symbol.hpp"

namespace gdelta {

enum class Origin {
  OriginalPredicate,
  OriginalFunction,
  Constant,
  Skolem,
  SatPredicate,   // the fresh monadic q of SAT-Skolemization
  HexWitness,
  Definitional,
  Density,
  EndpointTop,
  EndpointBottom,
};

std::string_view to_string(Origin origin);

struct SymbolInfo {
  Symbol symbol;
  int arity = 0;
  Origin origin = Origin::OriginalFunction;
  // Registration order; breaks precedence ties.
  int index = 0;
  // For Skolem symbols: 0-based position in the quantifier prefix of the
  // variable the symbol replaces. -1 otherwise.
  int prefix_position = -1;
};

// Every function symbol of a problem, including predicates read as function
// symbols and everything the translation generates. Generated names are
// fresh with respect to all registered names.
class Signature {
 public:
  Signature();

  // Registers a symbol or checks that an existing one has the same arity.
  SymbolInfo declare(Symbol symbol, int arity, Origin origin, int prefix_position = -1);

  // `base` itself if unused, otherwise `base_1`, `base_2`, ...
  Symbol fresh_name(std::string_view base) const;
  // `prefix` followed by the next value of that prefix's counter, which
  // starts at `start`. Names already registered are skipped.
  Symbol next_name(std::string_view prefix, int start = 0);

  const SymbolInfo* find(Symbol symbol) const;
  bool contains(Symbol symbol) const { return find(symbol) != nullptr; }
  const std::vector<SymbolInfo>& symbols() const noexcept { return symbols_; }

 private:
  std::vector<SymbolInfo> symbols_;
  std::unordered_map<Symbol, std::size_t> index_;
  std::unordered_map<std::string, int> counters_;
};

}  // namespace gdelta
