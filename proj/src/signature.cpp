#include "gdelta/signature.hpp"

#include <string>

#include "gdelta/errors.hpp"

namespace gdelta {

std::string_view to_string(Origin origin) {
  switch (origin) {
    case Origin::OriginalPredicate: return "original-predicate";
    case Origin::OriginalFunction: return "original-function";
    case Origin::Constant: return "constant";
    case Origin::Skolem: return "skolem";
    case Origin::SatPredicate: return "sat-predicate";
    case Origin::HexWitness: return "hex-witness";
    case Origin::Definitional: return "definitional";
    case Origin::Density: return "density";
    case Origin::EndpointTop: return "endpoint-top";
    case Origin::EndpointBottom: return "endpoint-bottom";
  }
  return "?";
}

Signature::Signature() {
  declare(Symbol("bot"), 0, Origin::EndpointBottom);
  declare(Symbol("top"), 0, Origin::EndpointTop);
}

SymbolInfo Signature::declare(Symbol symbol, int arity, Origin origin, int prefix_position) {
  if (auto it = index_.find(symbol); it != index_.end()) {
    const SymbolInfo& existing = symbols_[it->second];
    if (existing.arity != arity)
      throw Error(ErrorKind::ArityMismatch, "symbol '" + symbol.name() + "' used with arity " +
                                                std::to_string(arity) + " and " +
                                                std::to_string(existing.arity));
    return existing;
  }
  SymbolInfo info{symbol, arity, origin, static_cast<int>(symbols_.size()), prefix_position};
  index_.emplace(symbol, symbols_.size());
  symbols_.push_back(info);
  return symbols_.back();
}

Symbol Signature::fresh_name(std::string_view base) const {
  Symbol candidate(base);
  for (int n = 1; contains(candidate); ++n) candidate = Symbol(std::string(base) + "_" + std::to_string(n));
  return candidate;
}

Symbol Signature::next_name(std::string_view prefix, int start) {
  int& counter = counters_.try_emplace(std::string(prefix), start).first->second;
  for (;;) {
    Symbol candidate(std::string(prefix) + std::to_string(counter++));
    if (!contains(candidate)) return candidate;
  }
}

const SymbolInfo* Signature::find(Symbol symbol) const {
  auto it = index_.find(symbol);
  return it == index_.end() ? nullptr : &symbols_[it->second];
}

}  // namespace gdelta
