#include "gdelta/order.hpp"

#include <algorithm>
#include <tuple>

namespace gdelta {

ReductionOrder::ReductionOrder(const Signature& sig) {
  std::vector<SymbolInfo> infos = sig.symbols();
  auto group = [](const SymbolInfo& s) {
    if (s.origin == Origin::EndpointBottom) return 0;
    if (s.origin == Origin::EndpointTop) return 1;
    return s.arity == 0 ? 2 : 3;
  };
  std::sort(infos.begin(), infos.end(), [&](const SymbolInfo& a, const SymbolInfo& b) {
    return std::make_tuple(group(a), a.arity, a.index, a.symbol.name()) <
           std::make_tuple(group(b), b.arity, b.index, b.symbol.name());
  });
  for (const SymbolInfo& s : infos) {
    rank_.emplace(s.symbol, static_cast<int>(ascending_.size()));
    ascending_.emplace_back(s.symbol, s.arity);
  }
}

ReductionOrder::ReductionOrder(const std::vector<std::pair<Symbol, int>>& ascending) : ascending_(ascending) {
  for (std::size_t i = 0; i < ascending_.size(); ++i) rank_.emplace(ascending_[i].first, static_cast<int>(i));
}

int ReductionOrder::compare_symbols(const Term& f, const Term& g) const {
  if (f.head() == g.head() && f.arity() == g.arity()) return 0;
  auto key = [&](const Term& t) {
    auto it = rank_.find(t.head());
    return std::make_tuple(it == rank_.end() ? 1 : 0, it == rank_.end() ? 0 : it->second, t.arity(), t.head().name());
  };
  return key(f) < key(g) ? -1 : 1;
}

bool ReductionOrder::greater(const Term& s, const Term& t) const {
  if (s.is_variable()) return false;
  if (t.is_variable()) return s.occurs(t.head());
  if (s.size() <= t.size() && s == t) return false;
  // Some argument of s is >= t.
  for (const Term& a : s.args())
    if (a == t || greater(a, t)) return true;
  int cmp = compare_symbols(s, t);
  if (cmp < 0) return false;
  for (const Term& b : t.args())
    if (!greater(s, b)) return false;
  if (cmp > 0) return true;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    if (s.args()[i] == t.args()[i]) continue;
    return greater(s.args()[i], t.args()[i]);
  }
  return false;
}

bool lpo_greater(const ReductionOrder& order, const Term& s, const Term& t) { return order.greater(s, t); }

}  // namespace gdelta
