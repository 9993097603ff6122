#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace gdelta {

// Interned name. Two symbols are equal iff their names are equal; the
// comparison operators order by name so that output never depends on
// interning order.
class Symbol {
 public:
  Symbol();
  explicit Symbol(std::string_view name);

  const std::string& name() const noexcept { return *name_; }
  bool empty() const noexcept { return name_->empty(); }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return *a.name_ <=> *b.name_;
  }

  std::size_t hash() const noexcept { return std::hash<const void*>{}(name_); }

 private:
  const std::string* name_;
};

}  // namespace gdelta

template <>
struct std::hash<gdelta::Symbol> {
  std::size_t operator()(gdelta::Symbol s) const noexcept { return s.hash(); }
};
