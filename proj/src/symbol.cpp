#include "gdelta/symbol.hpp"

#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>

namespace gdelta {
namespace {

struct InternTable {
  std::mutex mutex;
  std::deque<std::string> storage;
  std::unordered_map<std::string_view, const std::string*> index;

  const std::string* intern(std::string_view name) {
    std::lock_guard lock(mutex);
    if (auto it = index.find(name); it != index.end()) return it->second;
    const std::string& stored = storage.emplace_back(name);
    index.emplace(stored, &stored);
    return &stored;
  }
};

InternTable& table() {
  static InternTable instance;
  return instance;
}

}  // namespace

Symbol::Symbol() {
  static const std::string* const empty = table().intern("");
  name_ = empty;
}

Symbol::Symbol(std::string_view name) : name_(table().intern(name)) {}

}  // namespace gdelta
