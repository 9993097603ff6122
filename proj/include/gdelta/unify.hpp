#pragma once

#include <optional>
#include <vector>

#include "gdelta/term.hpp"

namespace gdelta {

// Extends `sigma` (idempotent) to a most general unifier of `a` and `b`.
// Returns false and leaves `sigma` unspecified on failure.
bool unify(const Term& a, const Term& b, Substitution& sigma);

// Simultaneous most general unifier of all terms; idempotent, occurs check.
std::optional<Substitution> mgu(const std::vector<Term>& terms);
std::optional<Substitution> mgu(const Term& a, const Term& b);

// One-way matching: binds variables of `pattern` only; variables of
// `target` are treated as constants.
bool match(const Term& pattern, const Term& target, Substitution& sigma);

}  // namespace gdelta
