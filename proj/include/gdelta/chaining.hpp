#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gdelta/clause.hpp"
#include "gdelta/order.hpp"

namespace gdelta {

// A conclusion together with the unifier that produced it.
struct Inference {
  OrderClause clause;
  Substitution unifier;
};

// C ∪ {s < t} gives Cσ, σ = mgu(s, t), if no term of Cσ is above sσ.
// `lit` indexes c.literals() and must be strict.
std::optional<Inference> irreflexivity_resolution(const OrderClause& c, std::size_t lit, const ReductionOrder& o);
std::vector<Inference> irreflexivity_conclusions(const OrderClause& c, const ReductionOrder& o);

// Factorized chaining of the literals `c_lits` (u_i ◁ s_i) of `c` with the
// literals `d_lits` (t_j ◁ r_j) of `d`. Premises must not share variables.
std::optional<Inference> chaining(const OrderClause& c, const std::vector<std::size_t>& c_lits, const OrderClause& d,
                                  const std::vector<std::size_t>& d_lits, const ReductionOrder& o);
// Every chaining conclusion with `c` as left and `d` as right premise.
std::vector<Inference> chaining_conclusions(const OrderClause& c, const OrderClause& d, const ReductionOrder& o);

// Drops every literal s < s.
OrderClause strip_reflexive(const OrderClause& c);
bool has_reflexive(const OrderClause& c);

bool is_tautology(const OrderClause& c);
// Some instance of c is contained in d, literal by literal, where s < t in
// c also covers s <= t in d. Distinct literals of c go to distinct literals
// of d.
bool subsumes(const OrderClause& c, const OrderClause& d);
// Bloom mask of the function symbols of c. If c subsumes d then
// symbol_mask(c) is contained in symbol_mask(d).
std::uint64_t symbol_mask(const OrderClause& c);

}  // namespace gdelta
