#pragma once

#include <cstddef>
#include <utility>

#include "crystals/crystal.hpp"

namespace crystals {

// Kashiwara tensor product on B1 x B2. The element b1 (x) b2 has id
// b1 * |B2| + b2 (lexicographic order). With eps/phi the string lengths:
//   e_i acts on b1 iff eps_i(b1) >  phi_i(b2), otherwise on b2;
//   f_i acts on b1 iff eps_i(b1) >= phi_i(b2), otherwise on b2.
// Throws StructuralError if the factors live over different root data.
Crystal tensor(const Crystal& b1, const Crystal& b2);

inline ElementId tensor_id(const Crystal& b2, ElementId x1, ElementId x2) {
  return x1 * static_cast<ElementId>(b2.size()) + x2;
}

inline std::pair<ElementId, ElementId> tensor_factors(const Crystal& b2, ElementId x) {
  const auto n2 = static_cast<ElementId>(b2.size());
  return {x / n2, x % n2};
}

// Compares the closed forms
//   eps_i(b1 (x) b2) = max{eps_i(b2), eps_i(b1) - phi_i(b2) + eps_i(b2)}
//   phi_i(b1 (x) b2) = max{phi_i(b1), phi_i(b2) - eps_i(b1) + phi_i(b1)}
// against string lengths recomputed on the product. Returns the number of
// (element, color) pairs where they disagree.
std::size_t tensor_string_formula_mismatches(const Crystal& b1, const Crystal& b2,
                                             const Crystal& product);

// Whether (b1 (x) b2) (x) b3 -> b1 (x) (b2 (x) b3) commutes with every e_i
// and f_i and preserves weights.
bool check_associator(const Crystal& b1, const Crystal& b2, const Crystal& b3);

}  // namespace crystals
