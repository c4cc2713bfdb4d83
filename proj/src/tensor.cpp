#include "crystals/tensor.hpp"

#include <algorithm>

#include "crystals/errors.hpp"

namespace crystals {

Crystal tensor(const Crystal& b1, const Crystal& b2) {
  if (!(b1.datum() == b2.datum())) {
    throw StructuralError("tensor product of crystals over different root data");
  }
  const StringLengths s1 = string_lengths(b1);
  const StringLengths s2 = string_lengths(b2);
  const std::size_t n1 = b1.size();
  const std::size_t n2 = b2.size();

  std::vector<Weight> weights;
  weights.reserve(n1 * n2);
  for (std::size_t x1 = 0; x1 < n1; ++x1)
    for (std::size_t x2 = 0; x2 < n2; ++x2) weights.push_back(b1.wt(x1) + b2.wt(x2));

  std::vector<std::vector<ElementId>> f(b1.rank(), std::vector<ElementId>(n1 * n2, kNone));
  for (std::size_t i = 0; i < b1.rank(); ++i) {
    for (std::size_t x1 = 0; x1 < n1; ++x1) {
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        const auto id = tensor_id(b2, x1, x2);
        if (s1.epsilon[i][x1] >= s2.phi[i][x2]) {
          const ElementId y1 = b1.f(i, x1);
          if (y1 != kNone) f[i][id] = tensor_id(b2, y1, x2);
        } else {
          const ElementId y2 = b2.f(i, x2);
          if (y2 != kNone) f[i][id] = tensor_id(b2, x1, y2);
        }
      }
    }
  }
  Crystal product(b1.datum(), std::move(weights), std::move(f));

  // e is derived from f; make sure it agrees with the raising rule.
  for (std::size_t i = 0; i < b1.rank(); ++i) {
    for (std::size_t x1 = 0; x1 < n1; ++x1) {
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        ElementId expected = kNone;
        if (s1.epsilon[i][x1] > s2.phi[i][x2]) {
          const ElementId y1 = b1.e(i, x1);
          if (y1 != kNone) expected = tensor_id(b2, y1, x2);
        } else {
          const ElementId y2 = b2.e(i, x2);
          if (y2 != kNone) expected = tensor_id(b2, x1, y2);
        }
        if (product.e(i, tensor_id(b2, x1, x2)) != expected) {
          throw StructuralError("raising rule disagrees with the inverse of the lowering rule");
        }
      }
    }
  }
  return product;
}

std::size_t tensor_string_formula_mismatches(const Crystal& b1, const Crystal& b2,
                                             const Crystal& product) {
  const StringLengths s1 = string_lengths(b1);
  const StringLengths s2 = string_lengths(b2);
  const StringLengths s = string_lengths(product);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < b1.rank(); ++i) {
    for (std::size_t x1 = 0; x1 < b1.size(); ++x1) {
      for (std::size_t x2 = 0; x2 < b2.size(); ++x2) {
        const int e1 = s1.epsilon[i][x1], p1 = s1.phi[i][x1];
        const int e2 = s2.epsilon[i][x2], p2 = s2.phi[i][x2];
        const auto id = tensor_id(b2, x1, x2);
        if (s.epsilon[i][id] != std::max(e2, e1 - p2 + e2)) ++mismatches;
        if (s.phi[i][id] != std::max(p1, p2 - e1 + p1)) ++mismatches;
      }
    }
  }
  return mismatches;
}

bool check_associator(const Crystal& b1, const Crystal& b2, const Crystal& b3) {
  const Crystal left = tensor(tensor(b1, b2), b3);
  const Crystal b23 = tensor(b2, b3);
  const Crystal right = tensor(b1, b23);
  const std::size_t n2 = b2.size();
  const std::size_t n3 = b3.size();
  // ((x1 x2) x3) has id (x1*n2 + x2)*n3 + x3 = x1*(n2*n3) + (x2*n3 + x3), so
  // the re-bracketing is the identity on ids; check it is a morphism.
  std::vector<ElementId> map(left.size());
  for (std::size_t x1 = 0; x1 < b1.size(); ++x1)
    for (std::size_t x2 = 0; x2 < n2; ++x2)
      for (std::size_t x3 = 0; x3 < n3; ++x3) {
        const auto from = static_cast<ElementId>((x1 * n2 + x2) * n3 + x3);
        map[from] = tensor_id(b23, static_cast<ElementId>(x1), tensor_id(b3, x2, x3));
      }
  auto image = [&](ElementId x) { return x == kNone ? kNone : map[x]; };
  for (std::size_t x = 0; x < left.size(); ++x) {
    const ElementId y = map[x];
    if (left.wt(x) != right.wt(y)) return false;
    for (std::size_t i = 0; i < left.rank(); ++i) {
      if (image(left.f(i, x)) != right.f(i, y)) return false;
      if (image(left.e(i, x)) != right.e(i, y)) return false;
    }
  }
  return true;
}

}  // namespace crystals
