#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crystals/crystal.hpp"

namespace crystals {

// The sl(2) chain B(l): elements 0..l with weights l, l-2, ..., -l.
Crystal sl2_crystal(int l);

// Vector representation of sl(n+1): elements 0..n, f_i: i -> i+1.
Crystal standard_crystal_A(int n);

// B(omega_k) for sl(n+1), the component of the unique highest weight
// element of weight omega_k in standard_crystal_A(n)^{(x) k}.
Crystal fundamental_crystal_A(int n, int k);

// The unique element of b killed by all e_i; throws BuildError otherwise.
ElementId unique_highest_weight_element(const Crystal& b);

// Table of fundamental crystals B(omega_i) over a fixed root datum.
//
// Nodes lying in a connected component of the Dynkin diagram of type A
// (rank 1 included) are populated automatically. Other seeds must be added
// explicitly; each is checked for the crystal axioms, the highest weight
// property, and |B| = Weyl dimension before it is accepted.
class SeedTable {
 public:
  explicit SeedTable(RootDatum datum);

  const RootDatum& datum() const { return datum_; }

  // Validates `seed` and stores it under the fundamental weight it realizes.
  // Returns the 0-based node. Throws BuildError on any failed check.
  std::size_t add(const Crystal& seed);

  bool has(std::size_t i) const { return seeds_.at(i).has_value(); }
  // Throws BuildError if no seed is known for node i.
  const Crystal& get(std::size_t i) const;

 private:
  RootDatum datum_;
  std::vector<std::optional<Crystal>> seeds_;
};

// B(lambda) as the component of b_{omega_i1} (x) ... (x) b_{omega_ik} in
// the tensor product of fundamental seeds, factors taken in `order`
// (default: increasing node index, each repeated lambda_i times).
Crystal build_B(const SeedTable& seeds, const Weight& lambda);
Crystal build_B(const SeedTable& seeds, const Weight& lambda,
                const std::vector<std::size_t>& order);

// Whether the component of b_lambda (x) b_mu in B(lambda) (x) B(mu) is
// isomorphic to B(lambda + mu).
bool verify_closed_family(const SeedTable& seeds, const Weight& lambda, const Weight& mu);

}  // namespace crystals
