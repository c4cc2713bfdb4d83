#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "crystals/rational.hpp"

namespace crystals {

// An element of the coweight lattice in Dynkin coordinates:
// coords[i] = <lambda, alpha_i^vee>.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // "1,0,-2"
  std::string str() const;
};

enum class DominanceMode {
  kRational,  // non-negative rational coefficients
  kIntegral,  // non-negative integer coefficients
};

// Cartan data of a semisimple root datum. Immutable after construction.
//
// cartan[i][j] = <alpha_j, alpha_i^vee>, so the simple root alpha_j has
// Dynkin coordinates given by column j.
class RootDatum {
 public:
  // Throws InvalidCartan unless `cartan` is a square, invertible generalized
  // Cartan matrix (a_ii = 2, a_ij <= 0 off the diagonal, a_ij = 0 iff a_ji = 0).
  explicit RootDatum(std::vector<std::vector<int>> cartan);

  // Standard Cartan matrix of type A_n, B_n, C_n, D_n, E_6..8, F_4 or G_2,
  // e.g. "A2", "G2".
  static RootDatum from_type(const std::string& type);

  std::size_t rank() const { return cartan_.size(); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rational>>& cartan_inverse() const { return inverse_; }
  int cartan_entry(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  Weight simple_root(std::size_t j) const;
  Weight fundamental_weight(std::size_t i) const;
  Weight zero() const { return Weight::zero(rank()); }

  // Coefficients c with lambda = sum_j c_j alpha_j, solved exactly.
  std::vector<Rational> root_coefficients(const Weight& lambda) const;

  bool dominance_leq(const Weight& mu, const Weight& lambda,
                     DominanceMode mode = DominanceMode::kRational) const;
  // mu < lambda: dominance_leq and mu != lambda.
  bool dominance_less(const Weight& mu, const Weight& lambda,
                      DominanceMode mode = DominanceMode::kRational) const;
  bool is_dominant(const Weight& lambda) const;

  // <lambda, 2 rho^vee>.
  Rational two_rho_pairing(const Weight& lambda) const;
  // <lambda1 + lambda2 + lambda3, rho^vee>, the expected dimension of the
  // components of the convolution fiber indexed by (lambda1, lambda2; lambda3).
  Rational lusztig_bound(const Weight& l1, const Weight& l2, const Weight& l3) const;

  // Positive coroots of the dual root system, i.e. vectors k with
  // beta^vee = sum_i k_i alpha_i^vee, so <lambda, beta^vee> = sum_i k_i lambda_i.
  const std::vector<std::vector<int>>& positive_coroots() const { return coroots_; }
  // dim V(lambda) via the Weyl product formula; lambda must be dominant.
  long long weyl_dimension(const Weight& lambda) const;

  // Cartan submatrix on the (0-based, sorted) index subset `levi`.
  RootDatum levi(const std::vector<std::size_t>& levi) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.cartan_ == b.cartan_; }

 private:
  void check_rank(const Weight& w) const;

  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<std::vector<int>> coroots_;
};

// Parses "1,0,2" into a weight; throws SchemaError on malformed input.
Weight parse_weight(const std::string& text);

}  // namespace crystals
