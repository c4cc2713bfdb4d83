#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystals/root_data.hpp"

namespace crystals {

using ElementId = std::int32_t;
inline constexpr ElementId kNone = -1;

// A finite crystal graph over a root datum. Elements are dense ids
// 0..size()-1; colors are 0-based internally (color i is the Dynkin node
// i+1 in files and on the command line).
//
// e and f are stored as arrays per color with kNone for "0". Crystals built
// from f-edges derive e as the inverse relation; when f is not injective
// the first preimage wins and verify_axioms reports the defect.
class Crystal {
 public:
  // f[i][b] is f_i(b) or kNone. Throws StructuralError on dangling ids or
  // weights of the wrong rank.
  Crystal(RootDatum datum, std::vector<Weight> weights, std::vector<std::vector<ElementId>> f);

  // A crystal with no elements.
  static Crystal empty(RootDatum datum);
  // One element of weight `w` and no edges.
  static Crystal singleton(RootDatum datum, Weight w);

  const RootDatum& datum() const { return datum_; }
  std::size_t rank() const { return datum_.rank(); }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  const Weight& wt(ElementId b) const { return weights_[b]; }
  const std::vector<Weight>& weights() const { return weights_; }
  ElementId f(std::size_t i, ElementId b) const { return f_[i][b]; }
  ElementId e(std::size_t i, ElementId b) const { return e_[i][b]; }
  const std::vector<ElementId>& f_map(std::size_t i) const { return f_[i]; }
  const std::vector<ElementId>& e_map(std::size_t i) const { return e_[i]; }

  // String lengths max{n : e_i^n b != 0} and max{n : f_i^n b != 0}.
  // Throw StructuralError if the i-string through b is a cycle.
  int epsilon(ElementId b, std::size_t i) const;
  int phi(ElementId b, std::size_t i) const;

  // The full crystal restricted to `elements`, re-indexed in the given
  // order. Edges leaving the set are dropped.
  Crystal subcrystal(const std::vector<ElementId>& elements) const;

  // Same graph, colors outside `levi` forgotten and weights projected onto
  // the Levi coordinates; lives over datum().levi(levi).
  Crystal restrict_to_levi(const std::vector<std::size_t>& levi) const;

  friend bool operator==(const Crystal&, const Crystal&) = default;

 private:
  Crystal(RootDatum datum, std::vector<Weight> weights, std::vector<std::vector<ElementId>> f,
          std::vector<std::vector<ElementId>> e);

  RootDatum datum_;
  std::vector<Weight> weights_;
  std::vector<std::vector<ElementId>> f_;
  std::vector<std::vector<ElementId>> e_;
};

Crystal disjoint_union(const Crystal& a, const Crystal& b);

// epsilon/phi for every (color, element), computed in O(rank * size).
struct StringLengths {
  std::vector<std::vector<int>> epsilon;  // [color][element]
  std::vector<std::vector<int>> phi;
};
StringLengths string_lengths(const Crystal& b);

struct AxiomViolation {
  enum class Kind {
    kInverse,     // axiom C: e_i and f_i are not mutually inverse
    kWeight,      // axiom B: weight does not shift by alpha_i
    kCycle,       // i-string is a cycle; string lengths undefined
    kNormality,   // axiom A with normal epsilon/phi
  };
  Kind kind;
  ElementId element;
  int color;  // 0-based, -1 when not color specific
  std::string message;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary(std::size_t max_lines = 20) const;
};

AxiomReport verify_axioms(const Crystal& b);

using Character = std::map<Weight, long long>;

Character character(const Crystal& b);
Character character(const Crystal& b, const std::vector<ElementId>& elements);
long long weight_multiplicity(const Crystal& b, const Weight& mu);

// Components of the undirected graph of all e_i/f_i edges, each sorted,
// ordered by smallest element.
std::vector<std::vector<ElementId>> connected_components(const Crystal& b);

// The component containing x, sorted.
std::vector<ElementId> component_of(const Crystal& b, ElementId x);

// Elements killed by every e_i, in increasing order.
std::vector<ElementId> highest_weight_elements(const Crystal& b);

struct HighestWeightVerdict {
  bool is_highest_weight = false;
  std::optional<ElementId> witness;
};

struct HighestWeightCharacterizations {
  // Some e-killed b of weight lambda generates the crystal under the f_i.
  bool by_generation = false;
  // Some e-killed b of weight lambda has every other weight strictly below
  // lambda, and every other element is moved by some e_i.
  bool by_criterion = false;
  std::optional<ElementId> witness;
};

HighestWeightCharacterizations highest_weight_characterizations(const Crystal& b,
                                                                const Weight& lambda);

// Evaluates both the generation-based definition (a source of weight
// lambda generating everything under the f_i) and the criterion in terms
// of dominance and raising operators. Throws StructuralError if the two
// disagree.
HighestWeightVerdict is_highest_weight_crystal(const Crystal& b, const Weight& lambda);

// An element bijection phi: B1 -> B2 (iso[b1] = b2) preserving weights and
// all e_i, f_i, or nullopt.
std::optional<std::vector<ElementId>> crystal_isomorphic(const Crystal& b1, const Crystal& b2);

}  // namespace crystals
