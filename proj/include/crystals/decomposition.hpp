#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "crystals/builders.hpp"
#include "crystals/crystal.hpp"

namespace crystals {

struct DecompositionEntry {
  Weight highest_weight;
  long long multiplicity = 0;
  // Element sets (ids in the source crystal), ordered by smallest element.
  std::vector<std::vector<ElementId>> components;
};

// Entries are sorted by highest weight, largest first.
struct DecompositionReport {
  std::vector<DecompositionEntry> entries;

  std::map<Weight, long long> multiplicities() const;
};

// Splits b into connected components and identifies each with B(lambda3)
// built from `seeds`. Throws Error if some component has no unique highest
// weight element or is not isomorphic to the B(lambda3) it claims to be.
DecompositionReport decompose(const Crystal& b, const SeedTable& seeds);
DecompositionReport decompose(const Crystal& b);  // default seeds

// |C(lambda1, lambda2)_lambda3| for every lambda3 with a nonzero count.
std::map<Weight, long long> lr_multiplicities(const SeedTable& seeds, const Weight& lambda1,
                                              const Weight& lambda2);

struct BranchingReport {
  std::vector<std::size_t> levi;  // 0-based nodes, sorted
  RootDatum levi_datum;
  DecompositionReport decomposition;  // weights in Levi coordinates
};

// Restricts to the colors in `levi` (weights projected to those
// coordinates) and decomposes over the Levi root datum.
BranchingReport branch_to_levi(const Crystal& b, std::vector<std::size_t> levi);
BranchingReport branch_to_levi(const Crystal& b, std::vector<std::size_t> levi,
                               const SeedTable& levi_seeds);

struct IString {
  ElementId top;
  std::vector<ElementId> elements;  // top first, following f_i
  std::size_t length() const { return elements.size(); }
};

// Maximal i-chains (0-based color), ordered by top element.
std::vector<IString> i_string_decomposition(const Crystal& b, std::size_t i);

// Plain-text rendering of a report, one line per highest weight.
std::string format_table(const DecompositionReport& report);

}  // namespace crystals
