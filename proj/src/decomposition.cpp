#include "crystals/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "crystals/errors.hpp"
#include "crystals/tensor.hpp"

namespace crystals {

std::map<Weight, long long> DecompositionReport::multiplicities() const {
  std::map<Weight, long long> out;
  for (const auto& entry : entries) out[entry.highest_weight] = entry.multiplicity;
  return out;
}

DecompositionReport decompose(const Crystal& b) { return decompose(b, SeedTable(b.datum())); }

DecompositionReport decompose(const Crystal& b, const SeedTable& seeds) {
  if (!(b.datum() == seeds.datum())) throw Error("seed table is for a different root datum");
  std::map<Weight, DecompositionEntry> grouped;
  std::map<Weight, Crystal> models;
  for (auto& comp : connected_components(b)) {
    const Crystal sub = b.subcrystal(comp);
    const auto hw = highest_weight_elements(sub);
    if (hw.size() != 1) {
      throw Error("component containing element " + std::to_string(comp.front()) + " has " +
                  std::to_string(hw.size()) + " highest weight elements");
    }
    const Weight& lambda = sub.wt(hw.front());
    if (!b.datum().is_dominant(lambda)) {
      throw Error("component containing element " + std::to_string(comp.front()) +
                  " has non-dominant highest weight " + lambda.str());
    }
    auto model = models.find(lambda);
    if (model == models.end()) model = models.emplace(lambda, build_B(seeds, lambda)).first;
    if (!crystal_isomorphic(sub, model->second)) {
      throw Error("component containing element " + std::to_string(comp.front()) +
                  " is not isomorphic to B(" + lambda.str() + ")");
    }
    auto& entry = grouped[lambda];
    entry.highest_weight = lambda;
    ++entry.multiplicity;
    entry.components.push_back(std::move(comp));
  }
  DecompositionReport report;
  for (auto it = grouped.rbegin(); it != grouped.rend(); ++it) {
    report.entries.push_back(std::move(it->second));
  }
  return report;
}

std::map<Weight, long long> lr_multiplicities(const SeedTable& seeds, const Weight& lambda1,
                                              const Weight& lambda2) {
  const Crystal product = tensor(build_B(seeds, lambda1), build_B(seeds, lambda2));
  return decompose(product, seeds).multiplicities();
}

namespace {

std::vector<std::size_t> normalized_levi(const Crystal& b, std::vector<std::size_t> levi) {
  std::sort(levi.begin(), levi.end());
  levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
  if (levi.empty()) throw Error("Levi subset must be nonempty");
  if (levi.back() >= b.rank()) {
    throw Error("Levi node " + std::to_string(levi.back() + 1) + " outside 1.." +
                std::to_string(b.rank()));
  }
  return levi;
}

}  // namespace

BranchingReport branch_to_levi(const Crystal& b, std::vector<std::size_t> levi) {
  levi = normalized_levi(b, std::move(levi));
  return branch_to_levi(b, levi, SeedTable(b.datum().levi(levi)));
}

BranchingReport branch_to_levi(const Crystal& b, std::vector<std::size_t> levi,
                               const SeedTable& levi_seeds) {
  levi = normalized_levi(b, std::move(levi));
  const Crystal restricted = b.restrict_to_levi(levi);
  DecompositionReport decomposition = decompose(restricted, levi_seeds);
  return BranchingReport{std::move(levi), restricted.datum(), std::move(decomposition)};
}

std::vector<IString> i_string_decomposition(const Crystal& b, std::size_t i) {
  if (i >= b.rank()) throw Error("color " + std::to_string(i + 1) + " out of range");
  std::vector<IString> out;
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (b.e(i, static_cast<ElementId>(x)) != kNone) continue;
    IString s{static_cast<ElementId>(x), {}};
    for (ElementId cur = s.top; cur != kNone; cur = b.f(i, cur)) {
      s.elements.push_back(cur);
      if (s.elements.size() > b.size()) throw StructuralError("cyclic i-string");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_table(const DecompositionReport& report) {
  std::ostringstream os;
  os << "highest weight    mult  components\n";
  for (const auto& entry : report.entries) {
    std::string hw = "(" + entry.highest_weight.str() + ")";
    os << hw << std::string(hw.size() < 18 ? 18 - hw.size() : 1, ' ') << entry.multiplicity;
    std::string sizes;
    for (const auto& c : entry.components) {
      if (!sizes.empty()) sizes += ' ';
      sizes += '{' + std::to_string(c.size()) + " elts from " + std::to_string(c.front()) + '}';
    }
    os << "     " << sizes << "\n";
  }
  return os.str();
}

}  // namespace crystals
