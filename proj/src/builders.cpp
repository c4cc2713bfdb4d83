#include "crystals/builders.hpp"

#include <algorithm>

#include "crystals/errors.hpp"
#include "crystals/tensor.hpp"

namespace crystals {

Crystal sl2_crystal(int l) {
  if (l < 0) throw BuildError("sl2 crystal needs l >= 0, got " + std::to_string(l));
  std::vector<Weight> weights;
  std::vector<std::vector<ElementId>> f(1);
  for (int k = 0; k <= l; ++k) {
    weights.push_back(Weight{l - 2 * k});
    f[0].push_back(k < l ? k + 1 : kNone);
  }
  return Crystal(RootDatum::from_type("A1"), std::move(weights), std::move(f));
}

Crystal standard_crystal_A(int n) {
  if (n < 1) throw BuildError("standard crystal needs n >= 1");
  RootDatum datum = RootDatum::from_type("A" + std::to_string(n));
  std::vector<Weight> weights;
  for (int k = 0; k <= n; ++k) {
    Weight w = datum.zero();
    if (k < n) w[k] += 1;
    if (k > 0) w[k - 1] -= 1;
    weights.push_back(std::move(w));
  }
  std::vector<std::vector<ElementId>> f(n, std::vector<ElementId>(n + 1, kNone));
  for (int i = 0; i < n; ++i) f[i][i] = i + 1;
  return Crystal(std::move(datum), std::move(weights), std::move(f));
}

ElementId unique_highest_weight_element(const Crystal& b) {
  const auto hw = highest_weight_elements(b);
  if (hw.size() != 1) {
    throw BuildError("expected a unique highest weight element, found " +
                     std::to_string(hw.size()));
  }
  return hw.front();
}

namespace {

// Tensors `factors` in order, keeping after each step only the component of
// the product of highest weight elements. The component of x (x) y in
// X (x) Y only depends on the component of x in X, because the tensor rules
// act factor-wise; so the result is the component of the full product.
Crystal highest_component_of_product(const std::vector<const Crystal*>& factors) {
  Crystal acc = *factors.front();
  ElementId top = unique_highest_weight_element(acc);
  acc = acc.subcrystal(component_of(acc, top));
  top = unique_highest_weight_element(acc);
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Crystal& next = *factors[k];
    const ElementId next_top = unique_highest_weight_element(next);
    Crystal product = tensor(acc, next);
    const auto comp = component_of(product, tensor_id(next, top, next_top));
    acc = product.subcrystal(comp);
    top = unique_highest_weight_element(acc);
  }
  return acc;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Nodes of the type-A path containing `node`, in path order, or empty if
// the component is not of type A.
std::vector<std::size_t> type_a_path(const RootDatum& datum, std::size_t node) {
  const std::size_t r = datum.rank();
  std::vector<std::size_t> comp{node};
  std::vector<char> seen(r, 0);
  seen[node] = 1;
  for (std::size_t k = 0; k < comp.size(); ++k) {
    for (std::size_t j = 0; j < r; ++j) {
      if (j != comp[k] && datum.cartan_entry(comp[k], j) != 0 && !seen[j]) {
        seen[j] = 1;
        comp.push_back(j);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  std::size_t edges = 0;
  for (std::size_t a : comp) {
    std::size_t degree = 0;
    for (std::size_t b : comp) {
      if (a == b || datum.cartan_entry(a, b) == 0) continue;
      if (datum.cartan_entry(a, b) != -1) return {};
      ++degree;
    }
    if (degree > 2) return {};
    edges += degree;
  }
  if (edges / 2 + 1 != comp.size()) return {};

  std::size_t start = comp.front();
  for (std::size_t a : comp) {
    std::size_t degree = 0;
    for (std::size_t b : comp) degree += (a != b && datum.cartan_entry(a, b) != 0);
    if (degree <= 1) {
      start = a;
      break;
    }
  }
  std::vector<std::size_t> path{start};
  while (path.size() < comp.size()) {
    for (std::size_t b : comp) {
      if (datum.cartan_entry(path.back(), b) == -1 &&
          (path.size() < 2 || b != path[path.size() - 2])) {
        path.push_back(b);
        break;
      }
    }
  }
  return path;
}

// B(omega_node) for a node on a type-A component, embedded into `datum`
// with the other colors acting trivially.
Crystal embedded_type_a_seed(const RootDatum& datum, const std::vector<std::size_t>& path,
                             std::size_t node) {
  const int m = static_cast<int>(path.size());
  const int k = static_cast<int>(std::find(path.begin(), path.end(), node) - path.begin()) + 1;
  const Crystal local = fundamental_crystal_A(m, k);
  std::vector<Weight> weights;
  for (const Weight& w : local.weights()) {
    Weight full = datum.zero();
    for (int a = 0; a < m; ++a) full[path[a]] = w[a];
    weights.push_back(std::move(full));
  }
  std::vector<std::vector<ElementId>> f(datum.rank(),
                                        std::vector<ElementId>(local.size(), kNone));
  for (int a = 0; a < m; ++a) f[path[a]] = local.f_map(a);
  return Crystal(datum, std::move(weights), std::move(f));
}

}  // namespace

Crystal fundamental_crystal_A(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw BuildError("fundamental crystal needs 1 <= k <= n, got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
  }
  const Crystal standard = standard_crystal_A(n);
  // The product of the top elements generates Sym^k; the exterior power
  // sits on a different highest weight element.
  Crystal acc = standard;
  for (int j = 1; j < k; ++j) acc = tensor(acc, standard);
  const Weight omega = acc.datum().fundamental_weight(k - 1);
  std::vector<ElementId> candidates;
  for (ElementId x : highest_weight_elements(acc)) {
    if (acc.wt(x) == omega) candidates.push_back(x);
  }
  if (candidates.size() != 1) {
    throw BuildError("expected one highest weight element of weight omega_" + std::to_string(k) +
                     " in the tensor power, found " + std::to_string(candidates.size()));
  }
  Crystal out = acc.subcrystal(component_of(acc, candidates.front()));
  if (static_cast<long long>(out.size()) != binomial(n + 1, k)) {
    throw BuildError("fundamental crystal has wrong size " + std::to_string(out.size()));
  }
  return out;
}

SeedTable::SeedTable(RootDatum datum) : datum_(std::move(datum)), seeds_(datum_.rank()) {
  for (std::size_t i = 0; i < datum_.rank(); ++i) {
    const auto path = type_a_path(datum_, i);
    if (!path.empty()) seeds_[i] = embedded_type_a_seed(datum_, path, i);
  }
}

std::size_t SeedTable::add(const Crystal& seed) {
  if (!(seed.datum() == datum_)) throw BuildError("seed crystal has a different Cartan matrix");
  const AxiomReport report = verify_axioms(seed);
  if (!report.ok()) throw BuildError("seed crystal fails the axioms: " + report.summary());
  const auto hw = highest_weight_elements(seed);
  if (hw.size() != 1) throw BuildError("seed crystal is not a highest weight crystal");
  const Weight& lambda = seed.wt(hw.front());
  const auto ones = std::count(lambda.coords.begin(), lambda.coords.end(), 1);
  const auto zeros = std::count(lambda.coords.begin(), lambda.coords.end(), 0);
  if (ones != 1 || ones + zeros != static_cast<long>(datum_.rank())) {
    throw BuildError("seed crystal has highest weight " + lambda.str() +
                     ", not a fundamental weight");
  }
  if (!is_highest_weight_crystal(seed, lambda).is_highest_weight) {
    throw BuildError("seed crystal is not generated by its highest weight element");
  }
  const long long dim = datum_.weyl_dimension(lambda);
  if (static_cast<long long>(seed.size()) != dim) {
    throw BuildError("seed crystal for weight " + lambda.str() + " has " +
                     std::to_string(seed.size()) + " elements, Weyl dimension is " +
                     std::to_string(dim));
  }
  const auto node = static_cast<std::size_t>(
      std::find(lambda.coords.begin(), lambda.coords.end(), 1) - lambda.coords.begin());
  seeds_[node] = seed;
  return node;
}

const Crystal& SeedTable::get(std::size_t i) const {
  if (i >= seeds_.size()) throw BuildError("seed index out of range");
  if (!seeds_[i]) {
    throw BuildError("no seed crystal for fundamental weight omega_" + std::to_string(i + 1));
  }
  return *seeds_[i];
}

Crystal build_B(const SeedTable& seeds, const Weight& lambda) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    for (int k = 0; k < lambda[i]; ++k) order.push_back(i);
  }
  return build_B(seeds, lambda, order);
}

Crystal build_B(const SeedTable& seeds, const Weight& lambda,
                const std::vector<std::size_t>& order) {
  const RootDatum& datum = seeds.datum();
  if (lambda.rank() != datum.rank()) throw BuildError("highest weight has the wrong rank");
  if (!datum.is_dominant(lambda)) throw BuildError("weight " + lambda.str() + " is not dominant");
  Weight total = datum.zero();
  for (std::size_t i : order) total += datum.fundamental_weight(i);
  if (total != lambda) throw BuildError("factor order does not sum to " + lambda.str());
  if (order.empty()) return Crystal::singleton(datum, datum.zero());

  std::vector<const Crystal*> factors;
  for (std::size_t i : order) factors.push_back(&seeds.get(i));
  Crystal out = highest_component_of_product(factors);
  if (!is_highest_weight_crystal(out, lambda).is_highest_weight) {
    throw BuildError("extracted component is not a highest weight crystal of weight " +
                     lambda.str());
  }
  return out;
}

bool verify_closed_family(const SeedTable& seeds, const Weight& lambda, const Weight& mu) {
  const Crystal bl = build_B(seeds, lambda);
  const Crystal bm = build_B(seeds, mu);
  const Crystal target = build_B(seeds, lambda + mu);
  const Crystal product = tensor(bl, bm);
  const ElementId top =
      tensor_id(bm, unique_highest_weight_element(bl), unique_highest_weight_element(bm));
  const auto comp = component_of(product, top);
  const Crystal embedded = product.subcrystal(comp);
  const auto iso = crystal_isomorphic(target, embedded);
  if (!iso) return false;
  // The embedding must send b_{lambda+mu} to b_lambda (x) b_mu.
  const ElementId image = (*iso)[unique_highest_weight_element(target)];
  return comp[image] == top;
}

}  // namespace crystals
