#include "crystals/crystal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "crystals/errors.hpp"

namespace crystals {

namespace {

std::vector<std::vector<ElementId>> invert_edges(const std::vector<std::vector<ElementId>>& f,
                                                 std::size_t n) {
  std::vector<std::vector<ElementId>> e(f.size(), std::vector<ElementId>(n, kNone));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId target = f[i][b];
      if (target != kNone && e[i][target] == kNone) e[i][target] = static_cast<ElementId>(b);
    }
  }
  return e;
}

// Memoized string length along `step`; -1 marks "in progress" for cycle
// detection. Returns false if a cycle was found.
bool fill_lengths(const std::vector<ElementId>& step, std::vector<int>& out) {
  const std::size_t n = step.size();
  constexpr int kUnknown = -2;
  constexpr int kActive = -1;
  out.assign(n, kUnknown);
  std::vector<ElementId> path;
  for (std::size_t start = 0; start < n; ++start) {
    if (out[start] != kUnknown) continue;
    path.clear();
    ElementId cur = static_cast<ElementId>(start);
    while (cur != kNone && out[cur] == kUnknown) {
      out[cur] = kActive;
      path.push_back(cur);
      cur = step[cur];
    }
    if (cur != kNone && out[cur] == kActive) return false;
    int len = cur == kNone ? -1 : out[cur];
    for (auto it = path.rbegin(); it != path.rend(); ++it) out[*it] = ++len;
  }
  return true;
}

}  // namespace

Crystal::Crystal(RootDatum datum, std::vector<Weight> weights,
                 std::vector<std::vector<ElementId>> f)
    : Crystal(datum, weights, f, invert_edges(f, weights.size())) {}

Crystal::Crystal(RootDatum datum, std::vector<Weight> weights,
                 std::vector<std::vector<ElementId>> f, std::vector<std::vector<ElementId>> e)
    : datum_(std::move(datum)), weights_(std::move(weights)), f_(std::move(f)), e_(std::move(e)) {
  const std::size_t n = weights_.size();
  for (std::size_t b = 0; b < n; ++b) {
    if (weights_[b].rank() != rank()) {
      throw StructuralError("element " + std::to_string(b) + " has weight of rank " +
                            std::to_string(weights_[b].rank()) + ", expected " +
                            std::to_string(rank()));
    }
  }
  if (f_.size() != rank() || e_.size() != rank()) {
    throw StructuralError("edge table must have one entry per color");
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    for (const auto* table : {&f_[i], &e_[i]}) {
      if (table->size() != n) throw StructuralError("edge table size mismatch");
      for (std::size_t b = 0; b < n; ++b) {
        const ElementId t = (*table)[b];
        if (t != kNone && (t < 0 || static_cast<std::size_t>(t) >= n)) {
          throw StructuralError("edge of color " + std::to_string(i + 1) + " from " +
                                std::to_string(b) + " points to missing element " +
                                std::to_string(t));
        }
      }
    }
  }
}

Crystal Crystal::empty(RootDatum datum) {
  const std::size_t r = datum.rank();
  return Crystal(std::move(datum), {}, std::vector<std::vector<ElementId>>(r));
}

Crystal Crystal::singleton(RootDatum datum, Weight w) {
  const std::size_t r = datum.rank();
  return Crystal(std::move(datum), {std::move(w)},
                 std::vector<std::vector<ElementId>>(r, std::vector<ElementId>{kNone}));
}

int Crystal::epsilon(ElementId b, std::size_t i) const {
  int n = 0;
  for (ElementId cur = e_[i][b]; cur != kNone; cur = e_[i][cur]) {
    if (++n > static_cast<int>(size())) {
      throw StructuralError("e_" + std::to_string(i + 1) + "-string through element " +
                            std::to_string(b) + " is a cycle");
    }
  }
  return n;
}

int Crystal::phi(ElementId b, std::size_t i) const {
  int n = 0;
  for (ElementId cur = f_[i][b]; cur != kNone; cur = f_[i][cur]) {
    if (++n > static_cast<int>(size())) {
      throw StructuralError("f_" + std::to_string(i + 1) + "-string through element " +
                            std::to_string(b) + " is a cycle");
    }
  }
  return n;
}

Crystal Crystal::subcrystal(const std::vector<ElementId>& elements) const {
  std::vector<ElementId> index(size(), kNone);
  for (std::size_t k = 0; k < elements.size(); ++k) index[elements[k]] = static_cast<ElementId>(k);
  std::vector<Weight> weights;
  weights.reserve(elements.size());
  for (ElementId b : elements) weights.push_back(weights_[b]);
  auto remap = [&](const std::vector<std::vector<ElementId>>& table) {
    std::vector<std::vector<ElementId>> out(rank(), std::vector<ElementId>(elements.size(), kNone));
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t k = 0; k < elements.size(); ++k) {
        const ElementId t = table[i][elements[k]];
        out[i][k] = t == kNone ? kNone : index[t];
      }
    }
    return out;
  };
  return Crystal(datum_, std::move(weights), remap(f_), remap(e_));
}

Crystal Crystal::restrict_to_levi(const std::vector<std::size_t>& levi) const {
  RootDatum sub = datum_.levi(levi);
  std::vector<Weight> weights;
  weights.reserve(size());
  for (const Weight& w : weights_) {
    Weight p = sub.zero();
    for (std::size_t a = 0; a < levi.size(); ++a) p[a] = w[levi[a]];
    weights.push_back(std::move(p));
  }
  std::vector<std::vector<ElementId>> f;
  std::vector<std::vector<ElementId>> e;
  for (std::size_t i : levi) {
    f.push_back(f_[i]);
    e.push_back(e_[i]);
  }
  return Crystal(std::move(sub), std::move(weights), std::move(f), std::move(e));
}

Crystal disjoint_union(const Crystal& a, const Crystal& b) {
  if (!(a.datum() == b.datum())) throw StructuralError("disjoint union over different root data");
  const auto offset = static_cast<ElementId>(a.size());
  std::vector<Weight> weights = a.weights();
  weights.insert(weights.end(), b.weights().begin(), b.weights().end());
  std::vector<std::vector<ElementId>> f(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    f[i] = a.f_map(i);
    for (ElementId t : b.f_map(i)) f[i].push_back(t == kNone ? kNone : t + offset);
  }
  return Crystal(a.datum(), std::move(weights), std::move(f));
}

StringLengths string_lengths(const Crystal& b) {
  StringLengths out;
  out.epsilon.resize(b.rank());
  out.phi.resize(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    if (!fill_lengths(b.e_map(i), out.epsilon[i]) || !fill_lengths(b.f_map(i), out.phi[i])) {
      throw StructuralError("color " + std::to_string(i + 1) + " has a cyclic string");
    }
  }
  return out;
}

std::string AxiomReport::summary(std::size_t max_lines) const {
  if (ok()) return "all crystal axioms hold";
  std::ostringstream os;
  os << violations.size() << " axiom violation(s)";
  for (std::size_t k = 0; k < violations.size() && k < max_lines; ++k) {
    os << "\n  " << violations[k].message;
  }
  if (violations.size() > max_lines) os << "\n  ...";
  return os.str();
}

AxiomReport verify_axioms(const Crystal& crystal) {
  AxiomReport report;
  const std::size_t n = crystal.size();
  auto add = [&](AxiomViolation::Kind kind, std::size_t b, std::size_t i, std::string msg) {
    report.violations.push_back({kind, static_cast<ElementId>(b), static_cast<int>(i),
                                 "element " + std::to_string(b) + ", color " +
                                     std::to_string(i + 1) + ": " + msg});
  };

  for (std::size_t i = 0; i < crystal.rank(); ++i) {
    const Weight alpha = crystal.datum().simple_root(i);
    const auto& f = crystal.f_map(i);
    const auto& e = crystal.e_map(i);

    for (std::size_t b = 0; b < n; ++b) {
      if (f[b] != kNone) {
        if (e[f[b]] != static_cast<ElementId>(b)) {
          add(AxiomViolation::Kind::kInverse, b, i,
              "e(f(b)) != b for f(b) = " + std::to_string(f[b]));
        }
        if (crystal.wt(f[b]) != crystal.wt(b) - alpha) {
          add(AxiomViolation::Kind::kWeight, b, i,
              "wt(f(b)) = " + crystal.wt(f[b]).str() + ", expected " +
                  (crystal.wt(b) - alpha).str());
        }
      }
      if (e[b] != kNone) {
        if (f[e[b]] != static_cast<ElementId>(b)) {
          add(AxiomViolation::Kind::kInverse, b, i,
              "f(e(b)) != b for e(b) = " + std::to_string(e[b]));
        }
        if (crystal.wt(e[b]) != crystal.wt(b) + alpha) {
          add(AxiomViolation::Kind::kWeight, b, i,
              "wt(e(b)) = " + crystal.wt(e[b]).str() + ", expected " +
                  (crystal.wt(b) + alpha).str());
        }
      }
    }

    std::vector<int> eps;
    std::vector<int> phi;
    const bool acyclic_e = fill_lengths(e, eps);
    const bool acyclic_f = fill_lengths(f, phi);
    if (!acyclic_e || !acyclic_f) {
      for (std::size_t b = 0; b < n; ++b) {
        if ((!acyclic_f && phi[b] == -1) || (!acyclic_e && eps[b] == -1)) {
          add(AxiomViolation::Kind::kCycle, b, i, "lies on a cyclic string");
        }
      }
      continue;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (phi[b] - eps[b] != crystal.wt(b)[i]) {
        add(AxiomViolation::Kind::kNormality, b, i,
            "phi - epsilon = " + std::to_string(phi[b] - eps[b]) + " but <wt, alpha^vee> = " +
                std::to_string(crystal.wt(b)[i]));
      }
    }
  }
  return report;
}

Character character(const Crystal& b) {
  Character out;
  for (const Weight& w : b.weights()) ++out[w];
  return out;
}

Character character(const Crystal& b, const std::vector<ElementId>& elements) {
  Character out;
  for (ElementId x : elements) ++out[b.wt(x)];
  return out;
}

long long weight_multiplicity(const Crystal& b, const Weight& mu) {
  return std::count(b.weights().begin(), b.weights().end(), mu);
}

std::vector<std::vector<ElementId>> connected_components(const Crystal& b) {
  const std::size_t n = b.size();
  std::vector<ElementId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ElementId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      for (ElementId y : {b.f(i, x), b.e(i, x)}) {
        if (y == kNone) continue;
        ElementId rx = find(static_cast<ElementId>(x));
        ElementId ry = find(y);
        if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
  }
  std::vector<std::vector<ElementId>> out;
  std::vector<ElementId> slot(n, kNone);
  for (std::size_t x = 0; x < n; ++x) {
    const ElementId r = find(static_cast<ElementId>(x));
    if (slot[r] == kNone) {
      slot[r] = static_cast<ElementId>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(static_cast<ElementId>(x));
  }
  return out;
}

std::vector<ElementId> component_of(const Crystal& b, ElementId x) {
  std::vector<char> seen(b.size(), 0);
  std::vector<ElementId> out{x};
  seen[x] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i < b.rank(); ++i) {
      for (ElementId y : {b.f(i, out[k]), b.e(i, out[k])}) {
        if (y != kNone && !seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> highest_weight_elements(const Crystal& b) {
  std::vector<ElementId> out;
  for (std::size_t x = 0; x < b.size(); ++x) {
    bool killed = true;
    for (std::size_t i = 0; i < b.rank() && killed; ++i) killed = b.e(i, x) == kNone;
    if (killed) out.push_back(static_cast<ElementId>(x));
  }
  return out;
}

HighestWeightCharacterizations highest_weight_characterizations(const Crystal& b,
                                                                const Weight& lambda) {
  HighestWeightCharacterizations out;
  const std::vector<ElementId> sources = highest_weight_elements(b);
  for (ElementId src : sources) {
    if (b.wt(src) != lambda) continue;

    // Generated by the f_i from src.
    std::vector<char> seen(b.size(), 0);
    std::deque<ElementId> queue{src};
    seen[src] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const ElementId x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < b.rank(); ++i) {
        const ElementId y = b.f(i, x);
        if (y != kNone && !seen[y]) {
          seen[y] = 1;
          ++reached;
          queue.push_back(y);
        }
      }
    }
    const bool generated = reached == b.size();

    // Every other weight strictly below lambda, and no other source.
    bool criterion = sources.size() == 1;
    for (std::size_t x = 0; x < b.size() && criterion; ++x) {
      if (static_cast<ElementId>(x) == src) continue;
      criterion = b.datum().dominance_less(b.wt(x), lambda);
    }

    if (generated) out.by_generation = true;
    if (criterion) out.by_criterion = true;
    if ((generated || criterion) && !out.witness) out.witness = src;
  }
  return out;
}

HighestWeightVerdict is_highest_weight_crystal(const Crystal& b, const Weight& lambda) {
  const HighestWeightCharacterizations c = highest_weight_characterizations(b, lambda);
  if (c.by_generation != c.by_criterion) {
    throw StructuralError(std::string("highest weight characterizations disagree for weight ") +
                          lambda.str() + ": generation says " +
                          (c.by_generation ? "yes" : "no") + ", criterion says " +
                          (c.by_criterion ? "yes" : "no"));
  }
  HighestWeightVerdict v;
  v.is_highest_weight = c.by_generation;
  if (v.is_highest_weight) v.witness = c.witness;
  return v;
}

namespace {

// Propagates anchor1 -> anchor2 along all e_i/f_i edges. Returns false on
// any inconsistency; on success `iso`/`inverse` hold the component map.
bool match_component(const Crystal& b1, const Crystal& b2, ElementId anchor1, ElementId anchor2,
                     std::vector<ElementId>& iso, std::vector<ElementId>& inverse) {
  std::vector<std::pair<ElementId, ElementId>> assigned;
  auto undo = [&] {
    for (auto [x, y] : assigned) {
      iso[x] = kNone;
      inverse[y] = kNone;
    }
    return false;
  };
  auto assign = [&](ElementId x, ElementId y) {
    if (iso[x] != kNone || inverse[y] != kNone) return iso[x] == y && inverse[y] == x;
    if (b1.wt(x) != b2.wt(y)) return false;
    iso[x] = y;
    inverse[y] = x;
    assigned.emplace_back(x, y);
    return true;
  };
  if (!assign(anchor1, anchor2)) return undo();
  for (std::size_t k = 0; k < assigned.size(); ++k) {
    const auto [x, y] = assigned[k];
    for (std::size_t i = 0; i < b1.rank(); ++i) {
      for (bool lower : {true, false}) {
        const ElementId nx = lower ? b1.f(i, x) : b1.e(i, x);
        const ElementId ny = lower ? b2.f(i, y) : b2.e(i, y);
        if ((nx == kNone) != (ny == kNone)) return undo();
        if (nx != kNone && !assign(nx, ny)) return undo();
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<ElementId>> crystal_isomorphic(const Crystal& b1, const Crystal& b2) {
  if (!(b1.datum() == b2.datum()) || b1.size() != b2.size()) return std::nullopt;
  if (character(b1) != character(b2)) return std::nullopt;

  const auto comps1 = connected_components(b1);
  const auto comps2 = connected_components(b2);
  if (comps1.size() != comps2.size()) return std::nullopt;

  std::vector<Character> chars1;
  std::vector<Character> chars2;
  for (const auto& c : comps1) chars1.push_back(character(b1, c));
  for (const auto& c : comps2) chars2.push_back(character(b2, c));

  // Anchor each source component at a highest weight element if it has one.
  std::vector<ElementId> anchors;
  for (const auto& comp : comps1) {
    ElementId anchor = comp.front();
    for (ElementId x : comp) {
      bool killed = true;
      for (std::size_t i = 0; i < b1.rank() && killed; ++i) killed = b1.e(i, x) == kNone;
      if (killed) {
        anchor = x;
        break;
      }
    }
    anchors.push_back(anchor);
  }

  std::vector<ElementId> iso(b1.size(), kNone);
  std::vector<ElementId> inverse(b2.size(), kNone);
  std::vector<char> used(comps2.size(), 0);

  // Backtracking over components with equal characters.
  auto solve = [&](auto&& self, std::size_t k) -> bool {
    if (k == comps1.size()) return true;
    const ElementId anchor = anchors[k];
    for (std::size_t c = 0; c < comps2.size(); ++c) {
      if (used[c] || comps2[c].size() != comps1[k].size() || chars2[c] != chars1[k]) continue;
      for (ElementId y : comps2[c]) {
        if (b2.wt(y) != b1.wt(anchor)) continue;
        if (!match_component(b1, b2, anchor, y, iso, inverse)) continue;
        used[c] = 1;
        if (self(self, k + 1)) return true;
        used[c] = 0;
        for (ElementId x : comps1[k]) {
          if (iso[x] != kNone) inverse[iso[x]] = kNone;
          iso[x] = kNone;
        }
      }
    }
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  return iso;
}

}  // namespace crystals
