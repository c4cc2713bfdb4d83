#include "crystals/builders.hpp"
#include "crystals/crystal.hpp"
#include "crystals/errors.hpp"
#include "crystals/tensor.hpp"
#include "doctest.h"

using namespace crystals;

namespace {

Crystal one_point(const RootDatum& d, Weight w) { return Crystal::singleton(d, std::move(w)); }

}  // namespace

TEST_CASE("epsilon and phi are string lengths") {
  const Crystal b2 = sl2_crystal(2);
  CHECK(b2.epsilon(0, 0) == 0);
  CHECK(b2.phi(0, 0) == 2);
  CHECK(b2.epsilon(1, 0) == 1);
  CHECK(b2.phi(1, 0) == 1);

  const Crystal std2 = standard_crystal_A(2);
  // element 1 has weight omega_1 - alpha_1 = (-1, 1)
  CHECK(std2.wt(1) == Weight{-1, 1});
  CHECK(std2.epsilon(1, 1) == 0);
  CHECK(std2.phi(1, 1) == 1);
}

TEST_CASE("epsilon on a cyclic string is a structural error") {
  const RootDatum a1 = RootDatum::from_type("A1");
  const Crystal loop(a1, {Weight{0}, Weight{0}}, {{1, 0}});
  CHECK_THROWS_AS(loop.epsilon(0, 0), StructuralError);
  CHECK_THROWS_AS(loop.phi(0, 0), StructuralError);
  CHECK_THROWS_AS(string_lengths(loop), StructuralError);
  const AxiomReport r = verify_axioms(loop);
  CHECK_FALSE(r.ok());
  bool saw_cycle = false;
  for (const auto& v : r.violations) saw_cycle |= v.kind == AxiomViolation::Kind::kCycle;
  CHECK(saw_cycle);
}

TEST_CASE("constructor rejects dangling ids and wrong ranks") {
  const RootDatum a1 = RootDatum::from_type("A1");
  CHECK_THROWS_AS(Crystal(a1, {Weight{1}, Weight{-1}}, {{5, kNone}}), StructuralError);
  CHECK_THROWS_AS(Crystal(a1, {Weight{1, 0}}, {{kNone}}), StructuralError);
  CHECK_THROWS_AS(Crystal(a1, {Weight{1}}, {}), StructuralError);
}

TEST_CASE("verify_axioms") {
  for (int l = 0; l <= 10; ++l) CHECK(verify_axioms(sl2_crystal(l)).ok());
  CHECK(verify_axioms(tensor(sl2_crystal(1), sl2_crystal(1))).ok());

  SUBCASE("planted weight defect fails axiom B") {
    const RootDatum a1 = RootDatum::from_type("A1");
    const Crystal bad(a1, {Weight{1}, Weight{1}}, {{1, kNone}});
    const AxiomReport r = verify_axioms(bad);
    REQUIRE_FALSE(r.ok());
    bool weight = false;
    for (const auto& v : r.violations) {
      if (v.kind == AxiomViolation::Kind::kWeight) {
        weight = true;
        CHECK(v.color == 0);
      }
    }
    CHECK(weight);
  }
  SUBCASE("non-injective f fails axiom C") {
    const RootDatum a1 = RootDatum::from_type("A1");
    const Crystal bad(a1, {Weight{2}, Weight{2}, Weight{0}}, {{2, 2, kNone}});
    const AxiomReport r = verify_axioms(bad);
    bool inverse = false;
    for (const auto& v : r.violations) inverse |= v.kind == AxiomViolation::Kind::kInverse;
    CHECK(inverse);
  }
  SUBCASE("one-point crystal of nonzero weight is not normal") {
    const AxiomReport r = verify_axioms(one_point(RootDatum::from_type("A1"), Weight{2}));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == AxiomViolation::Kind::kNormality);
    CHECK(verify_axioms(one_point(RootDatum::from_type("A1"), Weight{0})).ok());
  }
}

TEST_CASE("i-strings are chains of the right length") {
  const SeedTable seeds(RootDatum::from_type("A3"));
  const Crystal b = build_B(seeds, Weight{1, 1, 1});
  const StringLengths s = string_lengths(b);
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t x = 0; x < b.size(); ++x) {
      const auto bx = static_cast<ElementId>(x);
      int steps = 0;
      ElementId cur = bx;
      while (b.f(i, cur) != kNone) {
        CHECK(b.wt(b.f(i, cur)) == b.wt(cur) - b.datum().simple_root(i));
        cur = b.f(i, cur);
        ++steps;
      }
      CHECK(steps == s.phi[i][x]);
      CHECK(s.phi[i][x] - s.epsilon[i][x] == b.wt(bx)[i]);
      CHECK(b.epsilon(bx, i) == s.epsilon[i][x]);
      if (b.f(i, bx) != kNone) CHECK(b.e(i, b.f(i, bx)) == bx);
      if (b.e(i, bx) != kNone) CHECK(b.f(i, b.e(i, bx)) == bx);
    }
  }
}

TEST_CASE("character and weight multiplicity") {
  const Character c2 = character(sl2_crystal(2));
  CHECK(c2 == Character{{Weight{2}, 1}, {Weight{0}, 1}, {Weight{-2}, 1}});
  CHECK(character(Crystal::empty(RootDatum::from_type("A1"))).empty());

  const SeedTable seeds(RootDatum::from_type("A2"));
  const Crystal adj = build_B(seeds, Weight{1, 1});
  CHECK(weight_multiplicity(adj, Weight{0, 0}) == 2);
  CHECK(weight_multiplicity(adj, Weight{5, 5}) == 0);
  long long total = 0;
  for (const auto& [w, m] : character(adj)) total += m;
  CHECK(total == 8);
}

TEST_CASE("connected components") {
  CHECK(connected_components(sl2_crystal(4)).size() == 1);
  const auto comps = connected_components(tensor(sl2_crystal(1), sl2_crystal(1)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<ElementId>{0, 1, 3});
  CHECK(comps[1] == std::vector<ElementId>{2});

  const auto split = connected_components(disjoint_union(sl2_crystal(1), sl2_crystal(3)));
  REQUIRE(split.size() == 2);
  CHECK(split[0].size() == 2);
  CHECK(split[1].size() == 4);
  CHECK(component_of(disjoint_union(sl2_crystal(1), sl2_crystal(3)), 4) == split[1]);
}

TEST_CASE("highest weight elements") {
  for (int l = 0; l <= 5; ++l) CHECK(highest_weight_elements(sl2_crystal(l)) == std::vector<ElementId>{0});

  const Crystal t = tensor(sl2_crystal(1), sl2_crystal(1));
  const auto hw = highest_weight_elements(t);
  REQUIRE(hw.size() == 2);
  CHECK(t.wt(hw[0]) == Weight{2});
  CHECK(t.wt(hw[1]) == Weight{0});

  const SeedTable seeds(RootDatum::from_type("A2"));
  const Crystal t2 = tensor(seeds.get(0), seeds.get(1));
  std::vector<Weight> weights;
  for (ElementId x : highest_weight_elements(t2)) weights.push_back(t2.wt(x));
  std::sort(weights.begin(), weights.end());
  CHECK(weights == std::vector<Weight>{Weight{0, 0}, Weight{1, 1}});
}

TEST_CASE("is_highest_weight_crystal evaluates both characterizations") {
  for (int l = 0; l <= 6; ++l) {
    const auto v = is_highest_weight_crystal(sl2_crystal(l), Weight{l});
    CHECK(v.is_highest_weight);
    CHECK(v.witness == ElementId{0});
  }
  const Crystal t = tensor(sl2_crystal(1), sl2_crystal(1));
  const auto c = highest_weight_characterizations(t, Weight{2});
  CHECK_FALSE(c.by_generation);
  CHECK_FALSE(c.by_criterion);
  CHECK_FALSE(is_highest_weight_crystal(t, Weight{2}).is_highest_weight);
  CHECK_FALSE(is_highest_weight_crystal(sl2_crystal(2), Weight{0}).is_highest_weight);

  const Crystal std2 = standard_crystal_A(2);
  CHECK(is_highest_weight_crystal(std2, Weight{1, 0}).is_highest_weight);

  // One point with no edges: both characterizations accept it (normality is
  // verify_axioms' business).
  const auto p = is_highest_weight_crystal(one_point(RootDatum::from_type("A1"), Weight{3}), Weight{3});
  CHECK(p.is_highest_weight);
  CHECK(is_highest_weight_crystal(one_point(RootDatum::from_type("A2"), Weight{0, 0}),
                                  Weight{0, 0})
            .is_highest_weight);
  CHECK_FALSE(is_highest_weight_crystal(Crystal::empty(RootDatum::from_type("A1")), Weight{0}).is_highest_weight);
}

TEST_CASE("crystal_isomorphic") {
  const Crystal b2 = sl2_crystal(2);
  const auto id = crystal_isomorphic(b2, b2);
  REQUIRE(id);
  CHECK(*id == std::vector<ElementId>{0, 1, 2});

  const Crystal t = tensor(sl2_crystal(1), sl2_crystal(1));
  const Crystal big = t.subcrystal(connected_components(t)[0]);
  const auto iso = crystal_isomorphic(b2, big);
  REQUIRE(iso);
  CHECK(*iso == std::vector<ElementId>{0, 1, 2});

  CHECK_FALSE(crystal_isomorphic(b2, disjoint_union(sl2_crystal(1), sl2_crystal(0))));
  CHECK_FALSE(crystal_isomorphic(sl2_crystal(2), sl2_crystal(3)));
  CHECK_FALSE(crystal_isomorphic(sl2_crystal(1), disjoint_union(sl2_crystal(0), sl2_crystal(0))));

  // multi-component, listed in different orders
  const Crystal u1 = disjoint_union(sl2_crystal(2), disjoint_union(sl2_crystal(0), sl2_crystal(2)));
  const Crystal u2 = disjoint_union(sl2_crystal(0), disjoint_union(sl2_crystal(2), sl2_crystal(2)));
  const auto m = crystal_isomorphic(u1, u2);
  REQUIRE(m);
  for (std::size_t x = 0; x < u1.size(); ++x) CHECK(u1.wt(x) == u2.wt((*m)[x]));
  CHECK(crystal_isomorphic(u2, u1));
  CHECK(character(u1) == character(u2));
}
