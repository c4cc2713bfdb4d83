#include "doctest.h"
#include "oracles.hpp"

TEST_CASE("oracle: Weyl dimensions of small representations") {
  const oracle::Matrix a1{{2}};
  const oracle::Matrix a2{{2, -1}, {-1, 2}};
  const oracle::Matrix a3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  const oracle::Matrix g2{{2, -1}, {-3, 2}};
  for (int l = 0; l <= 6; ++l) CHECK(oracle::weyl_dimension(a1, {l}) == l + 1);
  CHECK(oracle::weyl_dimension(a2, {1, 1}) == 8);
  CHECK(oracle::weyl_dimension(a2, {2, 0}) == 6);
  CHECK(oracle::weyl_dimension(a3, {1, 0, 0}) == 4);
  CHECK(oracle::weyl_dimension(a3, {0, 1, 0}) == 6);
  CHECK(oracle::weyl_dimension(a3, {1, 0, 1}) == 15);
  CHECK(oracle::weyl_dimension(g2, {1, 0}) + oracle::weyl_dimension(g2, {0, 1}) == 21);
}

TEST_CASE("oracle: Freudenthal multiplicities") {
  const oracle::Matrix a2{{2, -1}, {-1, 2}};
  const oracle::Freudenthal f(a2);
  const auto adjoint = f.character({1, 1});
  CHECK(adjoint.at({0, 0}) == 2);
  CHECK(adjoint.size() == 7);
  long long total = 0;
  for (const auto& [w, m] : adjoint) total += m;
  CHECK(total == 8);

  const auto sym3 = f.character({3, 0});
  total = 0;
  for (const auto& [w, m] : sym3) {
    CHECK(m == 1);
    total += m;
  }
  CHECK(total == 10);

  const oracle::Matrix g2{{2, -1}, {-3, 2}};
  const oracle::Freudenthal fg(g2);
  for (const oracle::Vec& hw : {oracle::Vec{1, 0}, oracle::Vec{0, 1}, oracle::Vec{1, 1}}) {
    long long sum = 0;
    for (const auto& [w, m] : fg.character(hw)) sum += m;
    CHECK(sum == oracle::weyl_dimension(g2, hw));
  }
}
