#include <random>

#include "doctest.h"
#include "sbw/lattice.hpp"

using namespace sbw;

TEST_CASE("membership in simple lattices") {
  IntegerLattice even(2, {{2, 0}, {0, 2}});
  CHECK(even.contains({2, 2}));
  CHECK(even.contains({-4, 6}));
  CHECK(!even.contains({1, 0}));
  CHECK(!even.contains({2, 3}));
  CHECK(even.rank() == 2);

  IntegerLattice line(3, {{-1, -1, 1}});
  CHECK(line.contains({-1, -1, 1}));
  CHECK(line.contains({3, 3, -3}));
  CHECK(!line.contains({1, 0, 0}));
  CHECK(!line.contains({-1, -1, 2}));
  CHECK(line.rank() == 1);

  IntegerLattice zero(2, {});
  CHECK(zero.contains({0, 0}));
  CHECK(!zero.contains({1, 0}));
  CHECK(zero.rank() == 0);
}

TEST_CASE("gcd elimination") {
  // 4x + 6y spans 2Z in the first coordinate
  IntegerLattice l(1, {{4}, {6}});
  CHECK(l.contains({2}));
  CHECK(l.contains({-10}));
  CHECK(!l.contains({3}));
}

TEST_CASE("lattice closure under combinations") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<std::vector<long long>> cols = {
      {2, -1, 0, 3}, {0, 4, 1, -2}, {1, 1, 1, 1}};
  IntegerLattice l(4, cols);
  for (int i = 0; i < 200; ++i) {
    std::vector<long long> v(4, 0);
    for (const auto& c : cols) {
      long long q = coef(rng);
      for (int k = 0; k < 4; ++k) v[static_cast<std::size_t>(k)] += q * c[static_cast<std::size_t>(k)];
    }
    CHECK(l.contains(v));
  }
}
