#include <catch_amalgamated.hpp>

#include <numeric>

#include "theta/errors.hpp"
#include "theta/weights.hpp"

using namespace theta;

TEST_CASE("highest weights are normalized", "[weights]") {
  HighestWeight const a({3, 2, 2});
  CHECK(a == HighestWeight({1, 0, 0}));
  CHECK(HighestWeight::sl3(2, 1) == HighestWeight({2, 1, 0}));
  CHECK(HighestWeight::zero(9).size() == 0);
  CHECK(HighestWeight({2, 1, 1, 0}).length() == 3);
  CHECK(HighestWeight({3, 1, 0}).conjugate() == std::vector<int>{2, 1, 1});
  CHECK_THROWS_AS(HighestWeight({0, 1, 0}), PreconditionViolated);
  CHECK_THROWS_AS(HighestWeight({1}), PreconditionViolated);
  CHECK_THROWS_AS(HighestWeight::sl3(0, 1), PreconditionViolated);
}

TEST_CASE("positive roots and rho", "[weights]") {
  for (int n = 2; n <= 9; ++n) {
    auto const roots = positive_roots(n);
    CHECK(roots.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    Weight const r = rho(n);
    for (auto alpha : roots) {
      CHECK(pairing(alpha, r) == alpha.j - alpha.i);
    }
  }
}

TEST_CASE("SL(9) residue classes at the zero weight", "[weights]") {
  ResidueSets const r = residue_sets(HighestWeight::zero(9));
  CHECK(r[0].size() == 9);
  CHECK(r[1].size() == 15);
  CHECK(r[2].size() == 12);
  CHECK(std::accumulate(r.values.begin(), r.values.end(), 0) == 120);
}

TEST_CASE("residue classes partition the positive roots", "[weights]") {
  for (auto const& e : {std::vector<int>{2, 2, 1, 1, 1, 0, 0, 0, 0},
                        std::vector<int>{4, 3, 3, 2, 2, 1, 1, 1, 0},
                        std::vector<int>{5, 0, 0}}) {
    HighestWeight const lambda(e);
    ResidueSets const   r = residue_sets(lambda);
    std::size_t const   n = lambda.rank();
    CHECK(r[0].size() + r[1].size() + r[2].size() == n * (n - 1) / 2);
    Weight const v = shifted_by_rho(lambda);
    for (int k = 0; k < 3; ++k) {
      for (auto alpha : r[k]) {
        CHECK(pairing(alpha, v) % 3 == k);
      }
    }
  }
}
