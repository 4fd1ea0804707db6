#include <catch_amalgamated.hpp>

#include <random>

#include "theta/cartan.hpp"

using namespace theta;

using T = Tensor333<BigRational>;
using W = Wedge3of9<BigRational>;

namespace {

  int levi_civita(int a, int b, int c) {
    if (a == b || b == c || a == c) {
      return 0;
    }
    return (b == (a + 1) % 3) ? 1 : -1;
  }

  // The bracket written out with three Levi-Civita symbols.
  T bracket_by_epsilon(T const& x, T const& y) {
    T out;
    for (int c0 = 0; c0 < 3; ++c0)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = 0; c2 < 3; ++c2)
          for (std::size_t p = 0; p < T::size; ++p)
            for (std::size_t q = 0; q < T::size; ++q) {
              auto const a = T::unindex(p);
              auto const b = T::unindex(q);
              int const  s = levi_civita(a[0], b[0], c0)
                            * levi_civita(a[1], b[1], c1)
                            * levi_civita(a[2], b[2], c2);
              if (s != 0) {
                out(c0, c1, c2) += s * x.coords[p] * y.coords[q];
              }
            }
    return out;
  }

  T random_tensor(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    T                                  t;
    for (auto& x : t.coords) {
      x = d(rng);
    }
    return t;
  }

  W random_wedge(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    W                                  w;
    for (auto& x : w.coords) {
      x = d(rng);
    }
    return w;
  }

}  // namespace

TEST_CASE("E6 bracket of the Cartan basis vanishes", "[cartan]") {
  auto const v = e6_cartan_basis<BigRational>();
  for (auto const& a : v) {
    for (auto const& b : v) {
      CHECK(e6_bracket(a, b).is_zero());
    }
  }
}

TEST_CASE("E6 bracket matches the epsilon expansion", "[cartan]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    T const x = random_tensor(rng);
    T const y = random_tensor(rng);
    CHECK(e6_bracket(x, y) == bracket_by_epsilon(x, y));
    CHECK(e6_bracket(x, x).is_zero());
    CHECK(e6_bracket(x, y) + e6_bracket(y, x) == T{});
  }
  T const e000 = T::basis(0, 0, 0);
  T const e111 = T::basis(1, 1, 1);
  T const r    = e6_bracket(e000, e111);
  CHECK(r == T::basis(2, 2, 2));
}

TEST_CASE("E8 wedge", "[cartan]") {
  auto const omega = e8_cartan_basis<BigRational>();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(e8_wedge(omega[i], omega[j]).is_zero());
    }
  }
  auto const disjoint = e8_wedge(W::basis({0, 1, 2}), W::basis({3, 4, 5}));
  CHECK(disjoint.coefficient({0, 1, 2, 3, 4, 5}) == 1);
  CHECK(disjoint == Wedge6of9<BigRational>::basis({0, 1, 2, 3, 4, 5}));
  CHECK(e8_wedge(W::basis({3, 4, 5}), W::basis({0, 1, 2}))
        == BigRational(-1) * disjoint);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    W const a = random_wedge(rng);
    W const b = random_wedge(rng);
    W const c = random_wedge(rng);
    // Forms of odd degree anticommute.
    CHECK(e8_wedge(a, b) + e8_wedge(b, a) == Wedge6of9<BigRational>{});
    CHECK(e8_wedge(a, a).is_zero());
    CHECK(e8_wedge(a + b, c) == e8_wedge(a, c) + e8_wedge(b, c));
  }
}

TEST_CASE("wedge sign bookkeeping", "[cartan]") {
  W w;
  w.add_term({2, 0, 1}, BigRational(5));
  CHECK(w.coefficient({0, 1, 2}) == 5);
  CHECK(w.coefficient({1, 0, 2}) == -5);
  CHECK(w.coefficient({0, 0, 2}) == 0);
  w.add_term({1, 1, 2}, BigRational(7));
  CHECK(w == BigRational(5) * W::basis({0, 1, 2}));
}

TEST_CASE("generator counts", "[cartan]") {
  CHECK(e6_generators().size() == 27);
  CHECK(e8_generators().size() == 44);
}

TEST_CASE("criticality of the E6 Cartan basis", "[cartan]") {
  for (auto const& x : e6_generators()) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(e6_criticality(i, j, x) == 0);
      }
    }
  }
  FactorGenerator const e12{0, {0, 1}};
  T const               v = T::basis(1, 0, 0);
  T const               w = T::basis(0, 0, 0);
  CHECK(inner_product(apply(e12, v), w) == 1);
  CHECK(inner_product(apply(e12, BigRational(3) * v), w)
        == 3 * inner_product(apply(e12, v), w));
}

TEST_CASE("criticality of the E8 Cartan basis", "[cartan]") {
  for (auto const& x : e8_generators()) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(e8_criticality(i, j, x) == 0);
      }
    }
  }
  auto const  omega = e8_cartan_basis<BigRational>();
  auto const  moved = apply(MatrixUnit{0, 3}, omega[0]);
  CHECK(moved == W::basis({0, 4, 5}));
  CHECK(inner_product(moved, omega[0]) == 0);
  for (int r : {0, 1, 3, 4, 6, 7}) {
    CHECK(apply(MatrixUnit{r, r + 1, true}, omega[0]).is_zero());
  }
  // Across blocks the summands pick up opposite weights that cancel only
  // in the pairing.
  auto const across = apply(MatrixUnit{2, 3, true}, omega[0]);
  CHECK(across == W::basis({0, 1, 2}) + BigRational(-1) * W::basis({3, 4, 5}));
  CHECK(inner_product(across, omega[0]) == 0);
}

TEST_CASE("Cartan bases correspond under the tensor embedding", "[cartan]") {
  auto const v     = e6_cartan_basis<BigRational>();
  auto const omega = e8_cartan_basis<BigRational>();
  CHECK(tensor_to_wedge(v[0]) == omega[1]);
  CHECK(tensor_to_wedge(v[1]) == omega[2]);
  CHECK(tensor_to_wedge(v[2]) == omega[3]);
}

TEST_CASE("the verification suite passes", "[cartan]") {
  auto const checks = verify_cartan();
  CHECK(checks.size() == 27);
  for (auto const& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}
