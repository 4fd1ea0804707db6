#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "theta/exact.hpp"
#include "theta/weights.hpp"

namespace theta::test {

  // Image of x under zeta -> exp(2 pi i / 9).
  inline std::complex<double> embed(Cyclotomic const& x) {
    std::complex<double> const z = std::polar(1.0, 2 * std::numbers::pi / 9);
    std::complex<double>       out{0, 0};
    std::complex<double>       p{1, 0};
    for (std::size_t i = 0; i < Cyclotomic::degree; ++i) {
      out += x.coefficient(i).get_d() * p;
      p *= z;
    }
    return out;
  }

  inline bool close(std::complex<double> a, std::complex<double> b,
                    double tol = 1e-9) {
    return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
  }

  inline Cyclotomic random_cyclotomic(std::mt19937& rng, int range = 7) {
    std::uniform_int_distribution<int>  num(-range, range);
    std::uniform_int_distribution<int>  den(1, 4);
    std::array<BigRational, Cyclotomic::degree> c;
    for (auto& x : c) {
      x = BigRational(num(rng), den(rng));
      x.canonicalize();
    }
    return Cyclotomic(c);
  }

  // Contents (number of i's for each i) of all semistandard tableaux of
  // the given shape with entries 0..n-1.
  inline std::vector<std::vector<int>> ssyt_contents(std::vector<int> shape,
                                                     int              n) {
    while (!shape.empty() && shape.back() == 0) {
      shape.pop_back();
    }
    std::vector<std::vector<int>> rows;
    for (int len : shape) {
      rows.emplace_back(len, -1);
    }
    std::vector<std::vector<int>> out;
    std::vector<int>              content(n, 0);

    std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
      if (r == rows.size()) {
        out.push_back(content);
        return;
      }
      if (c == static_cast<int>(rows[r].size())) {
        fill(r + 1, 0);
        return;
      }
      int lo = c > 0 ? rows[r][c - 1] : 0;
      if (r > 0) {
        lo = std::max(lo, rows[r - 1][c] + 1);
      }
      for (int v = lo; v < n; ++v) {
        rows[r][c] = v;
        ++content[v];
        fill(r, c + 1);
        --content[v];
      }
      rows[r][c] = -1;
    };
    fill(0, 0);
    return out;
  }

  // Weight multiplicities of the polynomial GL(n) module with this shape.
  inline std::map<Weight, BigInt> kostka(HighestWeight const& lambda) {
    std::map<Weight, BigInt> out;
    std::vector<int>         shape(lambda.entries().begin(),
                                   lambda.entries().end());
    for (auto const& c : ssyt_contents(shape, lambda.rank())) {
      out[c] += 1;
    }
    return out;
  }

  // sum over tableaux of prod x_entry.
  inline Cyclotomic tableau_character(HighestWeight const&           lambda,
                                      std::vector<Cyclotomic> const& x) {
    std::vector<int> shape(lambda.entries().begin(), lambda.entries().end());
    Cyclotomic       sum;
    for (auto const& c : ssyt_contents(shape, lambda.rank())) {
      Cyclotomic term(1L);
      for (std::size_t i = 0; i < c.size(); ++i) {
        term *= x[i].pow(c[i]);
      }
      sum += term;
    }
    return sum;
  }

}  // namespace theta::test
