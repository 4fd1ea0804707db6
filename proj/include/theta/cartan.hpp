#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "theta/exact.hpp"

namespace theta {

  inline BigRational conjugate(BigRational const& x) {
    return x;
  }
  inline Cyclotomic conjugate(Cyclotomic const& x) {
    return x.conj();
  }

  //! A vector of C^3 (x) C^3 (x) C^3 in the basis e_i (x) e_j (x) e_k,
  //! zero-based indices, coordinate 9 i + 3 j + k.
  template <typename Scalar>
  struct Tensor333 {
    static constexpr std::size_t size = 27;

    std::array<Scalar, size> coords{};

    static constexpr std::size_t index(int i, int j, int k) noexcept {
      return static_cast<std::size_t>(9 * i + 3 * j + k);
    }
    static constexpr std::array<int, 3> unindex(std::size_t p) noexcept {
      return {static_cast<int>(p / 9), static_cast<int>((p / 3) % 3),
              static_cast<int>(p % 3)};
    }
    static Tensor333 basis(int i, int j, int k) {
      Tensor333 t;
      t.coords[index(i, j, k)] = Scalar(1L);
      return t;
    }

    Scalar const& operator()(int i, int j, int k) const {
      return coords[index(i, j, k)];
    }
    Scalar& operator()(int i, int j, int k) {
      return coords[index(i, j, k)];
    }

    bool is_zero() const {
      return std::all_of(coords.begin(), coords.end(),
                         [](Scalar const& x) { return x == Scalar(); });
    }

    Tensor333& operator+=(Tensor333 const& rhs) {
      for (std::size_t p = 0; p < size; ++p) {
        coords[p] += rhs.coords[p];
      }
      return *this;
    }
    friend Tensor333 operator+(Tensor333 lhs, Tensor333 const& rhs) {
      return lhs += rhs;
    }
    friend Tensor333 operator*(Scalar const& c, Tensor333 t) {
      for (auto& x : t.coords) {
        x = Scalar(c * x);
      }
      return t;
    }
    friend bool operator==(Tensor333 const&, Tensor333 const&) = default;
  };

  namespace detail {
    // Lexicographically ordered k-subsets of {0..8} and the inverse map from
    // bit masks.
    template <int K>
    struct SubsetTable {
      static constexpr std::size_t count = K == 3 || K == 6 ? 84 : 0;
      std::array<std::array<int, K>, count> subsets{};
      std::array<int, 512>                  index_of_mask{};

      constexpr SubsetTable() {
        for (auto& x : index_of_mask) {
          x = -1;
        }
        std::size_t        n = 0;
        std::array<int, K> cur{};
        for (int i = 0; i < K; ++i) {
          cur[i] = i;
        }
        while (true) {
          unsigned mask = 0;
          for (int x : cur) {
            mask |= 1u << x;
          }
          subsets[n]          = cur;
          index_of_mask[mask] = static_cast<int>(n);
          ++n;
          int i = K - 1;
          while (i >= 0 && cur[i] == 9 - K + i) {
            --i;
          }
          if (i < 0) {
            break;
          }
          ++cur[i];
          for (int j = i + 1; j < K; ++j) {
            cur[j] = cur[j - 1] + 1;
          }
        }
      }
    };

    template <int K>
    inline constexpr SubsetTable<K> subset_table{};
  }  // namespace detail

  //! An element of Lambda^K C^9 (K = 3 or 6) in the basis
  //! e_{a_1} ^ ... ^ e_{a_K}, a_1 < ... < a_K, zero-based.
  template <int K, typename Scalar>
  struct Wedge {
    static constexpr std::size_t size = detail::SubsetTable<K>::count;

    std::array<Scalar, size> coords{};

    static std::array<int, K> const& subset(std::size_t p) {
      return detail::subset_table<K>.subsets[p];
    }

    // The basis position of e_{idx_1} ^ ... ^ e_{idx_K} and the sign of the
    // sorting permutation; sign 0 when an index repeats.
    static std::pair<int, std::size_t> locate(std::array<int, K> const& idx) {
      int      sign = 1;
      unsigned mask = 0;
      for (int i = 0; i < K; ++i) {
        for (int j = i + 1; j < K; ++j) {
          if (idx[i] == idx[j]) {
            return {0, 0};
          }
          if (idx[i] > idx[j]) {
            sign = -sign;
          }
        }
        mask |= 1u << idx[i];
      }
      return {sign, static_cast<std::size_t>(
                        detail::subset_table<K>.index_of_mask[mask])};
    }

    // Adds c e_{idx_1} ^ ... ^ e_{idx_K} for arbitrary (unsorted) indices.
    void add_term(std::array<int, K> const& idx, Scalar const& c) {
      auto const [sign, p] = locate(idx);
      if (sign == 0) {
        return;
      }
      if (sign > 0) {
        coords[p] += c;
      } else {
        coords[p] -= c;
      }
    }

    static Wedge basis(std::array<int, K> idx) {
      Wedge w;
      w.add_term(idx, Scalar(1L));
      return w;
    }

    Scalar coefficient(std::array<int, K> const& idx) const {
      auto const [sign, p] = locate(idx);
      if (sign == 0) {
        return Scalar();
      }
      return sign > 0 ? coords[p] : Scalar(-coords[p]);
    }

    bool is_zero() const {
      return std::all_of(coords.begin(), coords.end(),
                         [](Scalar const& x) { return x == Scalar(); });
    }

    Wedge& operator+=(Wedge const& rhs) {
      for (std::size_t p = 0; p < size; ++p) {
        coords[p] += rhs.coords[p];
      }
      return *this;
    }
    friend Wedge operator+(Wedge lhs, Wedge const& rhs) {
      return lhs += rhs;
    }
    friend Wedge operator*(Scalar const& c, Wedge w) {
      for (auto& x : w.coords) {
        x = Scalar(c * x);
      }
      return w;
    }
    friend bool operator==(Wedge const&, Wedge const&) = default;
  };

  template <typename Scalar>
  using Wedge3of9 = Wedge<3, Scalar>;
  template <typename Scalar>
  using Wedge6of9 = Wedge<6, Scalar>;

  // Standard Hermitian coordinate form sum conj(x_p) y_p.
  template <typename Vec>
  auto inner_product(Vec const& x, Vec const& y) {
    using Scalar = std::decay_t<decltype(x.coords[0])>;
    Scalar s{};
    for (std::size_t p = 0; p < x.coords.size(); ++p) {
      s += conjugate(x.coords[p]) * y.coords[p];
    }
    return s;
  }

  //! Basis elements of sl(n) used for the criticality checks: either the
  //! matrix unit E_rs (r != s) or the diagonal difference E_rr - E_ss.
  struct MatrixUnit {
    int  r;
    int  s;
    bool diagonal_difference = false;

    std::string to_string() const;
  };

  // A MatrixUnit acting on one tensor factor of C^3 (x) C^3 (x) C^3.
  struct FactorGenerator {
    int        factor;
    MatrixUnit x;

    std::string to_string() const;
  };

  // Lie algebra action of a one-factor generator.
  template <typename Scalar>
  Tensor333<Scalar> apply(FactorGenerator const& g, Tensor333<Scalar> const& t) {
    Tensor333<Scalar> out;
    for (std::size_t p = 0; p < Tensor333<Scalar>::size; ++p) {
      if (t.coords[p] == Scalar()) {
        continue;
      }
      auto idx = Tensor333<Scalar>::unindex(p);
      int& a   = idx[g.factor];
      if (g.x.diagonal_difference) {
        if (a == g.x.r) {
          out.coords[p] += t.coords[p];
        } else if (a == g.x.s) {
          out.coords[p] -= t.coords[p];
        }
      } else if (a == g.x.s) {
        a = g.x.r;
        out(idx[0], idx[1], idx[2]) += t.coords[p];
      }
    }
    return out;
  }

  // Derivation action of a gl(9) generator on Lambda^3 C^9.
  template <typename Scalar>
  Wedge3of9<Scalar> apply(MatrixUnit const& x, Wedge3of9<Scalar> const& w) {
    Wedge3of9<Scalar> out;
    for (std::size_t p = 0; p < Wedge3of9<Scalar>::size; ++p) {
      if (w.coords[p] == Scalar()) {
        continue;
      }
      auto const& idx = Wedge3of9<Scalar>::subset(p);
      for (int slot = 0; slot < 3; ++slot) {
        if (x.diagonal_difference) {
          if (idx[slot] == x.r) {
            out.coords[p] += w.coords[p];
          } else if (idx[slot] == x.s) {
            out.coords[p] -= w.coords[p];
          }
        } else if (idx[slot] == x.s) {
          std::array<int, 3> moved = idx;
          moved[slot]              = x.r;
          out.add_term(moved, w.coords[p]);
        }
      }
    }
    return out;
  }

  //! The bracket V x V -> V* of the E6 example,
  //!   [x1 (x) x2 (x) x3, y1 (x) y2 (x) y3] = (x1^y1) (x) (x2^y2) (x) (x3^y3),
  //! with Lambda^2 C^3 identified with (C^3)* by e_a ^ e_b -> sgn(a,b,c) e_c*.
  //! The result is returned in the dual basis e_i* (x) e_j* (x) e_k*.
  template <typename Scalar>
  Tensor333<Scalar> e6_bracket(Tensor333<Scalar> const& x,
                               Tensor333<Scalar> const& y) {
    Tensor333<Scalar> out;
    for (std::size_t p = 0; p < Tensor333<Scalar>::size; ++p) {
      if (x.coords[p] == Scalar()) {
        continue;
      }
      auto const a = Tensor333<Scalar>::unindex(p);
      for (std::size_t q = 0; q < Tensor333<Scalar>::size; ++q) {
        if (y.coords[q] == Scalar()) {
          continue;
        }
        auto const         b = Tensor333<Scalar>::unindex(q);
        std::array<int, 3> c{};
        int                sign = 1;
        bool               zero = false;
        for (int f = 0; f < 3; ++f) {
          if (a[f] == b[f]) {
            zero = true;
            break;
          }
          c[f] = 3 - a[f] - b[f];
          // (a, b, c) is a cyclic shift of (0, 1, 2) exactly when b = a + 1.
          if ((a[f] + 1) % 3 != b[f]) {
            sign = -sign;
          }
        }
        if (zero) {
          continue;
        }
        Scalar term = x.coords[p] * y.coords[q];
        if (sign > 0) {
          out(c[0], c[1], c[2]) += term;
        } else {
          out(c[0], c[1], c[2]) -= term;
        }
      }
    }
    return out;
  }

  // Exterior product Lambda^3 x Lambda^3 -> Lambda^6 of C^9.
  template <typename Scalar>
  Wedge6of9<Scalar> e8_wedge(Wedge3of9<Scalar> const& a,
                             Wedge3of9<Scalar> const& b) {
    Wedge6of9<Scalar> out;
    for (std::size_t p = 0; p < Wedge3of9<Scalar>::size; ++p) {
      if (a.coords[p] == Scalar()) {
        continue;
      }
      auto const& s = Wedge3of9<Scalar>::subset(p);
      for (std::size_t q = 0; q < Wedge3of9<Scalar>::size; ++q) {
        if (b.coords[q] == Scalar()) {
          continue;
        }
        auto const& t = Wedge3of9<Scalar>::subset(q);
        out.add_term({s[0], s[1], s[2], t[0], t[1], t[2]},
                     Scalar(a.coords[p] * b.coords[q]));
      }
    }
    return out;
  }

  //! v1, v2, v3: the Cartan subspace basis of C^3 (x) C^3 (x) C^3.
  template <typename Scalar>
  std::array<Tensor333<Scalar>, 3> e6_cartan_basis() {
    using T = Tensor333<Scalar>;
    return {T::basis(0, 0, 0) + T::basis(1, 1, 1) + T::basis(2, 2, 2),
            T::basis(0, 1, 2) + T::basis(2, 0, 1) + T::basis(1, 2, 0),
            T::basis(2, 1, 0) + T::basis(0, 2, 1) + T::basis(1, 0, 2)};
  }

  //! omega_1 .. omega_4: the Cartan subspace basis of Lambda^3 C^9.
  template <typename Scalar>
  std::array<Wedge3of9<Scalar>, 4> e8_cartan_basis() {
    using W = Wedge3of9<Scalar>;
    auto t  = [](int a, int b, int c) { return W::basis({a - 1, b - 1, c - 1}); };
    return {t(1, 2, 3) + t(4, 5, 6) + t(7, 8, 9),
            t(1, 4, 7) + t(2, 5, 8) + t(3, 6, 9),
            t(1, 5, 9) + t(2, 6, 7) + t(3, 4, 8),
            t(1, 6, 8) + t(2, 4, 9) + t(3, 5, 7)};
  }

  // The intertwiner e_i (x) e_j (x) e_k -> e_i ^ e_{j+3} ^ e_{k+6} from
  // C^3 (x) C^3 (x) C^3 into Lambda^3 C^9 (zero-based indices).
  template <typename Scalar>
  Wedge3of9<Scalar> tensor_to_wedge(Tensor333<Scalar> const& t) {
    Wedge3of9<Scalar> out;
    for (std::size_t p = 0; p < Tensor333<Scalar>::size; ++p) {
      auto const idx = Tensor333<Scalar>::unindex(p);
      out.add_term({idx[0], idx[1] + 3, idx[2] + 6}, t.coords[p]);
    }
    return out;
  }

  // E_rs (r != s) and E_rr - E_ss (r < s) in each of the three factors.
  std::vector<FactorGenerator> e6_generators();
  // E_rs (r < s) and E_rr - E_{r+1,r+1} in gl(9): 44 elements.
  std::vector<MatrixUnit> e8_generators();

  // <X v_i, v_j>, zero-based i, j.
  BigRational e6_criticality(int i, int j, FactorGenerator const& x);
  // <X omega_i, omega_j>, zero-based i, j.
  BigRational e8_criticality(int i, int j, MatrixUnit const& x);

  struct CheckResult {
    std::string name;
    bool        passed;
    std::string detail;
  };

  // Every bracket, wedge and criticality identity for both Cartan bases.
  std::vector<CheckResult> verify_cartan();

}  // namespace theta
