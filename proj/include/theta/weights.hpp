#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace theta {

  // Integer weight of GL(n) in the standard coordinates eps_1..eps_n.
  using Weight = std::vector<int>;

  //! Dominant weight of SL(n), stored as a weakly decreasing tuple of
  //! nonnegative integers whose last entry is 0.
  //!
  //! Any weakly decreasing integer tuple is accepted and normalized by
  //! subtracting its last entry; the same tuple also names the polynomial
  //! GL(n) representation (a partition) used for Schur function evaluation.
  class HighestWeight {
   public:
    explicit HighestWeight(std::vector<int> entries);

    // The SL(3) weight m eps_1 + n eps_2, i.e. (m, n, 0); needs m >= n >= 0.
    static HighestWeight sl3(int m, int n);
    // The zero weight of SL(n).
    static HighestWeight zero(int n);

    int rank() const noexcept {
      return static_cast<int>(entries_.size());
    }
    std::span<int const> entries() const noexcept {
      return entries_;
    }
    int operator[](std::size_t i) const {
      return entries_[i];
    }
    // Sum of the entries, i.e. the size of the partition.
    int size() const noexcept;
    // Number of nonzero entries.
    int length() const noexcept;
    // The conjugate partition (column lengths).
    std::vector<int> conjugate() const;

    std::string to_string() const;

    friend bool operator==(HighestWeight const&, HighestWeight const&)
        = default;
    friend auto operator<=>(HighestWeight const&, HighestWeight const&)
        = default;

   private:
    std::vector<int> entries_;
  };

  // eps_i - eps_j with 0 <= i < j < n (zero-based indices).
  struct PositiveRoot {
    int i;
    int j;

    friend bool operator==(PositiveRoot const&, PositiveRoot const&)
        = default;
    friend auto operator<=>(PositiveRoot const&, PositiveRoot const&)
        = default;
  };

  // All n(n-1)/2 positive roots in lexicographic order of (i, j).
  std::vector<PositiveRoot> positive_roots(int n);

  // (n-1, n-2, ..., 0). This differs from the half sum of positive roots by
  // a multiple of (1, ..., 1), which every root pairing ignores.
  Weight rho(int n);

  // <alpha, v> = v_i - v_j.
  inline int pairing(PositiveRoot alpha, std::span<int const> v) {
    return v[alpha.i] - v[alpha.j];
  }

  // Lambda + rho; strictly decreasing for dominant Lambda.
  Weight shifted_by_rho(HighestWeight const& lambda);

  // Positive roots split by <alpha, Lambda + rho> mod 3.
  struct ResidueSets {
    std::array<std::vector<PositiveRoot>, 3> sets;
    // <alpha, Lambda + rho> for every positive root, in positive_roots order.
    std::vector<int> values;

    std::vector<PositiveRoot> const& operator[](std::size_t residue) const {
      return sets[residue];
    }
  };

  ResidueSets residue_sets(HighestWeight const& lambda);

}  // namespace theta
