#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "theta/exact.hpp"
#include "theta/weights.hpp"

namespace theta {

  //! The eigenvalues of a finite order element of SL(n), with repetition.
  class EigenvalueMultiset {
   public:
    EigenvalueMultiset() = default;
    explicit EigenvalueMultiset(std::vector<Cyclotomic> values)
        : values_(std::move(values)) {}

    // The identity of SL(n).
    static EigenvalueMultiset ones(int n);

    std::size_t size() const noexcept {
      return values_.size();
    }
    std::span<Cyclotomic const> values() const noexcept {
      return values_;
    }
    Cyclotomic const& operator[](std::size_t i) const {
      return values_[i];
    }

    // Canonical ordering of the entries; equal multisets have equal
    // sorted forms.
    EigenvalueMultiset sorted() const;
    Cyclotomic product() const;
    // Product is 1 and every entry satisfies x^9 = 1.
    bool is_special_torsion() const;

    // Multiset equality (order of entries is ignored).
    friend bool operator==(EigenvalueMultiset const& lhs,
                           EigenvalueMultiset const& rhs);

   private:
    std::vector<Cyclotomic> values_;
  };

  // mu = diag(z3, 1, z3^2, z3, 1, z3^2, z3, 1, z3^2), z3 = zeta^3; the
  // element exp(2 pi i / 3 H_rho) of SL(9).
  EigenvalueMultiset mu_eigenvalues();
  // u = diag(z3^2, z3, 1) in SL(3).
  EigenvalueMultiset u_eigenvalues();

  // prod_{alpha > 0} <alpha, Lambda + rho> / <alpha, rho>.
  BigInt weyl_dimension(HighestWeight const& lambda);

  // h_0 .. h_kmax of the given values (complete homogeneous symmetric
  // polynomials); division free.
  std::vector<Cyclotomic> complete_homogeneous(std::span<Cyclotomic const> x,
                                               int kmax);
  // e_0 .. e_kmax (elementary symmetric polynomials).
  std::vector<Cyclotomic> elementary_symmetric(std::span<Cyclotomic const> x,
                                               int kmax);

  // Determinant of a row-major size x size matrix by Gaussian elimination
  // over the field.
  Cyclotomic determinant(std::vector<Cyclotomic> matrix, std::size_t size);

  // Schur polynomial s_Lambda(x) as det(h_{lambda_i - i + j}) over the
  // nonzero rows of Lambda.
  Cyclotomic schur_jacobi_trudi(HighestWeight const& lambda,
                                EigenvalueMultiset const& x);
  // The same value as det(e_{lambda'_i - i + j}) over the columns.
  Cyclotomic schur_dual_jacobi_trudi(HighestWeight const& lambda,
                                     EigenvalueMultiset const& x);

  //! Character of the irreducible SL(n) module with highest weight Lambda at
  //! an element with eigenvalues x.
  //!
  //! Uses whichever Jacobi-Trudi determinant is smaller. Both are
  //! polynomial in x, so repeated eigenvalues need no special handling.
  Cyclotomic char_at(HighestWeight const& lambda, EigenvalueMultiset const& x);

  //! Weight multiplicities of one irreducible module.
  //!
  //! Weights are polynomial GL(n) weights (nonnegative, summing to the size
  //! of Lambda); shifting by (1, ..., 1) gives the SL(n) picture.
  struct WeightDiagram {
    std::map<Weight, BigInt> multiplicities;

    std::size_t weight_count() const noexcept {
      return multiplicities.size();
    }
    BigInt total_mass() const;
    // Zero when the weight does not occur.
    BigInt multiplicity(Weight const& w) const;
  };

  // Weakly decreasing nonnegative n-tuples with the size of Lambda that
  // Lambda dominates, in decreasing lexicographic order (Lambda first).
  std::vector<Weight> dominant_weights_below(HighestWeight const& lambda);

  // Freudenthal's recursion restricted to dominant weights.
  std::map<Weight, BigInt> dominant_multiplicities(HighestWeight const& lambda);

  // All weights: the dominant multiplicities spread over their orbits under
  // coordinate permutations.
  WeightDiagram freudenthal_diagram(HighestWeight const& lambda);

  // sum_{alpha > 0} floor(<alpha, Lambda + rho> / 3).
  long floor_pairing_sum(HighestWeight const& lambda);

  // prod over S_0(0) of <alpha, rho> for SL(9): 2^3 3^9.
  BigInt mu_limit_denominator();

  //! chi_Lambda(mu) for SL(9) from the limit of the Weyl character formula
  //! along exp((2 pi i / 3 + t) H_rho):
  //!
  //!   -(-1)^{sum floor(<alpha, Lambda + rho>/3)}
  //!     * prod_{alpha in S_0(Lambda)} <alpha, Lambda + rho> / (2^3 3^9)
  //!
  //! when |S_0(Lambda)| = 9, and 0 when |S_0(Lambda)| > 9. Requires rank 9
  //! and size divisible by 3.
  Cyclotomic chi_mu_limit(HighestWeight const& lambda);

}  // namespace theta
