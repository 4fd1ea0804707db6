#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "theta/exact.hpp"
#include "theta/multiplicity.hpp"
#include "theta/weights.hpp"

namespace theta {

  // Brute-force decomposition of Sym^d(V) for V = C^3 (x) C^3 (x) C^3 (e6)
  // or Lambda^3 C^9 (e8). Weights live in nine coordinates: three GL(3)
  // blocks for e6, one GL(9) weight for e8. Since every coordinate of a
  // weight of Sym^d(V) lies in [0, d], weights are packed seven bits per
  // coordinate, which also makes weight addition integer addition.

  std::uint64_t pack_weight(Weight const& w);
  Weight        unpack_weight(std::uint64_t key);

  // The weights of V: 27 for e6, 84 for e8, each of multiplicity one.
  std::vector<Weight> basis_weights(Case which);
  int                 representation_dimension(Case which);

  // Highest degree symd_weights accepts: 12 for e6; for e8 6 unless the
  // THETA_ORACLE_MAX_DEGREE environment variable says otherwise.
  int default_degree_cap(Case which);

  //! Weight multiplicities of Sym^d(V).
  struct WeightMultTable {
    Case                                      which;
    int                                       degree;
    std::unordered_map<std::uint64_t, BigInt> counts;

    std::size_t size() const noexcept {
      return counts.size();
    }
    BigInt count(Weight const& w) const;
    BigInt total_mass() const;
    std::vector<std::pair<Weight, BigInt>> sorted_entries() const;
  };

  // Throws ScaleExceeded above cap.
  WeightMultTable symd_weights(Case which, int degree, int cap);
  WeightMultTable symd_weights(Case which, int degree);

  // Per-block (e6) or global (e8) weakly decreasing.
  bool is_dominant(Case which, Weight const& w);
  // The SL label of a polynomial highest weight: (m1,n1,m2,n2,m3,n3) for
  // e6, (lambda_1..lambda_8, 0) for e8.
  Weight sl_label(Case which, Weight const& gl_weight);
  // Dimension of the irreducible with this polynomial highest weight.
  BigInt irreducible_dimension(Case which, Weight const& gl_weight);

  // Irreducible components of one degree: polynomial highest weight ->
  // multiplicity.
  using Components = std::map<Weight, BigInt>;

  //! Decompose a table by repeated subtraction of irreducible characters,
  //! always taking the lexicographically largest dominant weight left.
  //!
  //! Only dominant weights are touched; the table is first checked to be
  //! symmetric under the Weyl group, which makes this equivalent to
  //! subtracting full weight diagrams. Throws NegativeRemainder if a count
  //! would go negative or the table is not symmetric.
  Components decompose(WeightMultTable const& table);

  struct HilbertSeries {
    std::vector<BigInt> coefficients;

    BigInt const& operator[](std::size_t d) const {
      return coefficients[d];
    }
    std::size_t size() const noexcept {
      return coefficients.size();
    }
  };

  //! The graded decomposition of Sym^d(V) for d = 0..max_degree, with the
  //! invariant series and harmonic series derived from it.
  class GradedOracle {
   public:
    GradedOracle(Case which, int max_degree);
    GradedOracle(Case which, int max_degree, int cap);

    Case which() const noexcept {
      return which_;
    }
    int max_degree() const noexcept {
      return static_cast<int>(components_.size()) - 1;
    }
    Components const& components(int degree) const {
      return components_.at(static_cast<std::size_t>(degree));
    }
    // Number of weights of Sym^d(V) (size of the full table).
    std::size_t table_size(int degree) const {
      return table_sizes_.at(static_cast<std::size_t>(degree));
    }

    // sum_lambda m_lambda(d) dim(lambda) and C(dim V + d - 1, d).
    BigInt decomposed_dimension(int degree) const;
    BigInt expected_dimension(int degree) const;
    bool   dimension_conserved(int degree) const {
      return decomposed_dimension(degree) == expected_dimension(degree);
    }

    // m_label(d) for d = 0..max_degree, label as in sl_label().
    std::vector<BigInt> graded_multiplicities(Weight const& label) const;
    // Coefficients m_trivial(d).
    HilbertSeries invariant_series() const;
    //! Graded multiplicities divided by the invariant series (truncated).
    //! Throws NegativeCoefficient if a coefficient comes out negative.
    HilbertSeries harmonic_series(Weight const& label) const;

   private:
    Case                     which_;
    std::vector<Components>  components_;
    std::vector<std::size_t> table_sizes_;
  };

  // Convenience wrappers building a GradedOracle.
  HilbertSeries invariant_series(Case which, int max_degree);
  HilbertSeries harmonic_series(Case which, Weight const& label,
                                int max_degree);

}  // namespace theta
