#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "theta/centralizers.hpp"
#include "theta/exact.hpp"
#include "theta/weights.hpp"

namespace theta {

  enum class Case { e6, e8 };

  std::string to_string(Case c);

  //! Highest weight (m1,n1) x (m2,n2) x (m3,n3) of SL3 x SL3 x SL3, naming
  //! F^{m1,n1} (x) F^{m2,n2} (x) F^{m3,n3}.
  class E6Weight {
   public:
    // Needs m_i >= n_i >= 0.
    explicit E6Weight(std::array<int, 6> entries);

    int m(int factor) const {
      return entries_[2 * factor];
    }
    int n(int factor) const {
      return entries_[2 * factor + 1];
    }
    HighestWeight factor(int i) const {
      return HighestWeight::sl3(m(i), n(i));
    }
    std::array<int, 6> const& entries() const noexcept {
      return entries_;
    }

    friend bool operator==(E6Weight const&, E6Weight const&) = default;
    friend auto operator<=>(E6Weight const&, E6Weight const&) = default;

   private:
    std::array<int, 6> entries_;
  };

  // m1 + n1 = m2 + n2 = m3 + n3 mod 3.
  bool e6_congruence(E6Weight const& w);
  // Product of the three SL(3) dimensions.
  BigInt e6_dimension(E6Weight const& w);

  //! (D + eps) / 9 with D the dimension and eps = 0, 8, -8 for D = 0, 1, 8
  //! mod 9; zero when the congruence fails. Throws FormulaViolation if the
  //! congruence holds but D mod 9 is anything else.
  BigInt e6_closed_form(E6Weight const& w);

  //! (1/|M|) sum over the triples (g1, g2, g3) in M of
  //! prod_i chi_{m_i,n_i}(g_i).
  BigInt e6_averaging(E6Weight const&                   w,
                      FiniteGroup<TripleElement> const& group = e6_group());

  //! Harmonic multiplicity of F^Lambda in O(Lambda^3 C^9) from the closed
  //! form: 0 if 3 does not divide |Lambda|; dim / 27 if |S_0| > 9; and
  //! (dim - 26 (-1)^F prod_{S_0} <alpha, Lambda + rho> / (2^3 3^9)) / 27 with
  //! F = sum floor(<alpha, Lambda + rho> / 3) if |S_0| = 9.
  BigInt e8_closed_form(HighestWeight const& lambda);

  //! (dim + 26 chi_Lambda(mu)) / 27 with chi_Lambda(mu) evaluated directly
  //! by char_at. Zero when 3 does not divide |Lambda|, since the center then
  //! acts by a nontrivial character.
  BigInt e8_lemma_route(HighestWeight const& lambda);

  // (1/81) sum over the centralizer of chi_Lambda(g).
  BigInt e8_full_averaging(HighestWeight const&               lambda,
                           FiniteGroup<MonomialMatrix> const& group
                           = e8_group());

  // Which engines to run.
  struct Routes {
    bool closed    = true;
    bool averaging = true;
    // E8 only: (dim + 26 chi(mu)) / 27 with chi(mu) evaluated directly.
    bool direct = true;
  };

  struct MultiplicityReport {
    // The E6 six-tuple or the SL(9) tuple lambda_1..lambda_9.
    std::vector<int>      weight;
    BigInt                dim;
    std::optional<BigInt> closed;
    std::optional<BigInt> averaging;
    std::optional<BigInt> direct;
    // All populated routes are equal.
    bool agree = true;
  };

  MultiplicityReport e6_report(E6Weight const& w, Routes routes = {});
  MultiplicityReport e8_report(HighestWeight const& lambda, Routes routes = {});

  // All E6 weights with every m_i <= bound, in lexicographic order.
  std::vector<E6Weight> e6_weights_up_to(int bound);
  // Dominant SL(9) weights (lambda_9 = 0) with entries <= bound, in
  // lexicographic order.
  std::vector<HighestWeight> e8_weights_up_to(int bound);

  struct RangeSpec {
    Case which;
    // Largest allowed entry; a negative bound is the empty range.
    int max_entry;
  };

  //! One report per weight of the range, in lexicographic weight order. With
  //! threads > 1 the weights are evaluated concurrently; the result does not
  //! depend on the thread count.
  std::vector<MultiplicityReport> report(RangeSpec const& range,
                                         Routes           routes  = {},
                                         unsigned         threads = 1);

}  // namespace theta
