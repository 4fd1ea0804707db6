#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "theta/cartan.hpp"
#include "theta/characters.hpp"
#include "theta/exact.hpp"

namespace theta {

  //! An invertible n x n matrix with one nonzero entry per row and column.
  //!
  //! Column j holds entries()[j] in row perm()[j], so the matrix sends e_j to
  //! entries()[j] e_{perm()[j]}. Indices are zero-based.
  class MonomialMatrix {
   public:
    MonomialMatrix() = default;
    MonomialMatrix(std::vector<int> perm, std::vector<Cyclotomic> entries);

    static MonomialMatrix identity(int n);
    static MonomialMatrix diagonal(std::vector<Cyclotomic> entries);
    static MonomialMatrix scalar(int n, Cyclotomic const& c);
    // From a dense row-major matrix; throws PreconditionViolated unless it
    // has exactly one nonzero entry per row and column.
    static MonomialMatrix from_rows(
        std::vector<std::vector<Cyclotomic>> const& rows);

    int size() const noexcept {
      return static_cast<int>(perm_.size());
    }
    std::span<int const> perm() const noexcept {
      return perm_;
    }
    std::span<Cyclotomic const> entries() const noexcept {
      return entries_;
    }
    Cyclotomic at(int row, int col) const;

    Cyclotomic     determinant() const;
    MonomialMatrix inverse() const;
    bool           is_scalar() const;
    // Smallest k >= 1 with g^k = 1; throws StructureMismatch past max_order.
    int order(int max_order = 1000) const;

    friend MonomialMatrix operator*(MonomialMatrix const& a,
                                    MonomialMatrix const& b);
    friend bool operator==(MonomialMatrix const&, MonomialMatrix const&)
        = default;
    friend auto operator<=>(MonomialMatrix const&, MonomialMatrix const&)
        = default;

    std::vector<std::vector<Cyclotomic>> dense() const;

   private:
    std::vector<int>        perm_;
    std::vector<Cyclotomic> entries_;
  };

  //! Eigenvalues from the cycle decomposition: a k-cycle whose entries
  //! multiply to p contributes the k k-th roots of p.
  //!
  //! Throws UnrepresentableRoot when p is not a root of unity of Q(zeta_9)
  //! or its k-th roots are not all in the field.
  EigenvalueMultiset eigenvalues(MonomialMatrix const& g);

  //! (g1, g2, g3) acting on C^3 (x) C^3 (x) C^3 as g1 (x) g2 (x) g3.
  struct TripleElement {
    std::array<MonomialMatrix, 3> factors;

    static TripleElement identity();

    // Every factor is a scalar matrix.
    bool is_scalar() const;
    int  order() const;

    friend TripleElement operator*(TripleElement const& a,
                                   TripleElement const& b);
    friend bool operator==(TripleElement const&, TripleElement const&)
        = default;
    friend auto operator<=>(TripleElement const&, TripleElement const&)
        = default;
  };

  Tensor333<Cyclotomic> act(TripleElement const& g,
                            Tensor333<Cyclotomic> const& t);
  // Lambda^3 g.
  Wedge3of9<Cyclotomic> act(MonomialMatrix const& g,
                            Wedge3of9<Cyclotomic> const& w);

  bool fixes_e6_cartan(TripleElement const& g);
  bool fixes_e8_cartan(MonomialMatrix const& g);

  //! A finite group given by its deduplicated list of elements.
  template <typename Element>
  class FiniteGroup {
   public:
    FiniteGroup() = default;
    explicit FiniteGroup(std::vector<Element> elements)
        : elements_(std::move(elements)) {
      std::sort(elements_.begin(), elements_.end());
      elements_.erase(std::unique(elements_.begin(), elements_.end()),
                      elements_.end());
    }

    // The subgroup generated by gens (a finite group, so closure under
    // multiplication suffices).
    static FiniteGroup closure(std::vector<Element> const& gens,
                               Element const&              identity,
                               std::size_t                 max_order = 100000) {
      std::set<Element>    seen{identity};
      std::vector<Element> frontier{identity};
      while (!frontier.empty()) {
        std::vector<Element> next;
        for (auto const& x : frontier) {
          for (auto const& g : gens) {
            Element y = x * g;
            if (seen.insert(y).second) {
              next.push_back(std::move(y));
            }
          }
        }
        if (seen.size() > max_order) {
          throw StructureMismatch("group closure exceeded "
                                  + std::to_string(max_order) + " elements");
        }
        frontier = std::move(next);
      }
      return FiniteGroup(std::vector<Element>(seen.begin(), seen.end()));
    }

    std::vector<Element> const& elements() const noexcept {
      return elements_;
    }
    std::size_t order() const noexcept {
      return elements_.size();
    }
    bool contains(Element const& x) const {
      return std::binary_search(elements_.begin(), elements_.end(), x);
    }

    bool is_closed() const {
      for (auto const& a : elements_) {
        for (auto const& b : elements_) {
          if (!contains(a * b)) {
            return false;
          }
        }
      }
      return true;
    }
    bool has_inverses(Element const& identity) const {
      return std::all_of(elements_.begin(), elements_.end(), [&](auto const& a) {
        return std::any_of(elements_.begin(), elements_.end(),
                           [&](auto const& b) { return a * b == identity; });
      });
    }
    // Closed, contains the identity and inverses.
    bool is_group(Element const& identity) const {
      return contains(identity) && is_closed() && has_inverses(identity);
    }

    std::vector<Element> center() const {
      std::vector<Element> out;
      for (auto const& a : elements_) {
        if (std::all_of(elements_.begin(), elements_.end(),
                        [&](auto const& b) { return a * b == b * a; })) {
          out.push_back(a);
        }
      }
      return out;
    }

   private:
    std::vector<Element> elements_;
  };

  //! The four displayed families of triples, parameters alpha, beta, delta,
  //! mu running over all cube roots of unity (delta != mu in family 2).
  //! family is 1..4; duplicates are not removed.
  std::vector<TripleElement> e6_family_candidates(int family);

  //! The centralizer M of the E6 Cartan subspace in SL3 x SL3 x SL3: all
  //! family candidates that fix v1, v2, v3, deduplicated as triples.
  //! Throws StructureMismatch unless the result is a group of order 81.
  FiniteGroup<TripleElement> enumerate_e6_M();

  // w diag(I, z I, z^2 I) with z = z3^z_exp, w = z3^w_exp.
  MonomialMatrix e8_A(int z_exp, int w_exp);
  // w diag(1, z, z^2, z^2, 1, z, z, z^2, 1).
  MonomialMatrix e8_B(int z_exp, int w_exp);
  // Block cyclic shifts [[0,I,0],[0,0,I],[I,0,0]] and its inverse.
  MonomialMatrix e8_U();
  MonomialMatrix e8_V();

  //! The centralizer of the E8 Cartan subspace in SL(9): closure of all
  //! A_{z,w}, B_{z,w}, U, V. Throws StructureMismatch unless every element
  //! fixes omega_1..omega_4 and the order is 81.
  FiniteGroup<MonomialMatrix> enumerate_e8_C();

  //! Structural checks on a computed centralizer: order 81, group axioms,
  //! the Cartan basis fixed, and the eigenvalue pattern of central and
  //! non-central elements.
  std::vector<CheckResult> verify_e6_group(
      FiniteGroup<TripleElement> const& group);
  std::vector<CheckResult> verify_e8_group(
      FiniteGroup<MonomialMatrix> const& group);

  // Built once on first use.
  FiniteGroup<TripleElement> const& e6_group();
  FiniteGroup<MonomialMatrix> const& e8_group();

}  // namespace theta
