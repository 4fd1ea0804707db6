#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "theta/errors.hpp"

namespace theta {

  // Arbitrary precision integers and rationals. mpq_class keeps its value
  // canonical (reduced, positive denominator, zero is 0/1) after every
  // arithmetic operation.
  using BigInt      = mpz_class;
  using BigRational = mpq_class;

  std::string to_string(BigInt const& x);
  std::string to_string(BigRational const& x);

  // C(n, k) as a big integer; zero when k < 0 or k > n.
  BigInt binomial(long n, long k);

  //! An element of the cyclotomic field Q(zeta), zeta = exp(2 pi i / 9).
  //!
  //! Stored as c0 + c1 zeta + ... + c5 zeta^5, reduced modulo the 9th
  //! cyclotomic polynomial zeta^6 + zeta^3 + 1. The primitive cube root of
  //! unity used throughout is zeta^3, and Q(zeta_3) sits inside as the span
  //! of 1 and zeta^3. Every root of unity in the field is a power of
  //! zeta_18 = -zeta^5, see root_of_unity().
  class Cyclotomic {
   public:
    static constexpr std::size_t degree = 6;

    Cyclotomic() = default;
    Cyclotomic(long value) : c_{} {  // NOLINT(runtime/explicit)
      c_[0] = value;
    }
    Cyclotomic(BigInt const& value) : c_{} {  // NOLINT(runtime/explicit)
      c_[0] = value;
    }
    Cyclotomic(BigRational value) : c_{} {  // NOLINT(runtime/explicit)
      c_[0] = std::move(value);
    }
    explicit Cyclotomic(std::array<BigRational, degree> coefficients)
        : c_(std::move(coefficients)) {}

    // zeta^k for any integer k.
    static Cyclotomic zeta(long k);
    // The cube root of unity (zeta^3)^k.
    static Cyclotomic zeta3(long k) {
      return zeta(3 * k);
    }
    // zeta_18^e; these 18 values are all the roots of unity in the field.
    static Cyclotomic root_of_unity(long e);

    BigRational const& coefficient(std::size_t i) const {
      return c_[i];
    }
    std::array<BigRational, degree> const& coefficients() const noexcept {
      return c_;
    }

    bool is_zero() const;
    // True when the value lies in Q (all zeta-coefficients vanish).
    bool is_rational() const;

    // Complex conjugation zeta -> zeta^-1.
    Cyclotomic conj() const {
      return galois(8);
    }
    // The field automorphism zeta -> zeta^k, gcd(k, 9) = 1.
    Cyclotomic galois(int k) const;
    // Product of all six Galois conjugates; a rational number.
    BigRational norm() const;
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    // If the value is a root of unity, the exponent e in [0, 18) with
    // value = zeta_18^e.
    std::optional<int> root_of_unity_index() const;

    Cyclotomic& operator+=(Cyclotomic const& rhs);
    Cyclotomic& operator-=(Cyclotomic const& rhs);
    Cyclotomic& operator*=(Cyclotomic const& rhs);
    Cyclotomic& operator/=(Cyclotomic const& rhs) {
      return *this *= rhs.inverse();
    }

    friend Cyclotomic operator+(Cyclotomic lhs, Cyclotomic const& rhs) {
      return lhs += rhs;
    }
    friend Cyclotomic operator-(Cyclotomic lhs, Cyclotomic const& rhs) {
      return lhs -= rhs;
    }
    friend Cyclotomic operator*(Cyclotomic const& lhs, Cyclotomic const& rhs);
    friend Cyclotomic operator/(Cyclotomic lhs, Cyclotomic const& rhs) {
      return lhs /= rhs;
    }
    Cyclotomic operator-() const;

    friend bool operator==(Cyclotomic const& lhs, Cyclotomic const& rhs) {
      return lhs.c_ == rhs.c_;
    }
    // Lexicographic on coefficients; an arbitrary but fixed total order
    // used for sorting and map keys, unrelated to the field structure.
    friend std::strong_ordering operator<=>(Cyclotomic const& lhs,
                                            Cyclotomic const& rhs);

    // Human readable form in the basis 1, z, ..., z^5 with z = zeta_9,
    // e.g. "-1 - z^3".
    std::string to_string() const;

   private:
    std::array<BigRational, degree> c_;
  };

  std::ostream& operator<<(std::ostream& os, Cyclotomic const& x);

  // The value as a rational integer; throws NotRationalInteger otherwise.
  BigInt as_integer(Cyclotomic const& x);

}  // namespace theta
