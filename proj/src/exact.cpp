#include "theta/exact.hpp"

#include <ostream>
#include <sstream>

namespace theta {

  std::string to_string(BigInt const& x) {
    return x.get_str();
  }

  std::string to_string(BigRational const& x) {
    return x.get_str();
  }

  BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
      return 0;
    }
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
  }

  namespace {
    // Reduce a coefficient vector in powers 0..N-1 of zeta modulo
    // zeta^6 + zeta^3 + 1, highest powers first.
    template <std::size_t N>
    std::array<BigRational, Cyclotomic::degree> reduce(
        std::array<BigRational, N>& p) {
      for (std::size_t k = N - 1; k >= Cyclotomic::degree; --k) {
        if (sgn(p[k]) != 0) {
          p[k - 3] -= p[k];
          p[k - 6] -= p[k];
        }
      }
      std::array<BigRational, Cyclotomic::degree> out;
      for (std::size_t i = 0; i < Cyclotomic::degree; ++i) {
        out[i] = std::move(p[i]);
      }
      return out;
    }

    long mod(long a, long m) {
      long r = a % m;
      return r < 0 ? r + m : r;
    }
  }  // namespace

  Cyclotomic Cyclotomic::zeta(long k) {
    std::array<BigRational, 9> p{};
    p[mod(k, 9)] = 1;
    return Cyclotomic(reduce(p));
  }

  Cyclotomic Cyclotomic::root_of_unity(long e) {
    e = mod(e, 18);
    if (e % 2 == 0) {
      return zeta(e / 2);
    }
    return -zeta((e + 9) / 2);
  }

  bool Cyclotomic::is_zero() const {
    for (auto const& c : c_) {
      if (sgn(c) != 0) {
        return false;
      }
    }
    return true;
  }

  bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < degree; ++i) {
      if (sgn(c_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  Cyclotomic Cyclotomic::galois(int k) const {
    if (k % 3 == 0) {
      throw PreconditionViolated("galois: exponent must be prime to 9");
    }
    std::array<BigRational, 9> p{};
    for (std::size_t j = 0; j < degree; ++j) {
      p[mod(static_cast<long>(j) * k, 9)] += c_[j];
    }
    return Cyclotomic(reduce(p));
  }

  BigRational Cyclotomic::norm() const {
    Cyclotomic prod = *this;
    for (int k : {2, 4, 5, 7, 8}) {
      prod *= galois(k);
    }
    return prod.c_[0];
  }

  Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) {
      throw PreconditionViolated("Cyclotomic: division by zero");
    }
    Cyclotomic others = galois(2);
    for (int k : {4, 5, 7, 8}) {
      others *= galois(k);
    }
    BigRational n = (*this * others).c_[0];
    for (auto& c : others.c_) {
      c /= n;
    }
    return others;
  }

  Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Cyclotomic result(1L);
    while (k != 0) {
      if (k & 1) {
        result *= base;
      }
      k >>= 1;
      if (k != 0) {
        base *= base;
      }
    }
    return result;
  }

  std::optional<int> Cyclotomic::root_of_unity_index() const {
    static std::array<Cyclotomic, 18> const table = [] {
      std::array<Cyclotomic, 18> t;
      for (int e = 0; e < 18; ++e) {
        t[e] = root_of_unity(e);
      }
      return t;
    }();
    for (int e = 0; e < 18; ++e) {
      if (table[e] == *this) {
        return e;
      }
    }
    return std::nullopt;
  }

  Cyclotomic& Cyclotomic::operator+=(Cyclotomic const& rhs) {
    for (std::size_t i = 0; i < degree; ++i) {
      c_[i] += rhs.c_[i];
    }
    return *this;
  }

  Cyclotomic& Cyclotomic::operator-=(Cyclotomic const& rhs) {
    for (std::size_t i = 0; i < degree; ++i) {
      c_[i] -= rhs.c_[i];
    }
    return *this;
  }

  Cyclotomic& Cyclotomic::operator*=(Cyclotomic const& rhs) {
    *this = *this * rhs;
    return *this;
  }

  Cyclotomic operator*(Cyclotomic const& lhs, Cyclotomic const& rhs) {
    std::array<BigRational, 2 * Cyclotomic::degree - 1> p{};
    for (std::size_t i = 0; i < Cyclotomic::degree; ++i) {
      if (sgn(lhs.c_[i]) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < Cyclotomic::degree; ++j) {
        if (sgn(rhs.c_[j]) != 0) {
          p[i + j] += lhs.c_[i] * rhs.c_[j];
        }
      }
    }
    return Cyclotomic(reduce(p));
  }

  Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.c_) {
      c = -c;
    }
    return out;
  }

  std::strong_ordering operator<=>(Cyclotomic const& lhs,
                                   Cyclotomic const& rhs) {
    for (std::size_t i = 0; i < Cyclotomic::degree; ++i) {
      int c = cmp(lhs.c_[i], rhs.c_[i]);
      if (c != 0) {
        return c < 0 ? std::strong_ordering::less
                     : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < degree; ++i) {
      BigRational const& c = c_[i];
      if (sgn(c) == 0) {
        continue;
      }
      BigRational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) {
          os << '-';
        }
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) {
        os << mag.get_str() << '*';
      }
      os << 'z';
      if (i > 1) {
        os << '^' << i;
      }
    }
    if (first) {
      os << '0';
    }
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Cyclotomic const& x) {
    return os << x.to_string();
  }

  BigInt as_integer(Cyclotomic const& x) {
    if (!x.is_rational() || x.coefficient(0).get_den() != 1) {
      throw NotRationalInteger("expected a rational integer, got "
                               + x.to_string());
    }
    return x.coefficient(0).get_num();
  }

}  // namespace theta
