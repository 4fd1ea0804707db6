#include "theta/characters.hpp"

#include <algorithm>
#include <functional>

namespace theta {

  EigenvalueMultiset EigenvalueMultiset::ones(int n) {
    return EigenvalueMultiset(
        std::vector<Cyclotomic>(static_cast<std::size_t>(n), Cyclotomic(1L)));
  }

  EigenvalueMultiset EigenvalueMultiset::sorted() const {
    std::vector<Cyclotomic> v = values_;
    std::sort(v.begin(), v.end());
    return EigenvalueMultiset(std::move(v));
  }

  Cyclotomic EigenvalueMultiset::product() const {
    Cyclotomic p(1L);
    for (auto const& x : values_) {
      p *= x;
    }
    return p;
  }

  bool EigenvalueMultiset::is_special_torsion() const {
    if (product() != Cyclotomic(1L)) {
      return false;
    }
    return std::all_of(values_.begin(), values_.end(), [](auto const& x) {
      return x.pow(9) == Cyclotomic(1L);
    });
  }

  bool operator==(EigenvalueMultiset const& lhs,
                  EigenvalueMultiset const& rhs) {
    return lhs.sorted().values_ == rhs.sorted().values_;
  }

  EigenvalueMultiset mu_eigenvalues() {
    std::vector<Cyclotomic> v;
    for (int block = 0; block < 3; ++block) {
      v.push_back(Cyclotomic::zeta3(1));
      v.push_back(Cyclotomic(1L));
      v.push_back(Cyclotomic::zeta3(2));
    }
    return EigenvalueMultiset(std::move(v));
  }

  EigenvalueMultiset u_eigenvalues() {
    return EigenvalueMultiset(
        {Cyclotomic::zeta3(2), Cyclotomic::zeta3(1), Cyclotomic(1L)});
  }

  BigInt weyl_dimension(HighestWeight const& lambda) {
    Weight const v = shifted_by_rho(lambda);
    BigInt num = 1;
    BigInt den = 1;
    for (PositiveRoot alpha : positive_roots(lambda.rank())) {
      num *= pairing(alpha, v);
      den *= alpha.j - alpha.i;
    }
    return BigInt(num / den);
  }

  std::vector<Cyclotomic> complete_homogeneous(std::span<Cyclotomic const> x,
                                               int kmax) {
    // h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)
    std::vector<Cyclotomic> h(static_cast<std::size_t>(kmax + 1));
    h[0] = 1;
    for (auto const& xi : x) {
      for (int k = 1; k <= kmax; ++k) {
        h[k] += xi * h[k - 1];
      }
    }
    return h;
  }

  std::vector<Cyclotomic> elementary_symmetric(std::span<Cyclotomic const> x,
                                               int kmax) {
    std::vector<Cyclotomic> e(static_cast<std::size_t>(kmax + 1));
    e[0] = 1;
    for (auto const& xi : x) {
      for (int k = kmax; k >= 1; --k) {
        e[k] += xi * e[k - 1];
      }
    }
    return e;
  }

  Cyclotomic determinant(std::vector<Cyclotomic> a, std::size_t n) {
    if (a.size() != n * n) {
      throw PreconditionViolated("determinant: matrix is not square");
    }
    Cyclotomic det(1L);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && a[pivot * n + col].is_zero()) {
        ++pivot;
      }
      if (pivot == n) {
        return Cyclotomic();
      }
      if (pivot != col) {
        for (std::size_t k = col; k < n; ++k) {
          std::swap(a[pivot * n + k], a[col * n + k]);
        }
        det = -det;
      }
      Cyclotomic const& p = a[col * n + col];
      det *= p;
      Cyclotomic const inv = p.inverse();
      for (std::size_t r = col + 1; r < n; ++r) {
        if (a[r * n + col].is_zero()) {
          continue;
        }
        Cyclotomic const f = a[r * n + col] * inv;
        for (std::size_t k = col + 1; k < n; ++k) {
          a[r * n + k] -= f * a[col * n + k];
        }
      }
    }
    return det;
  }

  namespace {
    // det(seq_{parts_i - i + j}) for 0 <= i, j < parts.size().
    Cyclotomic jacobi_trudi(std::vector<int> const&        parts,
                            std::vector<Cyclotomic> const& seq) {
      std::size_t const       n = parts.size();
      std::vector<Cyclotomic> m(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          long const k = static_cast<long>(parts[i]) - static_cast<long>(i)
                         + static_cast<long>(j);
          if (k >= 0 && k < static_cast<long>(seq.size())) {
            m[i * n + j] = seq[k];
          }
        }
      }
      return determinant(std::move(m), n);
    }

    void check_size(HighestWeight const& lambda, EigenvalueMultiset const& x) {
      if (x.size() != static_cast<std::size_t>(lambda.rank())) {
        throw PreconditionViolated("character: expected "
                                   + std::to_string(lambda.rank())
                                   + " eigenvalues");
      }
    }
  }  // namespace

  Cyclotomic schur_jacobi_trudi(HighestWeight const&      lambda,
                                EigenvalueMultiset const& x) {
    check_size(lambda, x);
    std::vector<int> rows(lambda.entries().begin(),
                          lambda.entries().begin() + lambda.length());
    if (rows.empty()) {
      return Cyclotomic(1L);
    }
    int const kmax = rows.front() + static_cast<int>(rows.size());
    return jacobi_trudi(rows, complete_homogeneous(x.values(), kmax));
  }

  Cyclotomic schur_dual_jacobi_trudi(HighestWeight const&      lambda,
                                     EigenvalueMultiset const& x) {
    check_size(lambda, x);
    std::vector<int> cols = lambda.conjugate();
    if (cols.empty()) {
      return Cyclotomic(1L);
    }
    // e_k vanishes for k > n, so the sequence stops at n.
    return jacobi_trudi(cols, elementary_symmetric(x.values(), lambda.rank()));
  }

  Cyclotomic char_at(HighestWeight const& lambda, EigenvalueMultiset const& x) {
    if (lambda.length() <= lambda[0]) {
      return schur_jacobi_trudi(lambda, x);
    }
    return schur_dual_jacobi_trudi(lambda, x);
  }

  BigInt WeightDiagram::total_mass() const {
    BigInt total = 0;
    for (auto const& [w, m] : multiplicities) {
      total += m;
    }
    return total;
  }

  BigInt WeightDiagram::multiplicity(Weight const& w) const {
    auto it = multiplicities.find(w);
    return it == multiplicities.end() ? BigInt(0) : it->second;
  }

  namespace {
    bool dominated_by(std::span<int const> mu, std::span<int const> lambda) {
      long a = 0;
      long b = 0;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        a += mu[i];
        b += lambda[i];
        if (a > b) {
          return false;
        }
      }
      return true;
    }

    void partitions(int remaining, int max_part, std::size_t slots, Weight& cur,
                    std::vector<Weight>& out) {
      if (cur.size() == slots) {
        if (remaining == 0) {
          out.push_back(cur);
        }
        return;
      }
      int const left = static_cast<int>(slots - cur.size());
      for (int p = std::min(remaining, max_part); p >= 0; --p) {
        if (static_cast<long>(p) * left < remaining) {
          break;
        }
        cur.push_back(p);
        partitions(remaining - p, p, slots, cur, out);
        cur.pop_back();
      }
    }

    long norm_sq_shifted(std::span<int const> w) {
      long s = 0;
      auto const n = static_cast<long>(w.size());
      for (long i = 0; i < n; ++i) {
        long const x = w[i] + (n - 1 - i);
        s += x * x;
      }
      return s;
    }
  }  // namespace

  std::vector<Weight> dominant_weights_below(HighestWeight const& lambda) {
    std::vector<Weight> all;
    Weight              cur;
    partitions(lambda.size(), lambda.size(),
               static_cast<std::size_t>(lambda.rank()), cur, all);
    std::vector<Weight> out;
    for (auto& w : all) {
      if (dominated_by(w, lambda.entries())) {
        out.push_back(std::move(w));
      }
    }
    // partitions() already emits in decreasing lexicographic order.
    return out;
  }

  std::map<Weight, BigInt> dominant_multiplicities(
      HighestWeight const& lambda) {
    std::vector<Weight> const dominant = dominant_weights_below(lambda);
    std::map<Weight, BigInt>  mult;
    long const top = norm_sq_shifted(lambda.entries());
    int const  n   = lambda.rank();
    auto const roots = positive_roots(n);

    Weight nu(static_cast<std::size_t>(n));
    Weight sorted(static_cast<std::size_t>(n));
    for (Weight const& mu : dominant) {
      if (mult.empty()) {
        mult.emplace(mu, 1);
        continue;
      }
      BigInt sum = 0;
      for (PositiveRoot alpha : roots) {
        for (int k = 1; mu[alpha.j] - k >= 0; ++k) {
          nu = mu;
          nu[alpha.i] += k;
          nu[alpha.j] -= k;
          sorted = nu;
          std::sort(sorted.begin(), sorted.end(), std::greater<>());
          if (!dominated_by(sorted, lambda.entries())) {
            break;
          }
          auto it = mult.find(sorted);
          if (it != mult.end()) {
            sum += it->second * (nu[alpha.i] - nu[alpha.j]);
          }
        }
      }
      long const gap = top - norm_sq_shifted(mu);
      BigInt     m   = 2 * sum;
      if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(gap))) {
        throw FormulaViolation("Freudenthal recursion: inexact division");
      }
      m /= gap;
      if (m != 0) {
        mult.emplace(mu, std::move(m));
      }
    }
    return mult;
  }

  WeightDiagram freudenthal_diagram(HighestWeight const& lambda) {
    WeightDiagram out;
    for (auto const& [mu, m] : dominant_multiplicities(lambda)) {
      Weight w(mu.rbegin(), mu.rend());
      do {
        out.multiplicities.emplace(w, m);
      } while (std::next_permutation(w.begin(), w.end()));
    }
    return out;
  }

  long floor_pairing_sum(HighestWeight const& lambda) {
    long s = 0;
    for (int p : residue_sets(lambda).values) {
      s += p / 3;
    }
    return s;
  }

  BigInt mu_limit_denominator() {
    ResidueSets const r0 = residue_sets(HighestWeight::zero(9));
    Weight const      v  = rho(9);
    BigInt            d  = 1;
    for (PositiveRoot alpha : r0[0]) {
      d *= pairing(alpha, v);
    }
    return d;
  }

  Cyclotomic chi_mu_limit(HighestWeight const& lambda) {
    if (lambda.rank() != 9) {
      throw PreconditionViolated("chi_mu_limit: rank must be 9");
    }
    if (lambda.size() % 3 != 0) {
      throw PreconditionViolated("chi_mu_limit: weight size must be "
                                 "divisible by 3, got "
                                 + lambda.to_string());
    }
    ResidueSets const r = residue_sets(lambda);
    if (r[0].size() < 9) {
      throw FormulaViolation("chi_mu_limit: |S_0| < 9 for "
                             + lambda.to_string());
    }
    if (r[0].size() > 9) {
      return Cyclotomic();
    }
    Weight const v    = shifted_by_rho(lambda);
    BigInt       prod = 1;
    for (PositiveRoot alpha : r[0]) {
      prod *= pairing(alpha, v);
    }
    if (floor_pairing_sum(lambda) % 2 == 0) {
      prod = -prod;
    }
    BigRational value(prod, mu_limit_denominator());
    value.canonicalize();
    return Cyclotomic(std::move(value));
  }

}  // namespace theta
