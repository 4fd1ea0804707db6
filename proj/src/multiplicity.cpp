#include "theta/multiplicity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "theta/characters.hpp"

namespace theta {

  std::string to_string(Case c) {
    return c == Case::e6 ? "e6" : "e8";
  }

  E6Weight::E6Weight(std::array<int, 6> entries) : entries_(entries) {
    for (int f = 0; f < 3; ++f) {
      if (n(f) < 0 || m(f) < n(f)) {
        throw PreconditionViolated("E6 weight needs m_i >= n_i >= 0");
      }
    }
  }

  bool e6_congruence(E6Weight const& w) {
    int const r = (w.m(0) + w.n(0)) % 3;
    return (w.m(1) + w.n(1)) % 3 == r && (w.m(2) + w.n(2)) % 3 == r;
  }

  BigInt e6_dimension(E6Weight const& w) {
    BigInt d = 1;
    for (int f = 0; f < 3; ++f) {
      d *= weyl_dimension(w.factor(f));
    }
    return d;
  }

  BigInt e6_closed_form(E6Weight const& w) {
    if (!e6_congruence(w)) {
      return 0;
    }
    BigInt const      d = e6_dimension(w);
    unsigned long const r = mpz_fdiv_ui(d.get_mpz_t(), 9);
    long              eps = 0;
    if (r == 1) {
      eps = 8;
    } else if (r == 8) {
      eps = -8;
    } else if (r != 0) {
      throw FormulaViolation("E6 dimension " + to_string(d)
                             + " is not 0, 1 or 8 mod 9");
    }
    BigInt const numer = d + eps;
    if (!mpz_divisible_ui_p(numer.get_mpz_t(), 9)) {
      throw FormulaViolation("E6 closed form not divisible by 9");
    }
    return BigInt(numer / 9);
  }

  namespace {
    using CharCache = std::map<std::vector<Cyclotomic>, Cyclotomic>;

    Cyclotomic cached_char(CharCache& cache, HighestWeight const& lambda,
                           EigenvalueMultiset const& eig) {
      EigenvalueMultiset const key = eig.sorted();
      std::vector<Cyclotomic>  k(key.values().begin(), key.values().end());
      auto                     it = cache.find(k);
      if (it == cache.end()) {
        it = cache.emplace(std::move(k), char_at(lambda, key)).first;
      }
      return it->second;
    }

    BigInt divide_exact(Cyclotomic const& sum, std::size_t order) {
      Cyclotomic const q = sum / Cyclotomic(static_cast<long>(order));
      return as_integer(q);
    }
  }  // namespace

  BigInt e6_averaging(E6Weight const&                   w,
                      FiniteGroup<TripleElement> const& group) {
    std::array<CharCache, 3> cache;
    Cyclotomic               sum;
    for (auto const& g : group.elements()) {
      Cyclotomic term(1L);
      for (int f = 0; f < 3; ++f) {
        term *= cached_char(cache[f], w.factor(f), eigenvalues(g.factors[f]));
      }
      sum += term;
    }
    return divide_exact(sum, group.order());
  }

  BigInt e8_closed_form(HighestWeight const& lambda) {
    if (lambda.rank() != 9) {
      throw PreconditionViolated("e8_closed_form: rank must be 9");
    }
    if (lambda.size() % 3 != 0) {
      return 0;
    }
    BigInt const      d = weyl_dimension(lambda);
    ResidueSets const r = residue_sets(lambda);
    BigInt            numer;
    if (r[0].size() < 9) {
      throw FormulaViolation("|S_0| = " + std::to_string(r[0].size())
                             + " < 9 for " + lambda.to_string());
    }
    if (r[0].size() > 9) {
      numer = d;
    } else {
      Weight const v    = shifted_by_rho(lambda);
      BigInt       prod = 1;
      for (PositiveRoot alpha : r[0]) {
        prod *= pairing(alpha, v);
      }
      BigInt const den = 157464;  // 2^3 3^9
      if (!mpz_divisible_p(prod.get_mpz_t(), den.get_mpz_t())) {
        throw FormulaViolation("S_0 product not divisible by 2^3 3^9 for "
                               + lambda.to_string());
      }
      BigInt term = 26 * (prod / den);
      if (floor_pairing_sum(lambda) % 2 != 0) {
        term = -term;
      }
      numer = d - term;
    }
    if (!mpz_divisible_ui_p(numer.get_mpz_t(), 27)) {
      throw FormulaViolation("closed form not divisible by 27 for "
                             + lambda.to_string());
    }
    return BigInt(numer / 27);
  }

  BigInt e8_lemma_route(HighestWeight const& lambda) {
    if (lambda.rank() != 9) {
      throw PreconditionViolated("e8_lemma_route: rank must be 9");
    }
    if (lambda.size() % 3 != 0) {
      return 0;
    }
    Cyclotomic const chi = char_at(lambda, mu_eigenvalues());
    Cyclotomic const numer
        = Cyclotomic(weyl_dimension(lambda)) + Cyclotomic(26L) * chi;
    return as_integer(numer / Cyclotomic(27L));
  }

  BigInt e8_full_averaging(HighestWeight const&               lambda,
                           FiniteGroup<MonomialMatrix> const& group) {
    if (lambda.rank() != 9) {
      throw PreconditionViolated("e8_full_averaging: rank must be 9");
    }
    CharCache  cache;
    Cyclotomic sum;
    for (auto const& g : group.elements()) {
      sum += cached_char(cache, lambda, eigenvalues(g));
    }
    return divide_exact(sum, group.order());
  }

  namespace {
    void set_agreement(MultiplicityReport& r) {
      std::optional<BigInt> first;
      r.agree = true;
      for (auto const* v : {&r.closed, &r.averaging, &r.direct}) {
        if (!v->has_value()) {
          continue;
        }
        if (!first) {
          first = **v;
        } else if (*first != **v) {
          r.agree = false;
        }
      }
    }
  }  // namespace

  MultiplicityReport e6_report(E6Weight const& w, Routes routes) {
    MultiplicityReport r;
    r.weight.assign(w.entries().begin(), w.entries().end());
    r.dim = e6_dimension(w);
    if (routes.closed) {
      r.closed = e6_closed_form(w);
    }
    if (routes.averaging) {
      r.averaging = e6_averaging(w);
    }
    set_agreement(r);
    return r;
  }

  MultiplicityReport e8_report(HighestWeight const& lambda, Routes routes) {
    MultiplicityReport r;
    r.weight.assign(lambda.entries().begin(), lambda.entries().end());
    r.dim = weyl_dimension(lambda);
    if (routes.closed) {
      r.closed = e8_closed_form(lambda);
    }
    if (routes.averaging) {
      r.averaging = e8_full_averaging(lambda);
    }
    if (routes.direct) {
      r.direct = e8_lemma_route(lambda);
    }
    set_agreement(r);
    return r;
  }

  std::vector<E6Weight> e6_weights_up_to(int bound) {
    std::vector<E6Weight> out;
    if (bound < 0) {
      return out;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m <= bound; ++m) {
      for (int n = 0; n <= m; ++n) {
        pairs.emplace_back(m, n);
      }
    }
    for (auto [m1, n1] : pairs) {
      for (auto [m2, n2] : pairs) {
        for (auto [m3, n3] : pairs) {
          out.emplace_back(std::array<int, 6>{m1, n1, m2, n2, m3, n3});
        }
      }
    }
    return out;
  }

  std::vector<HighestWeight> e8_weights_up_to(int bound) {
    std::vector<HighestWeight> out;
    if (bound < 0) {
      return out;
    }
    std::vector<int>                             cur;
    std::function<void(int)> const               rec = [&](int max_part) {
      if (cur.size() == 8) {
        std::vector<int> full = cur;
        full.push_back(0);
        out.emplace_back(std::move(full));
        return;
      }
      for (int p = 0; p <= max_part; ++p) {
        cur.push_back(p);
        rec(p);
        cur.pop_back();
      }
    };
    rec(bound);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<MultiplicityReport> report(RangeSpec const& range, Routes routes,
                                         unsigned threads) {
    std::vector<std::function<MultiplicityReport()>> jobs;
    if (range.which == Case::e6) {
      routes.direct = false;
      for (auto const& w : e6_weights_up_to(range.max_entry)) {
        jobs.emplace_back([w, routes] { return e6_report(w, routes); });
      }
    } else {
      for (auto const& w : e8_weights_up_to(range.max_entry)) {
        jobs.emplace_back([w, routes] { return e8_report(w, routes); });
      }
    }
    if (jobs.empty()) {
      return {};
    }
    // Build the shared groups before any worker starts.
    if (routes.averaging) {
      range.which == Case::e6 ? (void) e6_group() : (void) e8_group();
    }

    std::vector<MultiplicityReport> out(jobs.size());
    std::atomic<std::size_t>        next{0};
    std::exception_ptr              failure;
    std::mutex                      failure_mutex;
    auto                            worker = [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        try {
          out[i] = jobs[i]();
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      }
    };
    threads = std::max(1u, std::min<unsigned>(threads, jobs.size()));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
    return out;
  }

}  // namespace theta
