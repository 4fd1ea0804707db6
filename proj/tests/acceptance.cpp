// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <sys/resource.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "theta/cartan.hpp"
#include "theta/centralizers.hpp"
#include "theta/characters.hpp"
#include "theta/cli.hpp"
#include "theta/graded_oracle.hpp"
#include "theta/multiplicity.hpp"

using namespace theta;

namespace {

  struct Verdict {
    bool        passed = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok && passed) {
        passed = false;
        detail = what;
      }
    }
  };

  int failures = 0;

  void criterion(int number, std::string const& title, double limit_seconds,
                 std::function<void(Verdict&)> const& body) {
    Verdict    v;
    auto const start = std::chrono::steady_clock::now();
    try {
      body(v);
    } catch (std::exception const& e) {
      v.passed = false;
      v.detail = std::string("exception: ") + e.what();
    }
    double const seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (v.passed && seconds > limit_seconds) {
      v.passed = false;
      v.detail = "took longer than the limit";
    }
    failures += !v.passed;
    std::cout << (v.passed ? "PASS" : "FAIL") << " criterion " << number
              << ": " << title << " [" << std::fixed << std::setprecision(2)
              << seconds << " s, limit " << std::setprecision(0)
              << limit_seconds << " s]";
    if (!v.detail.empty()) {
      std::cout << " -- " << v.detail;
    }
    std::cout << std::endl;
  }

  E6Weight e6(int m1, int n1, int m2, int n2, int m3, int n3) {
    return E6Weight({m1, n1, m2, n2, m3, n3});
  }

  std::string show(std::span<int const> w) {
    std::string out;
    for (int x : w) {
      out += (out.empty() ? "" : ",") + std::to_string(x);
    }
    return "(" + out + ")";
  }

  long peak_rss_mib() {
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return usage.ru_maxrss / 1024;
  }

  std::string capture(std::vector<std::string> const& args, int& code) {
    std::ostringstream out, err;
    code = run_cli(args, out, err);
    return out.str();
  }

}  // namespace

int main() {
  criterion(1, "E6 closed form equals averaging for all m_i, n_i <= 3", 60,
            [](Verdict& v) {
              std::size_t n = 0;
              for (auto const& w : e6_weights_up_to(3)) {
                auto const closed = e6_closed_form(w);
                auto const avg    = e6_averaging(w);
                v.require(closed == avg,
                          "mismatch at " + show(w.entries()) + ": "
                              + to_string(closed) + " vs " + to_string(avg));
                ++n;
              }
              v.require(n == 1000, "expected 1000 weights");
              v.require(e6_closed_form(e6(0, 0, 0, 0, 0, 0)) == 1,
                        "trivial weight is not 1");
              v.require(e6_averaging(e6(1, 0, 0, 0, 0, 0)) == 0,
                        "non-congruent weight is not 0");
              v.require(e6_averaging(e6(1, 0, 1, 0, 1, 0)) == 3,
                        "(1,0)^3 is not 3");
              if (v.passed) {
                v.detail = std::to_string(n) + " weights";
              }
            });

  criterion(2,
            "E8 closed form, direct chi(mu) route and averaging agree, "
            "entries <= 2",
            60, [](Verdict& v) {
              std::size_t n = 0;
              for (auto const& lambda : e8_weights_up_to(2)) {
                auto const a = e8_closed_form(lambda);
                auto const b = e8_lemma_route(lambda);
                auto const c = e8_full_averaging(lambda);
                v.require(a == b && b == c,
                          "mismatch at " + lambda.to_string());
                if (lambda.size() % 3 != 0) {
                  v.require(a == 0, "nonzero for |Lambda| not divisible by 3");
                }
                ++n;
              }
              v.require(e8_full_averaging(HighestWeight::zero(9)) == 1,
                        "trivial weight is not 1");
              v.require(e8_closed_form(HighestWeight({1, 1, 1, 0, 0, 0, 0, 0,
                                                      0}))
                            == 6,
                        "(1,1,1,0^6) is not 6");
              if (v.passed) {
                v.detail = std::to_string(n) + " weights";
              }
            });

  criterion(3, "limit formula equals the character at mu, entries <= 4", 60,
            [](Verdict& v) {
              std::set<HighestWeight> weights;
              for (auto const& l : e8_weights_up_to(2)) {
                weights.insert(l);
              }
              for (auto const& l : e8_weights_up_to(4)) {
                weights.insert(l);
              }
              std::size_t checked = 0, vanishing = 0;
              for (auto const& lambda : weights) {
                if (lambda.size() % 3 != 0) {
                  continue;
                }
                auto const direct = char_at(lambda, mu_eigenvalues());
                auto const limit  = chi_mu_limit(lambda);
                v.require(direct == limit, "mismatch at " + lambda.to_string());
                bool const big_s0 = residue_sets(lambda)[0].size() > 9;
                v.require(limit.is_zero() == big_s0,
                          "zero pattern differs from |S_0| > 9 at "
                              + lambda.to_string());
                vanishing += big_s0;
                ++checked;
              }
              v.require(mu_limit_denominator() == 157464,
                        "denominator is not 157464");
              if (v.passed) {
                v.detail = std::to_string(checked) + " weights, "
                           + std::to_string(vanishing) + " with |S_0| > 9";
              }
            });

  criterion(4, "SL(9) root constants at the zero weight", 1, [](Verdict& v) {
    auto const r = residue_sets(HighestWeight::zero(9));
    v.require(r[1].size() == 15, "|S_1| != 15");
    v.require(r[2].size() == 12, "|S_2| != 12");
    v.require(r[0].size() == 9, "|S_0| != 9");
    v.require(std::accumulate(r.values.begin(), r.values.end(), 0) == 120,
              "sum of <alpha, rho> != 120");
  });

  criterion(5, "centralizer group structure", 5, [](Verdict& v) {
    auto const e6g = enumerate_e6_M();
    v.require(e6g.order() == 81, "E6 order is not 81");
    std::size_t scalar = 0, trivial = 0, generic = 0;
    EigenvalueMultiset const roots(
        {Cyclotomic(1L), Cyclotomic::zeta3(1), Cyclotomic::zeta3(2)});
    for (auto const& g : e6g.elements()) {
      if (g.is_scalar()) {
        ++scalar;
        bool same = true;
        for (std::size_t p = 0; p < 27; ++p) {
          auto const idx = Tensor333<Cyclotomic>::unindex(p);
          auto const t   = Tensor333<Cyclotomic>::basis(idx[0], idx[1], idx[2]);
          same           = same && act(g, t) == t;
        }
        trivial += same;
      } else {
        bool all = true;
        for (auto const& f : g.factors) {
          all = all && eigenvalues(f) == roots;
        }
        generic += all;
      }
    }
    v.require(scalar == 9 && trivial == 9,
              "E6 scalar triples: " + std::to_string(scalar) + ", trivial "
                  + std::to_string(trivial));
    v.require(generic == 72, "E6 elements with {1,z3,z3^2} per factor: "
                                 + std::to_string(generic));

    auto const e8g = enumerate_e8_C();
    v.require(e8g.order() == 81, "E8 order is not 81");
    std::size_t scalars = 0, like_mu = 0;
    for (auto const& g : e8g.elements()) {
      if (g.is_scalar()) {
        ++scalars;
      } else {
        like_mu += eigenvalues(g) == mu_eigenvalues();
      }
    }
    v.require(scalars == 3, "E8 scalar elements: " + std::to_string(scalars));
    v.require(like_mu == 78, "E8 elements like mu: " + std::to_string(like_mu));
  });

  criterion(6, "Cartan subspace identities, exact", 5, [](Verdict& v) {
    auto const checks = verify_cartan();
    for (auto const& c : checks) {
      v.require(c.passed, c.name + ": " + c.detail);
    }
    if (v.passed) {
      v.detail = std::to_string(checks.size()) + " identities";
    }
  });

  criterion(
      7, "graded oracle: Sym^2, dimensions, invariants, harmonic bounds", 600,
      [](Verdict& v) {
        GradedOracle const e6o(Case::e6, 8);
        Components const   cauchy{{Weight{2, 0, 0, 2, 0, 0, 2, 0, 0}, 1},
                                  {Weight{2, 0, 0, 1, 1, 0, 1, 1, 0}, 1},
                                  {Weight{1, 1, 0, 2, 0, 0, 1, 1, 0}, 1},
                                  {Weight{1, 1, 0, 1, 1, 0, 2, 0, 0}, 1}};
        v.require(e6o.components(2) == cauchy,
                  "E6 Sym^2 is not the four Cauchy components");
        for (int d = 0; d <= 8; ++d) {
          v.require(e6o.dimension_conserved(d),
                    "E6 dimension mismatch at degree " + std::to_string(d));
        }
        auto const inv6 = e6o.invariant_series().coefficients;
        v.require(std::vector<BigInt>(inv6.begin(), inv6.begin() + 7)
                      == std::vector<BigInt>{1, 0, 0, 0, 0, 0, 1},
                  "E6 invariant series is not 1,0,0,0,0,0,1");

        std::size_t labels = 0;
        auto bound_check = [&](GradedOracle const& o, auto closed_form) {
          std::set<Weight> seen;
          for (int d = 0; d <= o.max_degree(); ++d) {
            for (auto const& [p, m] : o.components(d)) {
              seen.insert(sl_label(o.which(), p));
            }
          }
          for (auto const& label : seen) {
            auto const h       = o.harmonic_series(label);
            BigInt     partial = 0;
            for (auto const& c : h.coefficients) {
              partial += c;
            }
            BigInt const closed = closed_form(label);
            v.require(partial <= closed,
                      "harmonic partial sum " + to_string(partial)
                          + " exceeds closed form " + to_string(closed)
                          + " at " + show(label));
          }
          labels += seen.size();
        };
        bound_check(e6o, [](Weight const& l) {
          return e6_closed_form(E6Weight({l[0], l[1], l[2], l[3], l[4], l[5]}));
        });

        auto const         t0 = std::chrono::steady_clock::now();
        GradedOracle const e8o(Case::e8, 6);
        double const       e8_seconds
            = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                            - t0)
                  .count();
        for (int d = 0; d <= 6; ++d) {
          v.require(e8o.dimension_conserved(d),
                    "E8 dimension mismatch at degree " + std::to_string(d));
        }
        v.require(e8o.invariant_series().coefficients
                      == std::vector<BigInt>{1, 0, 0, 0, 0, 0, 0},
                  "E8 invariant series is not 1,0,0,0,0,0,0");
        bound_check(e8o,
                    [](Weight const& l) { return e8_closed_form(HighestWeight(l)); });
        long const rss = peak_rss_mib();
        v.require(rss < 2048, "peak memory " + std::to_string(rss) + " MiB");
        if (v.passed) {
          std::ostringstream s;
          s << std::fixed << std::setprecision(2) << "E8 degree 6 in "
            << e8_seconds << " s, peak " << rss << " MiB (limit 2048), "
            << labels << " harmonic series bounded";
          v.detail = s.str();
        }
      });

  criterion(8, "table output is identical across runs and thread counts", 120,
            [](Verdict& v) {
              for (std::vector<std::string> base :
                   {std::vector<std::string>{"table", "e6", "--max", "3"},
                    std::vector<std::string>{"table", "e8", "--max", "2"},
                    std::vector<std::string>{"table", "e8", "--max", "2",
                                             "--format", "csv"}}) {
                int        code = 0;
                auto const first = capture(base, code);
                v.require(code == exit_ok, "table exited with "
                                               + std::to_string(code));
                auto const again = capture(base, code);
                v.require(first == again, "repeated run differs");
                auto threaded = base;
                threaded.insert(threaded.end(), {"--threads", "4"});
                v.require(capture(threaded, code) == first,
                          "threaded run differs");
              }
            });

  return failures;
}
