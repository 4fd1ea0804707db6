#include "theta/graded_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "theta/characters.hpp"

namespace theta {

  namespace {
    constexpr int           coord_bits = 7;
    constexpr std::uint64_t coord_mask = (1u << coord_bits) - 1;
    constexpr int           coords     = 9;
  }  // namespace

  std::uint64_t pack_weight(Weight const& w) {
    if (w.size() != coords) {
      throw PreconditionViolated("pack_weight: expected 9 coordinates");
    }
    std::uint64_t key = 0;
    for (int i = 0; i < coords; ++i) {
      if (w[i] < 0 || static_cast<std::uint64_t>(w[i]) > coord_mask) {
        throw PreconditionViolated("pack_weight: coordinate out of range");
      }
      key |= static_cast<std::uint64_t>(w[i]) << (coord_bits * i);
    }
    return key;
  }

  Weight unpack_weight(std::uint64_t key) {
    Weight w(coords);
    for (int i = 0; i < coords; ++i) {
      w[i] = static_cast<int>((key >> (coord_bits * i)) & coord_mask);
    }
    return w;
  }

  std::vector<Weight> basis_weights(Case which) {
    std::vector<Weight> out;
    if (which == Case::e6) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          for (int k = 0; k < 3; ++k) {
            Weight w(coords, 0);
            w[i] = w[3 + j] = w[6 + k] = 1;
            out.push_back(std::move(w));
          }
        }
      }
    } else {
      for (int a = 0; a < 9; ++a) {
        for (int b = a + 1; b < 9; ++b) {
          for (int c = b + 1; c < 9; ++c) {
            Weight w(coords, 0);
            w[a] = w[b] = w[c] = 1;
            out.push_back(std::move(w));
          }
        }
      }
    }
    return out;
  }

  int representation_dimension(Case which) {
    return which == Case::e6 ? 27 : 84;
  }

  int default_degree_cap(Case which) {
    if (which == Case::e6) {
      return 12;
    }
    if (char const* env = std::getenv("THETA_ORACLE_MAX_DEGREE")) {
      try {
        int const cap = std::stoi(env);
        if (cap >= 0) {
          return std::min<int>(cap, static_cast<int>(coord_mask));
        }
      } catch (std::exception const&) {
      }
      throw PreconditionViolated(
          std::string("THETA_ORACLE_MAX_DEGREE is not a degree: ") + env);
    }
    return 6;
  }

  namespace {
    using DpTable = std::unordered_map<std::uint64_t, std::uint64_t>;

    // Multiset DP: items in fixed basis order, degrees ascending within an
    // item, so every monomial is counted once.
    std::vector<DpTable> symd_tables(Case which, int max_degree) {
      std::vector<DpTable> tables(static_cast<std::size_t>(max_degree + 1));
      tables[0].emplace(0, 1);
      for (Weight const& item : basis_weights(which)) {
        std::uint64_t const step = pack_weight(item);
        for (int d = 1; d <= max_degree; ++d) {
          DpTable const& prev = tables[d - 1];
          DpTable&       cur  = tables[d];
          cur.reserve(cur.size() + prev.size());
          for (auto const& [key, count] : prev) {
            std::uint64_t& slot = cur[key + step];
            if (__builtin_add_overflow(slot, count, &slot)) {
              throw ScaleExceeded("Sym^d weight count overflowed 64 bits");
            }
          }
        }
      }
      return tables;
    }

    void check_degree(Case which, int degree, int cap) {
      if (degree < 0) {
        throw PreconditionViolated("degree must be nonnegative");
      }
      if (degree > cap) {
        throw ScaleExceeded(to_string(which) + " degree "
                            + std::to_string(degree) + " exceeds cap "
                            + std::to_string(cap));
      }
    }

    Weight dominant_representative(Case which, Weight w) {
      if (which == Case::e6) {
        for (int b = 0; b < 3; ++b) {
          std::sort(w.begin() + 3 * b, w.begin() + 3 * b + 3, std::greater<>());
        }
      } else {
        std::sort(w.begin(), w.end(), std::greater<>());
      }
      return w;
    }

    BigInt to_big(std::uint64_t x) {
      BigInt out;
      mpz_import(out.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
      return out;
    }
    BigInt const& to_big(BigInt const& x) {
      return x;
    }

    // Symmetry check plus restriction to dominant weights.
    template <typename Map>
    std::map<Weight, BigInt> dominant_part(Case which, Map const& table) {
      std::map<Weight, BigInt> out;
      for (auto const& [key, count] : table) {
        Weight const w = unpack_weight(key);
        Weight const d = dominant_representative(which, w);
        if (d == w) {
          out.emplace(w, to_big(count));
          continue;
        }
        auto it = table.find(pack_weight(d));
        if (it == table.end() || it->second != count) {
          throw NegativeRemainder("weight table is not Weyl-symmetric");
        }
      }
      return out;
    }

    // Polynomial highest weight (GL coordinates) -> dominant weights of the
    // irreducible with multiplicities, in GL coordinates.
    std::vector<std::pair<Weight, BigInt>> gl_dominant(Weight const& top) {
      int const  shift = top.back();
      auto const mult  = dominant_multiplicities(HighestWeight(top));
      std::vector<std::pair<Weight, BigInt>> out;
      for (auto const& [w, m] : mult) {
        Weight g = w;
        for (int& x : g) {
          x += shift;
        }
        out.emplace_back(std::move(g), m);
      }
      return out;
    }

    class DominantCache {
     public:
      explicit DominantCache(Case which) : which_(which) {}

      std::vector<std::pair<Weight, BigInt>> const& get(Weight const& top) {
        auto it = cache_.find(top);
        if (it != cache_.end()) {
          return it->second;
        }
        std::vector<std::pair<Weight, BigInt>> out;
        if (which_ == Case::e8) {
          out = gl_dominant(top);
        } else {
          std::array<std::vector<std::pair<Weight, BigInt>>, 3> parts;
          for (int b = 0; b < 3; ++b) {
            parts[b] = gl_dominant(
                Weight(top.begin() + 3 * b, top.begin() + 3 * b + 3));
          }
          for (auto const& [w0, m0] : parts[0]) {
            for (auto const& [w1, m1] : parts[1]) {
              for (auto const& [w2, m2] : parts[2]) {
                Weight w = w0;
                w.insert(w.end(), w1.begin(), w1.end());
                w.insert(w.end(), w2.begin(), w2.end());
                out.emplace_back(std::move(w), BigInt(m0 * m1 * m2));
              }
            }
          }
        }
        return cache_.emplace(top, std::move(out)).first->second;
      }

     private:
      Case                                                       which_;
      std::map<Weight, std::vector<std::pair<Weight, BigInt>>> cache_;
    };

    Components decompose_dominant(std::map<Weight, BigInt> remaining,
                                  DominantCache&           cache) {
      Components out;
      while (!remaining.empty()) {
        auto top = std::prev(remaining.end());
        if (sgn(top->second) == 0) {
          remaining.erase(top);
          continue;
        }
        if (sgn(top->second) < 0) {
          throw NegativeRemainder("negative count left at a dominant weight");
        }
        Weight const highest = top->first;
        BigInt const count   = top->second;
        out.emplace(highest, count);
        for (auto const& [w, m] : cache.get(highest)) {
          auto it = remaining.find(w);
          if (it == remaining.end()) {
            throw NegativeRemainder("subtraction below zero at a missing "
                                    "weight");
          }
          it->second -= count * m;
          if (sgn(it->second) < 0) {
            throw NegativeRemainder("subtraction drove a count below zero");
          }
        }
      }
      return out;
    }
  }  // namespace

  BigInt WeightMultTable::count(Weight const& w) const {
    auto it = counts.find(pack_weight(w));
    return it == counts.end() ? BigInt(0) : it->second;
  }

  BigInt WeightMultTable::total_mass() const {
    BigInt total = 0;
    for (auto const& [k, c] : counts) {
      total += c;
    }
    return total;
  }

  std::vector<std::pair<Weight, BigInt>> WeightMultTable::sorted_entries()
      const {
    std::vector<std::pair<Weight, BigInt>> out;
    out.reserve(counts.size());
    for (auto const& [k, c] : counts) {
      out.emplace_back(unpack_weight(k), c);
    }
    std::sort(out.begin(), out.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
    return out;
  }

  WeightMultTable symd_weights(Case which, int degree, int cap) {
    check_degree(which, degree, cap);
    auto            tables = symd_tables(which, degree);
    WeightMultTable out{which, degree, {}};
    out.counts.reserve(tables[degree].size());
    for (auto const& [k, c] : tables[degree]) {
      out.counts.emplace(k, to_big(c));
    }
    return out;
  }

  WeightMultTable symd_weights(Case which, int degree) {
    return symd_weights(which, degree, default_degree_cap(which));
  }

  bool is_dominant(Case which, Weight const& w) {
    return dominant_representative(which, w) == w;
  }

  Weight sl_label(Case which, Weight const& p) {
    if (which == Case::e6) {
      return {p[0] - p[2], p[1] - p[2], p[3] - p[5],
              p[4] - p[5], p[6] - p[8], p[7] - p[8]};
    }
    Weight out = p;
    for (int& x : out) {
      x -= p.back();
    }
    return out;
  }

  BigInt irreducible_dimension(Case which, Weight const& p) {
    if (which == Case::e8) {
      return weyl_dimension(HighestWeight(p));
    }
    BigInt d = 1;
    for (int b = 0; b < 3; ++b) {
      d *= weyl_dimension(
          HighestWeight(Weight(p.begin() + 3 * b, p.begin() + 3 * b + 3)));
    }
    return d;
  }

  Components decompose(WeightMultTable const& table) {
    DominantCache cache(table.which);
    return decompose_dominant(dominant_part(table.which, table.counts), cache);
  }

  GradedOracle::GradedOracle(Case which, int max_degree)
      : GradedOracle(which, max_degree, default_degree_cap(which)) {}

  GradedOracle::GradedOracle(Case which, int max_degree, int cap)
      : which_(which) {
    check_degree(which, max_degree, cap);
    auto          tables = symd_tables(which, max_degree);
    DominantCache cache(which);
    for (auto& table : tables) {
      table_sizes_.push_back(table.size());
      components_.push_back(
          decompose_dominant(dominant_part(which, table), cache));
      DpTable().swap(table);
    }
  }

  BigInt GradedOracle::decomposed_dimension(int degree) const {
    BigInt total = 0;
    for (auto const& [p, m] : components(degree)) {
      total += m * irreducible_dimension(which_, p);
    }
    return total;
  }

  BigInt GradedOracle::expected_dimension(int degree) const {
    return binomial(representation_dimension(which_) + degree - 1, degree);
  }

  std::vector<BigInt> GradedOracle::graded_multiplicities(
      Weight const& label) const {
    std::vector<BigInt> out;
    for (auto const& comps : components_) {
      BigInt m = 0;
      for (auto const& [p, count] : comps) {
        if (sl_label(which_, p) == label) {
          m += count;
        }
      }
      out.push_back(m);
    }
    return out;
  }

  HilbertSeries GradedOracle::invariant_series() const {
    std::size_t const n = which_ == Case::e6 ? 6 : 9;
    return {graded_multiplicities(Weight(n, 0))};
  }

  HilbertSeries GradedOracle::harmonic_series(Weight const& label) const {
    std::vector<BigInt> const graded = graded_multiplicities(label);
    HilbertSeries const       inv    = invariant_series();
    std::vector<BigInt>       h(graded.size());
    for (std::size_t d = 0; d < graded.size(); ++d) {
      BigInt c = graded[d];
      for (std::size_t k = 1; k <= d; ++k) {
        c -= inv[k] * h[d - k];
      }
      if (sgn(c) < 0) {
        throw NegativeCoefficient("harmonic series coefficient at degree "
                                  + std::to_string(d) + " is negative");
      }
      h[d] = std::move(c);
    }
    return {std::move(h)};
  }

  HilbertSeries invariant_series(Case which, int max_degree) {
    return GradedOracle(which, max_degree).invariant_series();
  }

  HilbertSeries harmonic_series(Case which, Weight const& label,
                                int max_degree) {
    return GradedOracle(which, max_degree).harmonic_series(label);
  }

}  // namespace theta
