#include "theta/cartan.hpp"

#include <sstream>

namespace theta {

  std::string MatrixUnit::to_string() const {
    std::ostringstream os;
    if (diagonal_difference) {
      os << "E" << r + 1 << r + 1 << "-E" << s + 1 << s + 1;
    } else {
      os << "E" << r + 1 << s + 1;
    }
    return os.str();
  }

  std::string FactorGenerator::to_string() const {
    return x.to_string() + "@" + std::to_string(factor + 1);
  }

  std::vector<FactorGenerator> e6_generators() {
    std::vector<FactorGenerator> out;
    for (int f = 0; f < 3; ++f) {
      for (int r = 0; r < 3; ++r) {
        for (int s = 0; s < 3; ++s) {
          if (r != s) {
            out.push_back({f, {r, s, false}});
          }
        }
      }
      for (int r = 0; r < 3; ++r) {
        for (int s = r + 1; s < 3; ++s) {
          out.push_back({f, {r, s, true}});
        }
      }
    }
    return out;
  }

  std::vector<MatrixUnit> e8_generators() {
    std::vector<MatrixUnit> out;
    for (int r = 0; r < 9; ++r) {
      for (int s = r + 1; s < 9; ++s) {
        out.push_back({r, s, false});
      }
    }
    for (int r = 0; r + 1 < 9; ++r) {
      out.push_back({r, r + 1, true});
    }
    return out;
  }

  BigRational e6_criticality(int i, int j, FactorGenerator const& x) {
    static auto const v = e6_cartan_basis<BigRational>();
    return inner_product(apply(x, v.at(i)), v.at(j));
  }

  BigRational e8_criticality(int i, int j, MatrixUnit const& x) {
    static auto const w = e8_cartan_basis<BigRational>();
    return inner_product(apply(x, w.at(i)), w.at(j));
  }

  std::vector<CheckResult> verify_cartan() {
    std::vector<CheckResult> out;
    auto const               v = e6_cartan_basis<BigRational>();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        bool const ok = e6_bracket(v[i], v[j]).is_zero();
        out.push_back({"e6 [v" + std::to_string(i + 1) + ",v"
                           + std::to_string(j + 1) + "] = 0",
                       ok, ok ? "" : "nonzero bracket"});
      }
    }
    {
      std::size_t count = 0;
      std::string failures;
      for (auto const& x : e6_generators()) {
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            ++count;
            if (sgn(e6_criticality(i, j, x)) != 0) {
              failures += x.to_string() + "(v" + std::to_string(i + 1) + ",v"
                          + std::to_string(j + 1) + ") ";
            }
          }
        }
      }
      out.push_back({"e6 <X v_i, v_j> = 0 (" + std::to_string(count)
                         + " pairings)",
                     failures.empty(), failures});
    }

    auto const w = e8_cartan_basis<BigRational>();
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        bool const ok = e8_wedge(w[i], w[j]).is_zero();
        out.push_back({"e8 omega" + std::to_string(i + 1) + " ^ omega"
                           + std::to_string(j + 1) + " = 0",
                       ok, ok ? "" : "nonzero wedge"});
      }
    }
    {
      std::size_t count = 0;
      std::string failures;
      for (auto const& x : e8_generators()) {
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < 4; ++j) {
            ++count;
            if (sgn(e8_criticality(i, j, x)) != 0) {
              failures += x.to_string() + "(omega" + std::to_string(i + 1)
                          + ",omega" + std::to_string(j + 1) + ") ";
            }
          }
        }
      }
      out.push_back({"e8 <X omega_i, omega_j> = 0 (" + std::to_string(count)
                         + " pairings)",
                     failures.empty(), failures});
    }
    return out;
  }

}  // namespace theta
