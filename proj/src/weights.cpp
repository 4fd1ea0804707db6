#include "theta/weights.hpp"

#include <numeric>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

  HighestWeight::HighestWeight(std::vector<int> entries)
      : entries_(std::move(entries)) {
    if (entries_.size() < 2) {
      throw PreconditionViolated("HighestWeight: rank must be at least 2");
    }
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (entries_[i - 1] < entries_[i]) {
        throw PreconditionViolated("HighestWeight: entries must be weakly "
                                   "decreasing, got "
                                   + to_string());
      }
    }
    int const last = entries_.back();
    for (int& x : entries_) {
      x -= last;
    }
  }

  HighestWeight HighestWeight::sl3(int m, int n) {
    if (n < 0 || m < n) {
      throw PreconditionViolated("SL(3) weight needs m >= n >= 0");
    }
    return HighestWeight({m, n, 0});
  }

  HighestWeight HighestWeight::zero(int n) {
    return HighestWeight(std::vector<int>(static_cast<std::size_t>(n), 0));
  }

  int HighestWeight::size() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
  }

  int HighestWeight::length() const noexcept {
    int l = 0;
    for (int x : entries_) {
      l += (x != 0);
    }
    return l;
  }

  std::vector<int> HighestWeight::conjugate() const {
    std::vector<int> out(entries_.empty() ? 0 : entries_.front(), 0);
    for (int x : entries_) {
      for (int c = 0; c < x; ++c) {
        ++out[c];
      }
    }
    return out;
  }

  std::string HighestWeight::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      os << (i ? "," : "") << entries_[i];
    }
    os << ')';
    return os.str();
  }

  std::vector<PositiveRoot> positive_roots(int n) {
    std::vector<PositiveRoot> out;
    out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        out.push_back({i, j});
      }
    }
    return out;
  }

  Weight rho(int n) {
    if (n < 2) {
      throw PreconditionViolated("rho: rank must be at least 2");
    }
    Weight r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      r[i] = n - 1 - i;
    }
    return r;
  }

  Weight shifted_by_rho(HighestWeight const& lambda) {
    Weight v = rho(lambda.rank());
    for (int i = 0; i < lambda.rank(); ++i) {
      v[i] += lambda[i];
    }
    return v;
  }

  ResidueSets residue_sets(HighestWeight const& lambda) {
    Weight const v = shifted_by_rho(lambda);
    ResidueSets out;
    for (PositiveRoot alpha : positive_roots(lambda.rank())) {
      int const p = pairing(alpha, v);
      out.values.push_back(p);
      out.sets[p % 3].push_back(alpha);
    }
    return out;
  }

}  // namespace theta
