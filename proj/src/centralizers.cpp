#include "theta/centralizers.hpp"

#include <map>

namespace theta {

  MonomialMatrix::MonomialMatrix(std::vector<int>        perm,
                                 std::vector<Cyclotomic> entries)
      : perm_(std::move(perm)), entries_(std::move(entries)) {
    if (perm_.size() != entries_.size()) {
      throw PreconditionViolated("MonomialMatrix: size mismatch");
    }
    std::vector<bool> hit(perm_.size(), false);
    for (std::size_t j = 0; j < perm_.size(); ++j) {
      int const r = perm_[j];
      if (r < 0 || static_cast<std::size_t>(r) >= perm_.size() || hit[r]) {
        throw PreconditionViolated("MonomialMatrix: not a permutation");
      }
      hit[r] = true;
      if (entries_[j].is_zero()) {
        throw PreconditionViolated("MonomialMatrix: zero entry");
      }
    }
  }

  MonomialMatrix MonomialMatrix::identity(int n) {
    return diagonal(
        std::vector<Cyclotomic>(static_cast<std::size_t>(n), Cyclotomic(1L)));
  }

  MonomialMatrix MonomialMatrix::diagonal(std::vector<Cyclotomic> entries) {
    std::vector<int> perm(entries.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
      perm[j] = static_cast<int>(j);
    }
    return MonomialMatrix(std::move(perm), std::move(entries));
  }

  MonomialMatrix MonomialMatrix::scalar(int n, Cyclotomic const& c) {
    return diagonal(std::vector<Cyclotomic>(static_cast<std::size_t>(n), c));
  }

  MonomialMatrix MonomialMatrix::from_rows(
      std::vector<std::vector<Cyclotomic>> const& rows) {
    std::size_t const       n = rows.size();
    std::vector<int>        perm(n, -1);
    std::vector<Cyclotomic> entries(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) {
        throw PreconditionViolated("MonomialMatrix: matrix is not square");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (rows[r][c].is_zero()) {
          continue;
        }
        if (perm[c] != -1) {
          throw PreconditionViolated("MonomialMatrix: two entries in a column");
        }
        perm[c]    = static_cast<int>(r);
        entries[c] = rows[r][c];
      }
    }
    for (int r : perm) {
      if (r == -1) {
        throw PreconditionViolated("MonomialMatrix: empty column");
      }
    }
    return MonomialMatrix(std::move(perm), std::move(entries));
  }

  Cyclotomic MonomialMatrix::at(int row, int col) const {
    return perm_[col] == row ? entries_[col] : Cyclotomic();
  }

  Cyclotomic MonomialMatrix::determinant() const {
    Cyclotomic        det(1L);
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t start = 0; start < perm_.size(); ++start) {
      if (seen[start]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = start; !seen[j]; j = perm_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) {
        det = -det;
      }
    }
    for (auto const& e : entries_) {
      det *= e;
    }
    return det;
  }

  MonomialMatrix MonomialMatrix::inverse() const {
    std::vector<int>        perm(perm_.size());
    std::vector<Cyclotomic> entries(perm_.size());
    for (std::size_t j = 0; j < perm_.size(); ++j) {
      perm[perm_[j]]    = static_cast<int>(j);
      entries[perm_[j]] = entries_[j].inverse();
    }
    return MonomialMatrix(std::move(perm), std::move(entries));
  }

  bool MonomialMatrix::is_scalar() const {
    for (std::size_t j = 0; j < perm_.size(); ++j) {
      if (perm_[j] != static_cast<int>(j) || entries_[j] != entries_[0]) {
        return false;
      }
    }
    return true;
  }

  int MonomialMatrix::order(int max_order) const {
    MonomialMatrix const id = identity(size());
    MonomialMatrix       x  = *this;
    for (int k = 1; k <= max_order; ++k) {
      if (x == id) {
        return k;
      }
      x = x * *this;
    }
    throw StructureMismatch("element order exceeds "
                            + std::to_string(max_order));
  }

  MonomialMatrix operator*(MonomialMatrix const& a, MonomialMatrix const& b) {
    if (a.size() != b.size()) {
      throw PreconditionViolated("MonomialMatrix: size mismatch in product");
    }
    std::vector<int>        perm(b.perm_.size());
    std::vector<Cyclotomic> entries(b.perm_.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
      int const mid = b.perm_[j];
      perm[j]       = a.perm_[mid];
      entries[j]    = b.entries_[j] * a.entries_[mid];
    }
    return MonomialMatrix(std::move(perm), std::move(entries));
  }

  std::vector<std::vector<Cyclotomic>> MonomialMatrix::dense() const {
    auto const n = perm_.size();
    std::vector<std::vector<Cyclotomic>> rows(n, std::vector<Cyclotomic>(n));
    for (std::size_t j = 0; j < n; ++j) {
      rows[perm_[j]][j] = entries_[j];
    }
    return rows;
  }

  EigenvalueMultiset eigenvalues(MonomialMatrix const& g) {
    auto const              perm = g.perm();
    std::vector<bool>       seen(perm.size(), false);
    std::vector<Cyclotomic> out;
    for (std::size_t start = 0; start < perm.size(); ++start) {
      if (seen[start]) {
        continue;
      }
      int        k = 0;
      Cyclotomic p(1L);
      for (std::size_t j = start; !seen[j]; j = perm[j]) {
        seen[j] = true;
        p *= g.entries()[j];
        ++k;
      }
      auto const idx = p.root_of_unity_index();
      if (!idx) {
        throw UnrepresentableRoot("cycle product " + p.to_string()
                                  + " is not a root of unity in Q(zeta_9)");
      }
      int found = 0;
      for (int e = 0; e < 18; ++e) {
        if ((e * k) % 18 == *idx) {
          out.push_back(Cyclotomic::root_of_unity(e));
          ++found;
        }
      }
      if (found != k) {
        throw UnrepresentableRoot("the " + std::to_string(k)
                                  + "-th roots of " + p.to_string()
                                  + " are not all in Q(zeta_9)");
      }
    }
    return EigenvalueMultiset(std::move(out));
  }

  TripleElement TripleElement::identity() {
    auto const id = MonomialMatrix::identity(3);
    return {{id, id, id}};
  }

  bool TripleElement::is_scalar() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](auto const& g) { return g.is_scalar(); });
  }

  int TripleElement::order() const {
    TripleElement const id = identity();
    TripleElement       x  = *this;
    for (int k = 1; k <= 1000; ++k) {
      if (x == id) {
        return k;
      }
      x = x * *this;
    }
    throw StructureMismatch("triple order exceeds 1000");
  }

  TripleElement operator*(TripleElement const& a, TripleElement const& b) {
    return {{a.factors[0] * b.factors[0], a.factors[1] * b.factors[1],
             a.factors[2] * b.factors[2]}};
  }

  Tensor333<Cyclotomic> act(TripleElement const&         g,
                            Tensor333<Cyclotomic> const& t) {
    Tensor333<Cyclotomic> out;
    for (std::size_t p = 0; p < Tensor333<Cyclotomic>::size; ++p) {
      if (t.coords[p].is_zero()) {
        continue;
      }
      auto const idx = Tensor333<Cyclotomic>::unindex(p);
      Cyclotomic c   = t.coords[p];
      std::array<int, 3> to{};
      for (int f = 0; f < 3; ++f) {
        auto const& m = g.factors[f];
        to[f]         = m.perm()[idx[f]];
        c *= m.entries()[idx[f]];
      }
      out(to[0], to[1], to[2]) += c;
    }
    return out;
  }

  Wedge3of9<Cyclotomic> act(MonomialMatrix const&         g,
                            Wedge3of9<Cyclotomic> const& w) {
    Wedge3of9<Cyclotomic> out;
    for (std::size_t p = 0; p < Wedge3of9<Cyclotomic>::size; ++p) {
      if (w.coords[p].is_zero()) {
        continue;
      }
      auto const& idx = Wedge3of9<Cyclotomic>::subset(p);
      Cyclotomic  c   = w.coords[p];
      std::array<int, 3> to{};
      for (int s = 0; s < 3; ++s) {
        to[s] = g.perm()[idx[s]];
        c *= g.entries()[idx[s]];
      }
      out.add_term(to, c);
    }
    return out;
  }

  bool fixes_e6_cartan(TripleElement const& g) {
    static auto const basis = e6_cartan_basis<Cyclotomic>();
    return std::all_of(basis.begin(), basis.end(),
                       [&](auto const& v) { return act(g, v) == v; });
  }

  bool fixes_e8_cartan(MonomialMatrix const& g) {
    static auto const basis = e8_cartan_basis<Cyclotomic>();
    return std::all_of(basis.begin(), basis.end(),
                       [&](auto const& w) { return act(g, w) == w; });
  }

  namespace {
    Cyclotomic cube_root(int k) {
      return Cyclotomic::zeta3(k);
    }

    MonomialMatrix scaled(Cyclotomic const& c, MonomialMatrix const& m) {
      return MonomialMatrix::scalar(m.size(), c) * m;
    }

    TripleElement family_triple(int a, int b, MonomialMatrix const& m) {
      return {{scaled(cube_root(a), m), scaled(cube_root(b), m),
               scaled(cube_root(-a - b), m)}};
    }
  }  // namespace

  std::vector<TripleElement> e6_family_candidates(int family) {
    if (family < 1 || family > 4) {
      throw PreconditionViolated("e6 family index must be 1..4");
    }
    std::vector<TripleElement> out;
    Cyclotomic const           zero;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (family == 1) {
          out.push_back(family_triple(a, b, MonomialMatrix::identity(3)));
          continue;
        }
        for (int d = 0; d < 3; ++d) {
          for (int m = 0; m < 3; ++m) {
            Cyclotomic const delta = cube_root(d);
            Cyclotomic const mu    = cube_root(m);
            Cyclotomic const rest  = cube_root(-d - m);
            MonomialMatrix   shape;
            if (family == 2) {
              if (d == m) {
                continue;
              }
              shape = MonomialMatrix::diagonal({delta, mu, rest});
            } else if (family == 3) {
              shape = MonomialMatrix::from_rows(
                  {{zero, delta, zero}, {zero, zero, mu}, {rest, zero, zero}});
            } else {
              shape = MonomialMatrix::from_rows(
                  {{zero, zero, delta}, {mu, zero, zero}, {zero, rest, zero}});
            }
            out.push_back(family_triple(a, b, shape));
          }
        }
      }
    }
    return out;
  }

  FiniteGroup<TripleElement> enumerate_e6_M() {
    std::vector<TripleElement> members;
    for (int family = 1; family <= 4; ++family) {
      for (auto& g : e6_family_candidates(family)) {
        if (fixes_e6_cartan(g)) {
          members.push_back(std::move(g));
        }
      }
    }
    FiniteGroup<TripleElement> group(std::move(members));
    if (group.order() != 81) {
      throw StructureMismatch("E6 centralizer has order "
                              + std::to_string(group.order()) + ", not 81");
    }
    if (!group.is_group(TripleElement::identity())) {
      throw StructureMismatch("E6 centralizer candidates do not form a group");
    }
    return group;
  }

  MonomialMatrix e8_A(int z_exp, int w_exp) {
    std::vector<Cyclotomic> d;
    for (int i = 0; i < 9; ++i) {
      d.push_back(cube_root(w_exp + z_exp * (i / 3)));
    }
    return MonomialMatrix::diagonal(std::move(d));
  }

  MonomialMatrix e8_B(int z_exp, int w_exp) {
    static constexpr std::array<int, 9> pattern{0, 1, 2, 2, 0, 1, 1, 2, 0};
    std::vector<Cyclotomic>             d;
    for (int p : pattern) {
      d.push_back(cube_root(w_exp + z_exp * p));
    }
    return MonomialMatrix::diagonal(std::move(d));
  }

  MonomialMatrix e8_U() {
    // Column i+3 -> row i, i+6 -> i+3, i -> i+6.
    std::vector<int> perm(9);
    for (int i = 0; i < 3; ++i) {
      perm[i + 3] = i;
      perm[i + 6] = i + 3;
      perm[i]     = i + 6;
    }
    return MonomialMatrix(std::move(perm), std::vector<Cyclotomic>(9, 1L));
  }

  MonomialMatrix e8_V() {
    std::vector<int> perm(9);
    for (int i = 0; i < 3; ++i) {
      perm[i + 6] = i;
      perm[i]     = i + 3;
      perm[i + 3] = i + 6;
    }
    return MonomialMatrix(std::move(perm), std::vector<Cyclotomic>(9, 1L));
  }

  FiniteGroup<MonomialMatrix> enumerate_e8_C() {
    std::vector<MonomialMatrix> gens;
    for (int z = 0; z < 3; ++z) {
      for (int w = 0; w < 3; ++w) {
        gens.push_back(e8_A(z, w));
        gens.push_back(e8_B(z, w));
      }
    }
    gens.push_back(e8_U());
    gens.push_back(e8_V());
    auto const id    = MonomialMatrix::identity(9);
    auto       group = FiniteGroup<MonomialMatrix>::closure(gens, id, 10000);
    for (auto const& g : group.elements()) {
      if (g.determinant() != Cyclotomic(1L)) {
        throw StructureMismatch("E8 centralizer element outside SL(9)");
      }
      if (!fixes_e8_cartan(g)) {
        throw StructureMismatch("E8 centralizer element moves the Cartan "
                                "subspace");
      }
    }
    if (group.order() != 81) {
      throw StructureMismatch("E8 centralizer has order "
                              + std::to_string(group.order()) + ", not 81");
    }
    return group;
  }

  namespace {
    CheckResult check(std::string name, bool passed, std::string detail) {
      return {std::move(name), passed, std::move(detail)};
    }

    EigenvalueMultiset cube_roots(int copies) {
      std::vector<Cyclotomic> v;
      for (int c = 0; c < copies; ++c) {
        for (int k = 0; k < 3; ++k) {
          v.push_back(Cyclotomic::zeta3(k));
        }
      }
      return EigenvalueMultiset(std::move(v));
    }

    bool acts_trivially(TripleElement const& g) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          for (int k = 0; k < 3; ++k) {
            auto const t = Tensor333<Cyclotomic>::basis(i, j, k);
            if (act(g, t) != t) {
              return false;
            }
          }
        }
      }
      return true;
    }

    template <typename Element>
    std::string order_histogram(FiniteGroup<Element> const& group) {
      std::map<int, int> counts;
      for (auto const& g : group.elements()) {
        ++counts[g.order()];
      }
      std::string out;
      for (auto [order, n] : counts) {
        out += (out.empty() ? "" : ", ") + std::to_string(n) + " of order "
               + std::to_string(order);
      }
      return out;
    }
  }  // namespace

  std::vector<CheckResult> verify_e6_group(
      FiniteGroup<TripleElement> const& group) {
    std::vector<CheckResult> out;
    auto const               id = TripleElement::identity();
    out.push_back(check("e6 order", group.order() == 81,
                        std::to_string(group.order()) + " elements"));
    out.push_back(check("e6 group axioms", group.is_group(id),
                        "closure, identity, inverses"));
    bool fixes = std::all_of(group.elements().begin(), group.elements().end(),
                             fixes_e6_cartan);
    out.push_back(check("e6 fixes v1 v2 v3", fixes, "every element"));

    std::size_t scalars = 0, trivial = 0, generic = 0;
    auto const  roots = cube_roots(1);
    for (auto const& g : group.elements()) {
      if (g.is_scalar()) {
        ++scalars;
        trivial += acts_trivially(g);
        continue;
      }
      bool all = true;
      for (auto const& f : g.factors) {
        all = all && eigenvalues(f) == roots;
      }
      generic += all;
    }
    out.push_back(check("e6 scalar triples", scalars == 9 && trivial == 9,
                        std::to_string(scalars) + " scalar, "
                            + std::to_string(trivial) + " trivial on V"));
    out.push_back(check("e6 non-scalar eigenvalues",
                        generic == group.order() - scalars && generic == 72,
                        std::to_string(generic)
                            + " with {1, z3, z3^2} in every factor"));
    out.push_back(check("e6 element orders", true, order_histogram(group)));
    return out;
  }

  std::vector<CheckResult> verify_e8_group(
      FiniteGroup<MonomialMatrix> const& group) {
    std::vector<CheckResult> out;
    auto const               id = MonomialMatrix::identity(9);
    out.push_back(check("e8 order", group.order() == 81,
                        std::to_string(group.order()) + " elements"));
    out.push_back(check("e8 group axioms", group.is_group(id),
                        "closure, identity, inverses"));
    bool special = std::all_of(
        group.elements().begin(), group.elements().end(),
        [](auto const& g) { return g.determinant() == Cyclotomic(1L); });
    out.push_back(check("e8 determinant one", special, "every element"));
    bool fixes = std::all_of(group.elements().begin(), group.elements().end(),
                             fixes_e8_cartan);
    out.push_back(check("e8 fixes omega_1..omega_4", fixes, "every element"));

    auto const  center = group.center();
    std::size_t scalars = 0, like_mu = 0;
    auto const  mu      = mu_eigenvalues();
    for (auto const& g : group.elements()) {
      if (g.is_scalar()) {
        ++scalars;
      } else if (eigenvalues(g) == mu) {
        ++like_mu;
      }
    }
    out.push_back(check("e8 central scalars", scalars == 3,
                        std::to_string(scalars) + " scalar elements; center has "
                            + std::to_string(center.size()) + " elements"));
    out.push_back(check("e8 non-scalar eigenvalues", like_mu == 78,
                        std::to_string(like_mu) + " share the eigenvalues of mu"));
    out.push_back(check("e8 element orders", true, order_histogram(group)));
    return out;
  }

  FiniteGroup<TripleElement> const& e6_group() {
    static FiniteGroup<TripleElement> const g = enumerate_e6_M();
    return g;
  }

  FiniteGroup<MonomialMatrix> const& e8_group() {
    static FiniteGroup<MonomialMatrix> const g = enumerate_e8_C();
    return g;
  }

}  // namespace theta
