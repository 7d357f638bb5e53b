#ifndef SWT_INTERSECTION_HPP
#define SWT_INTERSECTION_HPP

#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "swt/error.hpp"
#include "swt/exact.hpp"
#include "swt/lattice.hpp"
#include "swt/presentation.hpp"
#include "swt/sym_power.hpp"
#include "swt/tqft.hpp"

namespace swt {

/// Element of H^*(Sym^m Σ) ⊗ H^*(Sym^m Σ).
class ProductClass {
 public:
  using Key = std::pair<Monomial, Monomial>;

  explicit ProductClass(SymSpace space) : space_(std::move(space)) {}

  const SymSpace& space() const { return space_; }
  const std::map<Key, Integer>& terms() const { return terms_; }

  void add(const Monomial& a, const Monomial& b, const Integer& c) {
    if (c == 0) return;
    if (!space_.contains(a) || !space_.contains(b)) throw std::invalid_argument("product factor outside the symmetric power");
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Adds coef · (u × v).
  void add_product(const SymClass& u, const SymClass& v, const Integer& coef) {
    if (!(u.space() == space_) || !(v.space() == space_)) throw DimensionMismatch("product factor in a different space");
    for (const auto& [a, x] : u.terms())
      for (const auto& [b, y] : v.terms()) add(a, b, coef * x * y);
  }

  friend bool operator==(const ProductClass& a, const ProductClass& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ProductClass& a) {
    if (a.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [k, c] : a.terms_) {
      os << (first ? "" : " + ") << c << '*' << k.first << 'x' << k.second;
      first = false;
    }
    return os;
  }

 private:
  SymSpace space_;
  std::map<Key, Integer> terms_;
};

namespace detail {

inline SymClass wedge_handles(const SurfaceModel& md, int N, SymClass a, bool use_d) {
  for (int i = N; i >= 1; --i) a = wedge_class(CohClass::basis(md.rank(), use_d ? md.d(i) : md.c(i)), a);
  return a;
}

}  // namespace detail

/// c_1 ∧ .. ∧ c_N ∧ a
inline SymClass wedge_c(const Presentation& p, const SymClass& a) { return detail::wedge_handles(p.model(), p.N, a, false); }
/// d_1 ∧ .. ∧ d_N ∧ a
inline SymClass wedge_d(const Presentation& p, const SymClass& a) { return detail::wedge_handles(p.model(), p.N, a, true); }

/// D^* = Σ_β (-1)^{ε_1(β)} (c ∧ β°) × (c ∧ β), ε_1 = deg β (N+1) + N(N-1)/2,
/// β over the basis of H^*(Sym^n Σ_{g+N}).
inline ProductClass diagonal_class(const Presentation& p, int n, PairingKind kind = PairingKind::decomposition) {
  const SymSpace small{p.model(), n};
  const auto duals = dual_basis(small, kind);
  ProductClass out(SymSpace{p.model(), n + p.N});
  for (const auto& beta : enumerate_basis(small)) {
    const long long eps1 = static_cast<long long>(beta.degree()) * (p.N + 1) + p.N * (p.N - 1) / 2;
    out.add_product(wedge_c(p, duals.at(beta)), wedge_c(p, SymClass(small, beta)), sign_of_power(eps1));
  }
  return out;
}

/// Γ^* = Σ_α (-1)^{deg α} α° × (h^{-1})^*(α), α over H^*(Sym^{n+N} Σ_{g+N}).
inline ProductClass graph_class(const Presentation& p, int n, PairingKind kind = PairingKind::decomposition) {
  const SymSpace big{p.model(), n + p.N};
  const auto duals = dual_basis(big, kind);
  const InducedMap hinv(mapping_class(p).inverse());
  ProductClass out(big);
  for (const auto& alpha : enumerate_basis(big))
    out.add_product(duals.at(alpha), hinv(SymClass(big, alpha)), sign_of_power(alpha.degree()));
  return out;
}

/// <u ∪ v, [Sym × Sym]> with ((a×b),(c×d)) -> (-1)^{deg b deg c} <a,c> <b,d>.
inline Integer product_evaluate(const ProductClass& u, const ProductClass& v, PairingKind kind = PairingKind::decomposition) {
  if (!(u.space() == v.space())) throw DimensionMismatch("product_evaluate: classes in different spaces");
  const SymSpace& sp = u.space();
  const auto basis = enumerate_basis(sp);
  const auto idx = basis_index(basis);
  const IntMatrix gram = gram_matrix(sp, kind);
  Integer total = 0;
  for (const auto& [ab, x] : u.terms()) {
    const std::size_t ia = idx.at(ab.first), ib = idx.at(ab.second);
    for (const auto& [cd, y] : v.terms()) {
      const Integer& p1 = gram(ia, idx.at(cd.first));
      if (p1 == 0) continue;
      const Integer& p2 = gram(ib, idx.at(cd.second));
      if (p2 == 0) continue;
      total += sign_of_power(static_cast<long long>(ab.second.degree()) * cd.first.degree()) * x * y * p1 * p2;
    }
  }
  return total;
}

/// D · Γ, which equals Tr κ_n.
inline Integer intersection_number(const Presentation& p, int n, PairingKind kind = PairingKind::decomposition) {
  return product_evaluate(diagonal_class(p, n, kind), graph_class(p, n, kind), kind);
}

/// Basis elements β of H^*(Sym^n Σ_{g+N}) where
/// c ∧ β° != (-1)^{N deg β + N(N+1)/2} (d ∧ β)° fails.
inline std::vector<Monomial> epsilon4_violations(const Presentation& p, int n, PairingKind kind = PairingKind::decomposition) {
  const SymSpace small{p.model(), n};
  const SymSpace big{p.model(), n + p.N};
  const auto duals_small = dual_basis(small, kind);
  const auto duals_big = dual_basis(big, kind);
  std::vector<Monomial> bad;
  for (const auto& beta : enumerate_basis(small)) {
    const SymClass lhs = wedge_c(p, duals_small.at(beta));
    const SymClass dbeta = wedge_d(p, SymClass(small, beta));
    SymClass rhs(big);
    for (const auto& [m, c] : dbeta.terms()) rhs += c * duals_big.at(m);
    const long long eps4 = static_cast<long long>(p.N) * beta.degree() + p.N * (p.N + 1) / 2;
    if (!(lhs == sign_of_power(eps4) * rhs)) bad.push_back(beta);
  }
  return bad;
}

}  // namespace swt

#endif  // SWT_INTERSECTION_HPP
