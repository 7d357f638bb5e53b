#ifndef SWT_SYM_POWER_HPP
#define SWT_SYM_POWER_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "swt/combinatorics.hpp"
#include "swt/error.hpp"
#include "swt/exact.hpp"
#include "swt/lattice.hpp"
#include "swt/matrix.hpp"

namespace swt {

/// x_I y^q with I strictly ascending (0-based basis positions).
struct Monomial {
  IndexList indices;
  int q = 0;

  int k() const { return static_cast<int>(indices.size()); }
  int degree() const { return k() + 2 * q; }
  /// (-1)^{|I|}
  int parity_sign() const { return indices.size() % 2 == 0 ? 1 : -1; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Basis order: |I|, then lexicographic I, then q.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.indices.size() <=> b.indices.size(); c != 0) return c;
    if (auto c = a.indices <=> b.indices; c != 0) return c;
    return a.q <=> b.q;
  }
  friend std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    os << "x{";
    for (std::size_t i = 0; i < m.indices.size(); ++i) os << (i ? "," : "") << m.indices[i];
    return os << "}y^" << m.q;
  }
};

/// H^*(Sym^n Σ) for the surface described by `model`.
struct SymSpace {
  SurfaceModel model;
  int n = 0;

  int genus() const { return model.genus(); }
  std::size_t dimension() const {
    std::size_t d = 0;
    for (int k = 0; k <= std::min(n, model.rank()); ++k) d += binomial(model.rank(), k) * static_cast<std::size_t>(n - k + 1);
    return d;
  }
  bool contains(const Monomial& m) const {
    if (m.q < 0 || m.k() + m.q > n) return false;
    for (std::size_t a = 0; a < m.indices.size(); ++a) {
      if (m.indices[a] < 0 || m.indices[a] >= model.rank()) return false;
      if (a > 0 && m.indices[a - 1] >= m.indices[a]) return false;
    }
    return true;
  }

  friend bool operator==(const SymSpace&, const SymSpace&) = default;
};

inline std::vector<Monomial> enumerate_basis(const SymSpace& space) {
  std::vector<Monomial> out;
  out.reserve(space.dimension());
  for (int k = 0; k <= std::min(space.n, space.model.rank()); ++k)
    for (auto& s : k_subsets(space.model.rank(), k))
      for (int q = 0; q <= space.n - k; ++q) out.push_back(Monomial{s, q});
  return out;
}

inline std::vector<Monomial> enumerate_basis(int genus, int n) {
  return enumerate_basis(SymSpace{SurfaceModel::unsplit(genus), n});
}

/// Position of each basis monomial in enumerate_basis order.
inline std::map<Monomial, std::size_t> basis_index(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

/// Finite integer combination of monomials in a fixed SymSpace.
class SymClass {
 public:
  explicit SymClass(SymSpace space) : space_(std::move(space)) {}
  SymClass(SymSpace space, const Monomial& m, const Integer& c = 1) : space_(std::move(space)) { add(m, c); }

  const SymSpace& space() const { return space_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    if (!space_.contains(m)) throw std::invalid_argument("monomial outside the symmetric power");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SymClass& operator+=(const SymClass& b) {
    if (!(space_ == b.space_)) throw DimensionMismatch("adding classes of different symmetric powers");
    for (const auto& [m, c] : b.terms_) add(m, c);
    return *this;
  }
  friend SymClass operator+(SymClass a, const SymClass& b) { return a += b; }
  friend SymClass operator*(const Integer& k, SymClass a) {
    if (k == 0) return SymClass(a.space_);
    for (auto& [m, c] : a.terms_) c *= k;
    return a;
  }
  friend bool operator==(const SymClass& a, const SymClass& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      os << (first ? "" : " + ") << c;
      for (int i : m.indices) os << '*' << space_.model.label(i);
      if (m.q > 0) os << "*y^" << m.q;
      first = false;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const SymClass& a) { return os << a.str() << " [n=" << a.space_.n << "]"; }

 private:
  SymSpace space_;
  std::map<Monomial, Integer> terms_;
};

/// c ∧ α, landing in Sym^{n+1}.
inline SymClass wedge_class(const CohClass& c, const SymClass& alpha) {
  const SymSpace& sp = alpha.space();
  if (c.size() != static_cast<std::size_t>(sp.model.rank())) throw DimensionMismatch("wedge: class rank does not match");
  SymClass out(SymSpace{sp.model, sp.n + 1});
  IndexList seq;
  for (const auto& [m, coef] : alpha.terms()) {
    for (int i = 0; i < sp.model.rank(); ++i) {
      if (c.coords[i] == 0) continue;
      seq.assign(1, i);
      seq.insert(seq.end(), m.indices.begin(), m.indices.end());
      const int s = sorting_sign(seq);
      if (s == 0) continue;
      std::sort(seq.begin(), seq.end());
      out.add(Monomial{seq, m.q}, s * c.coords[i] * coef);
    }
  }
  return out;
}

/// ι_c α, landing in Sym^{n-1}; on Sym^0 the result is the zero class of Sym^0.
inline SymClass contract_class(const CohClass& c, const SymClass& alpha) {
  const SymSpace& sp = alpha.space();
  if (c.size() != static_cast<std::size_t>(sp.model.rank())) throw DimensionMismatch("contract: class rank does not match");
  if (sp.n == 0) return SymClass(sp);
  SymClass out(SymSpace{sp.model, sp.n - 1});
  for (const auto& [m, coef] : alpha.terms()) {
    for (std::size_t j = 0; j < m.indices.size(); ++j) {
      const Integer p = pairing(sp.model, c, CohClass::basis(sp.model.rank(), m.indices[j]));
      if (p == 0) continue;
      IndexList rest = m.indices;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      out.add(Monomial{std::move(rest), m.q}, (j % 2 == 0 ? 1 : -1) * p * coef);
    }
  }
  return out;
}

/// Applies the map induced by a lattice automorphism: x_I y^q -> (ΛA x_I) y^q.
/// Exterior power matrices are built on first use.
class InducedMap {
 public:
  explicit InducedMap(IntMatrix a) : a_(std::move(a)), powers_(a_.rows() + 1) {}
  explicit InducedMap(const MappingClass& a) : InducedMap(a.matrix()) {}

  SymClass operator()(const SymClass& alpha) const {
    const SymSpace& sp = alpha.space();
    if (static_cast<std::size_t>(sp.model.rank()) != a_.rows()) throw DimensionMismatch("induced map on a surface of another genus");
    SymClass out(sp);
    for (const auto& [m, coef] : alpha.terms()) {
      const Power& p = power(m.k());
      const std::size_t col = p.index.at(m.indices);
      for (std::size_t row = 0; row < p.subsets.size(); ++row) {
        const Integer& e = p.mat(row, col);
        if (e != 0) out.add(Monomial{p.subsets[row], m.q}, e * coef);
      }
    }
    return out;
  }

 private:
  struct Power {
    std::vector<IndexList> subsets;
    std::map<IndexList, std::size_t> index;
    IntMatrix mat;
    bool ready = false;
  };

  const Power& power(int k) const {
    Power& p = powers_.at(static_cast<std::size_t>(k));
    if (!p.ready) {
      p.subsets = k_subsets(static_cast<int>(a_.rows()), k);
      for (std::size_t i = 0; i < p.subsets.size(); ++i) p.index.emplace(p.subsets[i], i);
      p.mat = exterior_power_matrix(a_, k);
      p.ready = true;
    }
    return p;
  }

  IntMatrix a_;
  mutable std::vector<Power> powers_;
};

/// Linear endomorphism of a SymSpace, stored as images of the basis in
/// enumerate_basis order.
class SymEndomorphism {
 public:
  SymEndomorphism(SymSpace space, std::vector<SymClass> columns)
      : space_(std::move(space)), basis_(enumerate_basis(space_)), columns_(std::move(columns)) {
    if (columns_.size() != basis_.size()) throw DimensionMismatch("endomorphism needs one image per basis element");
    for (const auto& c : columns_)
      if (!(c.space() == space_)) throw DimensionMismatch("endomorphism image in a different space");
  }

  template <typename F>
  static SymEndomorphism from_function(const SymSpace& space, F&& f) {
    std::vector<SymClass> cols;
    for (const auto& m : enumerate_basis(space)) cols.push_back(f(SymClass(space, m)));
    return SymEndomorphism(space, std::move(cols));
  }

  const SymSpace& space() const { return space_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<SymClass>& columns() const { return columns_; }

  SymClass apply(const SymClass& alpha) const {
    if (!(alpha.space() == space_)) throw DimensionMismatch("endomorphism applied outside its space");
    const auto idx = basis_index(basis_);
    SymClass out(space_);
    for (const auto& [m, c] : alpha.terms()) out += c * columns_[idx.at(m)];
    return out;
  }

  IntMatrix dense() const {
    const auto idx = basis_index(basis_);
    IntMatrix d(basis_.size(), basis_.size());
    for (std::size_t col = 0; col < columns_.size(); ++col)
      for (const auto& [m, c] : columns_[col].terms()) d(idx.at(m), col) = c;
    return d;
  }

  /// (*this) ∘ other
  SymEndomorphism compose(const SymEndomorphism& other) const {
    if (!(other.space_ == space_)) throw DimensionMismatch("composing endomorphisms of different spaces");
    std::vector<SymClass> cols;
    cols.reserve(other.columns_.size());
    for (const auto& c : other.columns_) cols.push_back(apply(c));
    return SymEndomorphism(space_, std::move(cols));
  }

  friend bool operator==(const SymEndomorphism& a, const SymEndomorphism& b) {
    return a.space_ == b.space_ && a.columns_ == b.columns_;
  }

 private:
  SymSpace space_;
  std::vector<Monomial> basis_;
  std::vector<SymClass> columns_;
};

inline SymEndomorphism induced_endomorphism(const MappingClass& a, int n) {
  const InducedMap h(a);
  return SymEndomorphism::from_function(SymSpace{a.model(), n}, [&](const SymClass& c) { return h(c); });
}

/// Σ (-1)^{|I|} M_{mm} over basis monomials m.
inline Integer graded_trace(const SymEndomorphism& m) {
  Integer tr = 0;
  for (std::size_t i = 0; i < m.basis().size(); ++i)
    tr += m.basis()[i].parity_sign() * m.columns()[i].coefficient(m.basis()[i]);
  return tr;
}

inline Integer lefschetz_number(const MappingClass& a, int n) { return graded_trace(induced_endomorphism(a, n)); }

/// Σ_j (-1)^j (n-j+1) tr Λ^j A.
inline Integer lefschetz_from_traces(const IntMatrix& a, int n) {
  Integer s = 0;
  for (int j = 0; j <= std::min(n, static_cast<int>(a.rows())); ++j)
    s += sign_of_power(j) * (n - j + 1) * exterior_power_trace(a, j);
  return s;
}

/// MacDonald evaluation of a top-degree product x_I y^q on the fundamental
/// class: σ_{i_1} .. σ_{i_k} y^{n-k} evaluates to 1, σ_i = x_i x_{partner(i)}.
/// x_I y^q need not be a basis monomial (|I| + q may exceed n).
inline Integer top_evaluate(const SymSpace& space, const Monomial& m) {
  if (m.degree() != 2 * space.n || m.q < 0) throw std::invalid_argument("top_evaluate: monomial is not of top degree");
  const SurfaceModel& md = space.model;
  for (std::size_t a = 0; a < m.indices.size(); ++a)
    if (m.indices[a] < 0 || m.indices[a] >= md.rank() || (a > 0 && m.indices[a - 1] >= m.indices[a]))
      throw std::invalid_argument("top_evaluate: invalid index set");
  IndexList order;
  for (int i : m.indices) {
    if (!std::binary_search(m.indices.begin(), m.indices.end(), md.partner(i))) return 0;
    if (md.is_leading(i)) {
      order.push_back(i);
      order.push_back(md.partner(i));
    }
  }
  // `order` lists leading elements ascending, each followed by its partner.
  return sorting_sign(order);
}

/// Cup product pairing ∫ α ∪ β on Sym^n with MacDonald's top evaluation.
inline Integer duality_pair(const SymClass& a, const SymClass& b) {
  if (!(a.space() == b.space())) throw DimensionMismatch("duality_pair: classes in different spaces");
  const SymSpace& sp = a.space();
  Integer total = 0;
  IndexList seq;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() != 2 * sp.n) continue;
      seq = ma.indices;
      seq.insert(seq.end(), mb.indices.begin(), mb.indices.end());
      const int s = sorting_sign(seq);
      if (s == 0) continue;
      std::sort(seq.begin(), seq.end());
      total += s * ca * cb * top_evaluate(sp, Monomial{seq, ma.q + mb.q});
    }
  return total;
}

/// Pairing adapted to H^*(Sym^n) = ⊕_k Λ^k H^1 ⊗ Sym^{n-k}(H^0 ⊕ H^2): the
/// summands are orthogonal and within one summand
/// <x_I y^q, x_J y^{q'}> = [q+q' = n-k] det(<x_{i_a}, x_{j_{k+1-b}}>).
inline Integer decomposition_pair(const SymClass& a, const SymClass& b) {
  if (!(a.space() == b.space())) throw DimensionMismatch("decomposition_pair: classes in different spaces");
  const SymSpace& sp = a.space();
  Integer total = 0;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int k = ma.k();
      if (mb.k() != k || ma.q + mb.q != sp.n - k) continue;
      IntMatrix p(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) p(r, c) = sp.model.basis_pairing(ma.indices[r], mb.indices[k - 1 - c]);
      const Integer d = determinant(p);
      if (d != 0) total += d * ca * cb;
    }
  return total;
}

enum class PairingKind { cup, decomposition };

inline Integer pair(PairingKind kind, const SymClass& a, const SymClass& b) {
  return kind == PairingKind::cup ? duality_pair(a, b) : decomposition_pair(a, b);
}

/// Entry (i, j) = pair(basis_i, basis_j).
inline IntMatrix gram_matrix(const SymSpace& space, PairingKind kind) {
  const auto basis = enumerate_basis(space);
  IntMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      g(i, j) = pair(kind, SymClass(space, basis[i]), SymClass(space, basis[j]));
  return g;
}

/// The classes α° with pair(β, α°) = δ_{αβ} for all basis β, keyed by α.
inline std::map<Monomial, SymClass> dual_basis(const SymSpace& space, PairingKind kind = PairingKind::decomposition) {
  const auto basis = enumerate_basis(space);
  const RatMatrix gram = gram_matrix(space, kind).cast<Rational>();
  RatMatrix inv;
  try {
    inv = inverse(gram);
  } catch (const DivisionByZero&) {
    throw InvariantViolation("duality Gram matrix is singular");
  }
  // pair(β, α°) = Σ_c X(α,c) G(β,c) = (G X^T)(β,α), so X = (G^{-1})^T.
  std::map<Monomial, SymClass> duals;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    SymClass d(space);
    for (std::size_t c = 0; c < basis.size(); ++c) d.add(basis[c], to_integer(inv(c, a)));
    duals.emplace(basis[a], std::move(d));
  }
  return duals;
}

}  // namespace swt

#endif  // SWT_SYM_POWER_HPP
