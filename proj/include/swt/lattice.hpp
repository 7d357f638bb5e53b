#ifndef SWT_LATTICE_HPP
#define SWT_LATTICE_HPP

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swt/combinatorics.hpp"
#include "swt/error.hpp"
#include "swt/exact.hpp"
#include "swt/matrix.hpp"
#include "swt/series.hpp"

namespace swt {

/// H^1 of a closed genus-G surface with a fixed symplectic basis.
///
/// Split surfaces use the basis (c_1..c_N, d_1..d_N, x_1..x_2g) with
/// <c_i, d_i> = 1 and <x_j, x_{g+j}> = 1; unsplit surfaces use x_1..x_2G with
/// <x_j, x_{G+j}> = 1. All other basis pairings vanish and the form is
/// antisymmetric. Indices below are 0-based positions in that basis.
class SurfaceModel {
 public:
  static SurfaceModel unsplit(int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    return SurfaceModel(0, genus);
  }
  static SurfaceModel split(int handles, int genus) {
    if (handles < 0 || genus < 0) throw std::invalid_argument("handles and genus must be nonnegative");
    return SurfaceModel(handles, genus);
  }

  int genus() const { return handles_ + inner_genus_; }
  int rank() const { return 2 * genus(); }
  int handles() const { return handles_; }
  /// Genus of the x-block (g for split, G for unsplit).
  int inner_genus() const { return inner_genus_; }

  // 1-based labels, as in c_1, d_1, x_1.
  int c(int i) const { return i - 1; }
  int d(int i) const { return handles_ + i - 1; }
  int x(int j) const { return 2 * handles_ + j - 1; }

  bool is_c(int idx) const { return idx < handles_; }
  bool is_d(int idx) const { return idx >= handles_ && idx < 2 * handles_; }
  bool is_x(int idx) const { return idx >= 2 * handles_; }

  /// The basis element pairing nontrivially with `idx`.
  int partner(int idx) const {
    if (is_c(idx)) return idx + handles_;
    if (is_d(idx)) return idx - handles_;
    const int j = idx - 2 * handles_;
    return 2 * handles_ + (j < inner_genus_ ? j + inner_genus_ : j - inner_genus_);
  }

  /// True for c_i and x_j (j <= g): the element that pairs to +1 with its partner.
  bool is_leading(int idx) const { return idx < partner(idx); }

  /// <e_a, e_b> in {-1, 0, 1}.
  int basis_pairing(int a, int b) const {
    if (partner(a) != b) return 0;
    return is_leading(a) ? 1 : -1;
  }

  IntMatrix intersection_matrix() const {
    IntMatrix j(rank(), rank());
    for (int a = 0; a < rank(); ++a) j(a, partner(a)) = basis_pairing(a, partner(a));
    return j;
  }

  std::string label(int idx) const {
    if (is_c(idx)) return "c" + std::to_string(idx + 1);
    if (is_d(idx)) return "d" + std::to_string(idx - handles_ + 1);
    return "x" + std::to_string(idx - 2 * handles_ + 1);
  }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  SurfaceModel(int handles, int inner_genus) : handles_(handles), inner_genus_(inner_genus) {}

  int handles_ = 0;
  int inner_genus_ = 0;
};

/// A class in H^1(Σ; Z), coordinates in the model's basis.
struct CohClass {
  std::vector<Integer> coords;

  static CohClass basis(int rank, int idx) {
    CohClass c{std::vector<Integer>(rank)};
    c.coords.at(idx) = 1;
    return c;
  }

  std::size_t size() const { return coords.size(); }

  friend bool operator==(const CohClass&, const CohClass&) = default;
  friend CohClass operator+(CohClass a, const CohClass& b) {
    if (a.size() != b.size()) throw DimensionMismatch("classes of different rank");
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend CohClass operator*(const Integer& k, CohClass a) {
    for (auto& x : a.coords) x *= k;
    return a;
  }
};

/// u^T J v.
inline Integer pairing(const SurfaceModel& model, const CohClass& u, const CohClass& v) {
  const auto r = static_cast<std::size_t>(model.rank());
  if (u.size() != r || v.size() != r) throw DimensionMismatch("pairing: class rank does not match the surface");
  Integer s = 0;
  for (int a = 0; a < model.rank(); ++a) {
    if (u.coords[a] == 0) continue;
    const int b = model.partner(a);
    s += model.basis_pairing(a, b) * u.coords[a] * v.coords[b];
  }
  return s;
}

inline bool is_symplectic(const SurfaceModel& model, const IntMatrix& a) {
  if (a.rows() != static_cast<std::size_t>(model.rank()) || !a.is_square()) return false;
  const IntMatrix j = model.intersection_matrix();
  return a.transpose() * j * a == j;
}

/// Symplectic test against the unsplit form of genus size/2.
inline bool is_symplectic(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("is_symplectic: matrix is not square");
  if (a.rows() % 2 != 0) throw DimensionMismatch("is_symplectic: odd dimension");
  return is_symplectic(SurfaceModel::unsplit(static_cast<int>(a.rows() / 2)), a);
}

/// Pullback h^* on H^1 as an integer symplectic matrix; column i is the image
/// of basis element i.
class MappingClass {
 public:
  MappingClass(SurfaceModel model, IntMatrix mat) : model_(model), mat_(std::move(mat)) {
    if (mat_.rows() != static_cast<std::size_t>(model_.rank()) || !mat_.is_square())
      throw DimensionMismatch("mapping class matrix must be " + std::to_string(model_.rank()) + "x" +
                              std::to_string(model_.rank()));
    if (!is_symplectic(model_, mat_)) throw std::invalid_argument("mapping class matrix is not symplectic");
  }

  static MappingClass identity(const SurfaceModel& model) {
    return MappingClass(model, IntMatrix::identity(model.rank()));
  }

  const SurfaceModel& model() const { return model_; }
  const IntMatrix& matrix() const { return mat_; }

  CohClass apply(const CohClass& u) const {
    if (u.size() != mat_.cols()) throw DimensionMismatch("mapping class applied to a class of the wrong rank");
    return CohClass{mat_ * std::span<const Integer>(u.coords)};
  }

  /// A^{-1} = J^{-1} A^T J with J^{-1} = -J.
  MappingClass inverse() const {
    const IntMatrix j = model_.intersection_matrix();
    IntMatrix inv = j.transpose() * mat_.transpose() * j;
    return MappingClass(model_, std::move(inv), unchecked{});
  }

  MappingClass power(int k) const {
    if (k < 0) return inverse().power(-k);
    IntMatrix r = IntMatrix::identity(model_.rank());
    for (int i = 0; i < k; ++i) r = r * mat_;
    return MappingClass(model_, std::move(r), unchecked{});
  }

  friend MappingClass operator*(const MappingClass& a, const MappingClass& b) {
    if (!(a.model_ == b.model_)) throw DimensionMismatch("composing mapping classes of different surfaces");
    return MappingClass(a.model_, a.mat_ * b.mat_, unchecked{});
  }

  friend bool operator==(const MappingClass& a, const MappingClass& b) {
    return a.model_ == b.model_ && a.mat_ == b.mat_;
  }

 private:
  struct unchecked {};
  MappingClass(SurfaceModel model, IntMatrix mat, unchecked) : model_(model), mat_(std::move(mat)) {}

  SurfaceModel model_;
  IntMatrix mat_;
};

/// Trace of Λ^j A: the sum of the principal j×j minors.
inline Integer exterior_power_trace(const IntMatrix& a, int j) {
  const int n = static_cast<int>(a.rows());
  if (j < 0 || j > n) throw std::out_of_range("exterior_power_trace: j outside 0..2G");
  Integer tr = 0;
  for (const auto& s : k_subsets(n, j)) tr += determinant(a.submatrix(s, s));
  return tr;
}

inline Integer exterior_power_trace(const MappingClass& a, int j) { return exterior_power_trace(a.matrix(), j); }

/// Λ^k A in the lexicographic basis of k-subsets: entry (J, I) = det A[J, I].
inline IntMatrix exterior_power_matrix(const IntMatrix& a, int k) {
  const int n = static_cast<int>(a.rows());
  const auto subsets = k_subsets(n, k);
  IntMatrix out(subsets.size(), subsets.size());
  for (std::size_t c = 0; c < subsets.size(); ++c)
    for (std::size_t r = 0; r < subsets.size(); ++r) out(r, c) = determinant(a.submatrix(subsets[r], subsets[c]));
  return out;
}

/// det(I - tA) = sum_j (-t)^j tr Λ^j A, truncated at `order`.
inline TruncSeries char_series(const IntMatrix& a, std::size_t order) {
  TruncSeries s(order);
  const int n = static_cast<int>(a.rows());
  for (int j = 0; j <= n && static_cast<std::size_t>(j) <= order; ++j)
    s[j] = Rational(sign_of_power(j) * exterior_power_trace(a, j));
  return s;
}

inline TruncSeries char_series(const MappingClass& a, std::size_t order) { return char_series(a.matrix(), order); }

/// The transvection x -> x + sign * <v, x> v, as a matrix: I + sign * v v^T J.
inline IntMatrix transvection(const SurfaceModel& model, const CohClass& v, int sign) {
  const int r = model.rank();
  IntMatrix t = IntMatrix::identity(r);
  for (int col = 0; col < r; ++col) {
    const Integer vx = pairing(model, v, CohClass::basis(r, col));
    if (vx == 0) continue;
    for (int row = 0; row < r; ++row) t(row, col) += sign * vx * v.coords[row];
  }
  return t;
}

/// Transvections along e_i and e_i + e_j, with their inverses. They generate
/// the integral symplectic group.
inline std::vector<IntMatrix> transvection_generators(const SurfaceModel& model) {
  const int r = model.rank();
  std::vector<IntMatrix> gens;
  for (int i = 0; i < r; ++i)
    for (int sign : {1, -1}) gens.push_back(transvection(model, CohClass::basis(r, i), sign));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int sign : {1, -1}) gens.push_back(transvection(model, CohClass::basis(r, i) + CohClass::basis(r, j), sign));
  return gens;
}

/// A deterministic product of `word_length` generators drawn from `seed`.
inline MappingClass random_symplectic(const SurfaceModel& model, int word_length, std::uint64_t seed) {
  const auto gens = transvection_generators(model);
  std::mt19937_64 rng(seed);
  IntMatrix a = IntMatrix::identity(model.rank());
  if (!gens.empty())
    for (int w = 0; w < word_length; ++w) a = a * gens[rng() % gens.size()];
  return MappingClass(model, std::move(a));
}

inline MappingClass random_symplectic(int genus, int word_length, std::uint64_t seed) {
  return random_symplectic(SurfaceModel::unsplit(genus), word_length, seed);
}

}  // namespace swt

#endif  // SWT_LATTICE_HPP
