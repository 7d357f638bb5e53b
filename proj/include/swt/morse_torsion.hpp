#ifndef SWT_MORSE_TORSION_HPP
#define SWT_MORSE_TORSION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "swt/combinatorics.hpp"
#include "swt/error.hpp"
#include "swt/exact.hpp"
#include "swt/lattice.hpp"
#include "swt/matrix.hpp"
#include "swt/presentation.hpp"
#include "swt/series.hpp"

namespace swt {

/// Chain complex C_b <- C_{b+1} <- ... of Q-vector spaces with standard-basis
/// volumes. boundaries[j] is ∂: C_{b+j+1} -> C_{b+j}, a ranks[j] x ranks[j+1]
/// matrix.
struct VolumedComplex {
  int bottom_degree = 0;
  std::vector<std::size_t> ranks;
  std::vector<RatMatrix> boundaries;

  int top_degree() const { return bottom_degree + static_cast<int>(ranks.size()) - 1; }

  /// 0 -> C_i -> C_{i-1} -> 0 with the given ∂.
  static VolumedComplex two_term(int i, const RatMatrix& d) {
    return VolumedComplex{i - 1, {d.rows(), d.cols()}, {d}};
  }
};

namespace detail {

inline void check_complex(const VolumedComplex& c) {
  if (c.ranks.empty()) {
    if (!c.boundaries.empty()) throw InvalidComplex("boundaries without chain groups");
    return;
  }
  if (c.boundaries.size() + 1 != c.ranks.size()) throw InvalidComplex("need one boundary map between consecutive groups");
  for (std::size_t j = 0; j < c.boundaries.size(); ++j)
    if (c.boundaries[j].rows() != c.ranks[j] || c.boundaries[j].cols() != c.ranks[j + 1])
      throw InvalidComplex("boundary map shape does not match the chain group ranks");
  for (std::size_t j = 0; j + 1 < c.boundaries.size(); ++j) {
    const RatMatrix dd = c.boundaries[j] * c.boundaries[j + 1];
    for (std::size_t r = 0; r < dd.rows(); ++r)
      for (std::size_t s = 0; s < dd.cols(); ++s)
        if (dd(r, s) != 0) throw InvalidComplex("boundary maps do not compose to zero");
  }
}

// Vectors w in the source whose images under d form a basis of im d.
// With an rng the source basis is first scrambled by a random unimodular
// change of coordinates, which varies the resulting image basis.
inline std::vector<std::vector<Rational>> image_preimages(const RatMatrix& d, std::mt19937_64* rng) {
  const std::size_t n = d.cols();
  RatMatrix s = RatMatrix::identity(n);
  if (rng != nullptr && n > 0) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), *rng);
    RatMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(static_cast<std::size_t>(perm[i]), i) = 1;
    RatMatrix l = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) l(i, j) = static_cast<long long>((*rng)() % 7) - 3;
    s = p * l;
  }
  RatMatrix m = d * s;
  const auto pivots = row_reduce(m);
  std::vector<std::vector<Rational>> out;
  for (std::size_t c : pivots) out.push_back(s.column(c));
  return out;
}

}  // namespace detail

/// τ(C) = Π_i τ_i^{(-1)^{i+1}} with τ_i = [ν_{i+1}, lifts of ν_i] / ω_i, or 0
/// when the complex has homology.
inline Rational complex_torsion(const VolumedComplex& c, std::mt19937_64* rng = nullptr) {
  detail::check_complex(c);
  const std::size_t levels = c.ranks.size();
  if (levels == 0) return 1;
  // lifts[j]: preimages in C_{b+j+1} of the image basis of boundaries[j].
  std::vector<std::vector<std::vector<Rational>>> lifts(c.boundaries.size());
  for (std::size_t j = 0; j < c.boundaries.size(); ++j) lifts[j] = detail::image_preimages(c.boundaries[j], rng);

  for (std::size_t j = 0; j < levels; ++j) {
    const std::size_t in_rank = j + 1 < levels ? lifts[j].size() : 0;
    const std::size_t out_rank = j > 0 ? lifts[j - 1].size() : 0;
    if (in_rank + out_rank != c.ranks[j]) return 0;
  }

  Rational tau = 1;
  for (std::size_t j = 0; j < levels; ++j) {
    const std::size_t dim = c.ranks[j];
    RatMatrix frame(dim, dim);
    std::size_t col = 0;
    if (j + 1 < levels)
      for (const auto& w : lifts[j]) {
        const auto v = c.boundaries[j] * std::span<const Rational>(w);
        for (std::size_t r = 0; r < dim; ++r) frame(r, col) = v[r];
        ++col;
      }
    if (j > 0)
      for (const auto& w : lifts[j - 1]) {
        for (std::size_t r = 0; r < dim; ++r) frame(r, col) = w[r];
        ++col;
      }
    const Rational t = determinant(frame);
    if (t == 0) throw InvariantViolation("torsion frame is degenerate on an acyclic complex");
    const int degree = c.bottom_degree + static_cast<int>(j);
    if (sign_of_power(degree + 1) == 1)
      tau *= t;
    else
      tau /= t;
  }
  return tau;
}

/// A permutation of {0..s-1} (images) with the marked prefix {0..N-1}.
struct RelPerm {
  int s = 0;
  int N = 0;
  IndexList perm;

  friend bool operator==(const RelPerm&, const RelPerm&) = default;
};

/// Every cycle of the permutation meets {0..N-1}.
inline bool is_relative_perm(const RelPerm& r) {
  if (static_cast<int>(r.perm.size()) != r.s || r.N < 0 || r.N > r.s) return false;
  std::vector<bool> reached(r.s, false);
  for (int i = 0; i < r.N; ++i)
    for (int j = i; !reached[j]; j = r.perm[j]) reached[j] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

/// All of S_{s;N}, in lexicographic order of the image vectors.
inline std::vector<RelPerm> enumerate_relative_perms(int s, int N) {
  if (N < 0 || s < 0) throw std::invalid_argument("enumerate_relative_perms: negative size");
  if (N > s) throw std::invalid_argument("enumerate_relative_perms: N exceeds s");
  std::vector<RelPerm> out;
  IndexList p(s);
  std::iota(p.begin(), p.end(), 0);
  do {
    RelPerm r{s, N, p};
    if (is_relative_perm(r)) out.push_back(std::move(r));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct Collapse {
  IndexList perm;               // ρ̃ on {0..N-1}
  std::vector<int> return_times;  // s_i
};

/// s_i = min{m > 0 : ρ^m(i) < N} and ρ̃(i) = ρ^{s_i}(i).
inline Collapse collapse_perm(const RelPerm& r) {
  if (!is_relative_perm(r)) throw std::invalid_argument("collapse_perm: not in S_{s;N}");
  Collapse c{IndexList(r.N), std::vector<int>(r.N)};
  for (int i = 0; i < r.N; ++i) {
    int j = r.perm[i];
    int m = 1;
    while (j >= r.N) {
      j = r.perm[j];
      ++m;
    }
    c.perm[i] = j;
    c.return_times[i] = m;
  }
  return c;
}

/// N x N matrix of series; entry (i, j) = Σ_{k>=1} <A^k c_i, c_j> t^k.
class MorseMatrix {
 public:
  MorseMatrix(int n, std::size_t order) : n_(n), entries_(static_cast<std::size_t>(n) * n, TruncSeries(order)) {}

  int size() const { return n_; }
  const TruncSeries& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  TruncSeries& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Determinant by Laplace expansion over column subsets.
  TruncSeries determinant(std::size_t order) const {
    if (n_ == 0) return TruncSeries::one(order);
    if (n_ > 20) throw std::length_error("MorseMatrix::determinant: too many handles");
    std::vector<TruncSeries> dp(std::size_t{1} << n_, TruncSeries(order));
    dp[0] = TruncSeries::one(order);
    for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
      const int row = std::popcount(mask);
      if (row >= n_) continue;
      bool zero = true;
      for (const auto& c : dp[mask].coeffs()) zero = zero && c == 0;
      if (zero) continue;
      for (int col = 0; col < n_; ++col) {
        if (mask & (1u << col)) continue;
        const int above = std::popcount(mask >> (col + 1));
        TruncSeries term = series_mul(dp[mask], (*this)(row, col).truncated(order));
        if (above % 2) term = -term;
        dp[mask | (1u << col)] += term;
      }
    }
    return dp.back();
  }

 private:
  int n_;
  std::vector<TruncSeries> entries_;
};

namespace detail {

// <A^k c_i, c_j> for k = 0..kmax, indexed [k][i][j].
inline std::vector<std::vector<std::vector<Integer>>> handle_pairings(const Presentation& p, int kmax) {
  const MappingClass a = mapping_class(p);
  const SurfaceModel md = a.model();
  std::vector<std::vector<std::vector<Integer>>> out;
  IntMatrix ak = IntMatrix::identity(md.rank());
  for (int k = 0; k <= kmax; ++k) {
    std::vector<std::vector<Integer>> tab(p.N, std::vector<Integer>(p.N));
    for (int i = 0; i < p.N; ++i) {
      const CohClass img{ak.column(md.c(i + 1))};
      for (int j = 0; j < p.N; ++j) tab[i][j] = pairing(md, img, CohClass::basis(md.rank(), md.c(j + 1)));
    }
    out.push_back(std::move(tab));
    ak = ak * a.matrix();
  }
  return out;
}

}  // namespace detail

inline MorseMatrix morse_differential_matrix(const Presentation& p, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
  const auto tab = detail::handle_pairings(p, kmax);
  MorseMatrix m(p.N, static_cast<std::size_t>(kmax));
  for (int k = 1; k <= kmax; ++k)
    for (int i = 0; i < p.N; ++i)
      for (int j = 0; j < p.N; ++j) m(i, j)[k] = Rational(tab[k][i][j]);
  return m;
}

/// t^N det(d_M) truncated at kmax, i.e. the determinant of the t-scaled matrix.
inline TruncSeries torsion_representative(const Presentation& p, int kmax) {
  return morse_differential_matrix(p, kmax).determinant(static_cast<std::size_t>(kmax));
}

/// Σ over s_1+..+s_N = k (s_i >= 1) and σ in S_N of sgn σ Π <A^{s_i} c_i, c_σ(i)>.
inline Integer torsion_coefficient_direct(const Presentation& p, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (p.N == 0) return k == 0 ? 1 : 0;
  if (k < p.N) {
    (void)mapping_class(p);
    return 0;
  }
  const auto tab = detail::handle_pairings(p, k);
  IndexList sigma(p.N);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<IndexList> perms;
  do perms.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));

  Integer total = 0;
  for_each_composition(k, p.N, 1, [&](std::span<const int> s) {
    for (const auto& perm : perms) {
      Integer prod = sorting_sign(perm);
      for (int i = 0; i < p.N && prod != 0; ++i) prod *= tab[s[i]][i][perm[i]];
      total += prod;
    }
  });
  return total;
}

}  // namespace swt

#endif  // SWT_MORSE_TORSION_HPP
