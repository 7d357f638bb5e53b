#ifndef SWT_TQFT_HPP
#define SWT_TQFT_HPP

#include <string>
#include <vector>

#include "swt/combinatorics.hpp"
#include "swt/error.hpp"
#include "swt/exact.hpp"
#include "swt/lattice.hpp"
#include "swt/matrix.hpp"
#include "swt/morse_torsion.hpp"
#include "swt/presentation.hpp"
#include "swt/series.hpp"
#include "swt/sym_power.hpp"

namespace swt {

/// The genus-g surface Σ_g left after cutting the handles; its basis is the
/// x-block of the split surface.
inline SurfaceModel inner_model(const Presentation& p) { return SurfaceModel::unsplit(p.g); }

/// A_1: α -> ι_{c_N} ... ι_{c_1} α, then restriction to the x-classes.
inline SymClass descend_map(const Presentation& p, int n, const SymClass& alpha) {
  const SurfaceModel md = p.model();
  if (!(alpha.space() == SymSpace{md, n + p.N})) throw DimensionMismatch("descend_map: class not in Sym^{n+N} of the split surface");
  SymClass cur = alpha;
  for (int i = 1; i <= p.N; ++i) cur = contract_class(CohClass::basis(md.rank(), md.c(i)), cur);
  SymClass out(SymSpace{inner_model(p), n});
  const int shift = 2 * p.N;
  for (const auto& [m, c] : cur.terms()) {
    if (!m.indices.empty() && m.indices.front() < shift) continue;
    IndexList idx = m.indices;
    for (int& i : idx) i -= shift;
    out.add(Monomial{std::move(idx), m.q}, c);
  }
  return out;
}

/// A_2: β -> c_1 ∧ ... ∧ c_N ∧ β.
inline SymClass ascend_map(const Presentation& p, int n, const SymClass& beta) {
  const SurfaceModel md = p.model();
  if (!(beta.space() == SymSpace{inner_model(p), n})) throw DimensionMismatch("ascend_map: class not in Sym^n of the inner surface");
  SymClass cur(SymSpace{md, n});
  for (const auto& [m, c] : beta.terms()) {
    IndexList idx = m.indices;
    for (int& i : idx) i += 2 * p.N;
    cur.add(Monomial{std::move(idx), m.q}, c);
  }
  for (int i = p.N; i >= 1; --i) cur = wedge_class(CohClass::basis(md.rank(), md.c(i)), cur);
  return cur;
}

/// κ_n = h^* ∘ A_2 ∘ A_1 on H^*(Sym^{n+N} Σ_{g+N}).
inline SymEndomorphism kappa_matrix(const Presentation& p, int n) {
  const MappingClass a = mapping_class(p);
  const InducedMap h(a);
  return SymEndomorphism::from_function(SymSpace{p.model(), n + p.N}, [&](const SymClass& alpha) {
    return h(ascend_map(p, n, descend_map(p, n, alpha)));
  });
}

/// Σ_β (-1)^{|I_β|+N} · coefficient of d_1..d_N β in h^*(c_1..c_N β), β over
/// the basis of H^*(Sym^n Σ_g). Each coefficient is a minor of A.
inline Integer trace_kappa_coefficient(const Presentation& p, int n) {
  const MappingClass a = mapping_class(p);
  const SurfaceModel md = a.model();
  Integer total = 0;
  for (const auto& beta : enumerate_basis(SymSpace{inner_model(p), n})) {
    IndexList cols, rows;
    for (int i = 1; i <= p.N; ++i) {
      cols.push_back(md.c(i));
      rows.push_back(md.d(i));
    }
    for (int i : beta.indices) {
      cols.push_back(i + 2 * p.N);
      rows.push_back(i + 2 * p.N);
    }
    total += sign_of_power(beta.k() + p.N) * determinant(a.matrix().submatrix(rows, cols));
  }
  return total;
}

/// ζ(h) to order kmax, computed three ways; throws InvariantViolation unless
/// they agree and are integral.
inline TruncSeries zeta_series(const MappingClass& a, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
  const auto order = static_cast<std::size_t>(kmax);

  TruncSeries log_zeta(order);
  IntMatrix ak = IntMatrix::identity(a.model().rank());
  for (int k = 1; k <= kmax; ++k) {
    ak = ak * a.matrix();
    Integer tr = 0;
    for (std::size_t i = 0; i < ak.rows(); ++i) tr += ak(i, i);
    log_zeta[k] = Rational(2 - tr) / k;
  }
  const TruncSeries via_exp = series_exp(log_zeta);

  TruncSeries via_lefschetz(order);
  for (int k = 0; k <= kmax; ++k) via_lefschetz[k] = Rational(lefschetz_from_traces(a.matrix(), k));

  const TruncSeries one_minus_t_sq =
      TruncSeries::one(order) - TruncSeries::monomial(order, 1, 2) + TruncSeries::monomial(order, 2);
  const TruncSeries via_char = series_div(char_series(a, order), one_minus_t_sq);

  if (!(via_exp == via_lefschetz) || !(via_exp == via_char))
    throw InvariantViolation("zeta routes disagree: exp " + via_exp.str() + ", lefschetz " + via_lefschetz.str() +
                             ", char " + via_char.str());
  if (!via_exp.is_integral()) throw InvariantViolation("zeta has non-integral coefficients: " + via_exp.str());
  return via_exp;
}

inline TruncSeries zeta_series(const Presentation& p, int kmax) { return zeta_series(mapping_class(p), kmax); }

/// ζ · t^N det(d_M), truncated at nmax.
inline TruncSeries rhs_series(const Presentation& p, int nmax) {
  return series_mul(zeta_series(p, nmax), torsion_representative(p, nmax));
}

struct VerificationRow {
  int n = 0;               // degree on Σ_g
  int surface_degree = 0;  // n + N, degree on the cut surface Σ_{g+N}
  Integer lhs;             // trace_kappa_coefficient
  Integer kappa_trace;     // graded trace of kappa_matrix
  Integer rhs;             // coefficient of t^{n+N} in ζ · t^N det(d_M)
  bool match = false;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  bool pass = true;
};

/// Compares both trace computations with the coefficient of t^{n+N} of the
/// torsion-times-zeta series for n = 0..nmax.
inline VerificationReport verify_main_identity(const Presentation& p, int nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
  const TruncSeries rhs = rhs_series(p, nmax + p.N);
  VerificationReport rep;
  for (int n = 0; n <= nmax; ++n) {
    VerificationRow r;
    r.n = n;
    r.surface_degree = n + p.N;
    r.lhs = trace_kappa_coefficient(p, n);
    r.kappa_trace = graded_trace(kappa_matrix(p, n));
    r.rhs = to_integer(rhs[static_cast<std::size_t>(n + p.N)]);
    r.match = r.lhs == r.kappa_trace && r.lhs == r.rhs;
    rep.pass = rep.pass && r.match;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

/// b_1 = 1 + (2G - N) - rank Q(I - A^{-1}), Q dropping the c-rows.
inline int compute_b1(const Presentation& p) {
  const MappingClass a = mapping_class(p);
  const SurfaceModel md = a.model();
  const IntMatrix m = IntMatrix::identity(md.rank()) - a.inverse().matrix();
  IndexList keep, all;
  for (int i = 0; i < md.rank(); ++i) {
    all.push_back(i);
    if (!md.is_c(i)) keep.push_back(i);
  }
  const auto r = static_cast<int>(rank(m.submatrix(keep, all)));
  return 1 + (md.rank() - p.N) - r;
}

struct SWRow {
  int n = 0;  // degree on the cut surface
  int m = 0;  // spin^c degree; |m| when b1 > 1
  Integer value;
};

struct SWTable {
  int b1 = 0;
  bool b1_greater_than_one = false;
  std::vector<SWRow> rows;
  std::vector<std::string> notes;
};

/// Averaged SW sums labelled by spin^c degree. Row n is the degree on
/// Σ_{g+N}; its value is Tr κ at Σ_g-degree n - N, which vanishes for n < N.
inline SWTable sw_table(const Presentation& p, int nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
  SWTable t;
  t.b1 = compute_b1(p);
  t.b1_greater_than_one = t.b1 > 1;
  const int gs = p.genus();
  for (int n = 0; n <= nmax; ++n) {
    SWRow r;
    r.n = n;
    if (t.b1_greater_than_one) {
      const int abs_m = 2 * (gs - 1 - n);
      if (abs_m < 0) continue;
      r.m = abs_m;
    } else {
      r.m = 2 * (n - gs + 1);
    }
    r.value = n < p.N ? Integer(0) : trace_kappa_coefficient(p, n - p.N);
    t.rows.push_back(std::move(r));
  }
  if (t.b1_greater_than_one) {
    t.notes.push_back("b1 > 1: m reported as |m| = 2(g(S) - 1 - n); classes m and -m share the row");
    if (nmax > gs - 1) t.notes.push_back("degrees n > g(S) - 1 have no spin^c label and are omitted");
  }
  if (p.N > 0) t.notes.push_back("degrees below the handle count have vanishing SW sum");
  return t;
}

}  // namespace swt

#endif  // SWT_TQFT_HPP
