#include <gtest/gtest.h>

#include "support/suite.hpp"
#include "swt/intersection.hpp"

using swt::Integer;
using swt::IntMatrix;
using swt::Monomial;
using swt::PairingKind;
using swt::Presentation;
using swt::ProductClass;
using swt::SurfaceModel;
using swt::SymClass;
using swt::SymSpace;

namespace {

Presentation identity_presentation(int g, int n) { return Presentation{g, n, IntMatrix::identity(2 * (g + n)), ""}; }

}  // namespace

TEST(Intersection, DiagonalWithoutHandles) {
  const Presentation p = swt::testing::random_suite(1, 151, {2, 0, 2, 6, 0}).front();
  const SymSpace sp{p.model(), 2};
  const auto duals = swt::dual_basis(sp);
  ProductClass want(sp);
  for (const auto& b : swt::enumerate_basis(sp)) want.add_product(duals.at(b), SymClass(sp, b), swt::sign_of_power(b.degree()));
  EXPECT_EQ(swt::diagonal_class(p, 2), want);
}

TEST(Intersection, DiagonalUnitTermSign) {
  for (int n = 0; n <= 2; ++n)
    for (int N = 0; N <= 3; ++N) {
      const Presentation p = identity_presentation(1, N);
      const auto md = p.model();
      swt::IndexList cs;
      for (int i = 1; i <= N; ++i) cs.push_back(md.c(i));
      const auto d = swt::diagonal_class(p, n);
      const auto it = d.terms().find({Monomial{cs, n}, Monomial{cs, 0}});
      ASSERT_NE(it, d.terms().end());
      EXPECT_EQ(it->second, swt::sign_of_power(N * (N - 1) / 2)) << n << ' ' << N;
    }
}

TEST(Intersection, GraphExamples) {
  const Presentation id = identity_presentation(1, 1);
  const SymSpace big{id.model(), 2};
  const auto duals = swt::dual_basis(big);
  ProductClass want(big);
  for (const auto& a : swt::enumerate_basis(big)) want.add_product(duals.at(a), SymClass(big, a), swt::sign_of_power(a.degree()));
  EXPECT_EQ(swt::graph_class(id, 1), want);

  const Presentation s2s1 = identity_presentation(0, 0);
  const auto g = swt::graph_class(s2s1, 3);
  EXPECT_EQ(g.terms().size(), 4u);
  for (int q = 0; q <= 3; ++q) EXPECT_EQ(g.terms().at({Monomial{{}, 3 - q}, Monomial{{}, q}}), 1);
}

TEST(Intersection, GraphIsPushedDiagonal) {
  for (const auto& p : swt::testing::random_suite(6, 157, {1, 1, 2, 8, 0})) {
    const Presentation id{p.g, p.N, IntMatrix::identity(p.monodromy.rows()), ""};
    const SymSpace big{p.model(), 1 + p.N};
    const swt::InducedMap hinv(swt::mapping_class(p).inverse());
    ProductClass pushed(big);
    const ProductClass base = swt::graph_class(id, 1);
    for (const auto& [ab, c] : base.terms())
      pushed.add_product(SymClass(big, ab.first), hinv(SymClass(big, ab.second)), c);
    EXPECT_EQ(swt::graph_class(p, 1), pushed);
  }
}

TEST(Intersection, ProductEvaluateExamples) {
  for (int m = 0; m <= 3; ++m) {
    const SymSpace sp{SurfaceModel::unsplit(1), m};
    ProductClass u(sp), v(sp);
    u.add(Monomial{{}, 0}, Monomial{{}, 0}, 1);
    v.add(Monomial{{}, m}, Monomial{{}, m}, 1);
    EXPECT_EQ(swt::product_evaluate(u, v), 1);
  }
  const SymSpace s1{SurfaceModel::unsplit(1), 1};
  ProductClass u(s1), v(s1), w(s1);
  u.add(Monomial{{0}, 0}, Monomial{{0}, 0}, 1);
  v.add(Monomial{{1}, 0}, Monomial{{1}, 0}, 1);
  EXPECT_EQ(swt::product_evaluate(u, v), -1);
  // <x1, x2> = 1 = -<x2, x1>
  w.add(Monomial{{}, 1}, Monomial{{1}, 0}, 1);
  ProductClass z(s1);
  z.add(Monomial{{}, 0}, Monomial{{0}, 0}, 1);
  EXPECT_EQ(swt::product_evaluate(z, w), 1);
  EXPECT_EQ(swt::product_evaluate(w, z), -1);
  EXPECT_THROW(swt::product_evaluate(u, ProductClass(SymSpace{SurfaceModel::unsplit(1), 2})), swt::DimensionMismatch);
}

TEST(Intersection, NumberExamples) {
  EXPECT_EQ(swt::intersection_number(identity_presentation(0, 0), 0), 1);
  for (int g = 0; g <= 2; ++g)
    for (int n = 0; n <= 2; ++n)
      EXPECT_EQ(swt::intersection_number(identity_presentation(g, 0), n),
                swt::lefschetz_number(swt::MappingClass::identity(SurfaceModel::unsplit(g)), n));
  for (const auto& p : swt::testing::random_suite(6, 163, {2, 0, 2, 8, 0}))
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(swt::intersection_number(p, n), swt::lefschetz_number(swt::mapping_class(p), n));
}

TEST(Intersection, EqualsTraceOnRandomSuite) {
  for (const auto& p : swt::testing::random_suite(12, 167, {2, 2, 2, 8, 1}))
    for (int n = 0; n <= 2; ++n)
      EXPECT_EQ(swt::intersection_number(p, n), swt::trace_kappa_coefficient(p, n)) << p.name << " n=" << n;
}

TEST(Intersection, Epsilon4Identity) {
  for (int g = 0; g <= 2; ++g)
    for (int N = 0; N <= 2; ++N) {
      if (g + N > 2) continue;
      for (int n = 0; n <= 2; ++n) EXPECT_TRUE(swt::epsilon4_violations(identity_presentation(g, N), n).empty()) << g << N << n;
    }
}

TEST(Intersection, CupPairingBreaksTheIdentity) {
  // Under the cup pairing wedge and contraction are not adjoint; the trace is
  // not reproduced once n >= 2 and N >= 1.
  bool mismatch = false;
  for (const auto& p : swt::testing::random_suite(6, 173, {0, 1, 1, 8, 1}))
    mismatch = mismatch || swt::intersection_number(p, 2, PairingKind::cup) != swt::trace_kappa_coefficient(p, 2);
  EXPECT_TRUE(mismatch);
}
