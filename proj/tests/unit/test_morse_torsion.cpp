#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "support/complexes.hpp"
#include "support/suite.hpp"
#include "swt/morse_torsion.hpp"

using swt::Integer;
using swt::IntMatrix;
using swt::Presentation;
using swt::Rational;
using swt::RatMatrix;
using swt::RelPerm;
using swt::VolumedComplex;
using swt::testing::direct_sum;
using swt::testing::placed_two_term;
using swt::testing::random_invertible;

namespace {

Presentation identity_presentation(int g, int n) {
  return Presentation{g, n, IntMatrix::identity(2 * (g + n)), ""};
}

}  // namespace

TEST(ComplexTorsion, TwoTermExamples) {
  EXPECT_EQ(swt::complex_torsion(VolumedComplex::two_term(1, RatMatrix{{1}})), 1);
  EXPECT_EQ(swt::complex_torsion(VolumedComplex::two_term(1, RatMatrix{{2}})), Rational(1, 2));
  EXPECT_EQ(swt::complex_torsion(VolumedComplex::two_term(2, RatMatrix{{2}})), 2);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const int i = 1 + static_cast<int>(rng() % 4);
    const RatMatrix d = random_invertible(rng, 1 + rng() % 4);
    const Rational det = swt::determinant(d);
    EXPECT_EQ(swt::complex_torsion(VolumedComplex::two_term(i, d)), i % 2 == 0 ? det : 1 / det);
  }
}

TEST(ComplexTorsion, NonAcyclicIsZero) {
  EXPECT_EQ(swt::complex_torsion(VolumedComplex::two_term(1, RatMatrix{{1, 2}, {2, 4}})), 0);
  EXPECT_EQ(swt::complex_torsion(VolumedComplex{0, {1}, {}}), 0);
  EXPECT_EQ(swt::complex_torsion(VolumedComplex::two_term(1, RatMatrix(2, 1))), 0);
  EXPECT_EQ(swt::complex_torsion(VolumedComplex{0, {0}, {}}), 1);
}

TEST(ComplexTorsion, RejectsNonComplexes) {
  const VolumedComplex bad{0, {1, 1, 1}, {RatMatrix{{1}}, RatMatrix{{1}}}};
  EXPECT_THROW(swt::complex_torsion(bad), swt::InvalidComplex);
  const VolumedComplex shape{0, {1, 2}, {RatMatrix{{1}}}};
  EXPECT_THROW(swt::complex_torsion(shape), swt::InvalidComplex);
}

TEST(ComplexTorsion, ChangeOfBasisAndDirectSums) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    const int top = 2 + static_cast<int>(rng() % 3);
    // Sum of two-term pieces, one per degree pair.
    VolumedComplex c = placed_two_term(top, 1, random_invertible(rng, 1 + rng() % 2));
    Rational expected = 1 / swt::determinant(c.boundaries[0]);
    for (int i = 2; i <= top; ++i) {
      const RatMatrix d = random_invertible(rng, 1 + rng() % 2);
      c = direct_sum(c, placed_two_term(top, i, d));
      const Rational det = swt::determinant(d);
      expected *= i % 2 == 0 ? det : 1 / det;
    }
    // Concatenating bases of the summands reorders them, so only |τ| is multiplicative.
    const Rational tau = swt::complex_torsion(c);
    EXPECT_EQ(abs(tau), abs(expected));
    // New bases S_i: ∂ becomes S_{i-1}^{-1} ∂ S_i and τ picks up Π det(S_i)^{(-1)^i}.
    std::vector<RatMatrix> s;
    for (std::size_t j = 0; j < c.ranks.size(); ++j) s.push_back(random_invertible(rng, c.ranks[j]));
    VolumedComplex conj = c;
    Rational factor = 1;
    for (std::size_t j = 0; j < c.ranks.size(); ++j) {
      const Rational det = c.ranks[j] ? swt::determinant(s[j]) : Rational(1);
      factor *= j % 2 == 0 ? det : 1 / det;
    }
    for (std::size_t j = 0; j < c.boundaries.size(); ++j) conj.boundaries[j] = swt::inverse(s[j]) * c.boundaries[j] * s[j + 1];
    EXPECT_EQ(swt::complex_torsion(conj), tau * factor);
    for (int rerun = 0; rerun < 5; ++rerun) {
      std::mt19937_64 pivots(rng());
      EXPECT_EQ(swt::complex_torsion(conj, &pivots), tau * factor);
    }
  }
}

TEST(RelPerms, Enumeration) {
  EXPECT_EQ(swt::enumerate_relative_perms(3, 3).size(), 6u);
  const auto s21 = swt::enumerate_relative_perms(2, 1);
  ASSERT_EQ(s21.size(), 1u);
  EXPECT_EQ(s21[0].perm, (swt::IndexList{1, 0}));
  const auto s31 = swt::enumerate_relative_perms(3, 1);
  ASSERT_EQ(s31.size(), 2u);
  for (const auto& r : s31) EXPECT_EQ(swt::permutation_parity(r.perm), 0);
  EXPECT_THROW(swt::enumerate_relative_perms(2, 3), std::invalid_argument);
  EXPECT_EQ(swt::enumerate_relative_perms(0, 0).size(), 1u);
  EXPECT_TRUE(swt::enumerate_relative_perms(3, 0).empty());
}

TEST(RelPerms, CountsMatchBruteForce) {
  for (int s = 0; s <= 6; ++s)
    for (int n = 0; n <= s; ++n) {
      swt::IndexList p(s);
      std::iota(p.begin(), p.end(), 0);
      std::size_t count = 0;
      do {
        std::vector<bool> seen(s, false);
        std::vector<int> stack;
        for (int i = 0; i < n; ++i) stack.push_back(i);
        while (!stack.empty()) {
          const int v = stack.back();
          stack.pop_back();
          if (seen[v]) continue;
          seen[v] = true;
          stack.push_back(p[v]);
        }
        count += std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
      } while (std::next_permutation(p.begin(), p.end()));
      EXPECT_EQ(swt::enumerate_relative_perms(s, n).size(), count) << s << ' ' << n;
    }
}

TEST(RelPerms, CollapseExamples) {
  const auto id = swt::collapse_perm(RelPerm{3, 3, {0, 1, 2}});
  EXPECT_EQ(id.perm, (swt::IndexList{0, 1, 2}));
  EXPECT_EQ(id.return_times, (std::vector<int>{1, 1, 1}));
  const auto t = swt::collapse_perm(RelPerm{2, 1, {1, 0}});
  EXPECT_EQ(t.perm, (swt::IndexList{0}));
  EXPECT_EQ(t.return_times, (std::vector<int>{2}));
  EXPECT_THROW(swt::collapse_perm(RelPerm{2, 1, {0, 1}}), std::invalid_argument);
}

TEST(RelPerms, ReturnTimesSumToS) {
  for (int s = 0; s <= 6; ++s)
    for (int n = 0; n <= s; ++n)
      for (const auto& r : swt::enumerate_relative_perms(s, n)) {
        const auto c = swt::collapse_perm(r);
        EXPECT_EQ(std::accumulate(c.return_times.begin(), c.return_times.end(), 0), s);
      }
}

TEST(RelPerms, SignRelationWithSMinusN) {
  for (int s = 0; s <= 7; ++s)
    for (int n = 0; n <= s; ++n)
      for (const auto& r : swt::enumerate_relative_perms(s, n)) {
        const auto c = swt::collapse_perm(r);
        EXPECT_EQ(oracle::inversion_parity(r.perm), (oracle::inversion_parity(c.perm) + s - n) % 2);
      }
}

TEST(RelPerms, StatedSignRelationHasCounterexamples) {
  // sgn ρ = sgn ρ̃ + s fails already for the transposition in S_{2;1}.
  const RelPerm r{2, 1, {1, 0}};
  const auto c = swt::collapse_perm(r);
  EXPECT_NE(swt::permutation_parity(r.perm), (swt::permutation_parity(c.perm) + r.s) % 2);
}

TEST(MorseMatrix, Examples) {
  const auto id = swt::morse_differential_matrix(identity_presentation(1, 2), 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(id(i, j), swt::TruncSeries(4));
  EXPECT_EQ(swt::morse_differential_matrix(identity_presentation(2, 0), 3).size(), 0);
  // c_1 -> d_1, d_1 -> -c_1
  const Presentation rot{0, 1, IntMatrix{{0, -1}, {1, 0}}, ""};
  EXPECT_EQ(swt::morse_differential_matrix(rot, 3)(0, 0)[1], -1);
  EXPECT_EQ(swt::morse_differential_matrix(rot, 3)(0, 0)[0], 0);
}

TEST(MorseMatrix, EntriesArePairingsOfIterates) {
  const auto suite = swt::testing::random_suite(15, 79, {2, 2, 3, 8, 1});
  for (const auto& p : suite) {
    const auto mm = swt::morse_differential_matrix(p, 5);
    const auto md = p.model();
    IntMatrix ak = IntMatrix::identity(md.rank());
    for (int k = 1; k <= 5; ++k) {
      ak = ak * p.monodromy;
      for (int i = 0; i < p.N; ++i)
        for (int j = 0; j < p.N; ++j)
          EXPECT_EQ(mm(i, j)[k], Rational(swt::pairing(md, swt::CohClass{ak.column(md.c(i + 1))},
                                                       swt::CohClass::basis(md.rank(), md.c(j + 1)))));
    }
  }
}

TEST(TorsionRepresentative, Examples) {
  const auto suite = swt::testing::random_suite(5, 83, {2, 0, 2, 8, 0});
  for (const auto& p : suite) EXPECT_EQ(swt::torsion_representative(p, 4), swt::TruncSeries::one(4));
  for (int n = 1; n <= 2; ++n) EXPECT_EQ(swt::torsion_representative(identity_presentation(1, n), 5), swt::TruncSeries(5));
  EXPECT_EQ(swt::torsion_coefficient_direct(identity_presentation(1, 0), 0), 1);
  EXPECT_EQ(swt::torsion_coefficient_direct(identity_presentation(1, 0), 3), 0);
  const auto p = swt::testing::random_suite(1, 89, {1, 2, 3, 8, 2}).front();
  EXPECT_EQ(swt::torsion_coefficient_direct(p, 1), 0);
}

TEST(TorsionRepresentative, DirectSumAndOracleAgree) {
  const auto suite = swt::testing::random_suite(30, 97, {2, 2, 3, 8, 0});
  for (const auto& p : suite) {
    const auto rep = swt::torsion_representative(p, 6);
    oracle::Mat a(p.monodromy.rows(), std::vector<Integer>(p.monodromy.cols()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) a[i][j] = p.monodromy(i, j);
    const auto ref = oracle::torsion(a, p.g, p.N, 6);
    for (int k = 0; k <= 6; ++k) {
      EXPECT_EQ(rep[k], Rational(swt::torsion_coefficient_direct(p, k))) << p.name << " k=" << k;
      EXPECT_EQ(rep[k], ref[k]) << p.name << " k=" << k;
    }
  }
}

TEST(TorsionRepresentative, RejectsInvalidPresentations) {
  const Presentation bad{0, 1, IntMatrix{{2, 0}, {0, 1}}, ""};
  EXPECT_THROW(swt::torsion_representative(bad, 3), swt::InvalidPresentation);
  EXPECT_THROW(swt::torsion_coefficient_direct(bad, 0), swt::InvalidPresentation);
}
