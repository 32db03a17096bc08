#include <gtest/gtest.h>

#include "thetagr/hom.hpp"

using namespace thetagr;

TEST(HomSpace, Examples) {
  EXPECT_EQ(hom_space(ThetaLabel::Adj, ThetaLabel::Adj, ThetaLabel::Adj, 3).dim(), 2u);
  EXPECT_EQ(hom_space(ThetaLabel::V, ThetaLabel::V, ThetaLabel::S, 4).dim(), 1u);
  for (auto z : theta_plus_labels(4)) EXPECT_EQ(hom_space(ThetaLabel::S, ThetaLabel::S, z, 4).dim(), 0u);
  auto h = hom_space(ThetaLabel::Adj, ThetaLabel::V, ThetaLabel::V, 3);
  for (const auto& phi : h.basis) EXPECT_TRUE(is_equivariant(phi, h.source, h.target));
}

TEST(Formulas, TraceFormIsNonzeroRow) {
  for (const auto& e : paper_hom_entries(4))
    if (e.x == ThetaLabel::Adj && e.y == ThetaLabel::Adj && e.z == ThetaLabel::T) {
      Matrix m = realize_formula(e);
      EXPECT_EQ(m.rows(), 1u);
      EXPECT_EQ(m.cols(), 225u);
      EXPECT_FALSE(m.is_zero());
    }
}

TEST(Formulas, SkewFormulaVanishesOnDiagonal) {
  for (const auto& e : paper_hom_entries(4))
    if (e.x == ThetaLabel::V && e.y == ThetaLabel::V && e.z == ThetaLabel::Lam) {
      const auto& v = model(4, ThetaLabel::V);
      for (const auto& u : v.basis()) EXPECT_TRUE(e.formulas[0].apply(u, u).is_zero());
      Matrix w = v.element(0) + v.element(2);
      EXPECT_TRUE(e.formulas[0].apply(w, w).is_zero());
    }
}

TEST(Formulas, SLamPrimeIsTraceless) {
  const auto& s = model(3, ThetaLabel::S);
  const auto& lp = model(3, ThetaLabel::Lamp);
  for (const auto& a : s.basis())
    for (const auto& b : lp.basis()) EXPECT_EQ((a * b).trace(), 0);
}

TEST(PaperHoms, AllEntriesVerify) {
  for (int n : {3, 4}) {
    auto rep = verify_paper_homs(n);
    EXPECT_EQ(rep.checks.size(), n == 3 ? 22u : 28u);
    for (const auto& c : rep.checks)
      EXPECT_TRUE(c.pass()) << "n=" << n << " " << hom_name(*c.entry) << " eq=" << c.equivariant << " nz=" << c.nonzero
                            << " span=" << c.in_span << " dim=" << c.dim_computed << "/" << c.dim_expected;
  }
}

TEST(PaperHoms, AdjointPairIsIndependent) {
  const auto& e = paper_hom_entries(4).front();
  ASSERT_EQ(e.formulas.size(), 2u);
  EXPECT_EQ(Subspace::span(225 * 15, {realize_formula(e, 0).flat(), realize_formula(e, 1).flat()}).dim(), 2u);
}

// Schur consistency against the tensor tables.
TEST(HomSpace, MatchesThetaMultiplicity) {
  for (int n : {3, 4})
    for (auto x : kAllLabels)
      for (auto y : kAllLabels) {
        auto tc = theta_component(x, y, n);
        for (auto z : theta_plus_labels(n))
          EXPECT_EQ(hom_space(x, y, z, n).dim(), tc.count(z))
              << label_name(x) << "*" << label_name(y) << "->" << label_name(z) << " n=" << n;
      }
}
