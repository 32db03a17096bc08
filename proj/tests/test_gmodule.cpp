#include <gtest/gtest.h>

#include "thetagr/gmodule.hpp"

using namespace thetagr;

TEST(Catalog, Dimensions) {
  EXPECT_EQ(catalog(3, ThetaLabel::S).dim, 6u);
  EXPECT_EQ(catalog(3, ThetaLabel::Lam).dim, 3u);
  EXPECT_EQ(catalog(4, ThetaLabel::Lam).dim, 6u);
  EXPECT_EQ(catalog(3, ThetaLabel::Adj).dim, 8u);
  EXPECT_EQ(catalog(4, "S'").dim, 10u);
  EXPECT_THROW(catalog(3, "W"), std::invalid_argument);
  EXPECT_THROW(catalog(5, ThetaLabel::V), std::invalid_argument);
}

TEST(Catalog, SimpleActions) {
  auto v = catalog(3, ThetaLabel::V);
  const auto& b = sl_basis(3);
  EXPECT_EQ((v.action(b.index_h(1)) * Vector{1, 0, 0}), (Vector{1, 0, 0}));
  auto t = catalog(4, ThetaLabel::T);
  for (const auto& a : t.actions) EXPECT_TRUE(a.is_zero());
}

TEST(Catalog, AllAreRepresentations) {
  for (int n : {3, 4})
    for (auto l : kAllLabels) {
      auto m = catalog(n, l);
      EXPECT_TRUE(m.is_representation()) << label_name(l) << " n=" << n;
      EXPECT_TRUE(m.has_weight_basis());
      EXPECT_EQ(m.dim, label_dim(l, n));
    }
}

TEST(Weights, DecomposeV4) {
  auto wd = weight_decompose(catalog(4, ThetaLabel::V));
  EXPECT_EQ(wd.spaces.size(), 4u);
  for (const auto& [w, sp] : wd.spaces) EXPECT_EQ(sp.dim(), 1u);
  EXPECT_EQ(wd.total_dim, 4u);
}

TEST(Weights, AdjointZeroSpace) {
  auto wd = weight_decompose(catalog(3, ThetaLabel::Adj));
  EXPECT_EQ(wd.spaces.size(), 7u);
  EXPECT_EQ(wd.spaces.at(Weight::zero(3)).dim(), 2u);
}

TEST(Weights, SymmetricSquare) {
  auto wd = weight_decompose(catalog(3, ThetaLabel::S));
  EXPECT_EQ(wd.spaces.size(), 6u);
  EXPECT_TRUE(wd.spaces.count(Weight::from_eps({2, 0, 0})));
}

TEST(Weights, NonWeightBasisFallsBackToEigenvalues) {
  auto v = catalog(3, ThetaLabel::V);
  Matrix p{{1, 1, 0}, {0, 1, 1}, {1, 0, 2}};
  auto w = change_basis(v, p);
  EXPECT_FALSE(w.has_weight_basis());
  EXPECT_TRUE(w.is_representation());
  auto wd = weight_decompose(w);
  EXPECT_EQ(wd.spaces.size(), 3u);
  EXPECT_EQ(wd.total_dim, 3u);
}

TEST(HighestWeight, Vectors) {
  auto hv = highest_weight_vectors(catalog(3, ThetaLabel::V), Weight::from_eps({1, 0, 0}));
  EXPECT_EQ(hv, Subspace::span(3, {{1, 0, 0}}));

  const auto& lam = model(4, ThetaLabel::Lam);
  auto hl = highest_weight_vectors(catalog(4, ThetaLabel::Lam), Weight::from_eps({1, 1, 0, 0}));
  ASSERT_EQ(hl.dim(), 1u);
  EXPECT_EQ(hl, Subspace::span(6, {lam.coords(Matrix::unit(4, 0, 1) - Matrix::unit(4, 1, 0))}));

  const auto& s = model(3, ThetaLabel::S);
  auto hs = highest_weight_vectors(catalog(3, ThetaLabel::S), Weight::from_eps({2, 0, 0}));
  EXPECT_EQ(hs, Subspace::span(6, {s.coords(Matrix::unit(3, 0, 0))}));
}

TEST(Isotypic, DoubleV) {
  auto v = catalog(3, ThetaLabel::V);
  auto d = isotypic_decompose(direct_sum(v, v));
  EXPECT_EQ(d.multiplicity(ThetaLabel::V, 3), 2u);
  EXPECT_EQ(d.parts.size(), 1u);
  EXPECT_EQ(d.remainder.dim(), 0u);
}

TEST(Isotypic, MixedSumInOtherBasis) {
  auto m = direct_sum(direct_sum(catalog(4, ThetaLabel::Adj), catalog(4, ThetaLabel::Lamp)), catalog(4, ThetaLabel::T));
  auto d = isotypic_decompose(m);
  EXPECT_EQ(d.multiplicity(ThetaLabel::Adj, 4), 1u);
  EXPECT_EQ(d.multiplicity(ThetaLabel::Lam, 4), 1u);
  EXPECT_EQ(d.multiplicity(ThetaLabel::T, 4), 1u);
  std::size_t total = 0;
  for (const auto& [w, p] : d.parts) total += p.component.dim();
  EXPECT_EQ(total, m.dim);
}

TEST(Isotypic, OutsideThetaThrows) {
  // S ⊗ V has a constituent of highest weight 3ε₁.
  auto s = catalog(3, ThetaLabel::S), v = catalog(3, ThetaLabel::V);
  std::vector<Matrix> acts;
  for (std::size_t k = 0; k < s.actions.size(); ++k)
    acts.push_back(kron(s.action(k), Matrix::identity(3)) + kron(Matrix::identity(6), v.action(k)));
  EXPECT_THROW(isotypic_decompose(make_module(3, acts)), NonThetaConstituent);
}

TEST(Equivariant, SchurOnCatalog) {
  for (int n : {3, 4})
    for (auto a : theta_plus_labels(n))
      for (auto b : theta_plus_labels(n)) {
        auto maps = equivariant_maps(catalog(n, a), catalog(n, b));
        EXPECT_EQ(maps.size(), a == b ? 1u : 0u) << label_name(a) << "->" << label_name(b) << " n=" << n;
      }
}

TEST(Identification, Properties) {
  auto f4 = identification(4, "f");
  EXPECT_TRUE(is_equivariant(f4.iso, catalog(4, f4.source), catalog(4, f4.target)));
  EXPECT_NO_THROW(inverse(f4.iso));
  const auto& lp = model(4, ThetaLabel::Lamp);
  const auto& l = model(4, ThetaLabel::Lam);
  EXPECT_EQ(f4.iso * lp.coords(Matrix::unit(4, 2, 3) - Matrix::unit(4, 3, 2)),
            l.coords(Matrix::unit(4, 0, 1) - Matrix::unit(4, 1, 0)));

  auto f3 = identification(3, "f");
  auto g3 = identification(3, "g");
  EXPECT_EQ(f3.target, ThetaLabel::V);
  EXPECT_EQ(g3.target, ThetaLabel::Vp);
  EXPECT_TRUE(is_equivariant(g3.iso, catalog(3, ThetaLabel::Lam), catalog(3, ThetaLabel::Vp)));
  EXPECT_EQ(g3.iso * model(3, ThetaLabel::Lam).coords(Matrix::unit(3, 0, 1) - Matrix::unit(3, 1, 0)), (Vector{0, 0, 1}));
  EXPECT_EQ(f3.iso * model(3, ThetaLabel::Lamp).coords(Matrix::unit(3, 1, 2) - Matrix::unit(3, 2, 1)), (Vector{1, 0, 0}));
  EXPECT_THROW(identification(4, "g"), std::invalid_argument);
}
