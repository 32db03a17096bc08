#include <gtest/gtest.h>

#include "thetagr/graded.hpp"

using namespace thetagr;

namespace {

// A = span{1}: the algebra is sl_n itself.
CoordinateData trivial_data(int n, std::map<Space, std::size_t> dims = {{Space::A, 1}}) {
  auto d = CoordinateData::zero(n, dims);
  d.one = Vector{1};
  d.products.at({Space::A, Space::A, Space::A, ProductKind::Circ})(0, 0) = 2;
  return d;
}

// n = 3 with one copy each of S and S′, forced by the action of 1.
CoordinateData with_s_copies() {
  auto d = trivial_data(3, {{Space::A, 1}, {Space::C, 1}, {Space::Cp, 1}});
  d.products.at({Space::A, Space::C, Space::C, ProductKind::Plain})(0, 0) = 2;
  d.products.at({Space::Cp, Space::A, Space::Cp, ProductKind::Plain})(0, 0) = 2;
  return d;
}

}  // namespace

TEST(Assemble, TrivialDataIsSl) {
  for (int n : {3, 4}) {
    auto l = assemble(trivial_data(n));
    const auto& b = sl_basis(n);
    ASSERT_EQ(l.dim(), b.dim());
    auto imgs = l.sl_images();
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) {
        Vector expect = b.coords(bracket(b.element(i), b.element(j)));
        EXPECT_EQ(l.sc.bracket(imgs[i], imgs[j]), expect);
      }
  }
}

TEST(Assemble, MissingProductThrows) {
  auto d = trivial_data(4);
  d.products.erase({Space::A, Space::A, Space::D, ProductKind::Plain});
  EXPECT_THROW(assemble(d), MissingProduct);
  auto bad = trivial_data(4);
  bad.products.at({Space::A, Space::A, Space::A, ProductKind::Circ}) = Matrix(2, 2);
  EXPECT_THROW(assemble(bad), DimensionError);
}

TEST(Assemble, ActionOfOneIsModuleAction) {
  auto l = assemble(with_s_copies());
  const auto& s = model(3, ThetaLabel::S);
  const auto& b = sl_basis(3);
  const auto imgs = l.sl_images();
  for (std::size_t k = 0; k < b.dim(); ++k)
    for (std::size_t m = 0; m < s.dim(); ++m) {
      Vector u(l.dim());
      u[l.index(Space::C, m, 0)] = 1;
      Vector got = l.sc.bracket(imgs[k], u);
      Vector c = s.coords(s.act(b.element(k), s.element(m)));
      Vector expect(l.dim());
      for (std::size_t t = 0; t < c.size(); ++t) expect[l.index(Space::C, t, 0)] = c[t];
      EXPECT_EQ(got, expect);
    }
}

TEST(Jacobi, TrivialSl4Full) {
  auto rep = check_jacobi(assemble(trivial_data(4)).sc, JacobiMode::Full);
  EXPECT_EQ(rep.triples, 455u);
  EXPECT_TRUE(rep.pass());
}

TEST(Jacobi, SampledIsSeeded) {
  auto sc = assemble(with_s_copies()).sc;
  auto a = check_jacobi(sc, JacobiMode::Sampled, 300, 7);
  auto b = check_jacobi(sc, JacobiMode::Sampled, 300, 7);
  EXPECT_EQ(a.triples, 300u);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.seed, 7u);
}

TEST(Jacobi, DetectsBrokenBracket) {
  auto sc = assemble(trivial_data(3)).sc;
  auto& row = sc.table[0 * sc.dim + 2];
  ASSERT_FALSE(row.empty());
  for (auto& [t, v] : row) v = -v;
  auto& back = sc.table[2 * sc.dim + 0];
  for (auto& [t, v] : back) v = -v;
  auto rep = check_jacobi(sc, JacobiMode::Full);
  EXPECT_TRUE(rep.antisymmetric);
  EXPECT_GT(rep.violations, 0u);
  EXPECT_TRUE(rep.witness.has_value());
}

TEST(Grading, TrivialPassesAndCentralTrivialFails) {
  for (int n : {3, 4}) {
    auto rep = check_grading(assemble(trivial_data(n)));
    EXPECT_TRUE(rep.pass()) << rep.detail;
    EXPECT_EQ(rep.zero_dim, static_cast<std::size_t>(n - 1));
  }
  // An extra central trivial summand is not reached by [L_a, L_-a].
  auto rep = check_grading(assemble(trivial_data(4, {{Space::A, 1}, {Space::D, 1}})));
  EXPECT_TRUE(rep.gamma1);
  EXPECT_TRUE(rep.gamma2);
  EXPECT_FALSE(rep.gamma3);
}

TEST(ConditionS, HoldsVacuouslyAndDetectsViolation) {
  EXPECT_TRUE(check_condition_S(assemble(trivial_data(3))).holds);
  auto d = with_s_copies();
  EXPECT_TRUE(check_condition_S(assemble(d)).holds);
  d.products[{Space::C, Space::C, Space::Cp, ProductKind::Plain}] = Matrix{{1}};
  auto rep = check_condition_S(assemble(d));
  EXPECT_FALSE(rep.holds);
  ASSERT_TRUE(rep.witness.has_value());
}

TEST(StructureConstants, FromMatricesMatchesSl) {
  const auto& b = sl_basis(3);
  auto sc = structure_from_matrices(b.elements());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vector e(b.dim());
      axpy(e, 1, sc.at(i, j));
      EXPECT_EQ(e, b.coords(bracket(b.element(i), b.element(j))));
    }
}
