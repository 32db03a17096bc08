#include <gtest/gtest.h>

#include <random>

#include "thetagr/linalg.hpp"

using namespace thetagr;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int spread = 3) {
  std::uniform_int_distribution<int> num(-spread, spread), den(1, 3), zero(0, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (zero(rng) == 0) continue;
      Rational q(num(rng), den(rng));
      q.canonicalize();
      m(i, j) = q;
    }
  return m;
}

}  // namespace

TEST(Rational, StringRoundTrip) {
  EXPECT_EQ(to_string(Rational(3, 1)), "3");
  EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("2/-3"), std::invalid_argument);
}

TEST(Rref, IdentityAndZero) {
  auto r = rref(Matrix::identity(3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.form, Matrix::identity(3));
  auto z = rref(Matrix::zero(2, 4));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.form, Matrix::zero(2, 4));
}

TEST(Rref, RankOne) {
  auto r = rref(Matrix{{1, 2}, {2, 4}});
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.form, (Matrix{{1, 2}, {0, 0}}));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Matrix::identity(4)).dim(), 0u);
  EXPECT_EQ(kernel(Matrix::zero(3, 3)), Subspace::full(3));
  auto k = kernel(Matrix{{1, 1, 0}});
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_TRUE(k.contains(Vector{1, -1, 0}));
  EXPECT_FALSE(k.contains(Vector{1, 0, 0}));
}

TEST(SolveSpan, Examples) {
  const Matrix id = Matrix::identity(2);
  auto c = solve_span(std::vector<Matrix>{id}, id * Rational(2));
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], 2);

  EXPECT_FALSE(solve_span(std::vector<Matrix>{Matrix::unit(2, 0, 1)}, Matrix::unit(2, 1, 0)));

  const Matrix e12 = Matrix::unit(2, 0, 1), e21 = Matrix::unit(2, 1, 0);
  auto d = solve_span(std::vector<Matrix>{e12 + e21, e12 - e21}, e12);
  ASSERT_TRUE(d);
  EXPECT_EQ((*d)[0], Rational(1, 2));
  EXPECT_EQ((*d)[1], Rational(1, 2));
}

TEST(SolveSpan, ShapeMismatchThrows) {
  EXPECT_THROW(solve_span(std::vector<Matrix>{Matrix::identity(2)}, Matrix::identity(3)), DimensionError);
  EXPECT_THROW(Matrix::identity(2) * Matrix::identity(3), DimensionError);
}

TEST(Subspace, EqualityIsCanonical) {
  auto a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  auto b = Subspace::span(3, {{1, 2, 1}, {2, 1, -1}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(Vector{1, 0, -1}));
  EXPECT_EQ((a + Subspace::span(3, {{0, 0, 1}})).dim(), 3u);
}

TEST(Inverse, RoundTripAndSingular) {
  Matrix m{{2, 1}, {1, 1}};
  EXPECT_EQ(m * inverse(m), Matrix::identity(2));
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), DimensionError);
}

// rref idempotent, kernel vectors annihilated, rank + nullity = cols.
TEST(LinalgProperties, RandomMatrices) {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> sz(1, 6);
    const std::size_t r = sz(rng), c = sz(rng);
    Matrix m = random_matrix(rng, r, c);
    auto red = rref(m);
    EXPECT_EQ(rref(red.form).form, red.form);
    auto k = kernel(m);
    EXPECT_EQ(red.rank + k.dim(), c);
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(SparseEchelon, AgreesWithDenseKernel) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> sz(1, 7);
    const std::size_t r = sz(rng), c = sz(rng);
    Matrix m = random_matrix(rng, r, c, 2);
    SparseEchelon ech(c);
    for (std::size_t i = 0; i < r; ++i) {
      SparseRow row;
      for (std::size_t j = 0; j < c; ++j)
        if (sgn(m(i, j)) != 0) row.emplace_back(static_cast<std::uint32_t>(j), m(i, j));
      ech.add(row);
    }
    auto dense = kernel(m);
    EXPECT_EQ(ech.rank(), rref(m).rank);
    EXPECT_EQ(Subspace::span(c, ech.null_space()), dense);
    EXPECT_EQ(Matrix::from_rows(ech.null_space(), c), dense.basis());
  }
}
