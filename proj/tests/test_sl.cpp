#include <gtest/gtest.h>

#include <set>

#include "thetagr/sl.hpp"

using namespace thetagr;

namespace {

Matrix H(int n, int i) { return sl_basis(n).element(sl_basis(n).index_h(i)); }
Matrix E(int n, int i, int j) { return Matrix::unit(n, i - 1, j - 1); }

}  // namespace

TEST(SlBasis, OrderingAndTraceless) {
  const auto& b = sl_basis(3);
  ASSERT_EQ(b.dim(), 8u);
  EXPECT_EQ(b.name(0), "E_1_2");
  EXPECT_EQ(b.name(1), "E_1_3");
  EXPECT_EQ(b.name(2), "E_2_1");
  EXPECT_EQ(b.name(6), "H_1");
  EXPECT_EQ(b.index_e(3, 2), 5u);
  for (const auto& x : b.elements()) EXPECT_EQ(x.trace(), 0);
  for (std::size_t k = 0; k < b.dim(); ++k) {
    Vector c = b.coords(b.element(k));
    for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], j == k ? 1 : 0);
  }
  EXPECT_THROW(b.coords(Matrix::identity(3)), std::invalid_argument);
}

TEST(Products, Examples) {
  EXPECT_EQ(bracket(E(3, 1, 2), E(3, 2, 1)), H(3, 1));
  EXPECT_TRUE(bracket(H(4, 2), H(4, 2)).is_zero());
  EXPECT_EQ(bracket(H(3, 1), E(3, 1, 2)), E(3, 1, 2) * Rational(2));
  EXPECT_EQ(diamond(E(3, 1, 2), E(3, 2, 1)), E(3, 1, 1) + E(3, 2, 2));
  EXPECT_EQ(trace_form(H(3, 1), H(3, 1)), Rational(2, 3));
  EXPECT_THROW(bracket(Matrix::identity(3), Matrix::identity(4)), DimensionError);
}

TEST(Products, CircIsTracelessAndMatchesDiamond) {
  for (int n : {3, 4}) {
    const auto& b = sl_basis(n);
    for (const auto& x : b.elements())
      for (const auto& y : b.elements()) {
        Matrix c = circ(x, y);
        EXPECT_EQ(c.trace(), 0);
        EXPECT_EQ(c, diamond(x, y) - Matrix::identity(n) * (2 * trace_form(x, y)));
      }
  }
}

TEST(Products, JacobiAndInvariance) {
  for (int n : {3, 4}) {
    const auto& b = sl_basis(n);
    const auto& el = b.elements();
    for (const auto& x : el)
      for (const auto& y : el) {
        EXPECT_EQ(trace_form(x, y), trace_form(y, x));
        for (const auto& z : el) {
          EXPECT_EQ(trace_form(bracket(x, y), z) + trace_form(y, bracket(x, z)), 0);
          if (n == 3)
            EXPECT_TRUE((bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero());
        }
      }
  }
}

TEST(Roots, CountsAndEvaluation) {
  EXPECT_EQ(root_system(3).size(), 6u);
  EXPECT_EQ(root_system(4).size(), 12u);
  const auto roots = root_system(4);
  EXPECT_EQ(roots.front().weight.h_values(), (std::vector<int>{2, -1, 0}));
  int simple = 0;
  for (const auto& r : roots) simple += r.simple;
  EXPECT_EQ(simple, 3);
}

TEST(Weights, CanonicalRepresentative) {
  auto a = Weight::from_eps({1, 0, 0, 0});
  auto b = Weight::from_eps({2, 1, 1, 1});
  EXPECT_EQ(a, b);
  EXPECT_EQ(Weight::from_eps({0, 0, 0, -1}), Weight::from_h_values({0, 0, 1}));
  EXPECT_EQ((a + (-a)), Weight::zero(4));
}

TEST(Theta, ClosedUnderNegationContainsRoots) {
  for (int n : {3, 4}) {
    auto th = theta_weights(n);
    std::set<Weight> s(th.begin(), th.end());
    EXPECT_TRUE(s.count(Weight::zero(n)));
    for (const auto& w : th) EXPECT_TRUE(s.count(-w));
    for (const auto& r : root_system(n)) EXPECT_TRUE(s.count(r.weight));
  }
}

TEST(Theta, DominantLabels) {
  // n = 4: seven labels, Λ and Λ′ share ω₂.
  EXPECT_EQ(highest_weight(ThetaLabel::Lam, 4), highest_weight(ThetaLabel::Lamp, 4));
  EXPECT_EQ(theta_plus_labels(4).size(), 7u);
  // n = 3: Λ ≡ V′ and Λ′ ≡ V.
  EXPECT_EQ(highest_weight(ThetaLabel::Lam, 3), highest_weight(ThetaLabel::Vp, 3));
  EXPECT_EQ(highest_weight(ThetaLabel::Lamp, 3), highest_weight(ThetaLabel::V, 3));
  EXPECT_EQ(theta_plus_labels(3).size(), 6u);
  for (int n : {3, 4})
    for (auto l : theta_plus_labels(n)) {
      EXPECT_TRUE(highest_weight(l, n).is_dominant());
      EXPECT_TRUE(in_theta(highest_weight(l, n)));
    }
  EXPECT_EQ(highest_weight(ThetaLabel::Adj, 4), Weight::from_eps({1, 0, 0, -1}));
  EXPECT_EQ(label_name(ThetaLabel::Lamp), "Lam'");
  EXPECT_EQ(parse_label("S'"), ThetaLabel::Sp);
  EXPECT_FALSE(parse_label("W"));
  EXPECT_THROW(require_rank(5), std::invalid_argument);
}
