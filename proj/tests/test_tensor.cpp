#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "thetagr/tensor.hpp"

using namespace thetagr;

namespace {

using Eps = std::vector<int>;

Eps normalize(Eps e) {
  const int last = e.back();
  for (auto& x : e) x -= last;
  return e;
}

Eps unit_eps(int n, int i, int c = 1) {
  Eps e(n, 0);
  e[i] += c;
  return e;
}

// Weights of each catalog module written out from the matrix descriptions.
std::vector<Eps> oracle_weights(ThetaLabel l, int n) {
  std::vector<Eps> w;
  const int sg = (l == ThetaLabel::Vp || l == ThetaLabel::Sp || l == ThetaLabel::Lamp) ? -1 : 1;
  switch (l) {
    case ThetaLabel::Adj:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Eps e(n, 0);
          e[i] += 1;
          e[j] -= 1;
          w.push_back(e);
        }
      w.pop_back();  // n diagonal units minus the trace
      break;
    case ThetaLabel::V:
    case ThetaLabel::Vp:
      for (int i = 0; i < n; ++i) w.push_back(unit_eps(n, i, sg));
      break;
    case ThetaLabel::S:
    case ThetaLabel::Sp:
    case ThetaLabel::Lam:
    case ThetaLabel::Lamp: {
      const int off = (l == ThetaLabel::S || l == ThetaLabel::Sp) ? 0 : 1;
      for (int i = 0; i < n; ++i)
        for (int j = i + off; j < n; ++j) {
          Eps e(n, 0);
          e[i] += sg;
          e[j] += sg;
          w.push_back(e);
        }
      break;
    }
    case ThetaLabel::T:
      w.push_back(Eps(n, 0));
      break;
  }
  return w;
}

Eps hw_eps(ThetaLabel l, int n) {
  // Dominant representatives: a₁ ≥ … ≥ aₙ.
  auto ws = oracle_weights(l, n);
  for (auto& e : ws) e = normalize(e);
  return *std::max_element(ws.begin(), ws.end());
}

// Brauer–Klimyk style alternating sum over S_n of the character of X⊗Y.
std::size_t weyl_multiplicity(ThetaLabel x, ThetaLabel y, ThetaLabel target, int n) {
  std::map<Eps, long> ch;
  for (const auto& a : oracle_weights(x, n))
    for (const auto& b : oracle_weights(y, n)) {
      Eps s(n);
      for (int i = 0; i < n; ++i) s[i] = a[i] + b[i];
      ++ch[normalize(s)];
    }
  Eps lam = hw_eps(target, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long total = 0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    Eps mu(n);
    // λ + ρ − w(ρ) with ρ = (n−1, …, 0)
    for (int i = 0; i < n; ++i) mu[i] = lam[i] + (n - 1 - i) - (n - 1 - perm[i]);
    auto it = ch.find(normalize(mu));
    if (it != ch.end()) total += (inv % 2 ? -1 : 1) * it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::size_t>(total);
}

}  // namespace

TEST(Tensor, Basics) {
  auto v = catalog(3, ThetaLabel::V);
  auto vt = tensor(v, catalog(3, ThetaLabel::T));
  EXPECT_EQ(vt.dim, 3u);
  EXPECT_EQ(vt.actions, v.actions);
  EXPECT_EQ(tensor(catalog(4, ThetaLabel::S), catalog(4, ThetaLabel::Sp)).dim, 100u);
  EXPECT_TRUE(tensor(catalog(3, ThetaLabel::Adj), catalog(3, ThetaLabel::V)).is_representation());
  EXPECT_THROW(tensor(v, catalog(4, ThetaLabel::V)), std::invalid_argument);
}

TEST(ThetaComponent, Examples) {
  auto gg = theta_component(ThetaLabel::Adj, ThetaLabel::Adj, 3);
  EXPECT_EQ(gg.count(ThetaLabel::Adj), 2u);
  EXPECT_EQ(gg.count(ThetaLabel::T), 1u);
  EXPECT_EQ(gg.mult.size(), 2u);
  EXPECT_EQ(gg.remainder_dim, 47u);  // 27 + 10 + 10̄

  auto ss = theta_component(ThetaLabel::S, ThetaLabel::S, 4);
  EXPECT_TRUE(ss.mult.empty());
  EXPECT_EQ(ss.remainder_dim, 100u);

  auto ssp = theta_component(ThetaLabel::S, ThetaLabel::Sp, 4);
  EXPECT_EQ(ssp.to_string(4), "g+T");
  EXPECT_EQ(ssp.remainder_dim, 84u);
}

TEST(ThetaComponent, AgreesWithWeylOracle) {
  for (int n : {3, 4})
    for (auto x : kAllLabels)
      for (auto y : kAllLabels) {
        if (x > y) continue;
        auto c = theta_component(x, y, n);
        EXPECT_EQ(c.total_dim(n), label_dim(x, n) * label_dim(y, n));
        for (auto t : theta_plus_labels(n))
          EXPECT_EQ(c.count(t), weyl_multiplicity(x, y, t, n))
              << label_name(x) << "*" << label_name(y) << " -> " << label_name(t) << " n=" << n;
      }
}

TEST(ThetaComponent, SymmetricAndLabelSwapInvariant) {
  for (auto x : kAllLabels)
    for (auto y : kAllLabels) {
      EXPECT_EQ(theta_component(x, y, 3), theta_component(y, x, 3));
      EXPECT_EQ(theta_component(canonical_label(x, 3), canonical_label(y, 3), 3), theta_component(x, y, 3));
    }
}

TEST(Tables, GoldenDataIsSymmetric) {
  for (int n : {3, 4})
    for (auto r : table_labels(n))
      for (auto c : table_labels(n)) EXPECT_EQ(golden_cell(n, r, c), golden_cell(n, c, r));
}

TEST(Tables, VerifyAllCells) {
  auto r3 = verify_tables(3);
  EXPECT_EQ(r3.cells.size(), 25u);
  auto r4 = verify_tables(4);
  EXPECT_EQ(r4.cells.size(), 36u);
  for (const auto* rep : {&r3, &r4})
    for (const auto& c : rep->cells)
      EXPECT_TRUE(c.pass) << label_name(c.row) << "*" << label_name(c.col) << " expected " << c.expected.to_string(rep->n)
                          << " got " << c.computed.to_string(rep->n);
}

TEST(Tables, ParseSum) {
  EXPECT_EQ(parse_theta_sum("S+Lam", 3).count(ThetaLabel::Vp), 1u);
  EXPECT_EQ(parse_theta_sum("Lam'", 4).count(ThetaLabel::Lam), 1u);
  EXPECT_TRUE(parse_theta_sum("0", 4).mult.empty());
  EXPECT_THROW(parse_theta_sum("S+W", 4), std::invalid_argument);
}
