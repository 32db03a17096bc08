#pragma once

// The grading algebra sl_n: canonical basis, weights in ε-coordinates, the
// root system A_{n-1}, the weight set Θ_n and the four matrix products.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetagr/linalg.hpp"

namespace thetagr {

/// Throws std::invalid_argument("n must be 3 or 4") unless n ∈ {3, 4}.
void require_rank(int n);

/// Labels of the simple modules with highest weight in Θ_n⁺.
enum class ThetaLabel { Adj, V, Vp, S, Sp, Lam, Lamp, T };

inline constexpr ThetaLabel kAllLabels[] = {ThetaLabel::Adj, ThetaLabel::V,   ThetaLabel::Vp,   ThetaLabel::S,
                                            ThetaLabel::Sp,  ThetaLabel::Lam, ThetaLabel::Lamp, ThetaLabel::T};

/// "adj", "V", "V'", "S", "S'", "Lam", "Lam'", "T".
std::string_view label_name(ThetaLabel l);
std::optional<ThetaLabel> parse_label(std::string_view s);

/// Integral weight of sl_n in ε-coordinates, modulo ε_1 + … + ε_n.
/// Stored with the minimum coordinate shifted to zero, so equality is
/// equality of representatives.
class Weight {
 public:
  Weight() = default;
  static Weight from_eps(std::vector<int> eps);
  /// From the values on the coroots H_1..H_{n-1}.
  static Weight from_h_values(const std::vector<int>& values);
  static Weight zero(int n) { return from_eps(std::vector<int>(n, 0)); }

  int n() const { return static_cast<int>(eps_.size()); }
  const std::vector<int>& eps() const { return eps_; }
  /// λ(H_i) for i = 1..n-1 (1-based).
  int h_value(int i) const { return eps_[i - 1] - eps_[i]; }
  std::vector<int> h_values() const;
  bool is_dominant() const;
  /// Σ_{i<j} (λ_i − λ_j): strictly increases along positive roots.
  int height() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;

  std::string to_string() const;  // e.g. "2e1+e2" style, in fundamental coords "[1,0,1]"

  auto operator<=>(const Weight&) const = default;

 private:
  std::vector<int> eps_;
};

/// Basis of sl_n (any n ≥ 2): off-diagonal E_ij in lexicographic order, then
/// H_i = E_ii − E_{i+1,i+1}.
class SlBasis {
 public:
  explicit SlBasis(int n);

  int n() const { return n_; }
  std::size_t dim() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& element(std::size_t k) const { return elements_[k]; }
  const std::string& name(std::size_t k) const { return names_[k]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// 1-based matrix indices, i ≠ j.
  std::size_t index_e(int i, int j) const;
  /// 1-based, i = 1..n-1.
  std::size_t index_h(int i) const { return static_cast<std::size_t>(n_ * (n_ - 1) + i - 1); }
  std::size_t raising(int i) const { return index_e(i, i + 1); }
  std::size_t lowering(int i) const { return index_e(i + 1, i); }

  /// Coordinates of a traceless n×n matrix in this basis.
  Vector coords(const Matrix& x) const;
  Matrix compose(const Vector& c) const;

 private:
  int n_;
  std::vector<Matrix> elements_;
  std::vector<std::string> names_;
};

/// Cached basis for sl_n.
const SlBasis& sl_basis(int n);

Matrix bracket(const Matrix& x, const Matrix& y);
/// x∘y = xy + yx − (2/n) tr(xy) I.
Matrix circ(const Matrix& x, const Matrix& y);
/// x◇y = xy + yx.
Matrix diamond(const Matrix& x, const Matrix& y);
/// (x|y) = (1/n) tr(xy).
Rational trace_form(const Matrix& x, const Matrix& y);

struct Root {
  Weight weight;
  int i = 0, j = 0;  // ε_i − ε_j, 1-based
  bool simple = false;
};

/// The n(n−1) roots ε_i − ε_j of A_{n−1}, lexicographic in (i, j).
std::vector<Root> root_system(int n);

/// All of Θ_n = {0, ±ε_i±ε_j, ±ε_i, ±2ε_i}.
std::vector<Weight> theta_weights(int n);
bool in_theta(const Weight& w);

/// Highest weight of a labelled module (ω-combinations from the label table).
Weight highest_weight(ThetaLabel l, int n);
/// Dimension of the simple module with this label.
std::size_t label_dim(ThetaLabel l, int n);
/// The label used for reporting: n=3 folds Λ→V′ and Λ′→V, n=4 folds Λ′→Λ.
ThetaLabel canonical_label(ThetaLabel l, int n);
/// Distinct canonical labels of Θ_n⁺ in reporting order.
std::vector<ThetaLabel> theta_plus_labels(int n);
std::optional<ThetaLabel> label_of_weight(const Weight& w);

}  // namespace thetagr
