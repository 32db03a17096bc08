#include "thetagr/sl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace thetagr {

void require_rank(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("n must be 3 or 4");
}

std::string_view label_name(ThetaLabel l) {
  switch (l) {
    case ThetaLabel::Adj: return "adj";
    case ThetaLabel::V: return "V";
    case ThetaLabel::Vp: return "V'";
    case ThetaLabel::S: return "S";
    case ThetaLabel::Sp: return "S'";
    case ThetaLabel::Lam: return "Lam";
    case ThetaLabel::Lamp: return "Lam'";
    case ThetaLabel::T: return "T";
  }
  return "?";
}

std::optional<ThetaLabel> parse_label(std::string_view s) {
  for (auto l : kAllLabels)
    if (label_name(l) == s) return l;
  if (s == "g") return ThetaLabel::Adj;
  return std::nullopt;
}

// --- Weight -----------------------------------------------------------------

Weight Weight::from_eps(std::vector<int> eps) {
  Weight w;
  if (!eps.empty()) {
    const int m = *std::min_element(eps.begin(), eps.end());
    for (auto& e : eps) e -= m;
  }
  w.eps_ = std::move(eps);
  return w;
}

Weight Weight::from_h_values(const std::vector<int>& values) {
  std::vector<int> eps(values.size() + 1, 0);
  for (int i = static_cast<int>(values.size()) - 1; i >= 0; --i) eps[i] = eps[i + 1] + values[i];
  return from_eps(std::move(eps));
}

std::vector<int> Weight::h_values() const {
  std::vector<int> v;
  for (int i = 1; i < n(); ++i) v.push_back(h_value(i));
  return v;
}

bool Weight::is_dominant() const {
  for (int i = 1; i < n(); ++i)
    if (h_value(i) < 0) return false;
  return true;
}

int Weight::height() const {
  int h = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j) h += eps_[i] - eps_[j];
  return h;
}

Weight Weight::operator+(const Weight& o) const {
  if (n() != o.n()) throw DimensionError("weight rank mismatch");
  std::vector<int> e(eps_);
  for (int i = 0; i < n(); ++i) e[i] += o.eps_[i];
  return from_eps(std::move(e));
}

Weight Weight::operator-() const {
  std::vector<int> e(eps_);
  for (auto& x : e) x = -x;
  return from_eps(std::move(e));
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

std::string Weight::to_string() const {
  std::string s = "[";
  for (int i = 1; i < n(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(h_value(i));
  }
  return s + "]";
}

// --- SlBasis ----------------------------------------------------------------

SlBasis::SlBasis(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      elements_.push_back(Matrix::unit(n, i - 1, j - 1));
      names_.push_back("E_" + std::to_string(i) + "_" + std::to_string(j));
    }
  for (int i = 1; i < n; ++i) {
    Matrix h(n, n);
    h(i - 1, i - 1) = 1;
    h(i, i) = -1;
    elements_.push_back(std::move(h));
    names_.push_back("H_" + std::to_string(i));
  }
}

std::optional<std::size_t> SlBasis::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return k;
  return std::nullopt;
}

std::size_t SlBasis::index_e(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("E_ij index");
  // Row i contributes n-1 entries; skip the diagonal.
  return static_cast<std::size_t>((i - 1) * (n_ - 1) + (j < i ? j - 1 : j - 2));
}

Vector SlBasis::coords(const Matrix& x) const {
  if (x.rows() != static_cast<std::size_t>(n_) || !x.is_square()) throw DimensionError("sl_n coords: shape");
  if (sgn(x.trace()) != 0) throw std::invalid_argument("sl_n coords: matrix is not traceless");
  Vector c(dim());
  std::size_t k = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j) c[k++] = x(i, j);
  // diag(d) = Σ h_i H_i  ⇒  h_1 = d_1, h_i = h_{i-1} + d_i.
  Rational acc;
  for (int i = 0; i + 1 < n_; ++i) {
    acc += x(i, i);
    c[k++] = acc;
  }
  return c;
}

Matrix SlBasis::compose(const Vector& c) const {
  if (c.size() != dim()) throw DimensionError("sl_n compose: length");
  Matrix m(n_, n_);
  for (std::size_t k = 0; k < dim(); ++k)
    if (sgn(c[k]) != 0) m += elements_[k] * c[k];
  return m;
}

const SlBasis& sl_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SlBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SlBasis>(n);
  return *slot;
}

// --- products ---------------------------------------------------------------

Matrix bracket(const Matrix& x, const Matrix& y) {
  if (!x.is_square() || x.rows() != y.rows() || !y.is_square()) throw DimensionError("bracket: shape mismatch");
  return x * y - y * x;
}

Matrix diamond(const Matrix& x, const Matrix& y) {
  if (!x.is_square() || x.rows() != y.rows() || !y.is_square()) throw DimensionError("diamond: shape mismatch");
  return x * y + y * x;
}

Rational trace_form(const Matrix& x, const Matrix& y) {
  if (!x.is_square() || x.rows() != y.rows() || !y.is_square()) throw DimensionError("trace form: shape mismatch");
  Rational t = (x * y).trace();
  return t / static_cast<long>(x.rows());
}

Matrix circ(const Matrix& x, const Matrix& y) {
  Matrix d = diamond(x, y);
  return d - Matrix::identity(x.rows()) * (2 * trace_form(x, y));
}

// --- roots and Θ ------------------------------------------------------------

namespace {

Weight eps_combo(int n, std::initializer_list<std::pair<int, int>> terms) {
  std::vector<int> e(n, 0);
  for (auto [i, c] : terms) e[i - 1] += c;
  return Weight::from_eps(std::move(e));
}

}  // namespace

std::vector<Root> root_system(int n) {
  std::vector<Root> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) roots.push_back({eps_combo(n, {{i, 1}, {j, -1}}), i, j, j == i + 1});
  return roots;
}

std::vector<Weight> theta_weights(int n) {
  std::set<Weight> out;
  out.insert(Weight::zero(n));
  for (int i = 1; i <= n; ++i) {
    for (int s : {1, -1}) {
      out.insert(eps_combo(n, {{i, s}}));
      out.insert(eps_combo(n, {{i, 2 * s}}));
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        for (int t : {1, -1}) out.insert(eps_combo(n, {{i, s}, {j, t}}));
      }
    }
  }
  return {out.begin(), out.end()};
}

bool in_theta(const Weight& w) {
  static std::mutex mu;
  static std::map<int, std::set<Weight>> cache;
  std::lock_guard lock(mu);
  auto& s = cache[w.n()];
  if (s.empty()) {
    auto all = theta_weights(w.n());
    s.insert(all.begin(), all.end());
  }
  return s.count(w) > 0;
}

Weight highest_weight(ThetaLabel l, int n) {
  std::vector<int> h(n - 1, 0);
  switch (l) {
    case ThetaLabel::Adj: h.front() += 1; h.back() += 1; break;
    case ThetaLabel::V: h.front() = 1; break;
    case ThetaLabel::Vp: h.back() = 1; break;
    case ThetaLabel::S: h.front() = 2; break;
    case ThetaLabel::Sp: h.back() = 2; break;
    case ThetaLabel::Lam: h[1] = 1; break;       // ω_2
    case ThetaLabel::Lamp: h[n - 3] = 1; break;  // ω_{n-2}
    case ThetaLabel::T: break;
  }
  return Weight::from_h_values(h);
}

std::size_t label_dim(ThetaLabel l, int n) {
  const std::size_t m = static_cast<std::size_t>(n);
  switch (l) {
    case ThetaLabel::Adj: return m * m - 1;
    case ThetaLabel::V:
    case ThetaLabel::Vp: return m;
    case ThetaLabel::S:
    case ThetaLabel::Sp: return m * (m + 1) / 2;
    case ThetaLabel::Lam:
    case ThetaLabel::Lamp: return m * (m - 1) / 2;
    case ThetaLabel::T: return 1;
  }
  return 0;
}

ThetaLabel canonical_label(ThetaLabel l, int n) {
  if (n == 3 && l == ThetaLabel::Lam) return ThetaLabel::Vp;
  if (n == 3 && l == ThetaLabel::Lamp) return ThetaLabel::V;
  if (n == 4 && l == ThetaLabel::Lamp) return ThetaLabel::Lam;
  return l;
}

std::vector<ThetaLabel> theta_plus_labels(int n) {
  if (n == 3) return {ThetaLabel::Adj, ThetaLabel::S, ThetaLabel::Sp, ThetaLabel::V, ThetaLabel::Vp, ThetaLabel::T};
  return {ThetaLabel::Adj, ThetaLabel::S, ThetaLabel::Lam, ThetaLabel::Sp, ThetaLabel::V, ThetaLabel::Vp, ThetaLabel::T};
}

std::optional<ThetaLabel> label_of_weight(const Weight& w) {
  for (auto l : theta_plus_labels(w.n()))
    if (highest_weight(l, w.n()) == w) return l;
  return std::nullopt;
}

}  // namespace thetagr
