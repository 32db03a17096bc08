#include "thetagr/tensor.hpp"

#include <array>
#include <sstream>

#include "thetagr/parallel.hpp"

namespace thetagr {

std::size_t ThetaMultiset::count(ThetaLabel l) const {
  auto it = mult.find(l);
  return it == mult.end() ? 0 : it->second;
}

std::size_t ThetaMultiset::total_dim(int n) const {
  std::size_t d = remainder_dim;
  for (const auto& [l, m] : mult) d += m * label_dim(l, n);
  return d;
}

std::string ThetaMultiset::to_string(int n) const {
  std::string s;
  for (auto l : theta_plus_labels(n))
    for (std::size_t k = 0; k < count(l); ++k) {
      if (!s.empty()) s += "+";
      s += l == ThetaLabel::Adj ? "g" : std::string(label_name(l));
    }
  return s.empty() ? "0" : s;
}

GModule tensor(const GModule& x, const GModule& y) {
  if (x.n != y.n) throw std::invalid_argument("tensor: modules over different sl_n");
  const Matrix ix = Matrix::identity(x.dim), iy = Matrix::identity(y.dim);
  std::vector<Matrix> acts;
  acts.reserve(x.actions.size());
  for (std::size_t k = 0; k < x.actions.size(); ++k) acts.push_back(kron(x.action(k), iy) + kron(ix, y.action(k)));
  GModule t{x.n, x.dim * y.dim, std::move(acts), x.label + "*" + y.label, {}};
  if (x.has_weight_basis() && y.has_weight_basis()) {
    for (const auto& wx : x.weights)
      for (const auto& wy : y.weights) t.weights.push_back(wx + wy);
  } else {
    detect_weight_basis(t);
  }
  return t;
}

ThetaMultiset theta_component(const GModule& m) {
  ThetaMultiset out;
  const auto wd = weight_decompose(m);
  std::size_t used = 0;
  for (auto l : theta_plus_labels(m.n)) {
    const std::size_t k = highest_weight_vectors(m, wd, highest_weight(l, m.n)).dim();
    if (k == 0) continue;
    out.mult[l] = k;
    used += k * label_dim(l, m.n);
  }
  out.remainder_dim = m.dim - used;
  return out;
}

ThetaMultiset theta_component(ThetaLabel x, ThetaLabel y, int n) {
  require_rank(n);
  return theta_component(tensor(catalog(n, x), catalog(n, y)));
}

ThetaMultiset parse_theta_sum(std::string_view s, int n) {
  ThetaMultiset out;
  if (s == "0") return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('+', start);
    if (end == std::string_view::npos) end = s.size();
    const auto tok = s.substr(start, end - start);
    auto l = parse_label(tok);
    if (!l) throw std::invalid_argument("unknown label in sum: " + std::string(tok));
    ++out.mult[canonical_label(*l, n)];
    start = end + 1;
  }
  return out;
}

std::vector<ThetaLabel> table_labels(int n) {
  using L = ThetaLabel;
  if (n == 3) return {L::Adj, L::S, L::Sp, L::V, L::Vp};
  require_rank(n);
  return {L::Adj, L::S, L::Lam, L::Sp, L::V, L::Vp};
}

namespace {

// Rows and columns in table_labels order, cells written as in the printed tables.
constexpr std::array<std::array<std::string_view, 5>, 5> kTable3{{
    {"g+g+T", "S+Lam", "S'+Lam'", "S'+Lam'", "S+Lam"},
    {"S+Lam", "S'", "g+T", "g", "Lam'"},
    {"S'+Lam'", "g+T", "S", "Lam", "g"},
    {"S'+Lam'", "g", "Lam", "S+Lam", "g+T"},
    {"S+Lam", "Lam'", "g", "g+T", "S'+Lam'"},
}};

constexpr std::array<std::array<std::string_view, 6>, 6> kTable4{{
    {"g+g+T", "S+Lam", "S+Lam+S'", "S'+Lam", "V", "V'"},
    {"S+Lam", "0", "g", "g+T", "0", "V"},
    {"S+Lam+S'", "g", "g+T", "g", "V'", "V"},
    {"S'+Lam", "g+T", "g", "0", "V'", "0"},
    {"V", "0", "V'", "V'", "S+Lam", "g+T"},
    {"V'", "V", "V", "0", "g+T", "S'+Lam"},
}};

std::size_t table_index(int n, ThetaLabel l) {
  const auto labels = table_labels(n);
  const ThetaLabel c = canonical_label(l, n);
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == c) return i;
  throw std::invalid_argument("label has no table row: " + std::string(label_name(l)));
}

}  // namespace

ThetaMultiset golden_cell(int n, ThetaLabel row, ThetaLabel col) {
  require_rank(n);
  const std::size_t r = table_index(n, row), c = table_index(n, col);
  ThetaMultiset m = parse_theta_sum(n == 3 ? kTable3[r][c] : kTable4[r][c], n);
  const std::size_t total = label_dim(row, n) * label_dim(col, n);
  m.remainder_dim = total - m.total_dim(n);
  return m;
}

bool TableReport::all_pass() const {
  for (const auto& c : cells)
    if (!c.pass) return false;
  return true;
}

TableReport verify_tables(int n) {
  require_rank(n);
  const auto labels = table_labels(n);
  TableReport rep;
  rep.n = n;
  for (auto r : labels)
    for (auto c : labels) rep.cells.push_back({r, c, golden_cell(n, r, c), {}, false});
  parallel_for(rep.cells.size(), [&](std::size_t i) {
    auto& cell = rep.cells[i];
    cell.computed = theta_component(cell.row, cell.col, n);
    cell.pass = cell.computed == cell.expected;
  });
  return rep;
}

}  // namespace thetagr
