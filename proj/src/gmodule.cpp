#include "thetagr/gmodule.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>

namespace thetagr {

namespace {

Weight eps_weight(int n, std::initializer_list<std::pair<int, int>> terms) {
  std::vector<int> e(n, 0);
  for (auto [i, c] : terms) e[i] += c;
  return Weight::from_eps(std::move(e));
}

bool is_symmetric(const Matrix& m) { return m == m.transpose(); }
bool is_skew(const Matrix& m) { return m == -m.transpose(); }

/// Weight of the raising (sign = +1) or lowering (sign = −1) generator at simple index i (1-based).
Weight generator_weight(int n, int i, int sign) { return eps_weight(n, {{i - 1, sign}, {i, -sign}}); }

}  // namespace

// --- MatrixModel --------------------------------------------------------------

MatrixModel::MatrixModel(int n, ThetaLabel label) : n_(n), label_(label) {
  if (n < 3) throw std::invalid_argument("catalog modules need n >= 3");
  const bool dual = label == ThetaLabel::Vp || label == ThetaLabel::Sp || label == ThetaLabel::Lamp;
  const int sgn_w = dual ? -1 : 1;
  switch (label) {
    case ThetaLabel::Adj: {
      const auto& b = sl_basis(n);
      basis_ = b.elements();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) weights_.push_back(eps_weight(n, {{i, 1}, {j, -1}}));
      for (int i = 1; i < n; ++i) weights_.push_back(Weight::zero(n));
      break;
    }
    case ThetaLabel::V:
    case ThetaLabel::Vp:
      for (int i = 0; i < n; ++i) {
        Matrix e(n, 1);
        e(i, 0) = 1;
        basis_.push_back(std::move(e));
        weights_.push_back(eps_weight(n, {{i, sgn_w}}));
      }
      break;
    case ThetaLabel::S:
    case ThetaLabel::Sp:
      for (int i = 0; i < n; ++i) {
        basis_.push_back(Matrix::unit(n, i, i));
        weights_.push_back(eps_weight(n, {{i, 2 * sgn_w}}));
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          basis_.push_back(Matrix::unit(n, i, j) + Matrix::unit(n, j, i));
          weights_.push_back(eps_weight(n, {{i, sgn_w}, {j, sgn_w}}));
        }
      break;
    case ThetaLabel::Lam:
    case ThetaLabel::Lamp:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          basis_.push_back(Matrix::unit(n, i, j) - Matrix::unit(n, j, i));
          weights_.push_back(eps_weight(n, {{i, sgn_w}, {j, sgn_w}}));
        }
      break;
    case ThetaLabel::T:
      basis_.push_back(Matrix{{1}});
      weights_.push_back(Weight::zero(n));
      break;
  }
}

Vector MatrixModel::coords(const Matrix& m) const {
  const auto un = static_cast<std::size_t>(n_);
  auto need_shape = [&](std::size_t r, std::size_t c) {
    if (m.rows() != r || m.cols() != c) throw DimensionError(std::string("coords: wrong shape for ") + std::string(label_name(label_)));
  };
  Vector c;
  switch (label_) {
    case ThetaLabel::Adj:
      return sl_basis(n_).coords(m);
    case ThetaLabel::V:
    case ThetaLabel::Vp:
      need_shape(un, 1);
      return m.column_vector(0);
    case ThetaLabel::S:
    case ThetaLabel::Sp:
      need_shape(un, un);
      if (!is_symmetric(m)) throw std::invalid_argument("coords: matrix is not symmetric");
      for (std::size_t i = 0; i < un; ++i) c.push_back(m(i, i));
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) c.push_back(m(i, j));
      return c;
    case ThetaLabel::Lam:
    case ThetaLabel::Lamp:
      need_shape(un, un);
      if (!is_skew(m)) throw std::invalid_argument("coords: matrix is not skew-symmetric");
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) c.push_back(m(i, j));
      return c;
    case ThetaLabel::T:
      need_shape(1, 1);
      return {m(0, 0)};
  }
  return c;
}

Matrix MatrixModel::compose(const Vector& c) const {
  if (c.size() != dim()) throw DimensionError("compose: length");
  Matrix m(basis_.front().rows(), basis_.front().cols());
  for (std::size_t k = 0; k < dim(); ++k)
    if (sgn(c[k]) != 0) m += basis_[k] * c[k];
  return m;
}

Matrix MatrixModel::act(const Matrix& x, const Matrix& m) const {
  switch (label_) {
    case ThetaLabel::Adj: return bracket(x, m);
    case ThetaLabel::V: return x * m;
    case ThetaLabel::Vp: return -(x.transpose() * m);
    case ThetaLabel::S:
    case ThetaLabel::Lam: return x * m + m * x.transpose();
    case ThetaLabel::Sp:
    case ThetaLabel::Lamp: return -(m * x) - x.transpose() * m;
    case ThetaLabel::T: return Matrix(1, 1);
  }
  return {};
}

const MatrixModel& model(int n, ThetaLabel label) {
  static std::mutex mu;
  static std::map<std::pair<int, ThetaLabel>, std::unique_ptr<MatrixModel>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, label}];
  if (!slot) slot = std::make_unique<MatrixModel>(n, label);
  return *slot;
}

// --- GModule ------------------------------------------------------------------

GModule make_module(int n, std::vector<Matrix> actions, std::string label) {
  const auto& b = sl_basis(n);
  if (actions.size() != b.dim()) throw DimensionError("module needs one action per sl_n basis element");
  const std::size_t dim = actions.empty() ? 0 : actions.front().rows();
  for (const auto& a : actions)
    if (a.rows() != dim || a.cols() != dim) throw DimensionError("module action matrices must be dim x dim");
  GModule m{n, dim, std::move(actions), std::move(label), {}};
  detect_weight_basis(m);
  return m;
}

void detect_weight_basis(GModule& m) {
  m.weights.clear();
  const auto& b = sl_basis(m.n);
  std::vector<std::vector<int>> h(m.dim, std::vector<int>(m.n - 1));
  for (int i = 1; i < m.n; ++i) {
    const Matrix& a = m.action(b.index_h(i));
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) {
        if (r == c) {
          if (a(r, c).get_den() != 1 || !a(r, c).get_num().fits_sint_p()) return;
          h[r][i - 1] = static_cast<int>(a(r, c).get_num().get_si());
        } else if (sgn(a(r, c)) != 0) {
          return;
        }
      }
  }
  for (auto& hv : h) m.weights.push_back(Weight::from_h_values(hv));
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (a.n != b.n) throw std::invalid_argument("direct_sum: modules over different sl_n");
  std::vector<Matrix> acts;
  for (std::size_t k = 0; k < a.actions.size(); ++k) {
    Matrix m(a.dim + b.dim, a.dim + b.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) m(i, j) = a.action(k)(i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.action(k)(i, j);
    acts.push_back(std::move(m));
  }
  return make_module(a.n, std::move(acts), a.label + "+" + b.label);
}

GModule change_basis(const GModule& m, const Matrix& p) {
  const Matrix pinv = inverse(p);
  std::vector<Matrix> acts;
  for (const auto& a : m.actions) acts.push_back(pinv * a * p);
  return make_module(m.n, std::move(acts), m.label);
}

bool GModule::is_representation() const {
  const auto& b = sl_basis(n);
  for (std::size_t k = 0; k < b.dim(); ++k)
    for (std::size_t l = k + 1; l < b.dim(); ++l) {
      Vector c = b.coords(bracket(b.element(k), b.element(l)));
      Matrix lhs(dim, dim);
      for (std::size_t j = 0; j < c.size(); ++j)
        if (sgn(c[j]) != 0) lhs += actions[j] * c[j];
      if (!(lhs == actions[k] * actions[l] - actions[l] * actions[k])) return false;
    }
  return true;
}

GModule catalog(int n, ThetaLabel label) {
  require_rank(n);
  const auto& mm = model(n, label);
  const auto& b = sl_basis(n);
  std::vector<Matrix> actions;
  actions.reserve(b.dim());
  for (const auto& x : b.elements()) {
    Matrix a(mm.dim(), mm.dim());
    for (std::size_t j = 0; j < mm.dim(); ++j) {
      Vector col = mm.coords(mm.act(x, mm.element(j)));
      for (std::size_t i = 0; i < mm.dim(); ++i) a(i, j) = col[i];
    }
    actions.push_back(std::move(a));
  }
  GModule m{n, mm.dim(), std::move(actions), std::string(label_name(label)), {}};
  for (std::size_t k = 0; k < mm.dim(); ++k) m.weights.push_back(mm.weight(k));
  return m;
}

GModule catalog(int n, std::string_view label) {
  auto l = parse_label(label);
  if (!l) throw std::invalid_argument("unknown module label '" + std::string(label) + "'");
  return catalog(n, *l);
}

// --- weights ------------------------------------------------------------------

namespace {

/// Splits span(basis) into eigenspaces of `a` with integral eigenvalues.
std::vector<std::pair<int, std::vector<Vector>>> split_eigen(const Matrix& a, const std::vector<Vector>& basis) {
  Rational bound;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational s;
    for (std::size_t c = 0; c < a.cols(); ++c) s += abs(a(r, c));
    bound = std::max(bound, s);
  }
  mpz_class ceil_bound;
  mpz_cdiv_q(ceil_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  const long b = ceil_bound.get_si();
  std::vector<std::pair<int, std::vector<Vector>>> out;
  std::size_t found = 0;
  std::vector<Vector> images;
  for (const auto& w : basis) images.push_back(a * w);
  const std::size_t dim = a.rows(), k = basis.size();
  for (long c = -b; c <= b && found < k; ++c) {
    Matrix sys(dim, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < dim; ++r) sys(r, j) = images[j][r] - c * basis[j][r];
    Subspace ker = kernel(sys);
    if (ker.dim() == 0) continue;
    std::vector<Vector> vs;
    for (std::size_t t = 0; t < ker.dim(); ++t) {
      Vector v(dim);
      for (std::size_t j = 0; j < k; ++j)
        if (sgn(ker.basis()(t, j)) != 0)
          for (std::size_t r = 0; r < dim; ++r) v[r] += ker.basis()(t, j) * basis[j][r];
      vs.push_back(std::move(v));
    }
    found += vs.size();
    out.emplace_back(static_cast<int>(c), std::move(vs));
  }
  if (found != k) throw NonIntegralWeight("Cartan action is not diagonalizable with integral eigenvalues");
  return out;
}

}  // namespace

WeightDecomposition weight_decompose(const GModule& m) {
  WeightDecomposition wd;
  wd.total_dim = m.dim;
  if (m.has_weight_basis()) {
    std::map<Weight, std::vector<Vector>> groups;
    for (std::size_t k = 0; k < m.dim; ++k) {
      Vector e(m.dim);
      e[k] = 1;
      groups[m.weights[k]].push_back(std::move(e));
    }
    for (auto& [w, vs] : groups) wd.spaces.emplace(w, Subspace::span(m.dim, vs));
    return wd;
  }
  const auto& b = sl_basis(m.n);
  std::vector<std::pair<std::vector<int>, std::vector<Vector>>> pieces{{{}, Subspace::full(m.dim).basis_vectors()}};
  for (int i = 1; i < m.n; ++i) {
    std::vector<std::pair<std::vector<int>, std::vector<Vector>>> next;
    for (auto& [vals, vs] : pieces) {
      if (vs.empty()) continue;
      for (auto& [c, sub] : split_eigen(m.action(b.index_h(i)), vs)) {
        auto v2 = vals;
        v2.push_back(c);
        next.emplace_back(std::move(v2), std::move(sub));
      }
    }
    pieces = std::move(next);
  }
  for (auto& [vals, vs] : pieces) wd.spaces.emplace(Weight::from_h_values(vals), Subspace::span(m.dim, vs));
  return wd;
}

Subspace highest_weight_vectors(const GModule& m, const WeightDecomposition& wd, const Weight& lambda) {
  auto it = wd.spaces.find(lambda);
  if (it == wd.spaces.end()) return Subspace(m.dim);
  const auto ws = it->second.basis_vectors();
  const auto& b = sl_basis(m.n);
  const std::size_t k = ws.size();
  std::vector<Vector> rows;
  for (int i = 1; i < m.n; ++i) {
    const Matrix& e = m.action(b.raising(i));
    std::vector<Vector> imgs;
    for (const auto& w : ws) imgs.push_back(e * w);
    for (std::size_t r = 0; r < m.dim; ++r) {
      Vector row(k);
      bool any = false;
      for (std::size_t j = 0; j < k; ++j) {
        row[j] = imgs[j][r];
        any = any || sgn(row[j]) != 0;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  std::vector<Vector> out;
  if (rows.empty()) {
    out = ws;
  } else {
    Subspace ker = kernel(Matrix::from_rows(rows, k));
    for (std::size_t t = 0; t < ker.dim(); ++t) {
      Vector v(m.dim);
      for (std::size_t j = 0; j < k; ++j)
        if (sgn(ker.basis()(t, j)) != 0)
          for (std::size_t r = 0; r < m.dim; ++r)
            if (sgn(ws[j][r]) != 0) v[r] += ker.basis()(t, j) * ws[j][r];
      out.push_back(std::move(v));
    }
  }
  return Subspace::span(m.dim, out);
}

Subspace highest_weight_vectors(const GModule& m, const Weight& lambda) {
  return highest_weight_vectors(m, weight_decompose(m), lambda);
}

namespace {

SparseRow to_sparse(const Vector& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) r.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return r;
}

}  // namespace

Subspace generated_submodule(const GModule& m, const std::vector<Vector>& seeds) {
  const auto& b = sl_basis(m.n);
  SparseEchelon ech(m.dim);
  std::vector<Vector> found;
  std::deque<Vector> queue;
  for (const auto& s : seeds)
    if (ech.add(to_sparse(s))) {
      found.push_back(s);
      queue.push_back(s);
    }
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < m.n; ++i) {
      Vector w = m.action(b.lowering(i)) * v;
      if (is_zero(w)) continue;
      if (ech.add(to_sparse(w))) {
        found.push_back(w);
        queue.push_back(std::move(w));
      }
    }
  }
  return Subspace::span(m.dim, found);
}

std::size_t IsotypicDecomposition::multiplicity(ThetaLabel l, int n) const {
  auto it = parts.find(highest_weight(l, n));
  return it == parts.end() ? 0 : it->second.multiplicity;
}

IsotypicDecomposition isotypic_decompose(const GModule& m) {
  auto wd = weight_decompose(m);
  std::vector<Weight> dominant;
  for (const auto& [w, sp] : wd.spaces)
    if (w.is_dominant()) dominant.push_back(w);
  std::stable_sort(dominant.begin(), dominant.end(),
                   [](const Weight& a, const Weight& b) { return a.height() > b.height(); });

  IsotypicDecomposition out;
  std::map<Weight, long> remaining;
  for (const auto& [w, sp] : wd.spaces) remaining[w] = static_cast<long>(sp.dim());
  for (const auto& lambda : dominant) {
    // Character peeling: what is left at λ must be exactly the new highest weights.
    const long left = remaining[lambda];
    if (left == 0) continue;
    Subspace hw = highest_weight_vectors(m, wd, lambda);
    if (hw.dim() == 0) continue;
    auto label = label_of_weight(lambda);
    if (!label) throw NonThetaConstituent(lambda);
    if (static_cast<long>(hw.dim()) != left)
      throw std::runtime_error("module is not completely reducible at weight " + lambda.to_string());
    const auto& mm = model(m.n, *label);
    for (std::size_t k = 0; k < mm.dim(); ++k) remaining[mm.weight(k)] -= left;
    Subspace comp = generated_submodule(m, hw.basis_vectors());
    out.parts.emplace(lambda, IsotypicPart{*label, hw.dim(), std::move(hw), std::move(comp)});
  }
  for (const auto& [w, c] : remaining)
    if (c != 0) {
      if (c > 0 && w.is_dominant()) throw NonThetaConstituent(w);
      throw std::runtime_error("character peeling left weight " + w.to_string() + " unbalanced");
    }
  out.remainder = Subspace(m.dim);
  return out;
}

// --- equivariant maps -----------------------------------------------------------

std::vector<Matrix> equivariant_maps(const GModule& src, const GModule& tgt) {
  if (src.n != tgt.n) throw std::invalid_argument("equivariant_maps: modules over different sl_n");
  if (!src.has_weight_basis() || !tgt.has_weight_basis())
    throw std::invalid_argument("equivariant_maps: modules need weight bases");
  const int n = src.n;
  // Unknown φ[t][s] exists only when the weights agree.
  std::map<Weight, std::vector<std::size_t>> src_groups, tgt_groups;
  for (std::size_t s = 0; s < src.dim; ++s) src_groups[src.weights[s]].push_back(s);
  for (std::size_t t = 0; t < tgt.dim; ++t) tgt_groups[tgt.weights[t]].push_back(t);
  std::vector<std::size_t> pos_in_group(src.dim);
  for (auto& [w, g] : src_groups)
    for (std::size_t p = 0; p < g.size(); ++p) pos_in_group[g[p]] = p;
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> base(tgt.dim, none);
  std::size_t unknowns = 0;
  for (std::size_t t = 0; t < tgt.dim; ++t) {
    auto it = src_groups.find(tgt.weights[t]);
    if (it == src_groups.end()) continue;
    base[t] = unknowns;
    unknowns += it->second.size();
  }
  if (unknowns == 0) return {};
  auto unknown = [&](std::size_t t, std::size_t s) -> std::uint32_t {
    return static_cast<std::uint32_t>(base[t] + pos_in_group[s]);
  };

  const auto& b = sl_basis(n);
  SparseEchelon ech(unknowns);
  for (int i = 1; i < n; ++i)
    for (int sign : {1, -1}) {
      const std::size_t g = sign > 0 ? b.raising(i) : b.lowering(i);
      const Weight beta = generator_weight(n, i, sign);
      const Matrix& as = src.action(g);
      const Matrix& at = tgt.action(g);
      for (std::size_t s = 0; s < src.dim; ++s) {
        auto tg = tgt_groups.find(src.weights[s] + beta);
        if (tg == tgt_groups.end()) continue;
        for (std::size_t t : tg->second) {
          // (φ·As − At·φ)[t][s]
          SparseRow row;
          if (base[t] != none)
            for (std::size_t k = 0; k < src.dim; ++k)
              if (sgn(as(k, s)) != 0) row.emplace_back(unknown(t, k), as(k, s));
          for (std::size_t k = 0; k < tgt.dim; ++k)
            if (sgn(at(t, k)) != 0 && base[k] != none) row.emplace_back(unknown(k, s), -at(t, k));
          if (!row.empty()) ech.add(std::move(row));
        }
      }
    }
  std::vector<Matrix> out;
  for (const auto& v : ech.null_space()) {
    Matrix phi(tgt.dim, src.dim);
    for (std::size_t t = 0; t < tgt.dim; ++t) {
      if (base[t] == none) continue;
      for (std::size_t s : src_groups.at(tgt.weights[t])) phi(t, s) = v[unknown(t, s)];
    }
    out.push_back(std::move(phi));
  }
  return out;
}

bool is_equivariant(const Matrix& phi, const GModule& src, const GModule& tgt) {
  if (phi.rows() != tgt.dim || phi.cols() != src.dim) throw DimensionError("is_equivariant: shape");
  for (std::size_t k = 0; k < src.actions.size(); ++k)
    if (!(phi * src.action(k) == tgt.action(k) * phi)) return false;
  return true;
}

// --- identifications --------------------------------------------------------------

Identification identification(int n, std::string_view which) {
  require_rank(n);
  ThetaLabel src, tgt;
  Matrix anchor, image;
  const auto un = static_cast<std::size_t>(n);
  if (n == 4 && which == "f") {
    src = ThetaLabel::Lamp;
    tgt = ThetaLabel::Lam;
    anchor = Matrix::unit(un, 2, 3) - Matrix::unit(un, 3, 2);
    image = Matrix::unit(un, 0, 1) - Matrix::unit(un, 1, 0);
  } else if (n == 3 && which == "f") {
    src = ThetaLabel::Lamp;
    tgt = ThetaLabel::V;
    anchor = Matrix::unit(un, 1, 2) - Matrix::unit(un, 2, 1);
    image = Matrix(un, 1);
    image(0, 0) = 1;
  } else if (n == 3 && which == "g") {
    src = ThetaLabel::Lam;
    tgt = ThetaLabel::Vp;
    anchor = Matrix::unit(un, 0, 1) - Matrix::unit(un, 1, 0);
    image = Matrix(un, 1);
    image(2, 0) = 1;
  } else {
    throw std::invalid_argument("no identification '" + std::string(which) + "' for n=" + std::to_string(n));
  }
  auto maps = equivariant_maps(catalog(n, src), catalog(n, tgt));
  if (maps.size() != 1) throw std::logic_error("identification: Hom space is not 1-dimensional");
  const Vector a = model(n, src).coords(anchor);
  const Vector want = model(n, tgt).coords(image);
  const Vector got = maps.front() * a;
  auto ratio = solve_span(std::vector<Vector>{got}, want);
  if (!ratio || sgn((*ratio)[0]) == 0) throw std::logic_error("identification: anchor not mapped onto target line");
  return {src, tgt, maps.front() * (*ratio)[0]};
}

const Identification& cached_identification(int n, std::string_view which) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::unique_ptr<Identification>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, std::string(which)}];
  if (!slot) slot = std::make_unique<Identification>(identification(n, which));
  return *slot;
}

}  // namespace thetagr
