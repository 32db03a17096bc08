#include "thetagr/graded.hpp"

#include <algorithm>
#include <mutex>
#include <random>

#include "thetagr/parallel.hpp"

namespace thetagr {

// --- StructureConstants -------------------------------------------------------

Vector StructureConstants::bracket(const Vector& u, const Vector& v) const {
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(v[j]) == 0) continue;
      const Rational c = u[i] * v[j];
      axpy(out, c, at(i, j));
    }
  }
  return out;
}

Matrix StructureConstants::ad(const Vector& u) const {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& [t, c] : at(i, j)) m(t, j) += u[i] * c;
  }
  return m;
}

StructureConstants structure_from_matrices(const std::vector<Matrix>& basis) {
  StructureConstants sc;
  sc.dim = basis.size();
  sc.table.resize(sc.dim * sc.dim);
  if (basis.empty()) return sc;
  const std::size_t len = basis.front().flat().size();
  std::vector<Vector> flat;
  for (const auto& m : basis) flat.push_back(m.flat());
  // Rows of the coordinate map that determine coordinates uniquely.
  auto red = rref(Matrix::from_rows(flat, len));
  if (red.rank != sc.dim) throw std::invalid_argument("structure_from_matrices: basis is dependent");
  Matrix sub(sc.dim, sc.dim);
  for (std::size_t r = 0; r < sc.dim; ++r)
    for (std::size_t j = 0; j < sc.dim; ++j) sub(r, j) = flat[j][red.pivots[r]];
  const Matrix inv = inverse(sub);

  parallel_for(sc.dim, [&](std::size_t i) {
    for (std::size_t j = 0; j < sc.dim; ++j) {
      if (i == j) continue;
      const Matrix br = basis[i] * basis[j] - basis[j] * basis[i];
      Vector y(sc.dim);
      for (std::size_t r = 0; r < sc.dim; ++r) y[r] = br.flat()[red.pivots[r]];
      const Vector c = inv * y;
      Vector back(len);
      SparseRow row;
      for (std::size_t t = 0; t < sc.dim; ++t)
        if (sgn(c[t]) != 0) {
          row.emplace_back(static_cast<std::uint32_t>(t), c[t]);
          for (std::size_t q = 0; q < len; ++q)
            if (sgn(flat[t][q]) != 0) back[q] += c[t] * flat[t][q];
        }
      if (back != br.flat()) throw std::invalid_argument("structure_from_matrices: span is not closed under the bracket");
      sc.table[i * sc.dim + j] = std::move(row);
    }
  });
  return sc;
}

// --- GradedLieAlgebra -----------------------------------------------------------

const Component& GradedLieAlgebra::component(Space s) const {
  for (const auto& c : components)
    if (c.space == s) return c;
  throw std::invalid_argument("no component for space " + std::string(space_name(s)));
}

std::size_t GradedLieAlgebra::index(Space s, std::size_t m, std::size_t xi) const {
  const auto& c = component(s);
  return c.offset + m * c.space_dim + xi;
}

std::string GradedLieAlgebra::basis_name(std::size_t idx) const {
  for (const auto& c : components) {
    const std::size_t size = c.module_dim * c.space_dim;
    if (idx < c.offset || idx >= c.offset + size) continue;
    const std::size_t m = (idx - c.offset) / c.space_dim, xi = (idx - c.offset) % c.space_dim;
    std::string mod = c.module == ThetaLabel::Adj ? sl_basis(n).name(m) : std::string(label_name(c.module)) + "#" + std::to_string(m);
    return mod + "*" + std::string(space_name(c.space)) + "#" + std::to_string(xi);
  }
  return "?";
}

std::vector<Vector> GradedLieAlgebra::sl_images() const {
  const auto& c = component(Space::A);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < c.module_dim; ++k) {
    Vector v(dim());
    for (std::size_t xi = 0; xi < c.space_dim; ++xi) v[c.offset + k * c.space_dim + xi] = one[xi];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

using Nonzeros = std::vector<std::vector<std::pair<std::size_t, Rational>>>;

// Nonzero entries of each column.
Nonzeros column_nonzeros(const Matrix& m) {
  Nonzeros out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out[c].emplace_back(r, m(r, c));
  return out;
}

void check_shape(const CoordinateData& d, const ProductKey& k, const Matrix& m) {
  if (m.rows() != d.dim(k.z) || m.cols() != d.dim(k.x) * d.dim(k.y))
    throw DimensionError("product " + k.to_string() + " has the wrong shape");
}

}  // namespace

GradedLieAlgebra assemble(const CoordinateData& data) {
  require_rank(data.n);
  const int n = data.n;
  GradedLieAlgebra l;
  l.n = n;
  std::size_t off = 0;
  for (auto s : spaces_for(n)) {
    const ThetaLabel mod = space_module(s, n);
    Component c{s, mod, label_dim(mod, n), data.dim(s), off};
    off += c.module_dim * c.space_dim;
    l.components.push_back(c);
  }
  l.sc.dim = off;
  if (data.one.size() != data.dim(Space::A)) throw DimensionError("distinguished element has the wrong length");
  l.one = data.one;

  std::vector<std::map<std::uint32_t, Rational>> acc(off * off);
  auto apply_line = [&](const MasterLine& line, bool optional) {
    for (const auto& t : line.terms) {
      if (optional && !data.has(t.key)) continue;
      const Matrix& k = data.product(t.key);
      check_shape(data, t.key, k);
      const auto& cp = l.component(line.p);
      const auto& cq = l.component(line.q);
      const auto& cz = l.component(t.key.z);
      const Nonzeros phi_nz = column_nonzeros(t.phi);
      const Nonzeros k_nz = column_nonzeros(k);
      for (std::size_t m1 = 0; m1 < cp.module_dim; ++m1)
        for (std::size_t m2 = 0; m2 < cq.module_dim; ++m2) {
          const auto& pcol = phi_nz[m1 * cq.module_dim + m2];
          if (pcol.empty()) continue;
          for (std::size_t x1 = 0; x1 < cp.space_dim; ++x1)
            for (std::size_t x2 = 0; x2 < cq.space_dim; ++x2) {
              const auto& kcol = k_nz[x1 * cq.space_dim + x2];
              if (kcol.empty()) continue;
              const std::size_t i = cp.offset + m1 * cp.space_dim + x1;
              const std::size_t j = cq.offset + m2 * cq.space_dim + x2;
              for (const auto& [z, pv] : pcol)
                for (const auto& [r, kv] : kcol) {
                  const Rational v = t.coef * pv * kv;
                  const auto tgt = static_cast<std::uint32_t>(cz.offset + z * cz.space_dim + r);
                  acc[i * off + j][tgt] += v;
                  if (line.p != line.q) acc[j * off + i][tgt] -= v;
                }
            }
        }
    }
  };
  for (const auto& line : master_lines(n)) apply_line(line, false);
  for (const auto& line : optional_lines(n)) apply_line(line, true);

  l.sc.table.resize(off * off);
  for (std::size_t p = 0; p < acc.size(); ++p)
    for (auto& [t, v] : acc[p])
      if (sgn(v) != 0) l.sc.table[p].emplace_back(t, std::move(v));
  return l;
}

// --- Jacobi -------------------------------------------------------------------

namespace {

bool jacobi_holds(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k) {
  std::map<std::uint32_t, Rational> sum;
  auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [t, v] : sc.at(a, b))
      for (const auto& [u, w] : sc.at(t, c)) sum[u] += v * w;
  };
  add(i, j, k);
  add(j, k, i);
  add(k, i, j);
  for (const auto& [u, v] : sum)
    if (sgn(v) != 0) return false;
  return true;
}

}  // namespace

JacobiReport check_jacobi(const StructureConstants& sc, JacobiMode mode, std::size_t samples, std::uint64_t seed) {
  JacobiReport rep;
  rep.mode = mode;
  rep.seed = mode == JacobiMode::Sampled ? seed : 0;
  const std::size_t d = sc.dim;
  for (std::size_t i = 0; i < d && rep.antisymmetric; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vector a(d), b(d);
      axpy(a, 1, sc.at(i, j));
      axpy(b, 1, sc.at(j, i));
      if (!is_zero(a + b)) {
        rep.antisymmetric = false;
        break;
      }
    }

  std::vector<std::array<std::size_t, 3>> triples;
  if (mode == JacobiMode::Full) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) triples.push_back({i, j, k});
  } else if (d >= 3) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    while (triples.size() < samples) {
      std::array<std::size_t, 3> t{pick(rng), pick(rng), pick(rng)};
      if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
      std::sort(t.begin(), t.end());
      triples.push_back(t);
    }
  }
  rep.triples = triples.size();

  std::vector<char> bad(triples.size(), 0);
  const std::size_t chunk = 256;
  parallel_for((triples.size() + chunk - 1) / chunk, [&](std::size_t c) {
    for (std::size_t t = c * chunk; t < std::min(triples.size(), (c + 1) * chunk); ++t)
      bad[t] = !jacobi_holds(sc, triples[t][0], triples[t][1], triples[t][2]);
  });
  for (std::size_t t = 0; t < triples.size(); ++t)
    if (bad[t]) {
      if (!rep.witness) rep.witness = triples[t];
      ++rep.violations;
    }
  return rep;
}

// --- grading ------------------------------------------------------------------

GradingReport check_grading(const StructureConstants& sc, int n, const std::vector<Vector>& sl_images) {
  GradingReport rep;
  const auto& b = sl_basis(n);
  if (sl_images.size() != b.dim()) throw DimensionError("check_grading: one image per sl_n basis element");

  // (Γ1) the images form a copy of sl_n.
  rep.gamma1 = Subspace::span(sc.dim, sl_images).dim() == b.dim();
  for (std::size_t k = 0; k < b.dim() && rep.gamma1; ++k)
    for (std::size_t l = k + 1; l < b.dim() && rep.gamma1; ++l) {
      Vector c = b.coords(bracket(b.element(k), b.element(l)));
      Vector expect(sc.dim);
      for (std::size_t t = 0; t < c.size(); ++t)
        if (sgn(c[t]) != 0) expect = expect + sl_images[t] * c[t];
      rep.gamma1 = sc.bracket(sl_images[k], sl_images[l]) == expect;
    }
  if (!rep.gamma1) rep.detail = "the grading subalgebra is not a copy of sl_n";

  // (Γ2) weight decomposition under the Cartan subalgebra.
  std::vector<Matrix> acts;
  for (const auto& v : sl_images) acts.push_back(sc.ad(v));
  WeightDecomposition wd;
  try {
    wd = weight_decompose(make_module(n, std::move(acts), "L"));
    rep.gamma2 = true;
    std::size_t total = 0;
    for (const auto& [w, sp] : wd.spaces) {
      rep.weights.push_back(w);
      total += sp.dim();
      if (!in_theta(w)) {
        rep.outside_theta.push_back(w);
        rep.gamma2 = false;
      }
    }
    if (total != sc.dim) {
      rep.gamma2 = false;
      rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("weight spaces do not span L");
    }
  } catch (const NonIntegralWeight& e) {
    rep.gamma2 = false;
    rep.detail += (rep.detail.empty() ? "" : "; ") + std::string(e.what());
  }
  if (!rep.outside_theta.empty()) rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("weights outside Theta_n");

  // (Γ3) L_0 = Σ_{α≠0} [L_α, L_−α].
  const Weight zero = Weight::zero(n);
  Subspace l0 = wd.spaces.count(zero) ? wd.spaces.at(zero) : Subspace(sc.dim);
  rep.zero_dim = l0.dim();
  std::vector<Vector> gen;
  for (const auto& [w, sp] : wd.spaces) {
    if (w == zero) continue;
    auto opp = wd.spaces.find(-w);
    if (opp == wd.spaces.end()) continue;
    for (const auto& u : sp.basis_vectors())
      for (const auto& v : opp->second.basis_vectors()) gen.push_back(sc.bracket(u, v));
  }
  Subspace g0 = Subspace::span(sc.dim, gen);
  rep.generated_zero_dim = g0.dim();
  rep.gamma3 = rep.gamma2 && g0 == l0;
  if (rep.gamma2 && !rep.gamma3) rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("L_0 is larger than the sum of [L_a, L_-a]");
  return rep;
}

GradingReport check_grading(const GradedLieAlgebra& l) { return check_grading(l.sc, l.n, l.sl_images()); }

ConditionReport check_condition_S(const GradedLieAlgebra& l) {
  if (l.n != 3) throw std::invalid_argument("the S-condition is stated for n = 3");
  ConditionReport rep;
  for (Space s : {Space::C, Space::Cp}) {
    const auto& c = l.component(s);
    const std::size_t size = c.module_dim * c.space_dim;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (!l.sc.at(c.offset + i, c.offset + j).empty()) {
          rep.holds = false;
          rep.witness = {c.offset + i, c.offset + j};
          return rep;
        }
  }
  return rep;
}

}  // namespace thetagr
