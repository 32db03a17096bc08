#include <stdexcept>

#include "thetagr/coords.hpp"
#include "thetagr/parallel.hpp"

namespace thetagr {

StructureConstants sl_structure(int big_n) {
  const SlBasis& b = sl_basis(big_n);
  StructureConstants sc;
  sc.dim = b.dim();
  sc.table.resize(sc.dim * sc.dim);
  parallel_for(sc.dim, [&](std::size_t i) {
    for (std::size_t j = 0; j < sc.dim; ++j) {
      if (i == j) continue;
      const Vector c = b.coords(bracket(b.element(i), b.element(j)));
      SparseRow row;
      for (std::size_t t = 0; t < c.size(); ++t)
        if (sgn(c[t]) != 0) row.emplace_back(static_cast<std::uint32_t>(t), c[t]);
      sc.table[i * sc.dim + j] = std::move(row);
    }
  });
  return sc;
}

bool EmbeddedAlgebra::embedding_is_homomorphism() const {
  const SlBasis& small = sl_basis(n);
  const SlBasis& big = sl_basis(ambient_n);
  if (embedding.size() != small.dim()) return false;
  std::vector<Vector> images;
  for (const auto& m : embedding) {
    if (m.rows() != static_cast<std::size_t>(ambient_n) || m.cols() != m.rows() || sgn(m.trace()) != 0) return false;
    images.push_back(big.coords(m));
  }
  if (Subspace::span(big.dim(), images).dim() != images.size()) return false;
  for (std::size_t i = 0; i < embedding.size(); ++i)
    for (std::size_t j = i + 1; j < embedding.size(); ++j) {
      const Vector c = small.coords(bracket(small.element(i), small.element(j)));
      Matrix expect(ambient_n, ambient_n);
      for (std::size_t t = 0; t < c.size(); ++t)
        if (sgn(c[t]) != 0) expect = expect + embedding[t] * c[t];
      if (bracket(embedding[i], embedding[j]) != expect) return false;
    }
  return true;
}

GModule EmbeddedAlgebra::restriction() const {
  const SlBasis& big = sl_basis(ambient_n);
  std::vector<Matrix> acts;
  for (const auto& x : embedding) acts.push_back(sc.ad(big.coords(x)));
  return make_module(n, std::move(acts), name);
}

namespace {

Matrix block_embed(const Matrix& x, std::size_t size, std::size_t at) {
  Matrix out(size, size);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(at + i, at + j) = x(i, j);
  return out;
}

}  // namespace

EmbeddedAlgebra example_sl_nk(int n, int k) {
  require_rank(n);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  EmbeddedAlgebra e;
  e.n = n;
  e.ambient_n = n + k;
  e.name = "sl" + std::to_string(n + k);
  for (const auto& x : sl_basis(n).elements()) e.embedding.push_back(block_embed(x, n + k, 0));
  e.sc = sl_structure(n + k);
  return e;
}

EmbeddedAlgebra example_sl_2n1(int n) {
  require_rank(n);
  EmbeddedAlgebra e;
  e.n = n;
  e.ambient_n = 2 * n + 1;
  e.name = "sl" + std::to_string(2 * n + 1);
  for (const auto& x : sl_basis(n).elements()) {
    Matrix m = block_embed(x, 2 * n + 1, 0);
    const Matrix t = x.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(n + i, n + j) = -t(i, j);
    e.embedding.push_back(std::move(m));
  }
  e.sc = sl_structure(2 * n + 1);
  return e;
}

}  // namespace thetagr
