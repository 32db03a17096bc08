#include <map>

#include "thetagr/coords.hpp"
#include "thetagr/parallel.hpp"

namespace thetagr {

namespace {

Matrix columns_to_matrix(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

SparseRow sparse(const Vector& v) {
  SparseRow row;
  for (std::size_t t = 0; t < v.size(); ++t)
    if (sgn(v[t]) != 0) row.emplace_back(static_cast<std::uint32_t>(t), v[t]);
  return row;
}

// Hom_g(M, L) basis; for A the embedding map is placed first.
std::vector<Matrix> multiplicity_maps(const EmbeddedAlgebra& e, const GModule& l, Space s) {
  const GModule m = catalog(e.n, space_module(s, e.n));
  std::vector<Matrix> maps = equivariant_maps(m, l);
  if (s != Space::A) return maps;
  const SlBasis& big = sl_basis(e.ambient_n);
  std::vector<Vector> cols;
  for (const auto& x : e.embedding) cols.push_back(big.coords(x));
  std::vector<Matrix> out{columns_to_matrix(cols, l.dim)};
  std::vector<Vector> flat{out.front().flat()};
  for (auto& phi : maps) {
    flat.push_back(phi.flat());
    if (Subspace::span(flat.front().size(), flat).dim() == flat.size())
      out.push_back(std::move(phi));
    else
      flat.pop_back();
  }
  return out;
}

}  // namespace

Extraction extract(const EmbeddedAlgebra& e) {
  require_rank(e.n);
  if (!e.embedding_is_homomorphism()) throw ExtractionError("the embedding is not an injective Lie homomorphism");
  const int n = e.n;
  const GModule l = e.restriction();
  if (!l.has_weight_basis()) throw ExtractionError("the ambient basis is not a weight basis");

  Extraction x;
  std::map<Space, std::size_t> dims;
  for (auto s : spaces_for(n)) {
    x.homs[s] = multiplicity_maps(e, l, s);
    dims[s] = x.homs[s].size();
  }
  x.data = CoordinateData::zero(n, dims);
  if (dims[Space::A] == 0) throw ExtractionError("no adjoint component");
  x.data.one = Vector(dims[Space::A]);
  x.data.one[0] = 1;

  // Evaluation map, columns in the component order used by assemble().
  struct Block {
    std::size_t offset, module_dim, space_dim;
  };
  std::map<Space, Block> blocks;
  std::vector<Vector> cols;
  for (auto s : spaces_for(n)) {
    const std::size_t md = label_dim(space_module(s, n), n);
    blocks[s] = {cols.size(), md, dims[s]};
    for (std::size_t m = 0; m < md; ++m)
      for (std::size_t xi = 0; xi < dims[s]; ++xi) cols.push_back(x.homs[s][xi].column_vector(m));
  }
  const std::size_t dim = e.dim();
  if (cols.size() != dim) throw ExtractionError("the components do not exhaust the ambient algebra");
  x.evaluation = columns_to_matrix(cols, dim);
  Matrix inv;
  try {
    inv = inverse(x.evaluation);
  } catch (const DimensionError&) {
    throw ExtractionError("the evaluation map is not invertible");
  }

  std::vector<SparseRow> eval_cols(dim), inv_cols(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    eval_cols[j] = sparse(cols[j]);
    inv_cols[j] = sparse(inv.column_vector(j));
  }
  x.transported.dim = dim;
  x.transported.table.resize(dim * dim);
  parallel_for(dim, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      Vector y(dim);
      for (const auto& [a, va] : eval_cols[i])
        for (const auto& [b, vb] : eval_cols[j]) axpy(y, va * vb, e.sc.at(a, b));
      Vector z(dim);
      for (std::size_t t = 0; t < dim; ++t)
        if (sgn(y[t]) != 0) axpy(z, y[t], inv_cols[t]);
      SparseRow row = sparse(z);
      SparseRow neg = row;
      for (auto& [t, v] : neg) v = -v;
      x.transported.table[i * dim + j] = std::move(row);
      x.transported.table[j * dim + i] = std::move(neg);
    }
  });

  // Read each product off the brackets of a line.
  auto read_line = [&](const MasterLine& line, bool optional) {
    const Block& bp = blocks.at(line.p);
    const Block& bq = blocks.at(line.q);
    std::map<Space, std::vector<const MasterTerm*>> by_target;
    for (const auto& t : line.terms) by_target[t.key.z].push_back(&t);
    for (const auto& [z, terms] : by_target) {
      const Block& bz = blocks.at(z);
      std::vector<Matrix> products(terms.size(), Matrix(bz.space_dim, bp.space_dim * bq.space_dim));
      if (bp.space_dim && bq.space_dim && bz.space_dim) {
        std::vector<Matrix> spans;
        for (const auto* t : terms) spans.push_back(t->phi * t->coef);
        for (std::size_t x1 = 0; x1 < bp.space_dim; ++x1)
          for (std::size_t x2 = 0; x2 < bq.space_dim; ++x2) {
            std::vector<Matrix> psi(bz.space_dim, Matrix(bz.module_dim, bp.module_dim * bq.module_dim));
            for (std::size_t m1 = 0; m1 < bp.module_dim; ++m1)
              for (std::size_t m2 = 0; m2 < bq.module_dim; ++m2) {
                const std::size_t i = bp.offset + m1 * bp.space_dim + x1;
                const std::size_t j = bq.offset + m2 * bq.space_dim + x2;
                for (const auto& [t, v] : x.transported.at(i, j)) {
                  if (t < bz.offset || t >= bz.offset + bz.module_dim * bz.space_dim) continue;
                  const std::size_t mz = (t - bz.offset) / bz.space_dim, r = (t - bz.offset) % bz.space_dim;
                  psi[r](mz, m1 * bq.module_dim + m2) = v;
                }
              }
            for (std::size_t r = 0; r < bz.space_dim; ++r) {
              auto sol = solve_span(spans, psi[r]);
              if (!sol)
                throw ExtractionError("bracket of " + std::string(space_name(line.p)) + " and " +
                                      std::string(space_name(line.q)) + " has no expression in the line into " +
                                      std::string(space_name(z)));
              for (std::size_t k = 0; k < terms.size(); ++k) products[k](r, x1 * bq.space_dim + x2) = (*sol)[k];
            }
          }
      }
      for (std::size_t k = 0; k < terms.size(); ++k) {
        if (optional && products[k].is_zero()) continue;
        x.data.products[terms[k]->key] = std::move(products[k]);
      }
    }
  };
  for (const auto& line : master_lines(n)) read_line(line, false);
  for (const auto& line : optional_lines(n)) read_line(line, true);
  return x;
}

CoordinateData extract_coordinates(const EmbeddedAlgebra& e) { return extract(e).data; }

RoundTripReport round_trip(const Extraction& x) { return round_trip(x, assemble(x.data)); }

RoundTripReport round_trip(const Extraction& x, const GradedLieAlgebra& assembled) {
  RoundTripReport rep;
  if (assembled.sc.dim != x.transported.dim) {
    rep.mismatches = 1;
    return rep;
  }
  const std::size_t dim = assembled.sc.dim;
  rep.pairs = dim * dim;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (assembled.sc.at(i, j) != x.transported.at(i, j)) {
        ++rep.mismatches;
        if (!rep.witness) rep.witness = std::make_pair(i, j);
      }
  return rep;
}

}  // namespace thetagr
