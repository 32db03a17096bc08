#include <algorithm>
#include <set>

#include "thetagr/coordalg.hpp"
#include "thetagr/hom.hpp"

namespace thetagr {

namespace {

using PieceSet = std::set<Piece>;

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

std::vector<std::size_t> indices(const CoordAlgebra& a, const PieceSet& ps) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim; ++i)
    if (ps.count(a.piece_of(i))) out.push_back(i);
  return out;
}

struct Counter {
  CheckResult r;
  Counter(std::string name, bool asserted = true) {
    r.name = std::move(name);
    r.asserted = asserted;
  }
  void expect(bool ok, const std::string& what) {
    ++r.checked;
    if (ok) return;
    ++r.failures;
    r.pass = false;
    if (r.witness.empty()) r.witness = what;
  }
};

// Apply a D-basis element to a 𝔟 vector.
struct DAction {
  const CoordinateData& data;
  const CoordAlgebra& a;

  Vector apply(std::size_t d, const Vector& v) const {
    Vector out(a.dim);
    for (auto p : a.pieces) {
      const Space s = piece_space(p);
      const std::size_t ds = data.dim(s);
      const Matrix& k = data.product({Space::D, s, s});
      for (std::size_t x = 0; x < ds; ++x) {
        const Rational& c = v[a.index(p, x)];
        if (sgn(c) == 0) continue;
        for (std::size_t r = 0; r < ds; ++r) out[a.index(p, r)] += c * k(r, d * ds + x);
      }
    }
    return out;
  }
  Vector bracket_d(std::size_t d, const Vector& w) const {
    const std::size_t dd = data.dim(Space::D);
    const Matrix& k = data.product({Space::D, Space::D, Space::D});
    Vector out(dd);
    for (std::size_t x = 0; x < dd; ++x)
      if (sgn(w[x]) != 0)
        for (std::size_t r = 0; r < dd; ++r) out[r] += w[x] * k(r, d * dd + x);
    return out;
  }
};

Vector pair_value(const Pairing& pr, std::size_t dim, const Vector& u, const Vector& v) {
  Vector out(pr.dim_d);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j)
      if (sgn(v[j]) != 0) axpy(out, u[i] * v[j], pr.values[i * dim + j]);
  }
  return out;
}

// Printed cells of the product tables; A± stand for themselves.
std::map<std::pair<Piece, Piece>, PieceSet> printed_cells(int n, bool extended) {
  using P = Piece;
  std::map<std::pair<Piece, Piece>, PieceSet> t;
  auto cell = [&](P x, P y, PieceSet z) { t[{x, y}] = std::move(z); };
  const PieceSet a{P::Ap, P::Am};
  if (n == 3) {
    cell(P::Ap, P::Ap, a), cell(P::Ap, P::Am, a), cell(P::Ap, P::C, {P::C}), cell(P::Ap, P::Cp, {P::Cp});
    cell(P::Ap, P::E, {P::C, P::E}), cell(P::Ap, P::Ep, {P::Ep, P::Cp});
    cell(P::Am, P::Ap, a), cell(P::Am, P::Am, a), cell(P::Am, P::C, {P::C}), cell(P::Am, P::Cp, {P::Cp});
    cell(P::Am, P::E, {P::E, P::C}), cell(P::Am, P::Ep, {P::Cp, P::Ep});
    cell(P::C, P::Ap, {P::C}), cell(P::C, P::Am, {P::C}), cell(P::C, P::C, {}), cell(P::C, P::Cp, a);
    cell(P::C, P::E, {P::Ep}), cell(P::C, P::Ep, a);
    cell(P::Cp, P::Ap, {P::Cp}), cell(P::Cp, P::Am, {P::Cp}), cell(P::Cp, P::C, a), cell(P::Cp, P::Cp, {});
    cell(P::Cp, P::E, a), cell(P::Cp, P::Ep, {P::E});
    cell(P::E, P::Ap, {P::C, P::E}), cell(P::E, P::Am, {P::E, P::C}), cell(P::E, P::C, {P::Ep}), cell(P::E, P::Cp, a);
    cell(P::E, P::E, {P::Ep, P::Cp}), cell(P::E, P::Ep, a);
    cell(P::Ep, P::Ap, {P::Ep, P::Cp}), cell(P::Ep, P::Am, {P::Cp, P::Ep}), cell(P::Ep, P::C, a), cell(P::Ep, P::Cp, {P::E});
    cell(P::Ep, P::E, a), cell(P::Ep, P::Ep, {P::E, P::C});
    return t;
  }
  cell(P::Ap, P::Ap, a), cell(P::Ap, P::Am, a), cell(P::Ap, P::C, {P::C, P::E}), cell(P::Ap, P::E, {P::E, P::C, P::Cp});
  cell(P::Ap, P::Cp, {P::Cp, P::E});
  cell(P::Am, P::Ap, a), cell(P::Am, P::Am, a), cell(P::Am, P::C, {P::E, P::C}), cell(P::Am, P::E, {P::C, P::E, P::Cp});
  cell(P::Am, P::Cp, {P::E, P::Cp});
  cell(P::C, P::Ap, {P::C, P::E}), cell(P::C, P::Am, {P::E, P::C}), cell(P::C, P::C, {}), cell(P::C, P::E, a), cell(P::C, P::Cp, a);
  cell(P::E, P::Ap, {P::E, P::C, P::Cp}), cell(P::E, P::Am, {P::C, P::E, P::Cp}), cell(P::E, P::C, a), cell(P::E, P::E, a);
  cell(P::E, P::Cp, a);
  cell(P::Cp, P::Ap, {P::Cp, P::E}), cell(P::Cp, P::Am, {P::E, P::Cp}), cell(P::Cp, P::C, a), cell(P::Cp, P::E, a);
  cell(P::Cp, P::Cp, {});
  if (!extended) return t;
  // The coarser table for 𝔟: C and E share a row and a column.
  for (P x : {P::Ap, P::Am}) {
    cell(x, P::B, {P::B}), cell(x, P::Bp, {P::Bp}), cell(P::B, x, {P::B}), cell(P::Bp, x, {P::Bp});
  }
  for (P x : {P::C, P::E}) {
    cell(x, P::B, {}), cell(x, P::Bp, {P::B}), cell(P::B, x, {}), cell(P::Bp, x, {P::B});
  }
  cell(P::Cp, P::B, {P::Bp}), cell(P::Cp, P::Bp, {}), cell(P::B, P::Cp, {P::Bp}), cell(P::Bp, P::Cp, {});
  cell(P::B, P::B, {P::C, P::E}), cell(P::B, P::Bp, a), cell(P::Bp, P::B, a), cell(P::Bp, P::Bp, {P::Cp, P::E});
  return t;
}

}  // namespace

Pairing build_pairing(const CoordinateData& data, const CoordAlgebra& a) {
  Pairing pr;
  pr.dim_d = data.dim(Space::D);
  pr.values.resize(a.dim * a.dim);
  std::vector<std::map<std::uint32_t, Rational>> acc(a.dim * a.dim);
  auto fill = [&](Piece p1, Piece p2, const ProductKey& key, int sign, bool transpose) {
    if (!a.has(p1) || !a.has(p2)) return;
    const Matrix& k = data.product(key);
    const std::size_t d1 = a.dims.at(p1), d2 = a.dims.at(p2);
    for (std::size_t x = 0; x < d1; ++x)
      for (std::size_t y = 0; y < d2; ++y) {
        const std::size_t col = transpose ? y * d1 + x : x * d2 + y;
        for (std::size_t r = 0; r < k.rows(); ++r)
          if (sgn(k(r, col)) != 0) acc[a.index(p1, x) * a.dim + a.index(p2, y)][static_cast<std::uint32_t>(r)] += sign * k(r, col);
      }
  };
  auto both = [&](Piece p1, Piece p2, const ProductKey& key) {
    fill(p1, p2, key, 1, false);
    if (p1 != p2) fill(p2, p1, key, -1, true);
    pr.summands.emplace_back(p1, p2);
  };
  const Space d = Space::D;
  both(Piece::Ap, Piece::Ap, {Space::A, Space::A, d});
  both(Piece::Am, Piece::Am, {Space::A, Space::A, d});
  if (a.extended) both(Piece::B, Piece::Bp, {Space::B, Space::Bp, d});
  both(Piece::C, Piece::Cp, {Space::C, Space::Cp, d});
  if (data.n == 4)
    both(Piece::E, Piece::E, {Space::E, Space::E, d});
  else
    both(Piece::E, Piece::Ep, {Space::E, Space::Ep, d});
  for (std::size_t c = 0; c < acc.size(); ++c)
    for (auto& [t, v] : acc[c])
      if (sgn(v) != 0) pr.values[c].emplace_back(t, std::move(v));
  return pr;
}

bool Section4Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.asserted || c.pass; });
}

const CheckResult* Section4Report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Section4Report verify_section4(const CoordinateData& data, const GradedLieAlgebra* l) {
  Section4Report rep;
  rep.n = data.n;
  const CoordAlgebra alg = data.n == 4 ? build_frak_b(data) : build_frak_a(data);
  const std::size_t dim = alg.dim;
  std::vector<Vector> e;
  for (std::size_t i = 0; i < dim; ++i) e.push_back(unit_vector(dim, i));
  auto prod = [&](const Vector& u, const Vector& v) { return alg.product(u, v); };
  auto name = [&](std::size_t i) { return alg.basis_name(i); };
  const std::vector<int> inv = data.n == 4 ? involution_eta(alg) : involution_gamma(alg);
  auto apply_inv = [&](Vector v) {
    for (std::size_t i = 0; i < dim; ++i) v[i] *= inv[i];
    return v;
  };
  const PieceSet frak_a_pieces = [&] {
    PieceSet s;
    for (auto p : alg.pieces)
      if (p != Piece::B && p != Piece::Bp) s.insert(p);
    return s;
  }();
  const auto a_idx = indices(alg, frak_a_pieces);

  {
    Counter c(data.n == 4 ? "eta-order-2" : "gamma-order-2");
    for (std::size_t i = 0; i < dim; ++i) c.expect(apply_inv(apply_inv(e[i])) == e[i], name(i));
    c.expect(apply_inv(alg.one) == alg.one, "1+");
    rep.checks.push_back(c.r);
  }
  {
    Counter c("gamma-antiautomorphism");
    for (auto i : a_idx)
      for (auto j : a_idx)
        c.expect(apply_inv(prod(e[i], e[j])) == prod(apply_inv(e[j]), apply_inv(e[i])), name(i) + "*" + name(j));
    rep.checks.push_back(c.r);
  }
  if (alg.extended) {
    Counter c("eta-antiautomorphism");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        c.expect(apply_inv(prod(e[i], e[j])) == prod(apply_inv(e[j]), apply_inv(e[i])), name(i) + "*" + name(j));
    rep.checks.push_back(c.r);
    Counter g("eta-extends-gamma");
    for (auto i : a_idx) g.expect(inv[i] == involution_sign(alg.piece_of(i)), name(i));
    rep.checks.push_back(g.r);
  }
  {
    Counter c("unit");
    for (std::size_t i = 0; i < dim; ++i) {
      c.expect(prod(alg.one, e[i]) == e[i], "1+*" + name(i));
      c.expect(prod(e[i], alg.one) == e[i], name(i) + "*1+");
    }
    rep.checks.push_back(c.r);
  }
  {
    Counter c("zero-cells");
    std::vector<std::pair<Piece, Piece>> zeros{{Piece::C, Piece::C}, {Piece::Cp, Piece::Cp}};
    if (alg.extended) zeros.insert(zeros.end(), {{Piece::B, Piece::C}, {Piece::Bp, Piece::Cp}});
    for (auto [p, q] : zeros)
      for (auto i : indices(alg, {p}))
        for (auto j : indices(alg, {q})) c.expect(is_zero(prod(e[i], e[j])), name(i) + "*" + name(j));
    rep.checks.push_back(c.r);
  }
  auto assoc = [&](Counter& c, std::size_t i, std::size_t j, std::size_t k) {
    c.expect(prod(prod(e[i], e[j]), e[k]) == prod(e[i], prod(e[j], e[k])),
             "(" + name(i) + "*" + name(j) + ")*" + name(k));
  };
  const PieceSet calA{Piece::Ap, Piece::Am};
  const auto ai = indices(alg, calA);
  {
    Counter c("associative-subalgebra");
    for (auto i : ai)
      for (auto j : ai) {
        c.expect(alg.supported_in(prod(e[i], e[j]), calA), name(i) + "*" + name(j));
        for (auto k : ai) assoc(c, i, j, k);
      }
    rep.checks.push_back(c.r);
  }
  auto bimodule = [&](const std::string& label, const std::vector<std::size_t>& ring, const PieceSet& mod) {
    Counter c(label);
    const auto mi = indices(alg, mod);
    for (auto a : ring)
      for (auto m : mi) {
        c.expect(alg.supported_in(prod(e[a], e[m]), mod), name(a) + "*" + name(m));
        c.expect(alg.supported_in(prod(e[m], e[a]), mod), name(m) + "*" + name(a));
        for (auto b : ring) {
          assoc(c, a, b, m);
          assoc(c, a, m, b);
          assoc(c, m, a, b);
        }
      }
    rep.checks.push_back(c.r);
  };
  if (data.n == 4) {
    bimodule("bimodule-C+E+C'", ai, {Piece::C, Piece::E, Piece::Cp});
    bimodule("bimodule-B+B'", a_idx, {Piece::B, Piece::Bp});
  } else {
    bimodule("bimodule-C+E", ai, {Piece::C, Piece::E});
    bimodule("bimodule-C'+E'", ai, {Piece::Cp, Piece::Ep});
  }
  {
    Counter c("associative-full", false);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) assoc(c, i, j, k);
    rep.checks.push_back(c.r);
  }
  if (alg.extended) {
    Counter c("bb'-symmetric-split");
    for (auto i : indices(alg, {Piece::B}))
      for (auto j : indices(alg, {Piece::Bp})) {
        const Vector x = prod(e[i], e[j]), y = prod(e[j], e[i]);
        c.expect(alg.supported_in(x + y, {Piece::Ap}), name(i) + "," + name(j) + " sum");
        c.expect(alg.supported_in(x - y, {Piece::Am}), name(i) + "," + name(j) + " difference");
      }
    rep.checks.push_back(c.r);
  }

  // Pairing and D.
  const Pairing pr = build_pairing(data, alg);
  const DAction da{data, alg};
  const std::size_t dd = pr.dim_d;
  std::vector<Subspace> images;
  {
    Counter c("D-spanned-by-pairing");
    std::vector<Vector> all;
    for (auto [p, q] : pr.summands) {
      std::vector<Vector> vs;
      for (auto i : indices(alg, {p}))
        for (auto j : indices(alg, {q})) vs.push_back(pair_value(pr, dim, e[i], e[j]));
      images.push_back(Subspace::span(dd, vs));
      all.insert(all.end(), vs.begin(), vs.end());
    }
    c.expect(Subspace::span(dd, all) == Subspace::full(dd), "span has dimension " + std::to_string(Subspace::span(dd, all).dim()));
    rep.checks.push_back(c.r);
  }
  {
    Counter c("pairing-images-are-ideals");
    for (std::size_t s = 0; s < images.size(); ++s)
      for (std::size_t d = 0; d < dd; ++d)
        for (const auto& v : images[s].basis_vectors())
          c.expect(images[s].contains(da.bracket_d(d, v)),
                   "<" + std::string(piece_name(pr.summands[s].first)) + "," + std::string(piece_name(pr.summands[s].second)) + ">");
    rep.checks.push_back(c.r);
  }
  {
    Counter c("derivation-identity");
    for (std::size_t d = 0; d < dd; ++d)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          const Vector lhs = da.bracket_d(d, pair_value(pr, dim, e[i], e[j]));
          const Vector rhs = pair_value(pr, dim, da.apply(d, e[i]), e[j]) + pair_value(pr, dim, e[i], da.apply(d, e[j]));
          c.expect(lhs == rhs, "d" + std::to_string(d) + " on " + name(i) + "," + name(j));
        }
    rep.checks.push_back(c.r);
  }
  {
    Counter c("D-acts-by-derivations");
    for (std::size_t d = 0; d < dd; ++d)
      for (std::size_t i = 0; i < dim; ++i) {
        c.expect(alg.supported_in(da.apply(d, e[i]), {alg.piece_of(i)}), "d" + std::to_string(d) + " on " + name(i));
        for (std::size_t j = 0; j < dim; ++j) {
          const Vector lhs = da.apply(d, prod(e[i], e[j]));
          const Vector rhs = prod(da.apply(d, e[i]), e[j]) + prod(e[i], da.apply(d, e[j]));
          c.expect(lhs == rhs, "d" + std::to_string(d) + " on " + name(i) + "*" + name(j));
        }
      }
    rep.checks.push_back(c.r);
  }

  // [z⊗α, u⊗b] = zu⊗αb and [u′⊗b′, z⊗α] = zᵗu′⊗b′α against the bracket of L.
  if (l && alg.extended) {
    Counter c("module-action-bracket");
    const int n = data.n;
    // Matrices z with z ⊗ α in L, and their coordinates in the module.
    auto representatives = [&](Piece p) {
      std::vector<Matrix> zs;
      if (p == Piece::Ap || p == Piece::Am) {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            const Matrix u = Matrix::unit(n, i, j), t = Matrix::unit(n, j, i);
            zs.push_back(p == Piece::Am ? u + t : u - t);
          }
        if (p == Piece::Am)
          for (int i = 1; i < n; ++i) zs.push_back(sl_basis(n).element(sl_basis(n).index_h(i)));
      } else {
        zs = model(n, space_module(piece_space(p), n)).basis();
      }
      return zs;
    };
    auto module_coords = [&](Piece p, const Matrix& z) {
      if (p == Piece::Ap || p == Piece::Am) return sl_basis(n).coords(z);
      return model(n, space_module(piece_space(p), n)).coords(z);
    };
    auto place = [&](Space tgt, const Vector& mod, const Vector& coord) {
      Vector v(l->dim());
      const auto& comp = l->component(tgt);
      for (std::size_t k = 0; k < mod.size(); ++k)
        for (std::size_t r = 0; r < coord.size(); ++r) v[comp.offset + k * comp.space_dim + r] += mod[k] * coord[r];
      return v;
    };
    auto image = [&](const Vector& mod, const Vector& coord) {
      return place(Space::B, mod, alg.part(Piece::B, coord)) + place(Space::Bp, mod, alg.part(Piece::Bp, coord));
    };
    for (Piece p : {Piece::Ap, Piece::Am, Piece::C, Piece::E, Piece::Cp}) {
      const Space s = piece_space(p);
      for (const Matrix& z : representatives(p)) {
        const Vector zc = module_coords(p, z);
        // E acts on B through f⁻¹(λ).
        const Matrix z_left = p == Piece::E ? identify(n, ThetaLabel::Lam, ThetaLabel::Lamp, z) : z;
        for (std::size_t xi = 0; xi < alg.dims.at(p); ++xi) {
          const Vector za = place(s, zc, unit_vector(alg.dims.at(p), xi));
          for (int k = 0; k < n; ++k) {
            Matrix u(n, 1);
            u(k, 0) = 1;
            const Vector zu = (z_left * u).column_vector(0);
            const Vector ztu = (z.transpose() * u).column_vector(0);
            for (std::size_t b = 0; b < alg.dims.at(Piece::B); ++b) {
              const Vector ub = place(Space::B, u.column_vector(0), unit_vector(alg.dims.at(Piece::B), b));
              const Vector ab = prod(e[alg.index(p, xi)], e[alg.index(Piece::B, b)]);
              c.expect(l->sc.bracket(za, ub) == image(zu, ab), name(alg.index(p, xi)) + " on B");
            }
            for (std::size_t b = 0; b < alg.dims.at(Piece::Bp); ++b) {
              const Vector ub = place(Space::Bp, u.column_vector(0), unit_vector(alg.dims.at(Piece::Bp), b));
              const Vector ba = prod(e[alg.index(Piece::Bp, b)], e[alg.index(p, xi)]);
              c.expect(l->sc.bracket(ub, za) == image(ztu, ba), "B' on " + name(alg.index(p, xi)));
            }
          }
        }
      }
    }
    rep.checks.push_back(c.r);
  }

  // Support of products against the printed cells (reported).
  const auto cells = printed_cells(data.n, alg.extended);
  std::set<std::string> dev;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Piece p = alg.piece_of(i), q = alg.piece_of(j);
      const auto it = cells.find({p, q});
      if (it == cells.end()) continue;
      const Vector v = prod(e[i], e[j]);
      for (std::size_t t = 0; t < dim; ++t)
        if (sgn(v[t]) != 0 && !it->second.count(alg.piece_of(t)))
          dev.insert(std::string(piece_name(p)) + "*" + std::string(piece_name(q)) + " -> " + std::string(piece_name(alg.piece_of(t))));
    }
  rep.table_deviations.assign(dev.begin(), dev.end());
  return rep;
}

}  // namespace thetagr
