#include <array>
#include <map>

#include "thetagr/coordalg.hpp"

namespace thetagr {

std::string_view piece_name(Piece p) {
  switch (p) {
    case Piece::Ap: return "A+";
    case Piece::Am: return "A-";
    case Piece::B: return "B";
    case Piece::Bp: return "B'";
    case Piece::C: return "C";
    case Piece::Cp: return "C'";
    case Piece::E: return "E";
    case Piece::Ep: return "E'";
  }
  return "?";
}

Space piece_space(Piece p) {
  switch (p) {
    case Piece::Ap:
    case Piece::Am: return Space::A;
    case Piece::B: return Space::B;
    case Piece::Bp: return Space::Bp;
    case Piece::C: return Space::C;
    case Piece::Cp: return Space::Cp;
    case Piece::E: return Space::E;
    case Piece::Ep: return Space::Ep;
  }
  return Space::A;
}

int involution_sign(Piece p) {
  switch (p) {
    case Piece::Am:
    case Piece::C:
    case Piece::Cp: return -1;
    default: return 1;
  }
}

std::pair<Matrix, Matrix> ASplit::split(const Matrix& x) {
  const Matrix t = x.transpose();
  const Rational half(1, 2);
  return {(x + t) * half, (x - t) * half};
}

ASplit split_A(const CoordinateData& data) {
  ASplit s;
  s.n = data.n;
  s.dim_a = data.dim(Space::A);
  const SlBasis& b = sl_basis(data.n);
  std::vector<Vector> plus, minus;
  for (const auto& x : b.elements()) {
    auto [p, m] = ASplit::split(x);
    plus.push_back(b.coords(p));
    minus.push_back(b.coords(m));
  }
  s.g_plus = Subspace::span(b.dim(), plus);
  s.g_minus = Subspace::span(b.dim(), minus);
  return s;
}

Piece CoordAlgebra::piece_of(std::size_t i) const {
  for (auto p : pieces)
    if (i >= offsets.at(p) && i < offsets.at(p) + dims.at(p)) return p;
  throw std::out_of_range("coordinate index out of range");
}

Vector CoordAlgebra::product(const Vector& a, const Vector& b) const {
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j)
      if (sgn(b[j]) != 0) axpy(out, a[i] * b[j], mul(i, j));
  }
  return out;
}

Vector CoordAlgebra::lift(Piece p, const Vector& c) const {
  if (c.size() != dims.at(p)) throw DimensionError("lift: wrong length for piece");
  Vector v(dim);
  for (std::size_t k = 0; k < c.size(); ++k) v[offsets.at(p) + k] = c[k];
  return v;
}

Vector CoordAlgebra::part(Piece p, const Vector& v) const {
  return Vector(v.begin() + static_cast<long>(offsets.at(p)), v.begin() + static_cast<long>(offsets.at(p) + dims.at(p)));
}

bool CoordAlgebra::supported_in(const Vector& v, const std::set<Piece>& ps) const {
  for (std::size_t i = 0; i < dim; ++i)
    if (sgn(v[i]) != 0 && !ps.count(piece_of(i))) return false;
  return true;
}

std::string CoordAlgebra::basis_name(std::size_t i) const {
  const Piece p = piece_of(i);
  return std::string(piece_name(p)) + "#" + std::to_string(i - offsets.at(p));
}

namespace {

enum class Role { Halved, Left, Right, Direct, Pairing, DAction };

// A term c·T(z1,z2)⊗P with T = p·z1z2 + q·z2z1 written for representatives
// z1, z2 (z1z2ᵗ for column vectors); pq[0] when the adjoint argument is
// symmetric, pq[1] when it is skew. Terms computed on primed matrices (S′, Λ′,
// or inside f) take x′ = −xᵗ as the representative of x.
struct Rule {
  Role role = Role::Halved;
  std::array<std::array<int, 2>, 2> pq{};
  int sign = 1;
};

Rule halved(int p, int q) { return {Role::Halved, {{{p, q}, {p, q}}}, 1}; }
Rule halved(int ps, int qs, int pk, int qk) { return {Role::Halved, {{{ps, qs}, {pk, qk}}}, 1}; }
Rule role(Role r, int sign = 1) { return {r, {}, sign}; }

const std::map<ProductKey, Rule>& rules(int n) {
  using S = Space;
  static const auto build = [](int n) {
    std::map<ProductKey, Rule> r;
    auto key = [](S x, S y, S z, ProductKind k = ProductKind::Plain) { return ProductKey{x, y, z, k}; };
    r[key(S::A, S::A, S::A, ProductKind::Bracket)] = halved(1, 1);
    r[key(S::A, S::A, S::A, ProductKind::Circ)] = halved(1, -1);
    r[key(S::A, S::A, S::D)] = role(Role::Pairing);
    r[key(S::C, S::Cp, S::A)] = halved(1, 0);
    r[key(S::C, S::Cp, S::D)] = role(Role::Pairing);
    r[key(S::A, S::C, S::C)] = halved(1, 1, 1, -1);
    r[key(S::A, S::C, S::E)] = halved(1, -1, 1, 1);
    r[key(S::A, S::E, S::E)] = halved(1, 1, 1, -1);
    r[key(S::A, S::E, S::C)] = halved(1, -1, 1, 1);
    r[key(S::Cp, S::A, S::Cp)] = halved(-1, -1, 1, -1);
    r[key(S::Cp, S::E, S::A)] = halved(0, 1);
    if (n == 3) {
      r[key(S::E, S::Ep, S::A)] = halved(1, 0);
      r[key(S::E, S::Ep, S::D)] = role(Role::Pairing);
      r[key(S::E, S::E, S::Cp)] = halved(1, 1);
      r[key(S::E, S::E, S::Ep)] = halved(1, -1);
      r[key(S::Ep, S::Ep, S::C)] = halved(1, 1);
      r[key(S::Ep, S::Ep, S::E)] = halved(1, -1);
      r[key(S::Cp, S::A, S::Ep)] = halved(-1, 1, 1, 1);
      r[key(S::Ep, S::A, S::Ep)] = halved(-1, -1, 1, -1);
      r[key(S::Ep, S::A, S::Cp)] = halved(-1, 1, 1, 1);
      r[key(S::C, S::Ep, S::A)] = halved(1, 0);
      r[key(S::Cp, S::Ep, S::E)] = role(Role::Direct);
      r[key(S::E, S::C, S::Ep)] = role(Role::Direct);
    } else {
      r[key(S::B, S::Bp, S::A)] = halved(1, 0);
      r[key(S::B, S::Bp, S::D)] = role(Role::Pairing);
      r[key(S::E, S::E, S::A)] = halved(1, 0);
      r[key(S::E, S::E, S::D)] = role(Role::Pairing);
      r[key(S::B, S::B, S::C)] = halved(1, 1);
      r[key(S::B, S::B, S::E)] = halved(1, -1);
      r[key(S::Bp, S::Bp, S::Cp)] = halved(1, 1);
      r[key(S::Bp, S::Bp, S::E)] = halved(1, -1);
      r[key(S::A, S::E, S::Cp)] = halved(1, -1, 1, 1);
      r[key(S::Cp, S::A, S::E)] = halved(-1, 1, 1, 1);
      r[key(S::C, S::E, S::A)] = halved(1, 0);
      r[key(S::A, S::B, S::B)] = role(Role::Left);
      r[key(S::Cp, S::B, S::Bp)] = role(Role::Left);
      r[key(S::E, S::B, S::Bp)] = role(Role::Left);
      r[key(S::Bp, S::A, S::Bp)] = role(Role::Right);
      r[key(S::Bp, S::C, S::B)] = role(Role::Right);
      // −λu′ = λᵗu′
      r[key(S::Bp, S::E, S::B)] = role(Role::Right, -1);
    }
    for (auto s : spaces_for(n)) r[key(S::D, s, s)] = role(Role::DAction);
    return r;
  };
  static const std::map<ProductKey, Rule> r3 = build(3), r4 = build(4);
  return n == 3 ? r3 : r4;
}

bool symmetric_piece(Piece p) { return involution_sign(p) < 0 || p == Piece::B || p == Piece::Bp; }

std::vector<Piece> pieces_of(Space s) {
  switch (s) {
    case Space::A: return {Piece::Am, Piece::Ap};
    case Space::B: return {Piece::B};
    case Space::Bp: return {Piece::Bp};
    case Space::C: return {Piece::C};
    case Space::Cp: return {Piece::Cp};
    case Space::E: return {Piece::E};
    case Space::Ep: return {Piece::Ep};
    case Space::D: break;
  }
  return {};
}

bool is_b(Space s) { return s == Space::B || s == Space::Bp; }

CoordAlgebra build(const CoordinateData& data, bool extended) {
  const int n = data.n;
  require_rank(n);
  if (n == 3)
    for (const auto& line : optional_lines(3))
      for (const auto& t : line.terms)
        if (data.has(t.key) && !data.product(t.key).is_zero())
          throw ConditionViolated("the product " + t.key.to_string() + " is nonzero");

  CoordAlgebra a;
  a.n = n;
  a.extended = extended;
  a.pieces = n == 3 ? std::vector<Piece>{Piece::Ap, Piece::Am, Piece::C, Piece::Cp, Piece::E, Piece::Ep}
                    : std::vector<Piece>{Piece::Ap, Piece::Am, Piece::C, Piece::E, Piece::Cp};
  if (extended) {
    a.pieces.push_back(Piece::B);
    a.pieces.push_back(Piece::Bp);
  }
  for (auto p : a.pieces) {
    a.offsets[p] = a.dim;
    a.dims[p] = data.dim(piece_space(p));
    a.dim += a.dims[p];
  }
  if (data.one.size() != data.dim(Space::A)) throw DimensionError("distinguished element has the wrong length");
  a.one = a.lift(Piece::Ap, data.one);

  std::vector<std::map<std::uint32_t, Rational>> acc(a.dim * a.dim);
  auto add = [&](std::size_t i, std::size_t j, std::size_t t, const Rational& v) {
    if (sgn(v) != 0) acc[i * a.dim + j][static_cast<std::uint32_t>(t)] += v;
  };
  const Rational half(1, 2);
  const auto& rs = rules(n);
  for (const auto& line : master_lines(n))
    for (const auto& term : line.terms) {
      const ProductKey& key = term.key;
      const Rule& rule = rs.at(key);
      if (rule.role == Role::Pairing || rule.role == Role::DAction) continue;
      if (!extended && (is_b(key.x) || is_b(key.y) || is_b(key.z))) continue;
      const Matrix& k = data.product(key);
      const std::size_t dy = data.dim(key.y);
      const bool reverse = line.p != line.q;
      for (Piece p1 : pieces_of(key.x))
        for (Piece p2 : pieces_of(key.y)) {
          const bool s1 = symmetric_piece(p1), s2 = symmetric_piece(p2);
          // Parity of the adjoint argument selects the (p, q) pair.
          std::size_t e = 0;
          if (key.x == Space::A && key.y != Space::A) e = s1 ? 0 : 1;
          if (key.y == Space::A && key.x != Space::A) e = s2 ? 0 : 1;
          const int p = rule.pq[e][0], q = rule.pq[e][1];
          Piece t_diamond{}, t_comm{};
          if (key.z == Space::A) {
            t_diamond = s1 == s2 ? Piece::Am : Piece::Ap;
            t_comm = s1 == s2 ? Piece::Ap : Piece::Am;
          } else {
            t_diamond = t_comm = pieces_of(key.z).front();
          }
          for (std::size_t x1 = 0; x1 < data.dim(key.x); ++x1)
            for (std::size_t x2 = 0; x2 < dy; ++x2) {
              const std::size_t i = a.index(p1, x1), j = a.index(p2, x2);
              for (std::size_t r = 0; r < k.rows(); ++r) {
                const Rational v = term.coef * k(r, x1 * dy + x2);
                if (sgn(v) == 0) continue;
                switch (rule.role) {
                  case Role::Halved: {
                    // α1α2 = [α1,α2]/2 + (α1∘α2)/2, [ ] from the ◇ part and ∘ from the commutator part.
                    const Rational br = v * (p + q), ci = v * (p - q);
                    add(i, j, a.index(t_diamond, r), half * br);
                    add(i, j, a.index(t_comm, r), half * ci);
                    if (reverse) {
                      add(j, i, a.index(t_diamond, r), -half * br);
                      add(j, i, a.index(t_comm, r), half * ci);
                    }
                    break;
                  }
                  case Role::Left:
                    add(i, j, a.index(t_diamond, r), v * rule.sign);
                    add(j, i, a.index(t_diamond, r), v * rule.sign * involution_sign(p1));
                    break;
                  case Role::Right:
                    add(i, j, a.index(t_diamond, r), v * rule.sign);
                    add(j, i, a.index(t_diamond, r), v * rule.sign * involution_sign(p2));
                    break;
                  case Role::Direct:
                    add(i, j, a.index(t_diamond, r), v);
                    add(j, i, a.index(t_diamond, r), -v);
                    break;
                  default: break;
                }
              }
            }
        }
    }
  a.table.resize(a.dim * a.dim);
  for (std::size_t c = 0; c < acc.size(); ++c)
    for (auto& [t, v] : acc[c])
      if (sgn(v) != 0) a.table[c].emplace_back(t, std::move(v));
  return a;
}

}  // namespace

CoordAlgebra build_frak_a(const CoordinateData& data) { return build(data, false); }

CoordAlgebra build_frak_b(const CoordinateData& data) {
  if (data.n != 4) throw std::invalid_argument("the extension by B and B' exists only for n = 4");
  return build(data, true);
}

std::vector<int> involution_gamma(const CoordAlgebra& a) {
  std::vector<int> s(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) s[i] = involution_sign(a.piece_of(i));
  return s;
}

std::vector<int> involution_eta(const CoordAlgebra& b) { return involution_gamma(b); }

}  // namespace thetagr
