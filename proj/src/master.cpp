#include <algorithm>
#include <mutex>

#include "thetagr/graded.hpp"
#include "thetagr/hom.hpp"
#include "thetagr/tensor.hpp"

namespace thetagr {

std::string_view space_name(Space s) {
  switch (s) {
    case Space::A: return "A";
    case Space::B: return "B";
    case Space::Bp: return "B'";
    case Space::C: return "C";
    case Space::Cp: return "C'";
    case Space::E: return "E";
    case Space::Ep: return "E'";
    case Space::D: return "D";
  }
  return "?";
}

std::optional<Space> parse_space(std::string_view s) {
  for (auto sp : {Space::A, Space::B, Space::Bp, Space::C, Space::Cp, Space::E, Space::Ep, Space::D})
    if (space_name(sp) == s) return sp;
  return std::nullopt;
}

ThetaLabel space_module(Space s, int n) {
  switch (s) {
    case Space::A: return ThetaLabel::Adj;
    case Space::B: return ThetaLabel::V;
    case Space::Bp: return ThetaLabel::Vp;
    case Space::C: return ThetaLabel::S;
    case Space::Cp: return ThetaLabel::Sp;
    case Space::E: return ThetaLabel::Lam;
    case Space::Ep:
      if (n != 3) throw std::invalid_argument("E' exists only for n = 3");
      return ThetaLabel::Lamp;
    case Space::D: return ThetaLabel::T;
  }
  return ThetaLabel::T;
}

std::vector<Space> spaces_for(int n) {
  require_rank(n);
  if (n == 3) return {Space::A, Space::C, Space::Cp, Space::E, Space::Ep, Space::D};
  return {Space::A, Space::B, Space::Bp, Space::C, Space::Cp, Space::E, Space::D};
}

std::string_view kind_name(ProductKind k) {
  switch (k) {
    case ProductKind::Plain: return "plain";
    case ProductKind::Circ: return "circ";
    case ProductKind::Bracket: return "bracket";
  }
  return "?";
}

std::string ProductKey::to_string() const {
  return "(" + std::string(space_name(x)) + "," + std::string(space_name(y)) + ")->" + std::string(space_name(z)) +
         (kind == ProductKind::Plain ? "" : "[" + std::string(kind_name(kind)) + "]");
}

std::size_t CoordinateData::dim(Space s) const {
  auto it = dims.find(s);
  return it == dims.end() ? 0 : it->second;
}

const Matrix& CoordinateData::product(const ProductKey& k) const {
  auto it = products.find(k);
  if (it == products.end()) throw MissingProduct(k);
  return it->second;
}

Vector CoordinateData::apply(const ProductKey& k, const Vector& a, const Vector& b) const {
  const Matrix& m = product(k);
  const std::size_t dy = dim(k.y);
  Vector out(m.rows());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (sgn(m(r, i * dy + j)) != 0) out[r] += ab * m(r, i * dy + j);
    }
  }
  return out;
}

std::vector<ProductKey> required_products(int n) {
  std::vector<ProductKey> keys;
  for (const auto& line : master_lines(n))
    for (const auto& t : line.terms)
      if (std::find(keys.begin(), keys.end(), t.key) == keys.end()) keys.push_back(t.key);
  return keys;
}

CoordinateData CoordinateData::zero(int n, std::map<Space, std::size_t> dims) {
  CoordinateData d;
  d.n = n;
  for (auto s : spaces_for(n)) d.dims[s] = dims.count(s) ? dims.at(s) : 0;
  for (const auto& k : required_products(n)) d.products[k] = Matrix(d.dim(k.z), d.dim(k.x) * d.dim(k.y));
  return d;
}

namespace {

using L = ThetaLabel;
using K = ProductKind;
using Fn = std::function<Matrix(const Matrix&, const Matrix&)>;

Matrix scalar(const Rational& r) { return Matrix{{r}}; }
Matrix tr_free(const Matrix& m) { return m - Matrix::identity(m.rows()) * (m.trace() / static_cast<long>(m.rows())); }

struct Builder {
  int n;
  std::vector<MasterLine> lines;

  MasterTerm term(Space p, Space q, Space r, K kind, Rational c, std::string text, Fn fn, L value) {
    const Matrix phi = realize_bilinear(n, space_module(p, n), space_module(q, n), space_module(r, n), {text, fn, value});
    return {phi, {p, q, r, kind}, c, std::move(text)};
  }
  void line(Space p, Space q, std::vector<MasterTerm> terms) { lines.push_back({p, q, std::move(terms)}); }
};

void add_common(Builder& b) {
  using S = Space;
  const Rational half(1, 2);
  b.line(S::A, S::A,
         {b.term(S::A, S::A, S::A, K::Bracket, half, "(x o y)*[a1,a2]/2", [](const Matrix& x, const Matrix& y) { return circ(x, y); }, L::Adj),
          b.term(S::A, S::A, S::A, K::Circ, half, "[x,y]*(a1 o a2)/2", [](const Matrix& x, const Matrix& y) { return bracket(x, y); }, L::Adj),
          b.term(S::A, S::A, S::D, K::Plain, 1, "(x|y)<a1,a2>", [](const Matrix& x, const Matrix& y) { return scalar(trace_form(x, y)); }, L::T)});
  b.line(S::C, S::Cp,
         {b.term(S::C, S::Cp, S::A, K::Plain, 1, "(ss'-(s|s')I)*(c,c')_A", [](const Matrix& s, const Matrix& t) { return tr_free(s * t); }, L::Adj),
          b.term(S::C, S::Cp, S::D, K::Plain, 1, "(s|s')<c,c'>", [](const Matrix& s, const Matrix& t) { return scalar(trace_form(s, t)); }, L::T)});
  b.line(S::A, S::C,
         {b.term(S::A, S::C, S::C, K::Plain, half, "(xs+sx^t)*(a,c)_C/2", [](const Matrix& x, const Matrix& s) { return x * s + s * x.transpose(); }, L::S),
          b.term(S::A, S::C, S::E, K::Plain, half, "(xs-sx^t)*(a,c)_E/2", [](const Matrix& x, const Matrix& s) { return x * s - s * x.transpose(); }, L::Lam)});
}

void add_d_lines(Builder& b) {
  for (auto s : spaces_for(b.n)) {
    const std::size_t dm = label_dim(space_module(s, b.n), b.n);
    b.lines.push_back({Space::D, s, {{Matrix::identity(dm), {Space::D, s, s, K::Plain}, 1, "[d, m*x] = m*(dx)"}}});
  }
}

std::vector<MasterLine> lines3() {
  using S = Space;
  Builder b{3, {}};
  const Rational half(1, 2);
  auto f = [](const Matrix& lp) { return identify(3, L::Lamp, L::V, lp); };
  auto g = [](const Matrix& l) { return identify(3, L::Lam, L::Vp, l); };
  add_common(b);
  b.line(S::E, S::Ep,
         {b.term(S::E, S::Ep, S::A, K::Plain, 1, "(ll'-(l|l')I)*(e,e')_A", [](const Matrix& l, const Matrix& m) { return tr_free(l * m); }, L::Adj),
          b.term(S::E, S::Ep, S::D, K::Plain, 1, "(l|l')<e,e'>", [](const Matrix& l, const Matrix& m) { return scalar(trace_form(l, m)); }, L::T)});
  b.line(S::E, S::E,
         {b.term(S::E, S::E, S::Cp, K::Plain, half, "(g(l1)g(l2)^t+g(l2)g(l1)^t)*(e1,e2)_C'/2",
                 [g](const Matrix& a, const Matrix& c) { return g(a) * g(c).transpose() + g(c) * g(a).transpose(); }, L::Sp),
          b.term(S::E, S::E, S::Ep, K::Plain, half, "(g(l1)g(l2)^t-g(l2)g(l1)^t)*(e1,e2)_E'/2",
                 [g](const Matrix& a, const Matrix& c) { return g(a) * g(c).transpose() - g(c) * g(a).transpose(); }, L::Lamp)});
  b.line(S::Ep, S::Ep,
         {b.term(S::Ep, S::Ep, S::C, K::Plain, half, "(f(l1')f(l2')^t+f(l2')f(l1')^t)*(e1',e2')_C/2",
                 [f](const Matrix& a, const Matrix& c) { return f(a) * f(c).transpose() + f(c) * f(a).transpose(); }, L::S),
          b.term(S::Ep, S::Ep, S::E, K::Plain, half, "(f(l1')f(l2')^t-f(l2')f(l1')^t)*(e1',e2')_E/2",
                 [f](const Matrix& a, const Matrix& c) { return f(a) * f(c).transpose() - f(c) * f(a).transpose(); }, L::Lam)});
  b.line(S::A, S::E,
         {b.term(S::A, S::E, S::E, K::Plain, half, "(xl+lx^t)*(a,e)_E/2", [](const Matrix& x, const Matrix& l) { return x * l + l * x.transpose(); }, L::Lam),
          b.term(S::A, S::E, S::C, K::Plain, half, "(xl-lx^t)*(a,e)_C/2", [](const Matrix& x, const Matrix& l) { return x * l - l * x.transpose(); }, L::S)});
  b.line(S::Cp, S::A,
         {b.term(S::Cp, S::A, S::Cp, K::Plain, half, "(s'x+x^ts')*(c',a)_C'/2", [](const Matrix& s, const Matrix& x) { return s * x + x.transpose() * s; }, L::Sp),
          b.term(S::Cp, S::A, S::Ep, K::Plain, half, "(s'x-x^ts')*(c',a)_E'/2", [](const Matrix& s, const Matrix& x) { return s * x - x.transpose() * s; }, L::Lamp)});
  b.line(S::Ep, S::A,
         {b.term(S::Ep, S::A, S::Ep, K::Plain, half, "(l'x+x^tl')*(e',a)_E'/2", [](const Matrix& l, const Matrix& x) { return l * x + x.transpose() * l; }, L::Lamp),
          b.term(S::Ep, S::A, S::Cp, K::Plain, half, "(l'x-x^tl')*(e',a)_C'/2", [](const Matrix& l, const Matrix& x) { return l * x - x.transpose() * l; }, L::Sp)});
  b.line(S::C, S::Ep, {b.term(S::C, S::Ep, S::A, K::Plain, 1, "sl'*(c,e')_A", [](const Matrix& s, const Matrix& l) { return s * l; }, L::Adj)});
  b.line(S::Cp, S::E, {b.term(S::Cp, S::E, S::A, K::Plain, 1, "ls'*(c',e)_A", [](const Matrix& s, const Matrix& l) { return l * s; }, L::Adj)});
  b.line(S::Cp, S::Ep, {b.term(S::Cp, S::Ep, S::E, K::Plain, 1, "s'f(l')*(c',e')_E", [f](const Matrix& s, const Matrix& l) { return s * f(l); }, L::Vp)});
  b.line(S::E, S::C, {b.term(S::E, S::C, S::Ep, K::Plain, 1, "sg(l)*(e,c)_E'", [g](const Matrix& l, const Matrix& s) { return s * g(l); }, L::V)});
  add_d_lines(b);
  return b.lines;
}

std::vector<MasterLine> lines4() {
  using S = Space;
  Builder b{4, {}};
  const Rational half(1, 2);
  auto finv = [](const Matrix& l) { return identify(4, L::Lam, L::Lamp, l); };
  auto fwd = [](const Matrix& lp) { return identify(4, L::Lamp, L::Lam, lp); };
  add_common(b);
  b.line(S::B, S::Bp,
         {b.term(S::B, S::Bp, S::A, K::Plain, 1, "(uv'^t-tr(uv'^t)/n I)*(b,b')_A", [](const Matrix& u, const Matrix& v) { return tr_free(u * v.transpose()); }, L::Adj),
          b.term(S::B, S::Bp, S::D, K::Plain, half, "(2/n)tr(uv'^t)<b,b'>", [](const Matrix& u, const Matrix& v) { return scalar((u * v.transpose()).trace()); }, L::T)});
  b.line(S::E, S::E,
         {b.term(S::E, S::E, S::A, K::Plain, 1, "(l1 f^-1(l2)-(l1|f^-1(l2))I)*(e1,e2)_A", [finv](const Matrix& a, const Matrix& c) { return tr_free(a * finv(c)); }, L::Adj),
          b.term(S::E, S::E, S::D, K::Plain, 1, "(l1|f^-1(l2))<e1,e2>", [finv](const Matrix& a, const Matrix& c) { return scalar(trace_form(a, finv(c))); }, L::T)});
  b.line(S::B, S::B,
         {b.term(S::B, S::B, S::C, K::Plain, half, "(uv^t+vu^t)*(b1,b2)_C/2", [](const Matrix& u, const Matrix& v) { return u * v.transpose() + v * u.transpose(); }, L::S),
          b.term(S::B, S::B, S::E, K::Plain, half, "(uv^t-vu^t)*(b1,b2)_E/2", [](const Matrix& u, const Matrix& v) { return u * v.transpose() - v * u.transpose(); }, L::Lam)});
  b.line(S::Bp, S::Bp,
         {b.term(S::Bp, S::Bp, S::Cp, K::Plain, half, "(u'v'^t+v'u'^t)*(b1',b2')_C'/2", [](const Matrix& u, const Matrix& v) { return u * v.transpose() + v * u.transpose(); }, L::Sp),
          b.term(S::Bp, S::Bp, S::E, K::Plain, half, "f(u'v'^t-v'u'^t)*(b1',b2')_E/2", [fwd](const Matrix& u, const Matrix& v) { return fwd(u * v.transpose() - v * u.transpose()); }, L::Lam)});
  b.line(S::A, S::E,
         {b.term(S::A, S::E, S::E, K::Plain, half, "(xl+lx^t)*(a,e)_E/2", [](const Matrix& x, const Matrix& l) { return x * l + l * x.transpose(); }, L::Lam),
          b.term(S::A, S::E, S::C, K::Plain, half, "(xl-lx^t)*(a,e)_C/2", [](const Matrix& x, const Matrix& l) { return x * l - l * x.transpose(); }, L::S),
          b.term(S::A, S::E, S::Cp, K::Plain, half, "(f^-1(l)x-x^tf^-1(l))*(a,e)_C'/2",
                 [finv](const Matrix& x, const Matrix& l) {
                   Matrix m = finv(l);
                   return m * x - x.transpose() * m;
                 }, L::Sp)});
  b.line(S::Cp, S::A,
         {b.term(S::Cp, S::A, S::Cp, K::Plain, half, "(s'x+x^ts')*(c',a)_C'/2", [](const Matrix& s, const Matrix& x) { return s * x + x.transpose() * s; }, L::Sp),
          b.term(S::Cp, S::A, S::E, K::Plain, half, "f(s'x-x^ts')*(c',a)_E/2", [fwd](const Matrix& s, const Matrix& x) { return fwd(s * x - x.transpose() * s); }, L::Lam)});
  b.line(S::C, S::E, {b.term(S::C, S::E, S::A, K::Plain, 1, "s f^-1(l)*(c,e)_A", [finv](const Matrix& s, const Matrix& l) { return s * finv(l); }, L::Adj)});
  b.line(S::Cp, S::E, {b.term(S::Cp, S::E, S::A, K::Plain, 1, "ls'*(c',e)_A", [](const Matrix& s, const Matrix& l) { return l * s; }, L::Adj)});
  b.line(S::A, S::B, {b.term(S::A, S::B, S::B, K::Plain, 1, "xu*(a,b)_B", [](const Matrix& x, const Matrix& u) { return x * u; }, L::V)});
  b.line(S::Cp, S::B, {b.term(S::Cp, S::B, S::Bp, K::Plain, 1, "s'u*(c',b)_B'", [](const Matrix& s, const Matrix& u) { return s * u; }, L::Vp)});
  b.line(S::E, S::B, {b.term(S::E, S::B, S::Bp, K::Plain, 1, "f^-1(l)u*(e,b)_B'", [finv](const Matrix& l, const Matrix& u) { return finv(l) * u; }, L::Vp)});
  b.line(S::Bp, S::A, {b.term(S::Bp, S::A, S::Bp, K::Plain, 1, "x^tu'*(b',a)_B'", [](const Matrix& u, const Matrix& x) { return x.transpose() * u; }, L::Vp)});
  b.line(S::Bp, S::C, {b.term(S::Bp, S::C, S::B, K::Plain, 1, "su'*(b',c)_B", [](const Matrix& u, const Matrix& s) { return s * u; }, L::V)});
  b.line(S::Bp, S::E, {b.term(S::Bp, S::E, S::B, K::Plain, -1, "-lu'*(b',e)_B", [](const Matrix& u, const Matrix& l) { return l * u; }, L::V)});
  add_d_lines(b);
  return b.lines;
}

std::vector<MasterLine> optional3() {
  std::vector<MasterLine> out;
  for (auto [p, z] : {std::pair{Space::C, Space::Cp}, std::pair{Space::Cp, Space::C}}) {
    auto h = hom_space(space_module(p, 3), space_module(p, 3), space_module(z, 3), 3);
    out.push_back({p, p, {{h.basis.at(0), {p, p, z, K::Plain}, 1, "equivariant basis map, forbidden by the S-condition"}}});
  }
  return out;
}

}  // namespace

const std::vector<MasterLine>& master_lines(int n) {
  require_rank(n);
  static std::once_flag f3, f4;
  static std::vector<MasterLine> l3, l4;
  if (n == 3) {
    std::call_once(f3, [] { l3 = lines3(); });
    return l3;
  }
  std::call_once(f4, [] { l4 = lines4(); });
  return l4;
}

const std::vector<MasterLine>& optional_lines(int n) {
  static const std::vector<MasterLine> none;
  if (n != 3) return none;
  static std::once_flag once;
  static std::vector<MasterLine> o3;
  std::call_once(once, [] { o3 = optional3(); });
  return o3;
}

}  // namespace thetagr
