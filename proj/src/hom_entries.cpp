#include "thetagr/hom.hpp"

namespace thetagr {

namespace {

using L = ThetaLabel;
using Fn = std::function<Matrix(const Matrix&, const Matrix&)>;

Matrix scalar(const Rational& r) { return Matrix{{r}}; }
Matrix ident(std::size_t n) { return Matrix::identity(n); }
Matrix tr_free(const Matrix& m) { return m - ident(m.rows()) * (m.trace() / static_cast<long>(m.rows())); }

Formula F(std::string text, Fn fn, L value) { return {std::move(text), std::move(fn), value}; }

PaperHomEntry E(int n, L x, L y, L z, std::vector<Formula> fs, std::string printed = {}, std::string note = {}) {
  return {n, x, y, z, std::move(fs), std::move(printed), std::move(note)};
}

std::vector<PaperHomEntry> entries3() {
  const int n = 3;
  auto f = [](const Matrix& lp) { return identify(3, L::Lamp, L::V, lp); };
  auto g = [](const Matrix& l) { return identify(3, L::Lam, L::Vp, l); };
  auto ggt = [g](const Matrix& a, const Matrix& b) { return g(a) * g(b).transpose(); };
  auto fft = [f](const Matrix& a, const Matrix& b) { return f(a) * f(b).transpose(); };
  std::vector<PaperHomEntry> v;
  v.push_back(E(n, L::Adj, L::Adj, L::Adj,
                {F("x*y -> xy-yx", [](const Matrix& x, const Matrix& y) { return bracket(x, y); }, L::Adj),
                 F("x*y -> xy+yx-(2/3)tr(xy)I", [](const Matrix& x, const Matrix& y) { return circ(x, y); }, L::Adj)}));
  v.push_back(E(n, L::Lam, L::Lamp, L::Adj,
                {F("l*l' -> ll'-tr(ll')/3 I", [](const Matrix& a, const Matrix& b) { return tr_free(a * b); }, L::Adj)}));
  v.push_back(E(n, L::Lam, L::Lam, L::Lamp,
                {F("l1*l2 -> g(l1)g(l2)^t-g(l2)g(l1)^t", [ggt](const Matrix& a, const Matrix& b) { return ggt(a, b) - ggt(b, a); }, L::Lamp)},
                "", "printed with f applied to primed arguments; realized through g on Lam arguments"));
  v.push_back(E(n, L::Lam, L::Lam, L::Sp,
                {F("l1*l2 -> g(l1)g(l2)^t+g(l2)g(l1)^t", [ggt](const Matrix& a, const Matrix& b) { return ggt(a, b) + ggt(b, a); }, L::Sp)},
                "", "printed with f applied to primed arguments; realized through g on Lam arguments"));
  v.push_back(E(n, L::Lamp, L::Lamp, L::Lam,
                {F("l1'*l2' -> f(l1')f(l2')^t-f(l2')f(l1')^t", [fft](const Matrix& a, const Matrix& b) { return fft(a, b) - fft(b, a); }, L::Lam)},
                "Hom(Lam*Lam,Lam)", "the g-formula lands in Lam'; the f-formula on Lam' arguments spans this space"));
  v.push_back(E(n, L::Lamp, L::Lamp, L::S,
                {F("l1'*l2' -> f(l1')f(l2')^t+f(l2')f(l1')^t", [fft](const Matrix& a, const Matrix& b) { return fft(a, b) + fft(b, a); }, L::S)},
                "Hom(Lam*Lam,S)", "the g-formula lands in S'; the f-formula on Lam' arguments spans this space"));
  v.push_back(E(n, L::S, L::Lamp, L::Adj, {F("s*l' -> sl'", [](const Matrix& s, const Matrix& l) { return s * l; }, L::Adj)}));
  v.push_back(E(n, L::Sp, L::Lam, L::Adj, {F("s'*l -> ls'", [](const Matrix& s, const Matrix& l) { return l * s; }, L::Adj)}, "",
                "printed as s'l, which is not equivariant; its negative transpose ls' is"));
  v.push_back(E(n, L::S, L::Sp, L::Adj,
                {F("s*s' -> ss'-tr(ss')/3 I", [](const Matrix& a, const Matrix& b) { return tr_free(a * b); }, L::Adj)}));
  v.push_back(E(n, L::Lamp, L::Adj, L::Lamp,
                {F("l'*x -> l'x+x^t l'", [](const Matrix& l, const Matrix& x) { return l * x + x.transpose() * l; }, L::Lamp)}));
  v.push_back(E(n, L::S, L::Lam, L::Lamp, {F("s*l -> s g(l)", [g](const Matrix& s, const Matrix& l) { return s * g(l); }, L::V)}));
  v.push_back(E(n, L::Adj, L::Lam, L::S,
                {F("x*l -> xl-lx^t", [](const Matrix& x, const Matrix& l) { return x * l - l * x.transpose(); }, L::S)}));
  v.push_back(E(n, L::Adj, L::Lam, L::Lam,
                {F("x*l -> xl+lx^t", [](const Matrix& x, const Matrix& l) { return x * l + l * x.transpose(); }, L::Lam)}));
  v.push_back(E(n, L::Sp, L::Lamp, L::Lam, {F("s'*l' -> s'f(l')", [f](const Matrix& s, const Matrix& l) { return s * f(l); }, L::Vp)},
                "", "printed as s f(l'); the first argument is s'"));
  v.push_back(E(n, L::Adj, L::S, L::S,
                {F("x*s -> xs+sx^t", [](const Matrix& x, const Matrix& s) { return x * s + s * x.transpose(); }, L::S)}));
  v.push_back(E(n, L::Sp, L::Adj, L::Sp,
                {F("s'*x -> s'x+x^t s'", [](const Matrix& s, const Matrix& x) { return s * x + x.transpose() * s; }, L::Sp)}));
  v.push_back(E(n, L::Lamp, L::Adj, L::Sp,
                {F("l'*x -> l'x-x^t l'", [](const Matrix& l, const Matrix& x) { return l * x - x.transpose() * l; }, L::Sp)}));
  v.push_back(E(n, L::Adj, L::S, L::Lam,
                {F("x*s -> xs-sx^t", [](const Matrix& x, const Matrix& s) { return x * s - s * x.transpose(); }, L::Lam)}));
  v.push_back(E(n, L::Sp, L::Adj, L::Lamp,
                {F("s'*x -> s'x-x^t s'", [](const Matrix& s, const Matrix& x) { return s * x - x.transpose() * s; }, L::Lamp)}));
  v.push_back(E(n, L::Adj, L::Adj, L::T,
                {F("x1*x2 -> tr(x1x2)/3", [](const Matrix& a, const Matrix& b) { return scalar((a * b).trace() / 3); }, L::T)}));
  v.push_back(E(n, L::Lam, L::Lamp, L::T,
                {F("l*l' -> tr(ll')/3", [](const Matrix& a, const Matrix& b) { return scalar((a * b).trace() / 3); }, L::T)}));
  v.push_back(E(n, L::S, L::Sp, L::T,
                {F("s*s' -> tr(ss')/3", [](const Matrix& a, const Matrix& b) { return scalar((a * b).trace() / 3); }, L::T)}));
  return v;
}

std::vector<PaperHomEntry> entries4() {
  const int n = 4;
  auto finv = [](const Matrix& l) { return identify(4, L::Lam, L::Lamp, l); };
  auto fwd = [](const Matrix& lp) { return identify(4, L::Lamp, L::Lam, lp); };
  auto tr4 = [](const Matrix& m) { return scalar(m.trace() / 4); };
  std::vector<PaperHomEntry> v;
  v.push_back(E(n, L::Adj, L::Adj, L::Adj,
                {F("x*y -> xy-yx", [](const Matrix& x, const Matrix& y) { return bracket(x, y); }, L::Adj),
                 F("x*y -> xy+yx-(2/4)tr(xy)I", [](const Matrix& x, const Matrix& y) { return circ(x, y); }, L::Adj)}));
  v.push_back(E(n, L::V, L::Vp, L::Adj,
                {F("u*v' -> uv'^t-tr(uv'^t)/4 I", [](const Matrix& u, const Matrix& w) { return tr_free(u * w.transpose()); }, L::Adj)}));
  v.push_back(E(n, L::S, L::Lam, L::Adj, {F("s*l -> s f^-1(l)", [finv](const Matrix& s, const Matrix& l) { return s * finv(l); }, L::Adj)}));
  v.push_back(E(n, L::Sp, L::Lam, L::Adj, {F("s'*l -> ls'", [](const Matrix& s, const Matrix& l) { return l * s; }, L::Adj)}, "",
                "printed as s'l, which is not equivariant; its negative transpose ls' is"));
  v.push_back(E(n, L::Lam, L::Lam, L::Adj,
                {F("l1*l2 -> l1 f^-1(l2)-tr(l1 f^-1(l2))/4 I", [finv](const Matrix& a, const Matrix& b) { return tr_free(a * finv(b)); }, L::Adj)}));
  v.push_back(E(n, L::S, L::Sp, L::Adj,
                {F("s*s' -> ss'-tr(ss')/4 I", [](const Matrix& a, const Matrix& b) { return tr_free(a * b); }, L::Adj)}));
  v.push_back(E(n, L::Adj, L::V, L::V, {F("x*v -> xv", [](const Matrix& x, const Matrix& u) { return x * u; }, L::V)}));
  v.push_back(E(n, L::Lam, L::Vp, L::V, {F("l*v' -> lv'", [](const Matrix& l, const Matrix& u) { return l * u; }, L::V)}));
  v.push_back(E(n, L::S, L::Vp, L::V, {F("s*v' -> sv'", [](const Matrix& s, const Matrix& u) { return s * u; }, L::V)}));
  v.push_back(E(n, L::Adj, L::Vp, L::Vp, {F("x*v' -> x^t v'", [](const Matrix& x, const Matrix& u) { return x.transpose() * u; }, L::Vp)}));
  v.push_back(E(n, L::Sp, L::V, L::Vp, {F("s'*v -> s'v", [](const Matrix& s, const Matrix& u) { return s * u; }, L::Vp)}));
  v.push_back(E(n, L::Lam, L::V, L::Vp, {F("l*v -> f^-1(l)v", [finv](const Matrix& l, const Matrix& u) { return finv(l) * u; }, L::Vp)}));
  v.push_back(E(n, L::Adj, L::S, L::S,
                {F("x*s -> xs+sx^t", [](const Matrix& x, const Matrix& s) { return x * s + s * x.transpose(); }, L::S)}));
  v.push_back(E(n, L::V, L::V, L::S,
                {F("u*v -> uv^t+vu^t", [](const Matrix& u, const Matrix& w) { return u * w.transpose() + w * u.transpose(); }, L::S)}));
  v.push_back(E(n, L::Adj, L::Lam, L::S,
                {F("x*l -> xl-lx^t", [](const Matrix& x, const Matrix& l) { return x * l - l * x.transpose(); }, L::S)}));
  v.push_back(E(n, L::Adj, L::Lam, L::Sp,
                {F("x*l -> f^-1(l)x-x^t f^-1(l)", [finv](const Matrix& x, const Matrix& l) {
                   Matrix m = finv(l);
                   return m * x - x.transpose() * m;
                 }, L::Sp)}));
  v.push_back(E(n, L::Sp, L::Adj, L::Sp,
                {F("s'*x -> s'x+x^t s'", [](const Matrix& s, const Matrix& x) { return s * x + x.transpose() * s; }, L::Sp)}));
  v.push_back(E(n, L::Vp, L::Vp, L::Sp,
                {F("u'*v' -> u'v'^t+v'u'^t", [](const Matrix& u, const Matrix& w) { return u * w.transpose() + w * u.transpose(); }, L::Sp)}));
  v.push_back(E(n, L::Lam, L::Adj, L::Sp,
                {F("l*x -> f^-1(l)x-x^t f^-1(l)", [finv](const Matrix& l, const Matrix& x) {
                   Matrix m = finv(l);
                   return m * x - x.transpose() * m;
                 }, L::Sp)},
                "Hom(Lam'*g,S')", "first factor read as Lam through f"));
  v.push_back(E(n, L::Adj, L::Lam, L::Lam,
                {F("x*l -> xl+lx^t", [](const Matrix& x, const Matrix& l) { return x * l + l * x.transpose(); }, L::Lam)}));
  v.push_back(E(n, L::Adj, L::S, L::Lam,
                {F("x*s -> xs-sx^t", [](const Matrix& x, const Matrix& s) { return x * s - s * x.transpose(); }, L::Lam)}));
  v.push_back(E(n, L::V, L::V, L::Lam,
                {F("u*v -> uv^t-vu^t", [](const Matrix& u, const Matrix& w) { return u * w.transpose() - w * u.transpose(); }, L::Lam)}));
  v.push_back(E(n, L::Sp, L::Adj, L::Lam,
                {F("s'*x -> f(s'x-x^t s')", [fwd](const Matrix& s, const Matrix& x) { return fwd(s * x - x.transpose() * s); }, L::Lam)}));
  v.push_back(E(n, L::Vp, L::Vp, L::Lam,
                {F("u'*v' -> f(u'v'^t-v'u'^t)", [fwd](const Matrix& u, const Matrix& w) { return fwd(u * w.transpose() - w * u.transpose()); }, L::Lam)}));
  v.push_back(E(n, L::Adj, L::Adj, L::T, {F("x1*x2 -> tr(x1x2)/4", [tr4](const Matrix& a, const Matrix& b) { return tr4(a * b); }, L::T)}));
  v.push_back(E(n, L::Vp, L::V, L::T,
                {F("v'*u -> tr(uv'^t)/4", [tr4](const Matrix& w, const Matrix& u) { return tr4(u * w.transpose()); }, L::T)}));
  v.push_back(E(n, L::S, L::Sp, L::T, {F("s*s' -> tr(ss')/4", [tr4](const Matrix& a, const Matrix& b) { return tr4(a * b); }, L::T)}));
  v.push_back(E(n, L::Lam, L::Lam, L::T,
                {F("l1*l2 -> tr(l1 f^-1(l2))/4", [tr4, finv](const Matrix& a, const Matrix& b) { return tr4(a * finv(b)); }, L::T)}));
  return v;
}

}  // namespace

const std::vector<PaperHomEntry>& paper_hom_entries(int n) {
  require_rank(n);
  static const std::vector<PaperHomEntry> e3 = entries3();
  static const std::vector<PaperHomEntry> e4 = entries4();
  return n == 3 ? e3 : e4;
}

}  // namespace thetagr
