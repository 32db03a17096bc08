#include "thetagr/hom.hpp"

#include <map>
#include <mutex>

#include "thetagr/parallel.hpp"

namespace thetagr {

bool HomSpace::contains(const Matrix& phi) const { return solve_span(basis, phi).has_value(); }

HomSpace hom_space(ThetaLabel x, ThetaLabel y, ThetaLabel z, int n) {
  require_rank(n);
  GModule src = tensor(catalog(n, x), catalog(n, y));
  GModule tgt = catalog(n, z);
  auto basis = equivariant_maps(src, tgt);
  return {std::move(src), std::move(tgt), std::move(basis)};
}

namespace {

const Matrix& inverse_iso(int n, std::string_view which) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, Matrix> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, std::string(which));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, inverse(cached_identification(n, which).iso)).first;
  return it->second;
}

}  // namespace

Matrix identify(int n, ThetaLabel from, ThetaLabel to, const Matrix& m) {
  if (from == to) return m;
  for (std::string_view which : {"f", "g"}) {
    if (n == 4 && which == "g") continue;
    const auto& id = cached_identification(n, which);
    if (id.source == from && id.target == to) return model(n, to).compose(id.iso * model(n, from).coords(m));
    if (id.source == to && id.target == from)
      return model(n, to).compose(inverse_iso(n, which) * model(n, from).coords(m));
  }
  throw std::invalid_argument("no identification between " + std::string(label_name(from)) + " and " +
                              std::string(label_name(to)));
}

Matrix realize_formula(const PaperHomEntry& e, std::size_t k) { return realize_bilinear(e.n, e.x, e.y, e.z, e.formulas.at(k)); }

Matrix realize_bilinear(int n, ThetaLabel x, ThetaLabel y, ThetaLabel z, const Formula& f) {
  const auto& mx = model(n, x);
  const auto& my = model(n, y);
  const auto& mz = model(n, z);
  Matrix out(mz.dim(), mx.dim() * my.dim());
  for (std::size_t i = 0; i < mx.dim(); ++i)
    for (std::size_t j = 0; j < my.dim(); ++j) {
      Matrix v = identify(n, f.value, z, f.apply(mx.element(i), my.element(j)));
      Vector c = mz.coords(v);
      for (std::size_t r = 0; r < c.size(); ++r) out(r, i * my.dim() + j) = c[r];
    }
  return out;
}

std::string hom_name(const PaperHomEntry& e) {
  auto nm = [](ThetaLabel l) { return l == ThetaLabel::Adj ? std::string("g") : std::string(label_name(l)); };
  return "Hom(" + nm(e.x) + "*" + nm(e.y) + "," + nm(e.z) + ")";
}

bool HomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

HomReport verify_paper_homs(int n) {
  require_rank(n);
  const auto& entries = paper_hom_entries(n);
  HomReport rep;
  rep.n = n;
  rep.checks.resize(entries.size());
  parallel_for(entries.size(), [&](std::size_t idx) {
    const auto& e = entries[idx];
    HomCheck& c = rep.checks[idx];
    c.entry = &e;
    c.dim_expected = e.formulas.size();
    const HomSpace h = hom_space(e.x, e.y, e.z, n);
    c.dim_computed = h.dim();
    c.equivariant = c.nonzero = c.in_span = true;
    std::vector<Matrix> realized;
    for (std::size_t k = 0; k < e.formulas.size(); ++k) {
      Matrix phi = realize_formula(e, k);
      c.equivariant = c.equivariant && is_equivariant(phi, h.source, h.target);
      c.nonzero = c.nonzero && !phi.is_zero();
      c.in_span = c.in_span && h.contains(phi);
      realized.push_back(std::move(phi));
    }
    std::vector<Vector> flat;
    for (const auto& m : realized) flat.push_back(m.flat());
    c.independent = Subspace::span(flat.front().size(), flat).dim() == realized.size();
  });
  return rep;
}

}  // namespace thetagr
