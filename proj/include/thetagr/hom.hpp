#pragma once

// Hom_g(X⊗Y, Z) spaces and the explicit bilinear maps that span them.

#include <functional>
#include <string>
#include <vector>

#include "thetagr/gmodule.hpp"
#include "thetagr/tensor.hpp"

namespace thetagr {

struct HomSpace {
  GModule source;
  GModule target;
  std::vector<Matrix> basis;  // target.dim × source.dim, canonical RREF order

  std::size_t dim() const { return basis.size(); }
  bool contains(const Matrix& phi) const;
};

HomSpace hom_space(ThetaLabel x, ThetaLabel y, ThetaLabel z, int n);

/// Maps a matrix-model element of `from` to `to` through f, g or their inverses.
/// Identity when the labels agree.
Matrix identify(int n, ThetaLabel from, ThetaLabel to, const Matrix& m);

/// A bilinear map X×Y → W on matrix models; W is converted to the entry target if needed.
struct Formula {
  std::string text;
  std::function<Matrix(const Matrix&, const Matrix&)> apply;
  ThetaLabel value;
};

struct PaperHomEntry {
  int n = 0;
  ThetaLabel x, y, z;
  std::vector<Formula> formulas;
  std::string printed;  // Hom space as printed, when it differs from (x, y, z)
  std::string note;
};

/// Matrix of a bilinear map X×Y → W followed by the identification W → Z.
Matrix realize_bilinear(int n, ThetaLabel x, ThetaLabel y, ThetaLabel z, const Formula& f);

/// dim(Z)×(dim X·dim Y) matrix of the map, column index i·dim(Y)+j.
Matrix realize_formula(const PaperHomEntry& e, std::size_t k = 0);

const std::vector<PaperHomEntry>& paper_hom_entries(int n);

struct HomCheck {
  const PaperHomEntry* entry = nullptr;
  bool equivariant = false;
  bool nonzero = false;
  bool in_span = false;
  bool independent = true;
  std::size_t dim_expected = 0;
  std::size_t dim_computed = 0;
  bool pass() const { return equivariant && nonzero && in_span && independent && dim_expected == dim_computed; }
};

struct HomReport {
  int n = 0;
  std::vector<HomCheck> checks;
  bool all_pass() const;
};

HomReport verify_paper_homs(int n);

std::string hom_name(const PaperHomEntry& e);

}  // namespace thetagr
