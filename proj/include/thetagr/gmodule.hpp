#pragma once

// Finite-dimensional sl_n-modules: the standard catalog (adjoint, V, V′, S, S′,
// Λ, Λ′, T) with their matrix models, weight spaces, highest-weight vectors,
// isotypic decomposition, equivariant maps and the Λ/Λ′ identifications.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thetagr/linalg.hpp"
#include "thetagr/sl.hpp"

namespace thetagr {

/// A module given by one action matrix per element of sl_basis(n).
struct GModule {
  int n = 0;
  std::size_t dim = 0;
  std::vector<Matrix> actions;
  std::string label;
  /// Weight of each basis vector when every H_i acts diagonally; empty otherwise.
  std::vector<Weight> weights;

  const Matrix& action(std::size_t k) const { return actions.at(k); }
  bool has_weight_basis() const { return weights.size() == dim; }
  /// action([x,y]) == [action(x), action(y)] on every basis pair.
  bool is_representation() const;
};

/// Fills `weights` when all H_i act diagonally with integral eigenvalues.
void detect_weight_basis(GModule& m);

/// Builds a module from its action matrices, validating shapes.
GModule make_module(int n, std::vector<Matrix> actions, std::string label = {});

GModule direct_sum(const GModule& a, const GModule& b);
/// The same module in the basis given by the columns of p: actions p⁻¹·a·p.
GModule change_basis(const GModule& m, const Matrix& p);

class NonIntegralWeight : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonThetaConstituent : public std::runtime_error {
 public:
  explicit NonThetaConstituent(const Weight& w)
      : std::runtime_error("constituent with highest weight " + w.to_string() + " is outside Theta_n+"), weight(w) {}
  Weight weight;
};

/// Realization of a catalog module on matrices (or column vectors).
class MatrixModel {
 public:
  MatrixModel(int n, ThetaLabel label);

  int n() const { return n_; }
  ThetaLabel label() const { return label_; }
  std::size_t dim() const { return basis_.size(); }
  const Matrix& element(std::size_t k) const { return basis_[k]; }
  const std::vector<Matrix>& basis() const { return basis_; }
  /// Coordinates of a matrix of the right shape and symmetry type.
  Vector coords(const Matrix& m) const;
  Matrix compose(const Vector& c) const;
  /// x.m for x ∈ sl_n.
  Matrix act(const Matrix& x, const Matrix& m) const;
  Weight weight(std::size_t k) const { return weights_[k]; }

 private:
  int n_;
  ThetaLabel label_;
  std::vector<Matrix> basis_;
  std::vector<Weight> weights_;
};

/// Cached catalog matrix model.
const MatrixModel& model(int n, ThetaLabel label);

/// Catalog module; throws std::invalid_argument on a bad n.
GModule catalog(int n, ThetaLabel label);
GModule catalog(int n, std::string_view label);

struct WeightDecomposition {
  std::map<Weight, Subspace> spaces;
  std::size_t total_dim = 0;
};

WeightDecomposition weight_decompose(const GModule& m);

/// Vectors of weight λ killed by every E_{i,i+1}.
Subspace highest_weight_vectors(const GModule& m, const Weight& lambda);
Subspace highest_weight_vectors(const GModule& m, const WeightDecomposition& wd, const Weight& lambda);

struct IsotypicPart {
  ThetaLabel label;
  std::size_t multiplicity = 0;
  Subspace highest_weight_vectors;
  Subspace component;
};

struct IsotypicDecomposition {
  std::map<Weight, IsotypicPart> parts;
  Subspace remainder;

  std::size_t multiplicity(ThetaLabel l, int n) const;
};

/// Splits a completely reducible module into its Θ_n⁺ isotypic components.
/// Throws NonThetaConstituent for any other highest weight.
IsotypicDecomposition isotypic_decompose(const GModule& m);

/// Smallest submodule containing the given vectors (closure under lowering operators).
Subspace generated_submodule(const GModule& m, const std::vector<Vector>& seeds);

/// Basis of Hom_g(src, tgt) as tgt.dim × src.dim matrices, canonical RREF order
/// of the row-major flattening. Both modules need weight bases.
std::vector<Matrix> equivariant_maps(const GModule& src, const GModule& tgt);

/// Largest |φ·src(x) − tgt(x)·φ| entry is zero for every basis x.
bool is_equivariant(const Matrix& phi, const GModule& src, const GModule& tgt);

struct Identification {
  ThetaLabel source;
  ThetaLabel target;
  Matrix iso;  // target.dim × source.dim, in catalog coordinates
};

/// n = 4: "f" is Λ′ → Λ with f(E34−E43) = E12−E21.
/// n = 3: "f" is Λ′ → V with f(E23−E32) = e1, "g" is Λ → V′ with g(E12−E21) = e3.
Identification identification(int n, std::string_view which);
const Identification& cached_identification(int n, std::string_view which);

}  // namespace thetagr
