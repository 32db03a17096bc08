#pragma once

// The concrete examples sl_{n+k} ⊃ sl_n and sl_{2n+1} ⊃ sl_n, and coordinate
// extraction through the evaluation maps M ⊗ Hom_g(M, L) → L.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetagr/graded.hpp"

namespace thetagr {

/// sl_N (basis sl_basis(N)) with an embedded copy of sl_n.
struct EmbeddedAlgebra {
  int n = 0;
  int ambient_n = 0;
  std::string name;
  std::vector<Matrix> embedding;  // image of each element of sl_basis(n)
  StructureConstants sc;

  std::size_t dim() const { return sc.dim; }
  /// Lie homomorphism and injective, checked exactly.
  bool embedding_is_homomorphism() const;
  /// The ambient algebra as an sl_n-module under the adjoint action.
  GModule restriction() const;
};

/// Standard basis structure constants of sl_N.
StructureConstants sl_structure(int big_n);

/// sl_{n+k} with sl_n in the northwest corner.
EmbeddedAlgebra example_sl_nk(int n, int k);
/// sl_{2n+1} with x ↦ diag(x, −xᵗ, 0).
EmbeddedAlgebra example_sl_2n1(int n);

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Extraction {
  CoordinateData data;
  /// Hom_g(M, L) basis per space, as dim(L) × dim(M) matrices; for A the embedding comes first.
  std::map<Space, std::vector<Matrix>> homs;
  /// Column m⊗ξ is φ_ξ(m) in ambient coordinates.
  Matrix evaluation;
  /// The ambient bracket written in the m⊗ξ basis.
  StructureConstants transported;
};

Extraction extract(const EmbeddedAlgebra& e);
CoordinateData extract_coordinates(const EmbeddedAlgebra& e);

struct RoundTripReport {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  bool pass() const { return mismatches == 0; }
};

/// Compares assemble(x.data) with the transported ambient bracket on every basis pair.
RoundTripReport round_trip(const Extraction& x);
RoundTripReport round_trip(const Extraction& x, const GradedLieAlgebra& assembled);

}  // namespace thetagr
