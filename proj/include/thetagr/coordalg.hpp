#pragma once

// The coordinate algebras 𝔞 (both n) and 𝔟 = 𝔞 ⊕ B ⊕ B′ (n = 4) built from
// coordinate data, their involutions and the structural checks on them.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thetagr/graded.hpp"

namespace thetagr {

/// Homogeneous pieces; A splits into A⁺ (paired with skew x) and A⁻ (paired with symmetric x).
enum class Piece : std::uint8_t { Ap, Am, B, Bp, C, Cp, E, Ep };

std::string_view piece_name(Piece p);
Space piece_space(Piece p);
/// Sign of γ (on 𝔞) or η (on 𝔟) on the piece.
int involution_sign(Piece p);

class ConditionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 𝔤 = 𝔤⁺ ⊕ 𝔤⁻ (symmetric and skew traceless matrices) and the induced 𝔤⊗A = (𝔤⁺⊗A⁻) ⊕ (𝔤⁻⊗A⁺).
struct ASplit {
  int n = 0;
  std::size_t dim_a = 0;
  Subspace g_plus;   // in sl_basis(n) coordinates
  Subspace g_minus;
  /// x = (x+xᵗ)/2 + (x−xᵗ)/2.
  static std::pair<Matrix, Matrix> split(const Matrix& x);
};

ASplit split_A(const CoordinateData& data);

struct CoordAlgebra {
  int n = 0;
  bool extended = false;  // 𝔟 rather than 𝔞
  std::vector<Piece> pieces;
  std::map<Piece, std::size_t> offsets;
  std::map<Piece, std::size_t> dims;
  std::size_t dim = 0;
  std::vector<SparseRow> table;  // e_i·e_j at i*dim+j
  Vector one;                    // 1⁺

  bool has(Piece p) const { return offsets.count(p) > 0; }
  std::size_t index(Piece p, std::size_t k) const { return offsets.at(p) + k; }
  Piece piece_of(std::size_t i) const;
  const SparseRow& mul(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
  Vector product(const Vector& a, const Vector& b) const;
  /// The element of piece p with coordinates c.
  Vector lift(Piece p, const Vector& c) const;
  Vector part(Piece p, const Vector& v) const;
  /// True when v has no coordinates outside the listed pieces.
  bool supported_in(const Vector& v, const std::set<Piece>& ps) const;
  std::string basis_name(std::size_t i) const;
};

/// 𝔞; for n = 3 throws ConditionViolated when (C,C)→C′ or (C′,C′)→C is nonzero.
CoordAlgebra build_frak_a(const CoordinateData& data);
/// 𝔟 (n = 4 only).
CoordAlgebra build_frak_b(const CoordinateData& data);

/// Diagonal sign vector of γ (on 𝔞) or η (on 𝔟).
std::vector<int> involution_gamma(const CoordAlgebra& a);
std::vector<int> involution_eta(const CoordAlgebra& b);

/// The D-valued pairing ⟨α,β⟩ on the basis of 𝔟 (or 𝔞), as dim(D) × dim² columns i*dim+j.
struct Pairing {
  std::size_t dim_d = 0;
  std::vector<SparseRow> values;  // values[i*dim+j]
  std::vector<std::pair<Piece, Piece>> summands;
};

Pairing build_pairing(const CoordinateData& data, const CoordAlgebra& a);

struct CheckResult {
  std::string name;
  bool pass = true;
  bool asserted = true;  // false for checks that are only reported
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string witness;
};

struct Section4Report {
  int n = 0;
  std::vector<CheckResult> checks;
  /// Nonzero products outside the printed table cells (reported only).
  std::vector<std::string> table_deviations;
  bool pass() const;
  const CheckResult* find(std::string_view name) const;
};

/// All structural checks on 𝔞 / 𝔟, the involutions, the pairing and D.
/// With `l` (the assembled algebra) the module-action identity is also compared against its bracket.
Section4Report verify_section4(const CoordinateData& data, const GradedLieAlgebra* l = nullptr);

}  // namespace thetagr
