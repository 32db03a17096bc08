#pragma once

// Coordinate data, assembly of the bracket from the master formulas, and the
// Lie / grading checks.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetagr/gmodule.hpp"

namespace thetagr {

enum class Space : std::uint8_t { A, B, Bp, C, Cp, E, Ep, D };

std::string_view space_name(Space s);
std::optional<Space> parse_space(std::string_view s);
/// The simple module paired with a coordinate space (D pairs with T).
ThetaLabel space_module(Space s, int n);
/// Spaces present for n, in basis order.
std::vector<Space> spaces_for(int n);

enum class ProductKind : std::uint8_t { Plain, Circ, Bracket };
std::string_view kind_name(ProductKind k);

struct ProductKey {
  Space x, y, z;
  ProductKind kind = ProductKind::Plain;
  auto operator<=>(const ProductKey&) const = default;
  std::string to_string() const;
};

class MissingProduct : public std::runtime_error {
 public:
  explicit MissingProduct(const ProductKey& k) : std::runtime_error("missing product " + k.to_string()), key(k) {}
  ProductKey key;
};

/// Multiplicity spaces with their bilinear products. Each product is a
/// dim(z) × (dim(x)·dim(y)) matrix, column index i·dim(y)+j. The D-action
/// on X is the product (D, X, X) and the D-bracket is (D, D, D).
struct CoordinateData {
  int n = 0;
  std::map<Space, std::size_t> dims;
  Vector one;  // the distinguished element of A
  std::map<ProductKey, Matrix> products;

  std::size_t dim(Space s) const;
  const Matrix& product(const ProductKey& k) const;
  bool has(const ProductKey& k) const { return products.count(k) > 0; }
  Vector apply(const ProductKey& k, const Vector& a, const Vector& b) const;

  /// All required products present and zero; `one` is left empty.
  static CoordinateData zero(int n, std::map<Space, std::size_t> dims);
};

/// Products referenced by the master formulas for n (plus the D lines).
std::vector<ProductKey> required_products(int n);

/// One summand c·φ(m1⊗m2)⊗(ξ1,ξ2)_key of a master bracket line.
struct MasterTerm {
  Matrix phi;  // dim(target module) × dim(m1)·dim(m2)
  ProductKey key;
  Rational coef;
  std::string text;
};

/// [m1⊗ξ1, m2⊗ξ2] for ξ1 ∈ p, ξ2 ∈ q; the reversed pair follows by antisymmetry.
struct MasterLine {
  Space p, q;
  std::vector<MasterTerm> terms;
};

const std::vector<MasterLine>& master_lines(int n);
/// Lines outside the formula block that the S-condition forbids: (C,C)→C′ and (C′,C′)→C, n=3.
const std::vector<MasterLine>& optional_lines(int n);

/// Bracket on a basis given by sparse structure constants.
struct StructureConstants {
  std::size_t dim = 0;
  std::vector<SparseRow> table;  // table[i*dim+j] = [e_i, e_j]

  const SparseRow& at(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
  Vector bracket(const Vector& u, const Vector& v) const;
  /// Dense ad(u) (column j is [u, e_j]).
  Matrix ad(const Vector& u) const;
  bool operator==(const StructureConstants&) const = default;
};

StructureConstants structure_from_matrices(const std::vector<Matrix>& basis);

struct Component {
  Space space;
  ThetaLabel module;
  std::size_t module_dim = 0;
  std::size_t space_dim = 0;
  std::size_t offset = 0;
};

struct GradedLieAlgebra {
  int n = 0;
  std::vector<Component> components;
  StructureConstants sc;
  Vector one;

  std::size_t dim() const { return sc.dim; }
  const Component& component(Space s) const;
  /// Index of m⊗ξ: offset + m·dim(space) + ξ.
  std::size_t index(Space s, std::size_t m, std::size_t xi) const;
  std::string basis_name(std::size_t idx) const;
  /// x⊗1 for each sl_n basis element.
  std::vector<Vector> sl_images() const;
};

GradedLieAlgebra assemble(const CoordinateData& data);

enum class JacobiMode { Full, Sampled };
inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct JacobiReport {
  JacobiMode mode = JacobiMode::Full;
  std::uint64_t seed = 0;
  std::size_t triples = 0;
  std::size_t violations = 0;
  bool antisymmetric = true;
  std::optional<std::array<std::size_t, 3>> witness;
  bool pass() const { return antisymmetric && violations == 0; }
};

JacobiReport check_jacobi(const StructureConstants& sc, JacobiMode mode, std::size_t samples = 5000,
                          std::uint64_t seed = kDefaultSeed);

struct GradingReport {
  bool gamma1 = false;
  bool gamma2 = false;
  bool gamma3 = false;
  std::vector<Weight> weights;          // all weights that occur
  std::vector<Weight> outside_theta;    // weights not in Θ_n
  std::size_t zero_dim = 0;
  std::size_t generated_zero_dim = 0;
  std::string detail;
  bool pass() const { return gamma1 && gamma2 && gamma3; }
};

/// Checks (Γ1)–(Γ3) for the subalgebra spanned by `sl_images` (images of sl_basis(n)).
GradingReport check_grading(const StructureConstants& sc, int n, const std::vector<Vector>& sl_images);
GradingReport check_grading(const GradedLieAlgebra& l);

struct ConditionReport {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// [S⊗C, S⊗C] = [S′⊗C′, S′⊗C′] = 0 (n = 3).
ConditionReport check_condition_S(const GradedLieAlgebra& l);

}  // namespace thetagr
