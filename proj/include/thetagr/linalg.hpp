#pragma once

// Exact rational scalars, dense matrices and the small linear-algebra kernel
// (row reduction, kernels, span membership) used everywhere else.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetagr {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// n×n matrix unit E_ij (0-based indices).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
  static Matrix column(const Vector& v);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  Vector column_vector(std::size_t c) const;
  const Vector& data() const { return data_; }
  /// Entries in row-major order as a flat vector (the "vec" used for span problems).
  const Vector& flat() const { return data_; }

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// Kronecker product a ⊗ b.
Matrix kron(const Matrix& a, const Matrix& b);
bool is_zero(const Vector& v);

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivot is the first nonzero column, exact division.
RrefResult rref(const Matrix& m);

/// Subspace of F^ambient_dim with a canonical RREF basis (rows).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the given vectors (each of length ambient_dim).
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);

/// Coefficients c with Σ c_i vectors[i] = target, or nullopt when target is
/// outside the span. The vectors need not be independent; free coefficients
/// are set to zero.
std::optional<Vector> solve_span(const std::vector<Matrix>& vectors, const Matrix& target);
std::optional<Vector> solve_span(const std::vector<Vector>& vectors, const Vector& target);

/// Inverse of a square matrix; throws DimensionError when singular.
Matrix inverse(const Matrix& m);

// ---------------------------------------------------------------------------
// Sparse rows, used for the large structured systems (equivariance equations).

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Incrementally maintained echelon basis of sparse rows over `cols` columns.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

  /// Reduces `row` against the current basis; returns true if it was independent
  /// (and is now part of the basis).
  bool add(SparseRow row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Basis of the null space {x : r·x = 0 for all added rows}, canonical RREF.
  std::vector<Vector> null_space() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  void reduce(SparseRow& row) const;

  std::size_t cols_;
  std::vector<SparseRow> rows_;          // rows_[k] has leading entry 1 at its pivot
  std::vector<std::size_t> pivot_row_;   // column -> index into rows_, or npos
};

/// Adds a·x to the sparse row y (both sorted by column).
void axpy(SparseRow& y, const Rational& a, const SparseRow& x);
/// y += a·x for a dense y.
void axpy(Vector& y, const Rational& a, const SparseRow& x);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Vector& a, const Rational& c);

}  // namespace thetagr
