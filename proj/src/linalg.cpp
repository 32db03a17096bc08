#include "thetagr/linalg.hpp"

#include <algorithm>
#include <cctype>

namespace thetagr {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n), q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  m.data_ = v;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return thetagr::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_)
    if (sgn(x) != 0) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: shape mismatch");
  Vector out(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < a.rows_; ++i)
      if (sgn(a(i, k)) != 0) out[i] += a(i, k) * v[k];
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (sgn(b(p, q)) != 0) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.form;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Rational f;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(a(r, j)) != 0) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

namespace {

Matrix leading_rows(const Matrix& m, std::size_t count) {
  Matrix out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  auto red = rref(Matrix::from_rows(vectors, ambient_dim));
  s.basis_ = leading_rows(red.form, red.rank);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("subspace membership: length mismatch");
  // The basis is in RREF: subtract along pivots and test for zero.
  Vector w = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t p = 0;
    while (sgn(basis_(r, p)) == 0) ++p;
    if (sgn(w[p]) == 0) continue;
    const Rational f = w[p];
    for (std::size_t c = p; c < ambient_; ++c)
      if (sgn(basis_(r, c)) != 0) w[c] -= f * basis_(r, c);
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("subspace sum: ambient mismatch");
  auto vs = basis_vectors();
  auto ws = other.basis_vectors();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return span(ambient_, vs);
}

Subspace kernel(const Matrix& m) {
  auto red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> vs;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.form(r, f);
    vs.push_back(std::move(v));
  }
  return Subspace::span(cols, vs);
}

std::optional<Vector> solve_span(const std::vector<Vector>& vectors, const Vector& target) {
  const std::size_t k = vectors.size();
  const std::size_t len = target.size();
  for (const auto& v : vectors)
    if (v.size() != len) throw DimensionError("solve_span: length mismatch");
  // Rows of the system are coordinates; drop coordinates where everything vanishes.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < len; ++i) {
    Vector row(k + 1);
    bool any = sgn(target[i]) != 0;
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = vectors[j][i];
      any = any || sgn(row[j]) != 0;
    }
    row[k] = target[i];
    if (any) rows.push_back(std::move(row));
  }
  Vector coeffs(k);
  if (rows.empty()) return coeffs;
  auto red = rref(Matrix::from_rows(rows, k + 1));
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] == k) return std::nullopt;
    coeffs[red.pivots[r]] = red.form(r, k);
  }
  return coeffs;
}

std::optional<Vector> solve_span(const std::vector<Matrix>& vectors, const Matrix& target) {
  std::vector<Vector> flat;
  flat.reserve(vectors.size());
  for (const auto& m : vectors) {
    if (m.rows() != target.rows() || m.cols() != target.cols())
      throw DimensionError("solve_span: shape mismatch");
    flat.push_back(m.flat());
  }
  return solve_span(flat, target.flat());
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw DimensionError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.form(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

void axpy(SparseRow& y, const Rational& a, const SparseRow& x) {
  SparseRow out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Rational v = y[i].second + a * x[j].second;
      if (sgn(v) != 0) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

void SparseEchelon::reduce(SparseRow& row) const {
  std::size_t i = 0;
  while (i < row.size()) {
    const std::size_t p = pivot_row_[row[i].first];
    if (p == npos) {
      ++i;
      continue;
    }
    const Rational c = row[i].second;
    axpy(row, -c, rows_[p]);
  }
}

bool SparseEchelon::add(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge duplicate columns and drop zeros.
  SparseRow merged;
  for (auto& [c, v] : row) {
    if (c >= cols_) throw DimensionError("sparse row column out of range");
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, std::move(v));
  }
  std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
  reduce(merged);
  if (merged.empty()) return false;
  const Rational inv = 1 / merged.front().second;
  for (auto& e : merged) e.second *= inv;
  pivot_row_[merged.front().first] = rows_.size();
  rows_.push_back(std::move(merged));
  return true;
}

std::vector<Vector> SparseEchelon::null_space() const {
  // Back-substitute to a fully reduced form, largest pivot first.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
  std::vector<SparseRow> reduced(rows_.size());
  for (std::size_t k : order) {
    SparseRow row = rows_[k];
    std::size_t i = 1;
    while (i < row.size()) {
      const std::size_t p = pivot_row_[row[i].first];
      if (p == npos) {
        ++i;
        continue;
      }
      const Rational c = row[i].second;
      axpy(row, -c, reduced[p]);
    }
    reduced[k] = std::move(row);
  }
  std::vector<std::size_t> free_index(cols_, npos);
  std::vector<Vector> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_row_[c] != npos) continue;
    free_index[c] = out.size();
    Vector v(cols_);
    v[c] = 1;
    out.push_back(std::move(v));
  }
  for (const auto& row : reduced) {
    const std::size_t p = row.front().first;
    for (std::size_t i = 1; i < row.size(); ++i) out[free_index[row[i].first]][p] = -row[i].second;
  }
  return Subspace::span(cols_, out).basis_vectors();
}

void axpy(Vector& y, const Rational& a, const SparseRow& x) {
  for (const auto& [j, v] : x) y.at(j) += a * v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Vector& a, const Rational& c) {
  Vector out(a);
  for (auto& x : out) x *= c;
  return out;
}

}  // namespace thetagr
