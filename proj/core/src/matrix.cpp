#include "affgebra/matrix.hpp"

#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace affgebra {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(std::string("dimension mismatch in '") + op + "': " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                      std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.field() != b.field()) {
    throw DomainError(std::string("field mismatch in '") + op + "'");
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field) {
  if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
  entries_.assign(rows * cols, Scalar::zero(field));
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::of_ints(const std::vector<std::vector<long long>>& rows, Field field) {
  if (rows.empty() || rows.front().empty()) {
    throw DomainError("matrix dimensions must be positive");
  }
  Matrix m(rows.size(), rows.front().size(), field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DomainError("ragged integer matrix literal");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      m.at(i, j) = Scalar::of_int(rows[i][j], field);
    }
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::to_field(Field target) const {
  Matrix m(rows_, cols_, target);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k].to_field(target);
  return m;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw DomainError("trace of a non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<Scalar> Matrix::row_sums() const {
  std::vector<Scalar> sums(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) sums[i] += at(i, j);
  return sums;
}

std::vector<Scalar> Matrix::col_sums() const {
  std::vector<Scalar> sums(cols_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) sums[j] += at(i, j);
  return sums;
}

bool Matrix::is_zero() const {
  for (const Scalar& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (Scalar& e : m.entries_) e = -e;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "+");
  Matrix m = a;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] += b.entries_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "-");
  Matrix m = a;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] -= b.entries_[k];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("dimension mismatch in '*': " + std::to_string(a.cols()) +
                      " columns vs " + std::to_string(b.rows()) + " rows");
  }
  if (a.field() != b.field()) throw DomainError("field mismatch in '*'");
  Matrix m(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        m.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return m;
}

Matrix operator*(const Scalar& lambda, const Matrix& m) {
  if (lambda.field() != m.field()) throw DomainError("field mismatch in scalar '*'");
  Matrix r = m;
  for (Scalar& e : r.entries_) e = lambda * e;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return a.entries_ == b.entries_;
}

namespace {

// Gauss-Jordan on an augmented matrix; returns the pivot columns. `width`
// columns take part in the elimination, anything to the right is carried
// along as right-hand sides.
std::vector<std::size_t> reduce(std::vector<std::vector<Scalar>>& aug, std::size_t width) {
  std::vector<std::size_t> pivot_cols;
  const std::size_t m = aug.size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < width && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == m) continue;
    std::swap(aug[pivot], aug[row]);
    const Scalar inv = aug[row][col].inverse();
    for (Scalar& e : aug[row]) e *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || aug[r][col].is_zero()) continue;
      const Scalar factor = aug[r][col];
      for (std::size_t c = 0; c < aug[r].size(); ++c) {
        aug[r][c] -= factor * aug[row][c];
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

std::vector<std::vector<Scalar>> to_rows(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
  }
  return rows;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  auto rows = to_rows(m);
  return reduce(rows, m.cols()).size();
}

LinearSolution solve_linear(const Matrix& coefficients, std::span<const Scalar> rhs) {
  if (rhs.size() != coefficients.rows()) {
    throw DomainError("right-hand side length " + std::to_string(rhs.size()) +
                      " does not match " + std::to_string(coefficients.rows()) + " rows");
  }
  const Field field = coefficients.field();
  const std::size_t n = coefficients.cols();

  auto aug = to_rows(coefficients);
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].push_back(rhs[i].to_field(field));
  }
  const auto pivots = reduce(aug, n);

  LinearSolution sol;
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (!aug[r][n].is_zero()) return sol;  // 0 = nonzero: inconsistent
  }
  sol.consistent = true;

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  sol.particular.assign(n, Scalar::zero(field));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    sol.particular[pivots[k]] = aug[k][n];
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> basis(n, Scalar::zero(field));
    basis[c] = Scalar::one(field);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      basis[pivots[k]] = -aug[k][c];
    }
    sol.nullspace.push_back(std::move(basis));
  }
  return sol;
}

Matrix parse_matrix(std::string_view text, Field field) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t start = 0;
  std::string s(text);
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::string_view row_text = std::string_view(s).substr(start, end - start);

    std::vector<Scalar> row;
    std::size_t entry_start = 0;
    while (entry_start <= row_text.size()) {
      std::size_t entry_end = row_text.find(',', entry_start);
      if (entry_end == std::string_view::npos) entry_end = row_text.size();
      row.push_back(parse_scalar(row_text.substr(entry_start, entry_end - entry_start), field));
      entry_start = entry_end + 1;
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }

  if (rows.empty()) throw ParseError("empty matrix text");
  const std::size_t cols = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw ParseError("ragged matrix text: rows of unequal length");
    }
  }
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_scalar(m.at(i, j));
    }
  }
  return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, Field field) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a non-empty array");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& jrow : j) {
    if (!jrow.is_array() || jrow.empty()) {
      throw ParseError("matrix JSON rows must be non-empty arrays");
    }
    std::vector<Scalar> row;
    for (const auto& cell : jrow) {
      if (!cell.is_string()) throw ParseError("matrix JSON entries must be scalar strings");
      row.push_back(parse_scalar(cell.get<std::string>(), field));
    }
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw ParseError("ragged matrix JSON");
  }
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j2 = 0; j2 < cols; ++j2) m.at(i, j2) = rows[i][j2];
  return m;
}

}  // namespace affgebra
