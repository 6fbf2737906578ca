#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "affgebra/scalar.hpp"

namespace affgebra {

/// Dense row-major matrix over Q or Q(w). All entries share one field;
/// operations on mismatched fields or shapes throw DomainError. Matrices are
/// value types, treated as immutable once built.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field field);

  static Matrix identity(std::size_t n, Field field);
  static Matrix of_ints(const std::vector<std::vector<long long>>& rows, Field field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Scalar> entries() const noexcept { return entries_; }

  Matrix transpose() const;
  Matrix to_field(Field target) const;

  Scalar trace() const;  // square only
  std::vector<Scalar> row_sums() const;
  std::vector<Scalar> col_sums() const;
  bool is_zero() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& lambda, const Matrix& m);

  /// Entrywise value equality (shape must agree; field tags are not compared).
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> entries_;
};

/// Exact rank over the entry field.
std::size_t rank(const Matrix& m);

struct LinearSolution {
  bool consistent = false;
  /// One solution with all free variables set to zero (empty when inconsistent).
  std::vector<Scalar> particular;
  /// Basis of the homogeneous solution space, one vector per free column.
  std::vector<std::vector<Scalar>> nullspace;

  bool unique() const { return consistent && nullspace.empty(); }
};

/// Exact Gauss-Jordan elimination with first-nonzero pivoting (no magnitude
/// pivoting: the arithmetic is exact, so the choice only has to be
/// deterministic).
LinearSolution solve_linear(const Matrix& coefficients, std::span<const Scalar> rhs);

/// Text grammar: rows separated by ';', entries by ',', scalars in the
/// exactfield grammar, e.g. "0,0,1;1,0,0;0,1,0".
Matrix parse_matrix(std::string_view text, Field field);
std::string format_matrix(const Matrix& m);

/// JSON form: array of arrays of scalar strings.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, Field field);

}  // namespace affgebra
