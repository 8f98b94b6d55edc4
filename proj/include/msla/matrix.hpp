#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "msla/rational.hpp"

namespace msla {

// Dense rational matrix, row major. All operations are exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;
  void append_row(const std::vector<Rational>& r);

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;  // this*v

  bool operator==(const Matrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix m;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Rows of the result form a basis of {x : m x = 0}; deterministic
// (one basis vector per free column of the rref, in column order).
Matrix null_space(const Matrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Sylvester inertia of a symmetric matrix by rational congruence
// pivoting. Exact: no eigenvalue computation involved.
Inertia inertia(const Matrix& sym);

Rational det(const Matrix& m);

// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

// One solution of m x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m,
                                           const std::vector<Rational>& b);

std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& c);
std::vector<Rational> added(const std::vector<Rational>& a,
                            const std::vector<Rational>& b);
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);
bool is_zero_vector(const std::vector<Rational>& v);

}  // namespace msla
