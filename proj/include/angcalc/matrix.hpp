#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "angcalc/rational.hpp"

namespace angcalc {

// Dense row-major matrix over exact rationals. Sizes here are tiny (a few
// dozen rows at most), so no attempt is made at sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

std::size_t rank(Matrix m);

/// Basis of { v : m v = 0 }, each vector of length m.cols().
std::vector<std::vector<Rational>> nullspace(Matrix m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

}  // namespace angcalc
