#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stochrat/rational.hpp"

namespace stochrat::lp {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Finds x >= 0 with A x = b by the phase-one simplex method on an exact
/// tableau with one artificial column per row. Pivoting follows Bland's
/// smallest-index rule, so the method terminates and the returned basic
/// feasible solution is a deterministic function of (A, b).
/// Returns nullopt when the system has no nonnegative solution.
std::optional<std::vector<Rational>> find_feasible_point(const Matrix& a, std::span<const Rational> b);

}  // namespace stochrat::lp
