#pragma once

#include "c0t/rational.hpp"

#include <cstddef>
#include <vector>

namespace c0t::lp {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rational objective;
  std::vector<Rational> x;
};

/// Solves  minimize c.x  subject to  A x = b, x >= 0  exactly.
/// Two-phase tableau simplex with Bland's rule, so it terminates on
/// degenerate problems.
Result minimize(const Matrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c);

/// Feasibility of  A x = b, x >= 0.
bool feasible(const Matrix& A, const std::vector<Rational>& b);

/// Solves the square system M y = rhs by Gaussian elimination. Returns false
/// if M is singular. `det_sign` receives the sign of det(M) (0 when singular).
bool solve_square(Matrix M, std::vector<Rational> rhs, std::vector<Rational>& y, int& det_sign);

/// Sign of the determinant of a square matrix.
int determinant_sign(Matrix M);

}  // namespace c0t::lp
