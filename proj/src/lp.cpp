#include "c0t/lp.hpp"

#include "c0t/errors.hpp"

#include <limits>
#include <optional>

namespace c0t::lp {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Tableau layout: rows 0..m-1 are constraints, column `width - 1` is the
// right-hand side. The objective row is kept separately as reduced costs.
struct Tableau {
  std::size_t m = 0;
  std::size_t width = 0;
  std::vector<Rational> cells;
  std::vector<std::size_t> basis;

  Rational& at(std::size_t r, std::size_t c) { return cells[r * width + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells[r * width + c]; }
  std::size_t rhs() const { return width - 1; }

  void pivot(std::size_t row, std::size_t col, std::vector<Rational>& cost, Rational& cost_rhs) {
    const Rational p = at(row, col);
    for (std::size_t c = 0; c < width; ++c) at(row, c) /= p;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row) continue;
      const Rational f = at(r, col);
      if (f == 0) continue;
      for (std::size_t c = 0; c < width; ++c) {
        if (at(row, c) != 0) at(r, c) -= f * at(row, c);
      }
    }
    const Rational f = cost[col];
    if (f != 0) {
      for (std::size_t c = 0; c + 1 < width; ++c) {
        if (at(row, c) != 0) cost[c] -= f * at(row, c);
      }
      cost_rhs -= f * at(row, rhs());
    }
    basis[row] = col;
  }

  // Runs simplex iterations over columns [0, active_cols). Returns false if
  // the problem is unbounded.
  bool run(std::vector<Rational>& cost, Rational& cost_rhs, std::size_t active_cols) {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t c = 0; c < active_cols; ++c) {
        if (cost[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == npos) return true;

      std::size_t leave = npos;
      Rational best_ratio;
      for (std::size_t r = 0; r < m; ++r) {
        if (at(r, enter) <= 0) continue;
        Rational ratio = at(r, rhs()) / at(r, enter);
        if (leave == npos || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter, cost, cost_rhs);
    }
  }
};

}  // namespace

Result minimize(const Matrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (b.size() != m || c.size() != n) throw InvalidInput("lp: dimension mismatch");

  Tableau t;
  t.m = m;
  t.width = n + m + 1;
  t.cells.resize(m * t.width);
  t.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = flip ? Rational(-A(r, j)) : A(r, j);
    t.at(r, n + r) = 1;
    t.at(r, t.rhs()) = flip ? Rational(-b[r]) : b[r];
    t.basis[r] = n + r;
  }

  // Phase 1: minimize the sum of artificials. Reduced costs are
  // -(column sums) on structural columns.
  std::vector<Rational> cost(n + m);
  Rational cost_rhs = 0;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t.at(r, j);
    cost_rhs -= t.at(r, t.rhs());
  }
  t.run(cost, cost_rhs, n + m);
  if (cost_rhs != 0) return Result{Status::infeasible, {}, {}};

  // Drive artificials out of the basis; rows that cannot be repaired are
  // redundant and get zeroed.
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis[r] < n) continue;
    std::size_t col = npos;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.at(r, j) != 0) {
        col = j;
        break;
      }
    }
    if (col != npos) {
      t.pivot(r, col, cost, cost_rhs);
    } else {
      for (std::size_t j = 0; j < t.width; ++j) t.at(r, j) = 0;
    }
  }

  // Phase 2 over structural columns only.
  std::vector<Rational> cost2(n + m);
  Rational cost2_rhs = 0;
  for (std::size_t j = 0; j < n; ++j) cost2[j] = c[j];
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t bcol = t.basis[r];
    if (bcol >= n || c[bcol] == 0) continue;
    const Rational f = c[bcol];
    for (std::size_t j = 0; j < n; ++j) cost2[j] -= f * t.at(r, j);
    cost2_rhs -= f * t.at(r, t.rhs());
  }
  if (!t.run(cost2, cost2_rhs, n)) return Result{Status::unbounded, {}, {}};

  Result result;
  result.status = Status::optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis[r] < n) result.x[t.basis[r]] = t.at(r, t.rhs());
  }
  result.objective = -cost2_rhs;
  return result;
}

bool feasible(const Matrix& A, const std::vector<Rational>& b) {
  return minimize(A, b, std::vector<Rational>(A.cols())).status != Status::infeasible;
}

bool solve_square(Matrix M, std::vector<Rational> rhs, std::vector<Rational>& y, int& det_sign) {
  const std::size_t n = M.rows();
  if (M.cols() != n || rhs.size() != n) throw InvalidInput("solve_square: dimension mismatch");
  int sign_acc = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = npos;
    for (std::size_t r = col; r < n; ++r) {
      if (M(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv == npos) {
      det_sign = 0;
      return false;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(M(piv, c), M(col, c));
      std::swap(rhs[piv], rhs[col]);
      sign_acc = -sign_acc;
    }
    if (M(col, col) < 0) sign_acc = -sign_acc;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (M(r, col) == 0) continue;
      const Rational f = M(r, col) / M(col, col);
      for (std::size_t c = col; c < n; ++c) M(r, c) -= f * M(col, c);
      rhs[r] -= f * rhs[col];
    }
  }
  y.assign(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= M(i, c) * y[c];
    y[i] = acc / M(i, i);
  }
  det_sign = sign_acc;
  return true;
}

int determinant_sign(Matrix M) {
  std::vector<Rational> y;
  int s = 0;
  const std::size_t n = M.rows();
  solve_square(std::move(M), std::vector<Rational>(n), y, s);
  return s;
}

}  // namespace c0t::lp
