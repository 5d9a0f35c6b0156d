#pragma once

// Exact linear algebra over the rationals: dense Gauss-Jordan elimination
// producing a particular solution together with a nullspace basis.  The
// systems solved here are small in the number of unknowns (undetermined
// coefficients), though they may contain many equations.

#include <optional>
#include <stdexcept>
#include <vector>

#include "chow/rational.hpp"

namespace chow {

struct SolutionSpace {
  std::vector<Rational> particular;            // one solution (free vars = 0)
  std::vector<std::vector<Rational>> nullspace;  // basis of homogeneous solutions
  std::vector<int> pivot_columns;
  std::vector<int> free_columns;
  int rank = 0;

  /// particular + sum params[k] * nullspace[k].
  std::vector<Rational> at(const std::vector<Rational>& params) const {
    if (params.size() != nullspace.size())
      throw std::invalid_argument("parameter count mismatch");
    std::vector<Rational> x = particular;
    for (size_t k = 0; k < nullspace.size(); ++k)
      for (size_t i = 0; i < x.size(); ++i) x[i] += params[k] * nullspace[k][i];
    return x;
  }
};

class LinearSystem {
 public:
  explicit LinearSystem(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  size_t nrows() const { return rows_.size(); }

  /// Augmented rows (width ncols + 1, last entry is the right-hand side).
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  /// Equation sum coeffs[i] x_i = rhs; coeffs must have ncols entries.
  void add_equation(std::vector<Rational> coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != ncols_)
      throw std::invalid_argument("coefficient row has wrong width");
    coeffs.push_back(std::move(rhs));
    rows_.push_back(std::move(coeffs));
  }

  /// Sparse variant: (column, coefficient) pairs.
  void add_equation_sparse(const std::vector<std::pair<int, Rational>>& entries, Rational rhs) {
    std::vector<Rational> row(static_cast<size_t>(ncols_), Rational(0));
    for (const auto& [c, v] : entries) row[static_cast<size_t>(c)] += v;
    row.push_back(std::move(rhs));
    rows_.push_back(std::move(row));
  }

  /// Gauss-Jordan solve.  Returns nullopt when inconsistent.
  std::optional<SolutionSpace> solve() const {
    std::vector<std::vector<Rational>> m = rows_;
    size_t nr = m.size();
    int pivot_row = 0;
    std::vector<int> pivot_cols;
    for (int col = 0; col < ncols_ && pivot_row < static_cast<int>(nr); ++col) {
      int sel = -1;
      for (int r = pivot_row; r < static_cast<int>(nr); ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(pivot_row)]);
      auto& pr = m[static_cast<size_t>(pivot_row)];
      Rational inv = Rational(1) / pr[static_cast<size_t>(col)];
      for (auto& v : pr) v *= inv;
      for (int r = 0; r < static_cast<int>(nr); ++r) {
        if (r == pivot_row) continue;
        auto& rr = m[static_cast<size_t>(r)];
        Rational f = rr[static_cast<size_t>(col)];
        if (f == 0) continue;
        for (int c = col; c <= ncols_; ++c)
          rr[static_cast<size_t>(c)] -= f * pr[static_cast<size_t>(c)];
      }
      pivot_cols.push_back(col);
      ++pivot_row;
    }
    // Consistency: no row of the form 0 = nonzero.
    for (int r = pivot_row; r < static_cast<int>(nr); ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(ncols_)] != 0) return std::nullopt;

    SolutionSpace sol;
    sol.rank = pivot_row;
    sol.pivot_columns = pivot_cols;
    std::vector<bool> is_pivot(static_cast<size_t>(ncols_), false);
    for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < ncols_; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) sol.free_columns.push_back(c);

    sol.particular.assign(static_cast<size_t>(ncols_), Rational(0));
    for (int r = 0; r < pivot_row; ++r)
      sol.particular[static_cast<size_t>(pivot_cols[static_cast<size_t>(r)])] =
          m[static_cast<size_t>(r)][static_cast<size_t>(ncols_)];

    for (int fc : sol.free_columns) {
      std::vector<Rational> v(static_cast<size_t>(ncols_), Rational(0));
      v[static_cast<size_t>(fc)] = 1;
      for (int r = 0; r < pivot_row; ++r)
        v[static_cast<size_t>(pivot_cols[static_cast<size_t>(r)])] =
            -m[static_cast<size_t>(r)][static_cast<size_t>(fc)];
      sol.nullspace.push_back(std::move(v));
    }
    return sol;
  }

  /// Rank of the coefficient matrix (rhs ignored).
  int rank() const {
    LinearSystem copy(*this);
    for (auto& r : copy.rows_) r[static_cast<size_t>(ncols_)] = 0;
    return copy.solve()->rank;
  }

 private:
  int ncols_;
  std::vector<std::vector<Rational>> rows_;  // augmented rows, width ncols_+1
};

/// Determinant of a square rational matrix (Gaussian elimination).
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = Rational(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace chow
