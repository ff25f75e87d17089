#include "tropcount/solve.hpp"

namespace tropcount {

LinearSolution solve_rational(const RatMatrix& a, const RatVec& b) {
  if (b.size() != a.rows())
    throw TropError(ErrorCode::Invariant, "solve_rational: shape mismatch");
  std::size_t m = a.rows(), n = a.cols();
  // augmented [A | b], reduced to RREF
  RatMatrix w(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, n) = b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && w.at(p, col) == 0) ++p;
    if (p == m) continue;
    if (p != row)
      for (std::size_t j = col; j <= n; ++j) std::swap(w.at(p, j), w.at(row, j));
    Rat inv = 1 / w.at(row, col);
    for (std::size_t j = col; j <= n; ++j) w.at(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || w.at(i, col) == 0) continue;
      Rat f = w.at(i, col);
      for (std::size_t j = col; j <= n; ++j) w.at(i, j) -= f * w.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolution out;
  out.rank = pivot_col.size();

  bool consistent = true;
  for (std::size_t i = out.rank; i < m; ++i)
    if (w.at(i, n) != 0) consistent = false;

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  if (consistent) {
    RatVec x(n, Rat(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = w.at(k, n);
    out.particular = std::move(x);
  }

  for (std::size_t col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    RatVec k(n, Rat(0));
    k[col] = 1;
    for (std::size_t t = 0; t < pivot_col.size(); ++t)
      k[pivot_col[t]] = -w.at(t, col);
    out.kernel.push_back(std::move(k));
  }
  return out;
}

RatMatrix invert_rational(const RatMatrix& a) {
  if (a.rows() != a.cols())
    throw TropError(ErrorCode::Invariant, "invert_rational: non-square matrix");
  std::size_t n = a.rows();
  RatMatrix w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && w.at(p, col) == 0) ++p;
    if (p == n)
      throw TropError(ErrorCode::Invariant, "invert_rational: singular matrix");
    if (p != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w.at(p, j), w.at(col, j));
    Rat inv = 1 / w.at(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) w.at(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w.at(i, col) == 0) continue;
      Rat f = w.at(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) w.at(i, j) -= f * w.at(col, j);
    }
  }
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = w.at(i, n + j);
  return out;
}

}  // namespace tropcount
