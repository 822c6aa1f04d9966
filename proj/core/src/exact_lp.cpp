#include "exact_lp.hpp"

#include <stdexcept>

namespace sgdraw::detail {

std::optional<LpSolution> maximize(const LinearProgram& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw std::invalid_argument("lp: row count mismatch");

  // columns: n structural, m slack, then rhs
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.a[i].size() != n) throw std::invalid_argument("lp: ragged row");
    if (sgn(lp.b[i]) < 0) throw std::invalid_argument("lp: negative rhs");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = lp.a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = lp.b[i];
    basis[i] = n + i;
  }
  // objective row holds -c; optimal when no entry is negative
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -lp.c[j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (sgn(t[m][j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;

    Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational factor = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(t[leave][j]) != 0) t[i][j] -= factor * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = t[i][cols - 1];
  }
  sol.objective = t[m][cols - 1];
  return sol;
}

}  // namespace sgdraw::detail
