#include "schreier/simplex.hpp"

#include <stdexcept>

#include "schreier/config.hpp"

namespace schreier {

LpResult solve_lp_max(const std::vector<Rational>& c,
                      const std::vector<std::vector<Rational>>& A,
                      const std::vector<Rational>& b) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(A.size());
  for (const Rational& bi : b)
    if (bi < 0) throw DomainError("simplex: requires b >= 0");

  // Tableau rows 0..m-1 are constraints, row m is the objective (negated
  // reduced costs). Columns: n structural, m slack, last is rhs.
  const int cols = n + m + 1;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(cols, Rational(0)));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][cols - 1] = b[i];
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) T[m][j] = -c[j];

  for (;;) {
    // Bland: entering = smallest column with negative objective row entry.
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] > 0) {
        Rational ratio = T[i][cols - 1] / T[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) throw std::logic_error("simplex: unbounded program");

    // Pivot on (leave, enter).
    Rational pivot = T[leave][enter];
    for (int j = 0; j < cols; ++j) T[leave][j] /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      if (T[i][enter] == 0) continue;
      Rational factor = T[i][enter];
      for (int j = 0; j < cols; ++j) T[i][j] -= factor * T[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult result;
  result.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) result.x[basis[i]] = T[i][cols - 1];
  result.value = 0;
  for (int j = 0; j < n; ++j) result.value += c[j] * result.x[j];
  for (int i = 0; i < m; ++i) {
    Rational slack = b[i];
    for (int j = 0; j < n; ++j) slack -= A[i][j] * result.x[j];
    if (slack == 0) result.tight_rows.push_back(i);
  }
  return result;
}

bool solve_linear_system(std::vector<std::vector<Rational>> M,
                         std::vector<Rational> rhs, std::vector<Rational>& out) {
  const int n = static_cast<int>(M.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (M[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(M[pivot], M[col]);
    std::swap(rhs[pivot], rhs[col]);
    Rational p = M[col][col];
    for (int j = col; j < n; ++j) M[col][j] /= p;
    rhs[col] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rational f = M[r][col];
      for (int j = col; j < n; ++j) M[r][j] -= f * M[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  out = rhs;
  return true;
}

}  // namespace schreier
