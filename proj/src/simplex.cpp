#include "rootstrata/simplex.hpp"

#include <stdexcept>

namespace rootstrata {

namespace {

// Dense tableau: rows 0..m-1 are constraints, row m holds reduced costs and
// the (negated) objective in the last column. basis[r] is the variable basic
// in row r.
struct Tableau {
  int m, n;
  RationalMatrix t;  // (m+1) x (n+1)
  std::vector<int> basis;

  void pivot(int row, int col) {
    Rational p = t[row][col];
    for (int j = 0; j <= n; ++j) t[row][j] /= p;
    for (int r = 0; r <= m; ++r) {
      if (r == row || t[r][col] == 0) continue;
      Rational f = t[r][col];
      for (int j = 0; j <= n; ++j) t[r][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Bland's rule: smallest-index entering column, smallest basic variable on
  // ratio ties. Returns false on unboundedness.
  bool iterate() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j) {
        if (t[m][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m; ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = t[r][n] / t[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult solve_lp(RationalMatrix A, RationalVec b, RationalVec c) {
  int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  for (int r = 0; r < m; ++r) {
    if (b[r] < 0) {
      for (auto& v : A[r]) v = -v;
      b[r] = -b[r];
    }
  }

  // Phase one: minimize the sum of one artificial variable per row.
  Tableau tab;
  tab.m = m;
  tab.n = n + m;
  tab.t.assign(m + 1, RationalVec(tab.n + 1, Rational(0)));
  tab.basis.resize(m);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) tab.t[r][j] = A[r][j];
    tab.t[r][n + r] = 1;
    tab.t[r][tab.n] = b[r];
    tab.basis[r] = n + r;
  }
  for (int j = 0; j < n; ++j) {
    Rational s(0);
    for (int r = 0; r < m; ++r) s += A[r][j];
    tab.t[m][j] = -s;
  }
  {
    Rational s(0);
    for (int r = 0; r < m; ++r) s += b[r];
    tab.t[m][tab.n] = -s;
  }
  if (!tab.iterate()) throw std::logic_error("solve_lp: phase one unbounded");
  if (tab.t[m][tab.n] != 0) return {LPStatus::Infeasible, Rational(0), {}};

  // Drive artificials out of the basis; a row with no real pivot is redundant.
  std::vector<bool> drop_row(m, false);
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (tab.t[r][j] != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      tab.pivot(r, col);
    } else {
      drop_row[r] = true;
    }
  }

  // Phase two on the surviving rows, original objective.
  Tableau t2;
  t2.m = 0;
  t2.n = n;
  for (int r = 0; r < m; ++r) {
    if (drop_row[r]) continue;
    RationalVec row(n + 1);
    for (int j = 0; j < n; ++j) row[j] = tab.t[r][j];
    row[n] = tab.t[r][tab.n];
    t2.t.push_back(std::move(row));
    t2.basis.push_back(tab.basis[r]);
    ++t2.m;
  }
  RationalVec cost(n + 1, Rational(0));
  for (int j = 0; j < n; ++j) cost[j] = c[j];
  t2.t.push_back(std::move(cost));
  for (int r = 0; r < t2.m; ++r) {
    Rational f = t2.t[t2.m][t2.basis[r]];
    if (f == 0) continue;
    for (int j = 0; j <= n; ++j) t2.t[t2.m][j] -= f * t2.t[r][j];
  }
  if (!t2.iterate()) return {LPStatus::Unbounded, Rational(0), {}};

  LPResult res;
  res.status = LPStatus::Optimal;
  res.x.assign(n, Rational(0));
  for (int r = 0; r < t2.m; ++r) {
    if (t2.basis[r] < n) res.x[t2.basis[r]] = t2.t[r][n];
  }
  res.value = -t2.t[t2.m][n];
  return res;
}

bool in_convex_hull(const std::vector<RationalVec>& points, const RationalVec& x) {
  if (points.empty()) return false;
  const int dim = static_cast<int>(x.size());
  const int k = static_cast<int>(points.size());
  RationalMatrix A(dim + 1, RationalVec(k, Rational(0)));
  RationalVec b(dim + 1);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) A[i][j] = points[j][i];
    b[i] = x[i];
  }
  for (int j = 0; j < k; ++j) A[dim][j] = 1;
  b[dim] = 1;
  return solve_lp(std::move(A), std::move(b), RationalVec(k, Rational(0))).status == LPStatus::Optimal;
}

Rational min_dilation_lp(const std::vector<RationalVec>& points, const RationalVec& x) {
  const int dim = static_cast<int>(x.size());
  const int k = static_cast<int>(points.size());
  RationalMatrix A(dim, RationalVec(k, Rational(0)));
  RationalVec b(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) A[i][j] = points[j][i];
    b[i] = x[i];
  }
  LPResult res = solve_lp(std::move(A), std::move(b), RationalVec(k, Rational(1)));
  if (res.status != LPStatus::Optimal) {
    throw std::invalid_argument("min_dilation_lp: point outside the cone of the vertices");
  }
  return res.value;
}

}  // namespace rootstrata
