#include "rootstrata/linalg.hpp"

#include <stdexcept>

namespace rootstrata {

RationalMatrix identity_matrix(int n) {
  RationalMatrix m(n, RationalVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix invert(RationalMatrix m) {
  const int n = static_cast<int>(m.size());
  RationalMatrix inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::invalid_argument("invert: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RationalVec solve(RationalMatrix m, RationalVec rhs) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::invalid_argument("solve: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational d = m[col][col];
    for (int j = col; j < n; ++j) m[col][j] /= d;
    rhs[col] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

int matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (int j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<RationalVec> coordinates_in_basis(const RationalMatrix& basis, const RationalVec& v) {
  if (basis.empty()) return std::nullopt;
  const int n = static_cast<int>(basis.size());
  const int k = static_cast<int>(basis[0].size());
  // Augmented elimination on [basis | v].
  RationalMatrix m(n, RationalVec(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = basis[i][j];
    m[i][k] = v[i];
  }
  std::vector<int> pivot_row(k, -1);
  int rank = 0;
  for (int col = 0; col < k && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r) {
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    Rational d = m[rank][col];
    for (int j = col; j <= k; ++j) m[rank][j] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = col; j <= k; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (int r = rank; r < n; ++r) {
    if (m[r][k] != 0) return std::nullopt;  // inconsistent: v outside span
  }
  RationalVec coeff(k, Rational(0));
  for (int col = 0; col < k; ++col) {
    if (pivot_row[col] < 0) throw std::invalid_argument("coordinates_in_basis: dependent columns");
    coeff[col] = m[pivot_row[col]][k];
  }
  return coeff;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b[0].size());
  const int k = static_cast<int>(b.size());
  RationalMatrix r(n, RationalVec(m, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

}  // namespace rootstrata
