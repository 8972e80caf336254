#include "framecert/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace framecert {

namespace {

void require_exact(const Matrix& m, const char* op) {
  if (m.kind() == ScalarKind::Float64)
    throw Error(std::string(op) + ": exact scalar kinds required");
}

int rank_float(const Matrix& m, const TolerancePolicy& tol) {
  int rows = m.rows(), cols = m.cols();
  std::vector<double> a(static_cast<size_t>(rows) * cols);
  double scale = 0.0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      a[static_cast<size_t>(r) * cols + c] = m.at(r, c).float64();
      scale = std::max(scale, std::fabs(m.at(r, c).float64()));
    }
  const double threshold = tol.tau * scale;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    double best = threshold;
    for (int r = rank; r < rows; ++r) {
      double mag = std::fabs(a[static_cast<size_t>(r) * cols + c]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (pivot < 0) continue;
    for (int k = 0; k < cols; ++k)
      std::swap(a[static_cast<size_t>(rank) * cols + k],
                a[static_cast<size_t>(pivot) * cols + k]);
    double p = a[static_cast<size_t>(rank) * cols + c];
    for (int r = rank + 1; r < rows; ++r) {
      double f = a[static_cast<size_t>(r) * cols + c] / p;
      for (int k = c; k < cols; ++k)
        a[static_cast<size_t>(r) * cols + k] -=
            f * a[static_cast<size_t>(rank) * cols + k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Scalar det_exact(const Matrix& m) {
  require_exact(m, "det_exact");
  if (m.rows() != m.cols()) throw Error("det_exact: matrix not square");
  const int n = m.rows();
  if (n == 0) return Scalar::one(m.kind());
  Matrix a = m;
  Scalar prev = Scalar::one(m.kind());
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a.at(r, k).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Scalar::zero(m.kind());
      a.swap_rows(k, pivot);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) =
            (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = Scalar::zero(m.kind());
    }
    prev = a.at(k, k);
  }
  Scalar det = a.at(n - 1, n - 1);
  return negate ? -det : det;
}

int rank_of(const Matrix& m, const TolerancePolicy& tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.kind() == ScalarKind::Float64) return rank_float(m, tol);
  Matrix a = m;
  const int rows = a.rows(), cols = a.cols();
  Scalar prev = Scalar::one(a.kind());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!a.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    a.swap_rows(rank, pivot);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a.at(i, j) =
            (a.at(i, j) * a.at(rank, c) - a.at(i, c) * a.at(rank, j)) / prev;
      a.at(i, c) = Scalar::zero(a.kind());
    }
    prev = a.at(rank, c);
    ++rank;
  }
  return rank;
}

Matrix rref_exact(const Matrix& m, std::vector<int>* pivot_cols) {
  require_exact(m, "rref_exact");
  Matrix a = m;
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.swap_rows(r, pivot);
    Scalar inv = Scalar::one(a.kind()) / a.at(r, c);
    for (int j = c; j < cols; ++j) a.at(r, j) = a.at(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (int j = c; j < cols; ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivot_cols != nullptr) *pivot_cols = pivots;
  return a;
}

std::vector<Vec> nullspace_exact(const Matrix& m) {
  require_exact(m, "nullspace_exact");
  std::vector<int> pivots;
  Matrix r = rref_exact(m, &pivots);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = vec_zero(cols, m.kind());
    v[free] = Scalar::one(m.kind());
    for (size_t prow = 0; prow < pivots.size(); ++prow)
      v[pivots[prow]] = -r.at(static_cast<int>(prow), free);
    // scale so the first nonzero coordinate is 1
    for (int k = 0; k < cols; ++k) {
      if (!v[k].is_zero()) {
        Scalar inv = Scalar::one(m.kind()) / v[k];
        v = vec_scale(inv, v);
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec solve_exact(const Matrix& m, const Vec& b) {
  require_exact(m, "solve_exact");
  if (m.rows() != m.cols()) throw Error("solve_exact: matrix not square");
  if (static_cast<int>(b.size()) != m.rows())
    throw Error("solve_exact: rhs size mismatch");
  const int n = m.rows();
  Matrix aug(n, n + 1, m.kind());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n) = b[r];
  }
  std::vector<int> pivots;
  Matrix r = rref_exact(aug, &pivots);
  if (static_cast<int>(pivots.size()) < n || pivots.back() == n)
    throw SingularMatrixError("solve_exact: singular matrix",
                              nullspace_exact(m));
  Vec x;
  x.reserve(n);
  for (int i = 0; i < n; ++i) x.push_back(r.at(i, n));
  return x;
}

Matrix inverse_exact(const Matrix& m) {
  require_exact(m, "inverse_exact");
  if (m.rows() != m.cols()) throw Error("inverse_exact: matrix not square");
  const int n = m.rows();
  Matrix aug(n, 2 * n, m.kind());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.kind());
  }
  std::vector<int> pivots;
  Matrix r = rref_exact(aug, &pivots);
  bool ok = static_cast<int>(pivots.size()) == n;
  for (int i = 0; ok && i < n; ++i) ok = pivots[i] == i;
  if (!ok)
    throw SingularMatrixError("inverse_exact: singular matrix",
                              nullspace_exact(m));
  Matrix inv(n, n, m.kind());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

std::vector<double> symmetric_eigenvalues(const Matrix& m,
                                          const TolerancePolicy& tol) {
  if (m.rows() != m.cols())
    throw Error("symmetric_eigenvalues: matrix not square");
  const int n = m.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j).to_double();
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a[i][j]));
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  const double stop = std::max(tol.tau * 1e-3, 1e-15) * scale;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::fabs(a[i][j]));
    if (off <= stop) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) <= stop * 1e-2) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace framecert
