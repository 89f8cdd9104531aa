#include "nullwave/mat3.hpp"

#include <algorithm>
#include <cmath>

#include "nullwave/error.hpp"

namespace nullwave {

SymEigen sym_eigen(const Mat3& M) {
  // Cyclic Jacobi: rotate away the largest off-diagonal entry until all
  // off-diagonals are below a tiny multiple of the norm.
  Mat3 A = M;
  Mat3 V = Mat3::identity();
  double scale = 0.0;
  for (int k = 0; k < 9; ++k) scale = std::max(scale, std::abs(A.m[k]));
  if (scale == 0.0) scale = 1.0;
  const double tol = 1e-15 * scale;

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::max({std::abs(A(0, 1)), std::abs(A(0, 2)), std::abs(A(1, 2))});
    if (off < tol) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(A(p, q)) < tol) continue;
        double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < 3; ++k) {
          double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
  }

  // Sort ascending, permuting eigenvector columns alongside.
  std::array<int, 3> idx{0, 1, 2};
  std::array<double, 3> w{A(0, 0), A(1, 1), A(2, 2)};
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
  SymEigen r;
  for (int j = 0; j < 3; ++j) {
    r.w[j] = w[idx[j]];
    for (int i = 0; i < 3; ++i) r.V(i, j) = V(i, idx[j]);
  }
  return r;
}

Mat3 sqrt_spd(const Mat3& M) {
  double scale = 0.0;
  for (int k = 0; k < 9; ++k) scale = std::max(scale, std::abs(M.m[k]));
  if (scale == 0.0) throw NotSPD("sqrt_spd: zero matrix");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(M(i, j) - M(j, i)) > 1e-10 * scale)
        throw NotSPD("sqrt_spd: matrix is not symmetric");

  SymEigen e = sym_eigen(M);
  if (e.w[0] <= 1e-14 * scale) throw NotSPD("sqrt_spd: matrix is not positive definite");

  Mat3 R;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += e.V(i, k) * std::sqrt(e.w[k]) * e.V(j, k);
      R(i, j) = s;
    }
  // Exact symmetrization kills roundoff skew from the triple product.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double m = 0.5 * (R(i, j) + R(j, i));
      R(i, j) = R(j, i) = m;
    }
  return R;
}

Vec3 solve3(const Mat3& J, const Vec3& rhs, double tol) {
  double a[3][4];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a[i][j] = J(i, j);
    a[i][3] = rhs[i];
  }
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < tol) throw SingularJacobian("solve3: singular matrix");
    if (piv != c)
      for (int j = c; j < 4; ++j) std::swap(a[piv][j], a[c][j]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      double f = a[r][c] / a[c][c];
      for (int j = c; j < 4; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return {{a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]}};
}

}  // namespace nullwave
