#pragma once

#include <array>
#include <cmath>

namespace nullwave {

struct Vec3 {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }

  Vec3 operator+(const Vec3& o) const { return {{v[0] + o[0], v[1] + o[1], v[2] + o[2]}}; }
  Vec3 operator-(const Vec3& o) const { return {{v[0] - o[0], v[1] - o[1], v[2] - o[2]}}; }
  Vec3 operator*(double a) const { return {{a * v[0], a * v[1], a * v[2]}}; }
  Vec3 operator-() const { return {{-v[0], -v[1], -v[2]}}; }
};

inline Vec3 operator*(double a, const Vec3& x) { return x * a; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}
inline Vec3 normalized(const Vec3& a) {
  double n = norm(a);
  return {{a[0] / n, a[1] / n, a[2] / n}};
}

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{};

  double& operator()(int i, int j) { return m[3 * i + j]; }
  double operator()(int i, int j) const { return m[3 * i + j]; }

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }
  static Mat3 diag(double a, double b, double c) {
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
  }
  static Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
    return r;
  }

  Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = m[k] + o.m[k];
    return r;
  }
  Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = m[k] - o.m[k];
    return r;
  }
  Mat3 operator*(double a) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = a * m[k];
    return r;
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
  Vec3 operator*(const Vec3& x) const {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = (*this)(i, 0) * x[0] + (*this)(i, 1) * x[1] + (*this)(i, 2) * x[2];
    return r;
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
};

inline Mat3 operator*(double a, const Mat3& M) { return M * a; }

inline double trace(const Mat3& M) { return M(0, 0) + M(1, 1) + M(2, 2); }

inline double det(const Mat3& M) {
  return M(0, 0) * (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1)) -
         M(0, 1) * (M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0)) +
         M(0, 2) * (M(1, 0) * M(2, 1) - M(1, 1) * M(2, 0));
}

inline double max_abs_diff(const Mat3& A, const Mat3& B) {
  double r = 0.0;
  for (int k = 0; k < 9; ++k) r = std::max(r, std::abs(A.m[k] - B.m[k]));
  return r;
}

// Eigendecomposition of a symmetric 3x3 matrix by cyclic Jacobi rotations.
// Returns eigenvalues (ascending) and the orthogonal matrix of column
// eigenvectors: M = V diag(w) V^T.
struct SymEigen {
  Vec3 w;
  Mat3 V;
};
SymEigen sym_eigen(const Mat3& M);

// Principal square root of a symmetric positive definite matrix.
// Throws NotSPD if M is not symmetric (to 1e-10 relative) or has an
// eigenvalue <= 0.
Mat3 sqrt_spd(const Mat3& M);

// Solve the 3x3 linear system J x = rhs by partial-pivot elimination.
// Throws SingularJacobian when the pivot falls below tol.
Vec3 solve3(const Mat3& J, const Vec3& rhs, double tol = 1e-14);

}  // namespace nullwave
