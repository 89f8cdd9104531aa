#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "nullwave/mat3.hpp"

namespace nullwave {

// Seeded random source for test fixtures and verification trials.
// Distributions are hand-rolled on top of mt19937_64 so draws are
// reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double a = 0.0, double b = 1.0) {
    // 53-bit mantissa-uniform in [0,1).
    double u = (gen_() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
  }

  double normal() {
    // Box-Muller, one value per call (spare discarded for simplicity).
    double u1 = uniform(1e-300, 1.0);
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  Vec3 unit_vector() {
    Vec3 v{{normal(), normal(), normal()}};
    return normalized(v);
  }

  // Haar-ish random rotation: Gram-Schmidt of a Gaussian frame, right-handed.
  Mat3 rotation() {
    Vec3 a = unit_vector();
    Vec3 b{{normal(), normal(), normal()}};
    b = b - dot(a, b) * a;
    b = normalized(b);
    Vec3 c = cross(a, b);
    Mat3 Q;
    for (int i = 0; i < 3; ++i) {
      Q(i, 0) = a[i];
      Q(i, 1) = b[i];
      Q(i, 2) = c[i];
    }
    return Q;
  }

  // Random symmetric matrix with entries in [-s, s].
  Mat3 symmetric(double s) {
    Mat3 M;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) M(i, j) = M(j, i) = uniform(-s, s);
    return M;
  }

  // Random SPD matrix with eigenvalues in [lo, hi].
  Mat3 spd(double lo, double hi) {
    Mat3 Q = rotation();
    Mat3 D = Mat3::diag(uniform(lo, hi), uniform(lo, hi), uniform(lo, hi));
    return Q * D * Q.transposed();
  }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nullwave
