#include "nullwave/invariants.hpp"

#include <cmath>

#include "nullwave/error.hpp"

namespace nullwave {

const char* frame_name(Frame f) {
  switch (f) {
    case Frame::strain_i: return "strain_i";
    case Frame::strain_j: return "strain_j";
    case Frame::stretch_r: return "stretch_r";
    case Frame::stretch_s: return "stretch_s";
  }
  return "?";
}

InvariantTriple invariants3(const Mat3& M, Frame frame) {
  InvariantTriple e;
  e.frame = frame;
  double t1 = trace(M);
  double t2 = trace(M * M);
  e[0] = t1;
  e[1] = 0.5 * (t1 * t1 - t2);
  e[2] = det(M);
  return e;
}

InvariantTriple shift_invariants(double z, const InvariantTriple& e) {
  InvariantTriple r;
  r.frame = e.frame;
  r[0] = 3.0 * z + e[0];
  r[1] = 3.0 * z * z + 2.0 * z * e[0] + e[1];
  r[2] = z * z * z + z * z * e[0] + z * e[1] + e[2];
  return r;
}

InvariantTriple stretch_to_strain_inv(const InvariantTriple& r) {
  if (r.frame != Frame::stretch_r) throw ConfigError("stretch_to_strain_inv: expected stretch_r triple");
  InvariantTriple i;
  i.frame = Frame::strain_i;
  i[0] = r[0] * r[0] - 2.0 * r[1];
  i[1] = r[1] * r[1] - 2.0 * r[0] * r[2];
  i[2] = r[2] * r[2];
  return i;
}

namespace {

// Generic 3d Newton with residual tolerance 1e-12 and a 50-iteration cap.
template <typename F, typename J>
Vec3 newton3(Vec3 x, const Vec3& target, F f, J jac, const char* what) {
  for (int it = 0; it < 50; ++it) {
    Vec3 r = f(x) - target;
    double rn = std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
    if (rn < 1e-12) return x;
    x = x - solve3(jac(x), r);
  }
  throw NoConvergence(std::string(what) + ": Newton did not converge in 50 iterations");
}

}  // namespace

InvariantTriple strain_to_stretch_inv(const InvariantTriple& i, double guess_lambda) {
  if (i.frame != Frame::strain_i) throw ConfigError("strain_to_stretch_inv: expected strain_i triple");
  double lam = guess_lambda;
  Vec3 seed{{3.0 * lam, 3.0 * lam * lam, lam * lam * lam}};
  auto fwd = [](const Vec3& r) -> Vec3 {
    return {{r[0] * r[0] - 2.0 * r[1], r[1] * r[1] - 2.0 * r[0] * r[2], r[2] * r[2]}};
  };
  auto jac = [](const Vec3& r) -> Mat3 {
    Mat3 J;
    J(0, 0) = 2.0 * r[0]; J(0, 1) = -2.0;        J(0, 2) = 0.0;
    J(1, 0) = -2.0 * r[2]; J(1, 1) = 2.0 * r[1]; J(1, 2) = -2.0 * r[0];
    J(2, 0) = 0.0;         J(2, 1) = 0.0;        J(2, 2) = 2.0 * r[2];
    return J;
  };
  Vec3 r = newton3(seed, Vec3{{i[0], i[1], i[2]}}, fwd, jac, "strain_to_stretch_inv");
  InvariantTriple out;
  out.frame = Frame::stretch_r;
  out[0] = r[0]; out[1] = r[1]; out[2] = r[2];
  return out;
}

InvariantTriple s_to_j(const InvariantTriple& s, double lambda) {
  if (s.frame != Frame::stretch_s) throw ConfigError("s_to_j: expected stretch_s triple");
  double s1 = s[0], s2 = s[1], s3 = s[2], L = lambda;
  InvariantTriple j;
  j.frame = Frame::strain_j;
  j[0] = 2.0 * L * s1 + s1 * s1 - 2.0 * s2;
  j[1] = 4.0 * L * L * s2 + 2.0 * L * s1 * s2 - 6.0 * L * s3 + s2 * s2 - 2.0 * s1 * s3;
  j[2] = 8.0 * L * L * L * s3 + 4.0 * L * L * s1 * s3 + 2.0 * L * s2 * s3 + s3 * s3;
  return j;
}

InvariantTriple j_to_s(const InvariantTriple& j, double lambda) {
  if (j.frame != Frame::strain_j) throw ConfigError("j_to_s: expected strain_j triple");
  double L = lambda;
  auto fwd = [L](const Vec3& s) -> Vec3 {
    double s1 = s[0], s2 = s[1], s3 = s[2];
    return {{2.0 * L * s1 + s1 * s1 - 2.0 * s2,
             4.0 * L * L * s2 + 2.0 * L * s1 * s2 - 6.0 * L * s3 + s2 * s2 - 2.0 * s1 * s3,
             8.0 * L * L * L * s3 + 4.0 * L * L * s1 * s3 + 2.0 * L * s2 * s3 + s3 * s3}};
  };
  auto jac = [L](const Vec3& s) -> Mat3 {
    double s1 = s[0], s2 = s[1], s3 = s[2];
    Mat3 J;
    J(0, 0) = 2.0 * L + 2.0 * s1; J(0, 1) = -2.0;                              J(0, 2) = 0.0;
    J(1, 0) = 2.0 * L * s2 - 2.0 * s3;
    J(1, 1) = 4.0 * L * L + 2.0 * L * s1 + 2.0 * s2;
    J(1, 2) = -6.0 * L - 2.0 * s1;
    J(2, 0) = 4.0 * L * L * s3;
    J(2, 1) = 2.0 * L * s3;
    J(2, 2) = 8.0 * L * L * L + 4.0 * L * L * s1 + 2.0 * L * s2 + 2.0 * s3;
    return J;
  };
  Vec3 s = newton3(Vec3{}, Vec3{{j[0], j[1], j[2]}}, fwd, jac, "j_to_s");
  InvariantTriple out;
  out.frame = Frame::stretch_s;
  out[0] = s[0]; out[1] = s[1]; out[2] = s[2];
  return out;
}

DistortionalVars distortional_vars(const InvariantTriple& s, double lambda) {
  if (s.frame != Frame::stretch_s) throw ConfigError("distortional_vars: expected stretch_s triple");
  double s1 = s[0], s2 = s[1], s3 = s[2];
  DistortionalVars z;
  z.z1 = lambda + s1 / 3.0;
  z.z2 = s2 - s1 * s1 / 3.0;
  z.z3 = s3 - s1 * s2 / 3.0 + 2.0 * s1 * s1 * s1 / 27.0;
  return z;
}

}  // namespace nullwave
