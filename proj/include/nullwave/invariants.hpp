#pragma once

#include <array>

#include "nullwave/mat3.hpp"

namespace nullwave {

// Coordinate systems for principal-invariant triples of a deformation with
// background stretch lambda:
//   strain_i   : invariants of F^T F
//   strain_j   : invariants of F^T F - lambda^2 I
//   stretch_r  : invariants of sqrt(F^T F)
//   stretch_s  : invariants of sqrt(F^T F) - lambda I
enum class Frame { strain_i, strain_j, stretch_r, stretch_s };

const char* frame_name(Frame f);

// Principal invariants (e1, e2, e3) of a 3x3 matrix tagged with the
// coordinate system they live in. e1 = tr M, e2 = ((tr M)^2 - tr M^2)/2,
// e3 = det M; equivalently the elementary symmetric functions of the
// eigenvalues.
struct InvariantTriple {
  std::array<double, 3> v{0.0, 0.0, 0.0};
  Frame frame = Frame::strain_i;

  double& operator[](int k) { return v[k]; }
  double operator[](int k) const { return v[k]; }
};

// Volume-preserving (distortional) variables derived from the stretch-s
// coordinates: z1 is the mean stretch, (z2, z3) the second and third
// invariants of the trace-free part of the stretch. For any real symmetric
// source, z2 <= 0.
struct DistortionalVars {
  double z1 = 0.0, z2 = 0.0, z3 = 0.0;
};

// Invariants of M, tagged with `frame`.
InvariantTriple invariants3(const Mat3& M, Frame frame);

// Invariants of M' = zI + M from the invariants of M. Pure algebra; the
// frame tag passes through unchanged.
InvariantTriple shift_invariants(double z, const InvariantTriple& e);

// stretch_r -> strain_i:  i1 = r1^2 - 2 r2,  i2 = r2^2 - 2 r1 r3,  i3 = r3^2.
InvariantTriple stretch_to_strain_inv(const InvariantTriple& r);

// strain_i -> stretch_r by Newton iteration on stretch_to_strain_inv,
// seeded at the dilation (3 lam, 3 lam^2, lam^3) for lam = guess_lambda.
// Tolerance 1e-12 on the residual, at most 50 iterations; throws
// NoConvergence or SingularJacobian. The inverse is well defined only for
// triples coming from an SPD stretch.
InvariantTriple strain_to_stretch_inv(const InvariantTriple& i, double guess_lambda);

// stretch_s -> strain_j at background stretch lambda:
//   j1 = 2 lam s1 + s1^2 - 2 s2
//   j2 = 4 lam^2 s2 + 2 lam s1 s2 - 6 lam s3 + s2^2 - 2 s1 s3
//   j3 = 8 lam^3 s3 + 4 lam^2 s1 s3 + 2 lam s2 s3 + s3^2
InvariantTriple s_to_j(const InvariantTriple& s, double lambda);

// strain_j -> stretch_s: Newton inverse of s_to_j seeded at s = 0,
// tolerance 1e-12, at most 50 iterations.
InvariantTriple j_to_s(const InvariantTriple& j, double lambda);

// Distortional variables from stretch_s coordinates:
//   z1 = lam + s1/3,  z2 = s2 - s1^2/3,  z3 = s3 - s1 s2 / 3 + 2 s1^3 / 27.
DistortionalVars distortional_vars(const InvariantTriple& s, double lambda);

}  // namespace nullwave
