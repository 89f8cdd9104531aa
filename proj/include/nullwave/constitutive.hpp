#pragma once

#include <optional>
#include <string>

#include "nullwave/invariants.hpp"
#include "nullwave/scalar_fn.hpp"

namespace nullwave {

// Stored energy about a prestressed reference dilation, in distortional
// form: tau(lambda, s) = f(z1) + g(z1) z2 + h(z1) z3 [+ r(z1, z2, z3)],
// where (z1, z2, z3) are the distortional variables of the stretch-s
// invariants. The optional remainder r must vanish to first order in
// (z2, z3); it affects tau only at fourth order in s and none of the
// reported wave-speed or null-condition quantities.
struct StoredEnergyModel {
  ScalarFn f, g, h;
  double lambda_min = 0.25;
  double lambda_max = 4.0;

  // Present when the model came from construct_null_material; serialized
  // back verbatim so constructed specs round-trip exactly.
  struct Recipe {
    std::string bulk, c2sq;
  };
  std::optional<Recipe> recipe;

  ExprPtr remainder;  // over variables (z1, z2, z3); null when absent

  // Parse and install a remainder, verifying r(z1,0,0) = r_{z2}(z1,0,0) =
  // r_{z3}(z1,0,0) = 0 by central finite differences at samples across the
  // working interval. Throws ConfigError when the conditions fail.
  void set_remainder(const std::string& text);
};

struct Speeds {
  double c1sq = 0.0;  // longitudinal speed squared: f''(lam)/9 - (2/3) g(lam)
  double c2sq = 0.0;  // transverse speed squared: (f'(lam)/3 - lam g(lam)) / (2 lam)
};

struct MaterialReport {
  double lambda = 0.0;
  double c1sq = 0.0, c2sq = 0.0;
  double bulk = 0.0;     // c1sq - (4/3) c2sq
  double tau111 = 0.0;   // f'''(lam)/27 - (2/3) g'(lam) + (4/9) h(lam)
  double pressure = 0.0; // -f'(lam)/lam^2
  bool hyperbolic = false;      // bulk > 0 and c2sq > 0
  bool null_condition = false;  // |tau111| <= tolerance
  bool stress_free_at_1 = false;
};

// tau(lambda, s) for a stretch_s triple.
double eval_tau(const StoredEnergyModel& m, double lambda, const InvariantTriple& s);

Speeds speeds(const StoredEnergyModel& m, double lambda);

MaterialReport check_material(const StoredEnergyModel& m, double lambda, double null_tol = 1e-8);

// Residual pressure of the prestressed dilation x -> lambda x.
double pressure(const StoredEnergyModel& m, double lambda);

// Build the unique stored energy with prescribed bulk modulus b(lambda) > 0
// and transverse speed c2sq(lambda) > 0 that is stress free at lambda = 1
// (f(1) = f'(1) = 0) and satisfies the null condition at every lambda in
// the working interval. Everything reduces to the single quadrature
// I(x) = integral_1^x b(y)/y^2 dy, carried as a Chebyshev antiderivative:
//   f   = 3 x^3 I - 3 K,      K(x) = integral_1^x y b(y) dy
//   f'  = 9 x^2 I
//   f'' = 18 x I + 9 b
//   f''' = 18 I + 18 b/x + 9 b'
//   g   = 3 x I - 2 c2sq
//   g'  = 3 I + 3 b/x - 2 c2sq'
//   h   = (3/2) g' - f'''/12 = 3 I + 3 b/x - 3 c2sq' - (3/4) b'
// The interval must contain 1 strictly (the construction anchors at the
// stress-free state). Throws NonPositiveModulus when b or c2sq fails
// positivity on the interval.
StoredEnergyModel construct_null_material(const ScalarFn& bulk, const ScalarFn& c2sq,
                                          double lambda_min = 0.25, double lambda_max = 4.0);

// Material-spec JSON (string form):
//   { "f": expr | {"construct": {"bulk": expr, "c2sq": expr}},
//     "g": expr, "h": expr, "lambda_range": [a, b] }
// g and h default to "0" and are forbidden alongside a construct block.
// save_material(load_material(s)) re-emits an identical document.
StoredEnergyModel load_material(const std::string& json_text);
std::string save_material(const StoredEnergyModel& m);

// Convenience: load from a file path.
StoredEnergyModel load_material_file(const std::string& path);

}  // namespace nullwave
