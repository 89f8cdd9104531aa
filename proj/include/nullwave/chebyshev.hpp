#pragma once

#include <functional>
#include <vector>

namespace nullwave {

// Chebyshev series sum_{k=0}^{n} c[k] T_k(y) on [a, b], y the affine map of
// x onto [-1, 1]. Fitting interpolates at Chebyshev-Lobatto nodes with the
// degree doubled adaptively until the coefficient tail is negligible, so the
// series of a smooth function is accurate to near machine precision and its
// derivative/antiderivative are exact coefficient recurrences (no numerical
// differentiation anywhere).
class ChebSeries {
 public:
  ChebSeries() = default;
  ChebSeries(double a, double b, std::vector<double> coeffs);

  // Adaptive fit; throws NoConvergence if the tail never decays below
  // rel_tol relative to the largest coefficient.
  static ChebSeries fit(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-13, int max_degree = 2048);

  // Evaluate by Clenshaw recurrence; throws DomainError outside [a, b]
  // (with a 1e-9 relative grace band at the endpoints).
  double eval(double x) const;

  ChebSeries derivative() const;

  // Antiderivative F with F(anchor) = 0; anchor must lie in [a, b].
  ChebSeries antiderivative(double anchor) const;

  double a() const { return a_; }
  double b() const { return b_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }

 private:
  double a_ = -1.0, b_ = 1.0;
  std::vector<double> c_{0.0};
};

}  // namespace nullwave
