#include "nullwave/chebyshev.hpp"

#include <algorithm>
#include <cmath>

#include "nullwave/error.hpp"

namespace nullwave {

ChebSeries::ChebSeries(double a, double b, std::vector<double> coeffs)
    : a_(a), b_(b), c_(std::move(coeffs)) {
  if (!(a < b)) throw ConfigError("ChebSeries: empty interval");
  if (c_.empty()) c_.push_back(0.0);
}

namespace {

// Interpolation coefficients at Chebyshev-Lobatto nodes y_j = cos(pi j / n)
// via the type-I discrete cosine transform (direct O(n^2) sums).
std::vector<double> lobatto_coeffs(const std::vector<double>& fvals) {
  int n = static_cast<int>(fvals.size()) - 1;
  std::vector<double> c(n + 1, 0.0);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k <= n; ++k) {
    double s = 0.5 * (fvals[0] + (k % 2 == 0 ? fvals[n] : -fvals[n]));
    for (int j = 1; j < n; ++j) s += fvals[j] * std::cos(pi * j * k / n);
    c[k] = 2.0 * s / n;
  }
  c[0] *= 0.5;
  c[n] *= 0.5;
  return c;
}

}  // namespace

ChebSeries ChebSeries::fit(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, int max_degree) {
  if (!(a < b)) throw ConfigError("ChebSeries::fit: empty interval");
  const double pi = 3.14159265358979323846;
  for (int n = 16; n <= max_degree; n *= 2) {
    std::vector<double> fv(n + 1);
    for (int j = 0; j <= n; ++j) {
      double y = std::cos(pi * j / n);
      double x = 0.5 * (a + b) + 0.5 * (b - a) * y;
      fv[j] = f(x);
      if (!std::isfinite(fv[j])) throw DomainError("ChebSeries::fit: sample is not finite");
    }
    std::vector<double> c = lobatto_coeffs(fv);
    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    if (cmax == 0.0) return ChebSeries(a, b, {0.0});
    // Tail test over the top eighth of the spectrum.
    double tail = 0.0;
    for (int k = n - n / 8; k <= n; ++k) tail = std::max(tail, std::abs(c[k]));
    if (tail <= rel_tol * cmax) {
      // Truncate trailing negligible coefficients.
      int last = n;
      while (last > 0 && std::abs(c[last]) <= 0.5 * rel_tol * cmax) --last;
      c.resize(last + 1);
      return ChebSeries(a, b, std::move(c));
    }
  }
  throw NoConvergence("ChebSeries::fit: coefficient tail did not decay by max degree");
}

double ChebSeries::eval(double x) const {
  double grace = 1e-9 * (std::abs(a_) + std::abs(b_) + 1.0);
  if (x < a_ - grace || x > b_ + grace)
    throw DomainError("ChebSeries::eval: argument outside tabulated interval");
  x = std::clamp(x, a_, b_);
  double y = (2.0 * x - a_ - b_) / (b_ - a_);
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 1; --k) {
    double t = 2.0 * y * b1 - b2 + c_[k];
    b2 = b1;
    b1 = t;
  }
  return y * b1 - b2 + c_[0];
}

ChebSeries ChebSeries::derivative() const {
  int n = degree();
  if (n == 0) return ChebSeries(a_, b_, {0.0});
  std::vector<double> d(n + 2, 0.0);
  for (int k = n; k >= 1; --k) d[k - 1] = d[k + 1] + 2.0 * k * c_[k];
  d[0] *= 0.5;
  d.resize(n);  // degree n-1
  double scale = 2.0 / (b_ - a_);
  for (double& v : d) v *= scale;
  return ChebSeries(a_, b_, std::move(d));
}

ChebSeries ChebSeries::antiderivative(double anchor) const {
  int n = degree();
  std::vector<double> A(n + 2, 0.0);
  auto c_at = [&](int k) { return k <= n ? c_[k] : 0.0; };
  A[1] = c_at(0) - 0.5 * c_at(2);
  for (int k = 2; k <= n + 1; ++k) A[k] = (c_at(k - 1) - c_at(k + 1)) / (2.0 * k);
  double scale = 0.5 * (b_ - a_);
  for (double& v : A) v *= scale;
  ChebSeries F(a_, b_, std::move(A));
  double off = F.eval(anchor);
  F.c_[0] -= off;
  return F;
}

}  // namespace nullwave
