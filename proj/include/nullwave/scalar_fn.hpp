#pragma once

#include <string>
#include <vector>

#include "nullwave/chebyshev.hpp"
#include "nullwave/expr.hpp"

namespace nullwave {

// Scalar function of one variable, either a symbolic expression tree (the
// variable is named "x") or a tabulated Chebyshev series. Both kinds expose
// exact derivatives: symbolic differentiation for trees, the coefficient
// recurrence for series. A series may carry a chain of directly constructed
// higher-derivative series; those are preferred over recurrence when present.
class ScalarFn {
 public:
  ScalarFn() : ScalarFn(from_constant(0.0)) {}

  static ScalarFn from_expression(const std::string& text);
  static ScalarFn from_tree(ExprPtr e);
  static ScalarFn from_constant(double v);
  static ScalarFn from_chebyshev(ChebSeries s);
  // chain[k] is the k-th derivative of chain[0], each built independently.
  static ScalarFn from_chebyshev_chain(std::vector<ChebSeries> chain);

  double operator()(double x) const;
  ScalarFn derivative(int order = 1) const;

  bool is_expression() const { return !chain_.size(); }
  bool is_constant(double v) const;

  // Original source text for parsed expressions (preserved verbatim for
  // bit-exact spec round trips); a rendered form for derived trees.
  const std::string& source() const { return source_; }
  const ExprPtr& tree() const { return tree_; }

 private:
  ExprPtr tree_;                   // expression kind
  std::vector<ChebSeries> chain_;  // tabulated kind (nonempty)
  std::string source_;
};

// Derivative of order `order` (order >= 0; order 0 returns f unchanged).
ScalarFn diff_scalar(const ScalarFn& f, int order = 1);

}  // namespace nullwave
