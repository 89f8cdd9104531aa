#include "nullwave/scalar_fn.hpp"

#include "nullwave/error.hpp"

namespace nullwave {

ScalarFn ScalarFn::from_expression(const std::string& text) {
  ScalarFn f;
  f.tree_ = parse_expr(text, {{"x", 0}});
  f.source_ = text;
  return f;
}

ScalarFn ScalarFn::from_tree(ExprPtr e) {
  ScalarFn f;
  f.source_ = to_string(e, {"x"});
  f.tree_ = std::move(e);
  return f;
}

ScalarFn ScalarFn::from_constant(double v) { return from_tree(Expr::constant(v)); }

ScalarFn ScalarFn::from_chebyshev(ChebSeries s) {
  ScalarFn f;
  f.chain_.push_back(std::move(s));
  f.source_ = "<tabulated>";
  f.tree_ = nullptr;
  return f;
}

ScalarFn ScalarFn::from_chebyshev_chain(std::vector<ChebSeries> chain) {
  if (chain.empty()) throw ConfigError("ScalarFn: empty Chebyshev chain");
  ScalarFn f;
  f.chain_ = std::move(chain);
  f.source_ = "<tabulated>";
  f.tree_ = nullptr;
  return f;
}

double ScalarFn::operator()(double x) const {
  if (is_expression()) {
    double vals[1] = {x};
    return eval(tree_, vals);
  }
  return chain_.front().eval(x);
}

ScalarFn ScalarFn::derivative(int order) const {
  if (order < 0) throw ConfigError("ScalarFn::derivative: negative order");
  if (order == 0) return *this;
  if (is_expression()) {
    ExprPtr t = tree_;
    for (int k = 0; k < order; ++k) t = diff(t, 0);
    return from_tree(std::move(t));
  }
  // Walk the precomputed chain first, then fall back to the recurrence.
  std::vector<ChebSeries> rest(chain_.begin() + std::min<size_t>(order, chain_.size() - 1), chain_.end());
  int remaining = order - static_cast<int>(std::min<size_t>(order, chain_.size() - 1));
  for (int k = 0; k < remaining; ++k) rest.front() = rest.front().derivative();
  if (remaining > 0) rest.resize(1);
  return from_chebyshev_chain(std::move(rest));
}

bool ScalarFn::is_constant(double v) const {
  return is_expression() && tree_->is_const(v);
}

ScalarFn diff_scalar(const ScalarFn& f, int order) { return f.derivative(order); }

}  // namespace nullwave
