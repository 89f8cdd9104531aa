#include "nullwave/constitutive.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nullwave/error.hpp"

namespace nullwave {

namespace {

double eval3(const ExprPtr& e, double z1, double z2, double z3) {
  double v[3] = {z1, z2, z3};
  return eval(e, v);
}

}  // namespace

void StoredEnergyModel::set_remainder(const std::string& text) {
  ExprPtr r = parse_expr(text, {{"z1", 0}, {"z2", 1}, {"z3", 2}});
  // Vanishing conditions along the z2 = z3 = 0 axis, checked by central
  // finite differences (step per eps^(1/3), first-order accurate enough
  // here since the exact values must be zero).
  const double step = 6.0e-6;
  for (int k = 0; k <= 20; ++k) {
    double z1 = lambda_min + (lambda_max - lambda_min) * k / 20.0;
    double hz = step * (std::abs(z1) + 1.0);
    double r0 = eval3(r, z1, 0.0, 0.0);
    double dz2 = (eval3(r, z1, hz, 0.0) - eval3(r, z1, -hz, 0.0)) / (2.0 * hz);
    double dz3 = (eval3(r, z1, 0.0, hz) - eval3(r, z1, 0.0, -hz)) / (2.0 * hz);
    if (std::abs(r0) > 1e-8 || std::abs(dz2) > 1e-8 || std::abs(dz3) > 1e-8)
      throw ConfigError("remainder must vanish to first order in (z2, z3); violation at z1 = " +
                        std::to_string(z1));
  }
  remainder = std::move(r);
}

double eval_tau(const StoredEnergyModel& m, double lambda, const InvariantTriple& s) {
  DistortionalVars z = distortional_vars(s, lambda);
  double v = m.f(z.z1) + m.g(z.z1) * z.z2 + m.h(z.z1) * z.z3;
  if (m.remainder) v += eval3(m.remainder, z.z1, z.z2, z.z3);
  return v;
}

Speeds speeds(const StoredEnergyModel& m, double lambda) {
  if (lambda <= 0.0) throw ConfigError("speeds: lambda must be positive");
  Speeds c;
  c.c1sq = diff_scalar(m.f, 2)(lambda) / 9.0 - (2.0 / 3.0) * m.g(lambda);
  c.c2sq = (diff_scalar(m.f, 1)(lambda) / 3.0 - lambda * m.g(lambda)) / (2.0 * lambda);
  return c;
}

MaterialReport check_material(const StoredEnergyModel& m, double lambda, double null_tol) {
  MaterialReport rep;
  rep.lambda = lambda;
  Speeds c = speeds(m, lambda);
  rep.c1sq = c.c1sq;
  rep.c2sq = c.c2sq;
  rep.bulk = c.c1sq - (4.0 / 3.0) * c.c2sq;
  rep.tau111 = diff_scalar(m.f, 3)(lambda) / 27.0 - (2.0 / 3.0) * diff_scalar(m.g, 1)(lambda) +
               (4.0 / 9.0) * m.h(lambda);
  rep.pressure = pressure(m, lambda);
  rep.hyperbolic = rep.bulk > 0.0 && rep.c2sq > 0.0;
  rep.null_condition = std::abs(rep.tau111) <= null_tol;
  try {
    rep.stress_free_at_1 = std::abs(diff_scalar(m.f, 1)(1.0)) <= 1e-10;
  } catch (const DomainError&) {
    rep.stress_free_at_1 = false;  // 1 outside the working interval
  }
  return rep;
}

double pressure(const StoredEnergyModel& m, double lambda) {
  if (lambda <= 0.0) throw ConfigError("pressure: lambda must be positive");
  return -diff_scalar(m.f, 1)(lambda) / (lambda * lambda);
}

StoredEnergyModel construct_null_material(const ScalarFn& bulk, const ScalarFn& c2sq,
                                          double lambda_min, double lambda_max) {
  if (!(lambda_min > 0.0) || !(lambda_min < lambda_max))
    throw ConfigError("construct_null_material: need 0 < lambda_min < lambda_max");
  if (!(lambda_min < 1.0 && 1.0 < lambda_max))
    throw ConfigError("construct_null_material: the working interval must contain 1 "
                      "(the construction anchors at the stress-free state)");

  // Positivity sweep before any fitting.
  for (int k = 0; k <= 200; ++k) {
    double x = lambda_min + (lambda_max - lambda_min) * k / 200.0;
    if (!(bulk(x) > 0.0))
      throw NonPositiveModulus("construct_null_material: bulk modulus not positive at lambda = " +
                               std::to_string(x));
    if (!(c2sq(x) > 0.0))
      throw NonPositiveModulus("construct_null_material: c2^2 not positive at lambda = " +
                               std::to_string(x));
  }

  ScalarFn db = bulk.derivative();
  ScalarFn dc2 = c2sq.derivative();

  ChebSeries I = ChebSeries::fit([&](double y) { return bulk(y) / (y * y); }, lambda_min, lambda_max)
                     .antiderivative(1.0);
  ChebSeries K = ChebSeries::fit([&](double y) { return y * bulk(y); }, lambda_min, lambda_max)
                     .antiderivative(1.0);

  auto fit = [&](auto&& fn) { return ChebSeries::fit(fn, lambda_min, lambda_max); };

  ChebSeries f0 = fit([&](double x) { return 3.0 * x * x * x * I.eval(x) - 3.0 * K.eval(x); });
  ChebSeries f1 = fit([&](double x) { return 9.0 * x * x * I.eval(x); });
  ChebSeries f2 = fit([&](double x) { return 18.0 * x * I.eval(x) + 9.0 * bulk(x); });
  ChebSeries f3 = fit([&](double x) { return 18.0 * I.eval(x) + 18.0 * bulk(x) / x + 9.0 * db(x); });
  ChebSeries g0 = fit([&](double x) { return 3.0 * x * I.eval(x) - 2.0 * c2sq(x); });
  ChebSeries g1 = fit([&](double x) { return 3.0 * I.eval(x) + 3.0 * bulk(x) / x - 2.0 * dc2(x); });
  ChebSeries h0 = fit([&](double x) {
    return 3.0 * I.eval(x) + 3.0 * bulk(x) / x - 3.0 * dc2(x) - 0.75 * db(x);
  });

  StoredEnergyModel m;
  m.f = ScalarFn::from_chebyshev_chain({f0, f1, f2, f3});
  m.g = ScalarFn::from_chebyshev_chain({g0, g1});
  m.h = ScalarFn::from_chebyshev(h0);
  m.lambda_min = lambda_min;
  m.lambda_max = lambda_max;
  m.recipe = StoredEnergyModel::Recipe{bulk.source(), c2sq.source()};
  return m;
}

namespace {

using nlohmann::json;

StoredEnergyModel from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("material spec: expected a JSON object");
  double lo = 0.25, hi = 4.0;
  if (j.contains("lambda_range")) {
    const json& r = j.at("lambda_range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      throw ConfigError("material spec: lambda_range must be [a, b]");
    lo = r[0].get<double>();
    hi = r[1].get<double>();
    if (!(lo > 0.0 && lo < hi)) throw ConfigError("material spec: need 0 < a < b in lambda_range");
  }
  if (!j.contains("f")) throw ConfigError("material spec: missing \"f\"");
  const json& jf = j.at("f");

  if (jf.is_object()) {
    if (!jf.contains("construct") || !jf.at("construct").is_object())
      throw ConfigError("material spec: \"f\" object must hold a \"construct\" block");
    if (j.contains("g") || j.contains("h"))
      throw ConfigError("material spec: g/h may not accompany a construct block");
    const json& c = jf.at("construct");
    if (!c.contains("bulk") || !c.contains("c2sq") || !c.at("bulk").is_string() ||
        !c.at("c2sq").is_string())
      throw ConfigError("material spec: construct needs string \"bulk\" and \"c2sq\"");
    return construct_null_material(ScalarFn::from_expression(c.at("bulk").get<std::string>()),
                                   ScalarFn::from_expression(c.at("c2sq").get<std::string>()), lo, hi);
  }

  if (!jf.is_string()) throw ConfigError("material spec: \"f\" must be a string or construct block");
  StoredEnergyModel m;
  m.f = ScalarFn::from_expression(jf.get<std::string>());
  auto grab = [&](const char* key) -> ScalarFn {
    if (!j.contains(key)) return ScalarFn::from_expression("0");
    if (!j.at(key).is_string()) throw ConfigError(std::string("material spec: \"") + key + "\" must be a string");
    return ScalarFn::from_expression(j.at(key).get<std::string>());
  };
  m.g = grab("g");
  m.h = grab("h");
  m.lambda_min = lo;
  m.lambda_max = hi;
  return m;
}

}  // namespace

StoredEnergyModel load_material(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("material spec: ") + e.what());
  }
  return from_json(j);
}

std::string save_material(const StoredEnergyModel& m) {
  json j;
  if (m.recipe) {
    j["f"] = {{"construct", {{"bulk", m.recipe->bulk}, {"c2sq", m.recipe->c2sq}}}};
  } else {
    j["f"] = m.f.source();
    j["g"] = m.g.source();
    j["h"] = m.h.source();
  }
  j["lambda_range"] = {m.lambda_min, m.lambda_max};
  return j.dump(2) + "\n";
}

StoredEnergyModel load_material_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open material spec file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_material(ss.str());
}

}  // namespace nullwave
