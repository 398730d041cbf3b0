#include "sorbop/physics.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "sorbop/errors.hpp"

namespace sorbop {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw ValidationError(std::string("PhysicalParams: ") + name +
                          " must be positive and finite");
}

}  // namespace

void PhysicalParams::validate() const {
  require_positive(L, "L");
  require_positive(v_x, "v_x");
  require_positive(eps_B, "eps_B");
  require_positive(k_g, "k_g");
  require_positive(d_p, "d_p");
  require_positive(a_s, "a_s");
  require_positive(K_eq, "K_eq");
  require_positive(t_tot, "t_tot");
  require_positive(C_0, "C_0");
  if (!(eps_B < 1.0))
    throw ValidationError("PhysicalParams: eps_B must lie in (0, 1)");
}

DimlessCoeffs dimensionless_coefficients(const PhysicalParams& params) {
  params.validate();
  DimlessCoeffs c;
  c.tau0 = params.k_g * params.a_s * params.t_tot /
           ((1.0 - params.eps_B) * params.K_eq);
  c.xi0 = params.k_g * params.a_s * params.L / (params.eps_B * params.v_x);
  c.a_gas_t = params.eps_B / ((1.0 - params.eps_B) * params.K_eq * c.tau0);
  c.a_gas_x = 1.0 / c.xi0;
  c.a_solid_t = 1.0 / c.tau0;
  return c;
}

std::vector<double> equilibrium_solid_ic(const std::vector<double>& gas_ic) {
  for (double v : gas_ic) {
    if (!(v >= 0.0 && v <= 1.0))
      throw ValidationError("equilibrium_solid_ic: IC value outside [0, 1]");
  }
  return gas_ic;
}

UnitPoint to_unit_square(const PhysicalParams& params, double x, double t) {
  const DimlessCoeffs c = dimensionless_coefficients(params);
  const double xi = params.k_g * params.a_s * x / (params.eps_B * params.v_x);
  const double tau =
      params.k_g * params.a_s * t / ((1.0 - params.eps_B) * params.K_eq);
  return {xi / c.xi0, tau / c.tau0};
}

std::pair<double, double> from_unit_square(const PhysicalParams& params,
                                           double xi_star, double tau_star) {
  const DimlessCoeffs c = dimensionless_coefficients(params);
  const double x =
      xi_star * c.xi0 * params.eps_B * params.v_x / (params.k_g * params.a_s);
  const double t = tau_star * c.tau0 * (1.0 - params.eps_B) * params.K_eq /
                   (params.k_g * params.a_s);
  return {x, t};
}

std::optional<std::string> sphere_area_warning(const PhysicalParams& params) {
  const double expected = 6.0 / params.d_p;
  const double rel = std::abs(params.a_s - expected) / expected;
  if (rel > 1e-12) {
    return "a_s = " + std::to_string(params.a_s) +
           " deviates from 6/d_p = " + std::to_string(expected);
  }
  return std::nullopt;
}

PhysicalParams load_params_json(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open params file: " + path.string());
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed params JSON: " + std::string(e.what()));
  }
  PhysicalParams p;
  auto fetch = [&](const char* key, double& field) {
    if (j.contains(key)) {
      if (!j[key].is_number())
        throw ValidationError(std::string("params key ") + key +
                              " is not a number");
      field = j[key].get<double>();
    }
  };
  fetch("L", p.L);
  fetch("v_x", p.v_x);
  fetch("eps_B", p.eps_B);
  fetch("k_g", p.k_g);
  fetch("d_p", p.d_p);
  fetch("a_s", p.a_s);
  fetch("K_eq", p.K_eq);
  fetch("t_tot", p.t_tot);
  fetch("C_0", p.C_0);
  p.validate();
  return p;
}

void save_params_json(const std::filesystem::path& path,
                      const PhysicalParams& p) {
  nlohmann::json j{{"L", p.L},         {"v_x", p.v_x},   {"eps_B", p.eps_B},
                   {"k_g", p.k_g},     {"d_p", p.d_p},   {"a_s", p.a_s},
                   {"K_eq", p.K_eq},   {"t_tot", p.t_tot}, {"C_0", p.C_0}};
  std::ofstream os(path);
  if (!os) throw IoError("cannot write params file: " + path.string());
  os << j.dump(2) << '\n';
}

}  // namespace sorbop
