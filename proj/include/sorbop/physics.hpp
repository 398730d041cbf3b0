#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sorbop {

// Dimensional constants of the packed-bed adsorption step. Defaults are the
// reference case the whole pipeline is built around.
struct PhysicalParams {
  double L = 1.0;        // bed length [m]
  double v_x = 0.1;      // superficial gas velocity [m/s]
  double eps_B = 0.5;    // bed porosity [-]
  double k_g = 0.01;     // mass transfer coefficient [m/s]
  double d_p = 0.005;    // particle diameter [m]
  double a_s = 1200.0;   // specific surface area [1/m]
  double K_eq = 100.0;   // linear isotherm equilibrium constant [-]
  double t_tot = 1200.0; // total simulated time [s]
  double C_0 = 1000.0;   // reference concentration [mol/m^3]

  /// Throws ValidationError naming the offending field.
  void validate() const;
};

// Coefficients of the normalized two-phase system on (xi*, tau*) in (0,1)^2:
//   a_gas_t dCg/dtau* + a_gas_x dCg/dxi* = -(Cg - Cs)
//   a_solid_t dCs/dtau* = (Cg - Cs)
// tau0 and xi0 are the scalings that map t in (0, t_tot) and x in (0, L)
// onto the unit square.
struct DimlessCoeffs {
  double tau0 = 0;
  double xi0 = 0;
  double a_gas_t = 0;    // eps_B / ((1 - eps_B) * K_eq * tau0)
  double a_gas_x = 0;    // 1 / xi0
  double a_solid_t = 0;  // 1 / tau0
};

DimlessCoeffs dimensionless_coefficients(const PhysicalParams& params);

/// Dimensionless solid IC in local equilibrium with the gas IC. With the
/// solid normalized by K_eq*C_0 and a linear isotherm this is the identity;
/// values outside [0,1] are rejected.
std::vector<double> equilibrium_solid_ic(const std::vector<double>& gas_ic);

struct UnitPoint {
  double xi_star = 0;
  double tau_star = 0;
};

UnitPoint to_unit_square(const PhysicalParams& params, double x, double t);
/// Inverse of to_unit_square; returns (x, t).
std::pair<double, double> from_unit_square(const PhysicalParams& params,
                                           double xi_star, double tau_star);

/// Returns a message when a_s deviates from the spherical-particle value
/// 6/d_p by more than 1e-12 relative; callers treat this as a warning.
std::optional<std::string> sphere_area_warning(const PhysicalParams& params);

/// Loads params from JSON; keys match the symbol names (L, v_x, eps_B, k_g,
/// d_p, a_s, K_eq, t_tot, C_0) and missing keys keep their defaults.
PhysicalParams load_params_json(const std::filesystem::path& path);
void save_params_json(const std::filesystem::path& path,
                      const PhysicalParams& params);

}  // namespace sorbop
