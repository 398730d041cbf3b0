#include "sorbop/solver.hpp"

#include <cmath>
#include <string>

#include "sorbop/errors.hpp"

namespace sorbop {

const char* phase_name(Phase phase) {
  return phase == Phase::gas ? "gas" : "solid";
}

Phase phase_from_name(const std::string& name) {
  if (name == "gas") return Phase::gas;
  if (name == "solid") return Phase::solid;
  throw ValidationError("unknown phase: " + name);
}

Grid Grid::make(int n_x, int n_t) {
  if (n_x < 1) throw ValidationError("Grid: n_x must be >= 1");
  if (n_t < 2) throw ValidationError("Grid: n_t must be >= 2");
  Grid g;
  g.n_x = n_x;
  g.n_t = n_t;
  g.xi_centers.resize(n_x);
  for (int j = 0; j < n_x; ++j) g.xi_centers[j] = (j + 0.5) / n_x;
  g.tau_levels.resize(n_t);
  for (int k = 0; k < n_t; ++k)
    g.tau_levels[k] = static_cast<double>(k) / (n_t - 1);
  return g;
}

Field Field::zeros(int n_x, int n_t, Phase phase) {
  Field f;
  f.n_x = n_x;
  f.n_t = n_t;
  f.phase = phase;
  f.values.assign(static_cast<std::size_t>(n_x) * n_t, 0.0);
  return f;
}

std::vector<double> Field::column(int k) const {
  std::vector<double> col(n_x);
  for (int j = 0; j < n_x; ++j) col[j] = at(j, k);
  return col;
}

namespace {

void check_coeffs(const DimlessCoeffs& c) {
  if (!(c.tau0 > 0 && c.xi0 > 0 && c.a_gas_t > 0 && c.a_gas_x > 0 &&
        c.a_solid_t > 0))
    throw ValidationError("solve: coefficients must be positive");
}

}  // namespace

SolveOutput solve(const std::vector<double>& ic, const DimlessCoeffs& coeffs,
                  const Grid& grid) {
  check_coeffs(coeffs);
  if (static_cast<int>(ic.size()) != grid.n_x)
    throw ValidationError("solve: IC length " + std::to_string(ic.size()) +
                          " does not match grid n_x = " +
                          std::to_string(grid.n_x));
  for (double v : ic) {
    if (!std::isfinite(v)) throw ValidationError("solve: non-finite IC value");
    if (!(v >= 0.0 && v <= 1.0))
      throw ValidationError("solve: IC value outside [0, 1]");
  }

  const int nx = grid.n_x;
  const int nt = grid.n_t;
  const double d_xi = grid.d_xi();
  const double d_tau = grid.d_tau();

  SolveOutput out;
  out.gas = Field::zeros(nx, nt, Phase::gas);
  out.solid = Field::zeros(nx, nt, Phase::solid);

  const std::vector<double> solid_ic = equilibrium_solid_ic(ic);
  for (int j = 0; j < nx; ++j) {
    out.gas.at(j, 0) = ic[j];
    out.solid.at(j, 0) = solid_ic[j];
  }

  // Per-cell elimination weights, constant across the sweep.
  const double w_gas = coeffs.a_gas_t / d_tau;
  const double w_adv = coeffs.a_gas_x / d_xi;
  // Solid update Cs = (a_solid_t*Cs_old + d_tau*Cg) / (a_solid_t + d_tau)
  // substituted into the gas equation leaves an exchange weight w_exc on
  // the old solid value.
  const double w_exc = coeffs.a_solid_t / (coeffs.a_solid_t + d_tau);
  const double denom = w_gas + w_adv + w_exc;

  std::vector<double> cg(ic);
  std::vector<double> cs(solid_ic);

  for (int k = 1; k < nt; ++k) {
    double face = 1.0;  // inlet Dirichlet at the xi* = 0 face
    for (int j = 0; j < nx; ++j) {
      const double cg_new =
          (w_gas * cg[j] + w_adv * face + w_exc * cs[j]) / denom;
      const double cs_new = (coeffs.a_solid_t * cs[j] + d_tau * cg_new) /
                            (coeffs.a_solid_t + d_tau);
      cg[j] = cg_new;
      cs[j] = cs_new;
      face = cg_new;  // upwind face value for the next cell
    }
    for (int j = 0; j < nx; ++j) {
      out.gas.at(j, k) = cg[j];
      out.solid.at(j, k) = cs[j];
    }
  }

  out.mass_balance_residual = mass_balance_residual(out, coeffs, grid);
  return out;
}

std::vector<double> mass_balance_residual(const SolveOutput& out,
                                          const DimlessCoeffs& coeffs,
                                          const Grid& grid) {
  check_coeffs(coeffs);
  const int nx = grid.n_x;
  const int nt = grid.n_t;
  if (out.gas.n_x != nx || out.gas.n_t != nt || out.solid.n_x != nx ||
      out.solid.n_t != nt)
    throw ValidationError("mass_balance_residual: grid mismatch");

  const double d_xi = grid.d_xi();
  const double d_tau = grid.d_tau();
  const double influx = coeffs.a_gas_x * d_tau;  // inlet face value is 1

  std::vector<double> residual(nt - 1);
  for (int k = 1; k < nt; ++k) {
    double d_gas = 0.0;
    double d_solid = 0.0;
    for (int j = 0; j < nx; ++j) {
      d_gas += (out.gas.at(j, k) - out.gas.at(j, k - 1)) * d_xi;
      d_solid += (out.solid.at(j, k) - out.solid.at(j, k - 1)) * d_xi;
    }
    const double boundary =
        coeffs.a_gas_x * d_tau * (1.0 - out.gas.at(nx - 1, k));
    residual[k - 1] =
        (coeffs.a_gas_t * d_gas + coeffs.a_solid_t * d_solid - boundary) /
        influx;
  }
  return residual;
}

}  // namespace sorbop
