#pragma once

#include <vector>

#include "sorbop/physics.hpp"

namespace sorbop {

enum class Phase { gas, solid };

const char* phase_name(Phase phase);
Phase phase_from_name(const std::string& name);

// Cell-centered grid on the unit square: n_x cells with centers at
// (j - 1/2)/n_x, and n_t stored time levels k/(n_t - 1), k = 0 .. n_t-1
// (n_t levels = n_t - 1 implicit steps). IC sensors, solver output and
// trunk queries all share these centers.
struct Grid {
  int n_x = 100;
  int n_t = 101;
  std::vector<double> xi_centers;
  std::vector<double> tau_levels;

  static Grid make(int n_x = 100, int n_t = 101);
  double d_xi() const { return 1.0 / n_x; }
  double d_tau() const { return 1.0 / (n_t - 1); }
};

// One phase of a solution: n_x * n_t values, row-major over (cell, level).
struct Field {
  int n_x = 0;
  int n_t = 0;
  Phase phase = Phase::gas;
  std::vector<double> values;

  static Field zeros(int n_x, int n_t, Phase phase);
  double& at(int j, int k) { return values[static_cast<std::size_t>(j) * n_t + k]; }
  double at(int j, int k) const { return values[static_cast<std::size_t>(j) * n_t + k]; }
  std::vector<double> column(int k) const;
};

struct SolveOutput {
  Field gas;
  Field solid;
  // Per-step conservation defect relative to the inlet influx of one step;
  // same series as mass_balance_residual() recomputes from the fields.
  std::vector<double> mass_balance_residual;
};

// Reference integrator for the normalized system:
//
//   a_gas_t dCg/dtau + a_gas_x dCg/dxi = -(Cg - Cs)
//   a_solid_t dCs/dtau = (Cg - Cs)
//   Cg(0, tau) = 1 (inlet face),  dCg/dxi(1, tau) = 0,  Cg(xi, 0) = ic,
//   Cs(xi, 0) = equilibrium_solid_ic(ic).
//
// Finite volume with first-order upwind convection (v_x > 0) and backward
// Euler in time for both phases. Eliminating the solid unknown reduces each
// cell to a weighted average of {old gas, inflow face, old solid} with
// positive weights, so a single inlet-to-outlet sweep per step solves the
// coupled system exactly: monotone, bounded on [0,1] data, conservative,
// and an exact fixed point at ic = 1. The inlet Dirichlet value enters as
// the upwind face value of cell 1, never by overwriting the cell, so the
// IC at the first cell may disagree with the feed at tau = 0.
SolveOutput solve(const std::vector<double>& ic, const DimlessCoeffs& coeffs,
                  const Grid& grid);

// Discrete balance of the scheme summed over the bed, per step:
//   a_gas_t * d(gas holdup) + a_solid_t * d(solid holdup)
//     - a_gas_x * d_tau * (inlet face - outlet face)
// normalized by the one-step inlet influx a_gas_x * d_tau. Exact up to
// rounding for fields produced by solve().
std::vector<double> mass_balance_residual(const SolveOutput& out,
                                          const DimlessCoeffs& coeffs,
                                          const Grid& grid);

}  // namespace sorbop
