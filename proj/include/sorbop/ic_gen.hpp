#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sorbop/physics.hpp"
#include "sorbop/rng.hpp"
#include "sorbop/solver.hpp"

namespace sorbop {

enum class Family { line, sigmoid, exponential, gaussian, sine };

const char* family_name(Family family);
Family family_from_name(const std::string& name);

struct ParamRange {
  double lo = 0;
  double hi = 0;
};

// Parameter sampling ranges for the five IC families. The in-distribution
// table has no sine family; the OOD table widens every range, frees the
// exponential offset and draws the line slope from [-4,-2) u [2,4).
struct RangeTable {
  ParamRange gauss_mu, gauss_sigma;
  ParamRange sigmoid_k, sigmoid_c;
  ParamRange exp_alpha, exp_beta;
  ParamRange line_m, line_q;
  bool line_slope_two_sided = false;  // sample |m| from line_m, sign fair coin
  bool has_sine = false;
  ParamRange sine_w0, sine_phi;

  static RangeTable in_distribution();
  static RangeTable out_of_distribution();
};

// A sampled initial condition: family shape f plus the vertical rescale
// g = a * minmax(f) + b that places it inside [0,1]. Specs are the source
// of truth; re-evaluating one reproduces the stored vector bit-exactly.
struct ICSpec {
  Family family = Family::line;
  double p1 = 0;  // m | k | alpha | mu | w0
  double p2 = 0;  // q | c | beta  | sigma | phi
  double a = 1;
  double b = 0;
  std::uint64_t seed = 0;
};

/// Draws one spec from the table. Throws if the family is not offered by
/// the table (sine is OOD-only).
ICSpec sample_ic(Family family, const RangeTable& table, Rng& rng);

/// Evaluates the family shape at the given centers, min-max normalizes it
/// to [0,1] (flat shapes collapse to the constant 0.5), applies a, b and
/// clamps the last bits into [0,1].
std::vector<double> evaluate_ic(const ICSpec& spec,
                                std::span<const double> xi_centers);

struct DatasetConfig {
  int n = 10000;
  // Negative split sizes mean the 72/18/10 reference proportions.
  int n_train = -1;
  int n_val = -1;
  int n_test = -1;
  int n_x = 100;
  int n_t = 101;
  PhysicalParams params;

  void validate() const;
  std::array<int, 3> split_sizes() const;
};

// Generated samples with their solved fields; everything derives from
// (config, master_seed), so rebuilding is byte-stable.
struct Dataset {
  bool ood = false;
  std::uint64_t master_seed = 0;
  Grid grid;
  PhysicalParams params;
  DimlessCoeffs coeffs;
  RangeTable ranges;
  std::vector<ICSpec> specs;
  std::vector<double> ics;    // n * n_x
  std::vector<double> gas;    // n * n_x * n_t
  std::vector<double> solid;  // n * n_x * n_t
  std::vector<int> train_idx, val_idx, test_idx;

  int n() const { return static_cast<int>(specs.size()); }
  std::span<const double> ic(int i) const;
  std::span<const double> gas_field(int i) const;
  std::span<const double> solid_field(int i) const;
  const std::vector<int>& split(const std::string& name) const;
  std::vector<int> all_indices() const;
  std::vector<int> family_counts() const;  // indexed by Family value
};

Dataset build_dataset(const DatasetConfig& config, std::uint64_t master_seed,
                      int threads = 1);
Dataset build_ood_dataset(const DatasetConfig& config,
                          std::uint64_t master_seed, int threads = 1);

}  // namespace sorbop
