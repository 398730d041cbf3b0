#include "sorbop/ic_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "sorbop/errors.hpp"

namespace sorbop {

const char* family_name(Family family) {
  switch (family) {
    case Family::line: return "line";
    case Family::sigmoid: return "sigmoid";
    case Family::exponential: return "exponential";
    case Family::gaussian: return "gaussian";
    case Family::sine: return "sine";
  }
  throw ValidationError("bad family enum");
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::line, Family::sigmoid, Family::exponential,
                   Family::gaussian, Family::sine}) {
    if (name == family_name(f)) return f;
  }
  throw ValidationError("unknown family: " + name);
}

RangeTable RangeTable::in_distribution() {
  RangeTable t;
  t.gauss_mu = {0.0, 1.0};
  t.gauss_sigma = {0.05, 2.0};
  t.sigmoid_k = {5.0, 30.0};
  t.sigmoid_c = {0.0, 1.0};
  t.exp_alpha = {-5.0, 5.0};
  t.exp_beta = {0.5, 0.5};
  t.line_m = {-2.0, 2.0};
  t.line_q = {-1.0, 1.0};
  t.line_slope_two_sided = false;
  t.has_sine = false;
  return t;
}

RangeTable RangeTable::out_of_distribution() {
  RangeTable t;
  t.gauss_mu = {-0.5, 1.5};
  t.gauss_sigma = {0.2, 0.4};
  t.sigmoid_k = {30.0, 50.0};
  t.sigmoid_c = {-0.8, 1.2};
  t.exp_alpha = {-7.0, 7.0};
  t.exp_beta = {0.2, 0.7};
  t.line_m = {2.0, 4.0};  // magnitude; sign drawn separately
  t.line_q = {-1.0, 1.0};
  t.line_slope_two_sided = true;
  t.has_sine = true;
  t.sine_w0 = {0.1, 0.5};
  t.sine_phi = {0.0, 0.0};
  return t;
}

ICSpec sample_ic(Family family, const RangeTable& table, Rng& rng) {
  ICSpec spec;
  spec.family = family;
  auto draw = [&rng](const ParamRange& r) {
    return r.lo == r.hi ? r.lo : rng.uniform(r.lo, r.hi);
  };
  switch (family) {
    case Family::line:
      if (table.line_slope_two_sided) {
        const bool negative = rng.uniform() < 0.5;
        const double magnitude = draw(table.line_m);
        spec.p1 = negative ? -magnitude : magnitude;
      } else {
        spec.p1 = draw(table.line_m);
      }
      spec.p2 = draw(table.line_q);
      break;
    case Family::sigmoid:
      spec.p1 = draw(table.sigmoid_k);
      spec.p2 = draw(table.sigmoid_c);
      break;
    case Family::exponential:
      spec.p1 = draw(table.exp_alpha);
      spec.p2 = draw(table.exp_beta);
      break;
    case Family::gaussian:
      spec.p1 = draw(table.gauss_mu);
      spec.p2 = draw(table.gauss_sigma);
      break;
    case Family::sine:
      if (!table.has_sine)
        throw ValidationError(
            "sample_ic: sine family is not in the in-distribution table");
      spec.p1 = draw(table.sine_w0);
      spec.p2 = draw(table.sine_phi);
      break;
  }
  spec.a = rng.uniform(0.05, 1.0);
  spec.b = rng.uniform() * (1.0 - spec.a);
  return spec;
}

std::vector<double> evaluate_ic(const ICSpec& spec,
                                std::span<const double> xi_centers) {
  const std::size_t n = xi_centers.size();
  std::vector<double> f(n);
  switch (spec.family) {
    case Family::line:
      for (std::size_t i = 0; i < n; ++i)
        f[i] = spec.p1 * xi_centers[i] + spec.p2;
      break;
    case Family::sigmoid:
      for (std::size_t i = 0; i < n; ++i)
        f[i] = 1.0 / (1.0 + std::exp(-spec.p1 * (xi_centers[i] - spec.p2)));
      break;
    case Family::exponential:
      for (std::size_t i = 0; i < n; ++i)
        f[i] = std::exp(spec.p1 * (xi_centers[i] - spec.p2));
      break;
    case Family::gaussian:
      for (std::size_t i = 0; i < n; ++i) {
        const double d = xi_centers[i] - spec.p1;
        f[i] = std::exp(-d * d / (2.0 * spec.p2 * spec.p2));
      }
      break;
    case Family::sine:
      for (std::size_t i = 0; i < n; ++i)
        f[i] = std::sin(spec.p1 * xi_centers[i] + spec.p2);
      break;
  }

  const auto [mn_it, mx_it] = std::minmax_element(f.begin(), f.end());
  const double mn = *mn_it;
  const double range = *mx_it - mn;
  std::vector<double> g(n);
  if (range < 1e-12) {
    std::fill(g.begin(), g.end(),
              std::clamp(spec.a * 0.5 + spec.b, 0.0, 1.0));
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double fnorm = (f[i] - mn) / range;
      g[i] = std::clamp(spec.a * fnorm + spec.b, 0.0, 1.0);
    }
  }
  return g;
}

void DatasetConfig::validate() const {
  if (n < 1) throw ValidationError("DatasetConfig: n must be >= 1");
  if (n_x < 1 || n_t < 2) throw ValidationError("DatasetConfig: bad grid");
  const bool any_split = n_train >= 0 || n_val >= 0 || n_test >= 0;
  if (any_split) {
    if (n_train < 0 || n_val < 0 || n_test < 0)
      throw ValidationError(
          "DatasetConfig: give all three split sizes or none");
    if (n_train + n_val + n_test != n)
      throw ValidationError("DatasetConfig: split sizes must sum to n");
  }
  params.validate();
}

std::array<int, 3> DatasetConfig::split_sizes() const {
  if (n_train >= 0) return {n_train, n_val, n_test};
  // Reference proportions 72/18/10; remainder lands on the train split.
  const int val = static_cast<int>(std::llround(0.18 * n));
  const int test = static_cast<int>(std::llround(0.10 * n));
  return {n - val - test, val, test};
}

std::span<const double> Dataset::ic(int i) const {
  return {ics.data() + static_cast<std::size_t>(i) * grid.n_x,
          static_cast<std::size_t>(grid.n_x)};
}

std::span<const double> Dataset::gas_field(int i) const {
  const std::size_t m = static_cast<std::size_t>(grid.n_x) * grid.n_t;
  return {gas.data() + i * m, m};
}

std::span<const double> Dataset::solid_field(int i) const {
  const std::size_t m = static_cast<std::size_t>(grid.n_x) * grid.n_t;
  return {solid.data() + i * m, m};
}

const std::vector<int>& Dataset::split(const std::string& name) const {
  if (name == "train") return train_idx;
  if (name == "val") return val_idx;
  if (name == "test") return test_idx;
  throw ValidationError("unknown split: " + name);
}

std::vector<int> Dataset::all_indices() const {
  std::vector<int> idx(n());
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

std::vector<int> Dataset::family_counts() const {
  std::vector<int> counts(5, 0);
  for (const ICSpec& s : specs) counts[static_cast<int>(s.family)]++;
  return counts;
}

namespace {

// Family blocks in enum order; when n is not divisible the first families
// take the extra sample, so counts are exact and deterministic.
std::vector<Family> assign_families(const std::vector<Family>& families,
                                    int n) {
  const int nf = static_cast<int>(families.size());
  std::vector<Family> out;
  out.reserve(n);
  const int base = n / nf;
  const int extra = n % nf;
  for (int f = 0; f < nf; ++f) {
    const int count = base + (f < extra ? 1 : 0);
    out.insert(out.end(), count, families[f]);
  }
  return out;
}

Dataset build_impl(const DatasetConfig& config, std::uint64_t master_seed,
                   int threads, bool ood, const RangeTable& table,
                   const std::vector<Family>& families) {
  config.validate();
  Dataset ds;
  ds.ood = ood;
  ds.master_seed = master_seed;
  ds.grid = Grid::make(config.n_x, config.n_t);
  ds.params = config.params;
  ds.coeffs = dimensionless_coefficients(config.params);
  ds.ranges = table;

  const int n = config.n;
  const int nx = config.n_x;
  const std::size_t field_len = static_cast<std::size_t>(nx) * config.n_t;
  const std::vector<Family> by_sample = assign_families(families, n);

  ds.specs.resize(n);
  ds.ics.resize(static_cast<std::size_t>(n) * nx);
  ds.gas.resize(static_cast<std::size_t>(n) * field_len);
  ds.solid.resize(static_cast<std::size_t>(n) * field_len);

  auto worker = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
      ICSpec spec = sample_ic(by_sample[i], table, rng);
      spec.seed = derive_seed(master_seed, static_cast<std::uint64_t>(i));
      ds.specs[i] = spec;
      const std::vector<double> ic = evaluate_ic(spec, ds.grid.xi_centers);
      std::copy(ic.begin(), ic.end(),
                ds.ics.begin() + static_cast<std::size_t>(i) * nx);
      try {
        const SolveOutput sol = solve(ic, ds.coeffs, ds.grid);
        std::copy(sol.gas.values.begin(), sol.gas.values.end(),
                  ds.gas.begin() + i * field_len);
        std::copy(sol.solid.values.begin(), sol.solid.values.end(),
                  ds.solid.begin() + i * field_len);
      } catch (const std::exception& e) {
        throw NumericalError("solve failed for sample " + std::to_string(i) +
                             ": " + e.what());
      }
    }
  };

  const int nthreads = std::clamp(threads, 1, n);
  if (nthreads == 1) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nthreads);
    const int chunk = (n + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        try {
          worker(t * chunk, std::min(n, (t + 1) * chunk));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Seeded shuffle, then contiguous slices become the splits.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng shuffle_rng(derive_seed(master_seed, 0xC0FFEEULL + n));
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(shuffle_rng.next_u64() % (i + 1));
    std::swap(order[i], order[j]);
  }
  const auto [n_train, n_val, n_test] = config.split_sizes();
  ds.train_idx.assign(order.begin(), order.begin() + n_train);
  ds.val_idx.assign(order.begin() + n_train, order.begin() + n_train + n_val);
  ds.test_idx.assign(order.begin() + n_train + n_val,
                     order.begin() + n_train + n_val + n_test);
  return ds;
}

}  // namespace

Dataset build_dataset(const DatasetConfig& config, std::uint64_t master_seed,
                      int threads) {
  return build_impl(config, master_seed, threads, /*ood=*/false,
                    RangeTable::in_distribution(),
                    {Family::line, Family::sigmoid, Family::exponential,
                     Family::gaussian});
}

Dataset build_ood_dataset(const DatasetConfig& config,
                          std::uint64_t master_seed, int threads) {
  return build_impl(config, master_seed, threads, /*ood=*/true,
                    RangeTable::out_of_distribution(),
                    {Family::line, Family::sigmoid, Family::exponential,
                     Family::gaussian, Family::sine});
}

}  // namespace sorbop
