#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "isingbench/generators.hpp"
#include "isingbench/model.hpp"
#include "isingbench/rng.hpp"

namespace test_util {

using isingbench::IsingModel;
using isingbench::Rng;
using isingbench::SpinVector;

// Independent ground truth: per-label full energy evaluation, no Gray-code
// walk, no incremental deltas.
struct NaiveMinima {
  double min_energy = 0.0;
  std::vector<std::uint64_t> labels;
};

inline NaiveMinima naive_minima(const IsingModel& model, double tol = 1e-12) {
  const int n = model.size();
  const std::uint64_t n_states = std::uint64_t{1} << n;
  std::vector<double> energies(n_states);
  double min_e = 0.0;
  for (std::uint64_t x = 0; x < n_states; ++x) {
    energies[x] = isingbench::energy(model, isingbench::decode_state(x, n));
    if (x == 0 || energies[x] < min_e) min_e = energies[x];
  }
  NaiveMinima out;
  out.min_energy = min_e;
  const double abs_tol = tol * std::max(1.0, std::abs(min_e));
  for (std::uint64_t x = 0; x < n_states; ++x)
    if (energies[x] <= min_e + abs_tol) out.labels.push_back(x);
  return out;
}

// Small mixed model (random fields and a random subset of couplings) for
// fuzzing the energy ops outside the named families.
inline IsingModel random_model(int n, Rng& rng) {
  Eigen::VectorXd h(n);
  for (int i = 0; i < n; ++i) h[i] = 4.0 * rng.uniform01() - 2.0;
  std::vector<isingbench::Coupling> couplings;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < 0.6)
        couplings.push_back({i, j, 4.0 * rng.uniform01() - 2.0});
  return IsingModel(std::move(h), std::move(couplings));
}

inline std::vector<int> random_flip_set(int n, Rng& rng) {
  const int m = 1 + static_cast<int>(rng.uniform_below(n));
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int t = 0; t < m; ++t)
    std::swap(pool[t], pool[t + rng.uniform_below(n - t)]);
  pool.resize(m);
  return pool;
}

inline SpinVector flipped(const SpinVector& s, const std::vector<int>& flips) {
  SpinVector out = s;
  for (int i : flips) out[i] = -out[i];
  return out;
}

}  // namespace test_util
