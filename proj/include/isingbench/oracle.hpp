#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "isingbench/model.hpp"

namespace isingbench {

// Exact ground-truth from full enumeration of the 2^n state space.
struct MinimaSet {
  int n = 0;
  double minimum_energy = 0.0;
  std::vector<std::uint64_t> minima;  // sorted state labels
  std::uint64_t degeneracy() const { return minima.size(); }
  bool contains(std::uint64_t label) const;
};

inline constexpr int kDefaultEnumerationCap = 24;

// Enumerates all N = 2^n states (Gray-code walk with incremental energies;
// candidates near the minimum are re-evaluated exactly so membership at
// relative tolerance 1e-12 is not polluted by accumulated drift). Refuses
// models with n above `cap`.
MinimaSet brute_force_minima(const IsingModel& model, int cap = kDefaultEnumerationCap);

// Probability that K distinct uniformly chosen states out of N include at
// least one of g global minima: 1 - C(N-g, K) / C(N, K), evaluated as an
// exact integer ratio whenever the products stay below 2^53 (always for
// g = 2 and N <= 2^24), falling back to incremental folding otherwise.
double bf_success_probability(std::uint64_t n_states, std::uint64_t budget,
                              std::uint64_t n_minima);

// Exact count of states per energy value. Full per-state evaluation; meant
// for small-n diagnostics (level gaps, degeneracies).
std::map<double, std::int64_t> energy_histogram(const IsingModel& model,
                                                int cap = kDefaultEnumerationCap);

}  // namespace isingbench
