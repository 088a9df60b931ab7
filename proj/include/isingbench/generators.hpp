#pragma once

#include <cstdint>
#include <string>

#include "isingbench/model.hpp"

namespace isingbench {

// Identifies one realization of a random family. Identical
// (master_seed, realization_index) pairs give bit-identical models.
struct GeneratorSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t realization_index = 0;
};

struct FalseMinimumParams {
  int n = 8;             // multiple of 4
  double epsilon = 0.1;  // in (0, 1)
};

inline constexpr const char* kFamilyFalseMinimum = "false_minimum";
inline constexpr const char* kFamilyZeroCoupling = "zero_coupling";
inline constexpr const char* kFamilyUniformGlass = "uniform_glass";
inline constexpr const char* kFamilyGaussianGlass = "gaussian_glass";

// Per-realization stream seed; realization r is reproducible without
// generating realizations 0..r-1.
std::uint64_t generator_stream_seed(const std::string& family, GeneratorSeed seed);

// Deterministic weak-strong instance: weak half h_i = 1 - epsilon, strong
// half h_i = -1; ferromagnetic unit couplings on all pairs within each half
// plus the n/2 rung pairs (i, i + n/2). All-down (label 0) is the unique
// global minimum, all-up (label 2^n - 1) a strict single-flip local minimum,
// and the energy gap between them is exactly n * epsilon.
IsingModel gen_false_minimum(FalseMinimumParams params);

// No couplings; each h_i is +1 or -1 with equal probability. The unique
// global minimum is s_i = h_i with energy -n.
IsingModel gen_zero_coupling(int n, GeneratorSeed seed);

// h = 0; J_ij = +1 or -1 with equal probability on the fully connected graph.
IsingModel gen_uniform_spin_glass(int n, GeneratorSeed seed);

// h = 0; J_ij standard normal on the fully connected graph.
IsingModel gen_gaussian_spin_glass(int n, GeneratorSeed seed);

// Dispatch by family tag; params are family-specific (epsilon for the
// false-minimum family). Unknown family throws std::invalid_argument.
IsingModel generate(const std::string& family, int n,
                    const std::map<std::string, double>& params, GeneratorSeed seed);

}  // namespace isingbench
