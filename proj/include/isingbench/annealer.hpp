#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isingbench/model.hpp"
#include "isingbench/rng.hpp"

namespace isingbench {

enum class Method {
  SA,   // single-flip proposals, Boltzmann acceptance
  SAM,  // multi-flip proposals, Boltzmann acceptance
  SAQ,  // multi-flip proposals, tunneling-style acceptance
};

std::string to_string(Method m);
Method method_from_string(const std::string& name);

// Fast schedule T(k) = T0 / k for k = 1..K.
struct Schedule {
  double t0 = 1.0;
  double temperature(std::int64_t k) const { return t0 / static_cast<double>(k); }
};

struct AnnealParams {
  Method method = Method::SA;
  std::int64_t steps = 1;            // K
  std::optional<double> t0_override;  // defaults to initial_temperature(model)
  std::uint64_t rng_stream = 0;       // seed for this run's draws
};

struct RunOutcome {
  SpinVector final_state;
  double final_energy = 0.0;
  SpinVector best_state;
  double best_energy = 0.0;
  std::int64_t accepted_moves = 0;
  bool success = false;       // set by the caller: final state is a global minimum
  bool best_success = false;  // diagnostic: best visited state is a global minimum
};

struct Proposal {
  SpinVector candidate;
  std::vector<int> flips;
};

// Flip one index chosen uniformly from {0..n-1}.
Proposal propose_single(const Eigen::Ref<const SpinVector>& s, Rng& rng);

// Draw m uniformly from {1..n}, then flip a uniformly random m-subset of
// distinct indices; the Hamming distance to s is exactly m.
Proposal propose_multi(const Eigen::Ref<const SpinVector>& s, Rng& rng);

// exp(-delta_e / T), clamped to [0, 1]. T <= 0 only occurs for the all-zero
// model (T0 = 0), where every proposal is accepted.
double accept_prob_boltzmann(double delta_e, double temperature);

// exp(-d * sqrt(delta_e / T)), clamped to [0, 1]; d is the Hamming distance
// between candidate and current state (the barrier width).
double accept_prob_quantum(double delta_e, double temperature, int hamming_d);

int hamming_distance(const Eigen::Ref<const SpinVector>& a,
                     const Eigen::Ref<const SpinVector>& b);

// Runs K annealing steps from `initial`. Step k proposes at temperature
// T0/k, accepts strictly downhill moves outright and uphill moves with the
// method's acceptance probability, and tracks the best state visited.
// Energies are maintained incrementally from cached local fields, never by
// full recomputation inside the loop. Deterministic in params.rng_stream.
//
// If `trace` is non-null, one line per step is written:
//   k temperature flip_indices(comma-separated) delta_e accepted(0|1)
RunOutcome anneal_run(const IsingModel& model, const AnnealParams& params,
                      const Eigen::Ref<const SpinVector>& initial,
                      std::ostream* trace = nullptr);

}  // namespace isingbench
