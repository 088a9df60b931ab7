#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "isingbench/annealer.hpp"

namespace isingbench {

// Success-probability estimate over R repetitions with exact 95%
// Clopper-Pearson bounds.
struct SuccessEstimate {
  std::int64_t successes = 0;
  std::int64_t repetitions = 0;
  double p_s = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::int64_t anneal_steps = 0;  // per-run budget K
};

struct TtsResult {
  enum class Basis { point, ci_low, ci_high };
  double tts = 0.0;  // in annealing steps; may be +infinity
  double target = 0.99;
  Basis basis = Basis::point;
};

// Exact binomial interval by bisection on the binomial CDF (log-space terms,
// absolute tolerance 1e-10): low is the largest p with P(Bin(R,p) >= k) <=
// alpha/2 (0 when k = 0), high the smallest p with P(Bin(R,p) <= k) <=
// alpha/2 (1 when k = R).
std::pair<double, double> clopper_pearson(std::int64_t successes,
                                          std::int64_t repetitions,
                                          double alpha = 0.05);

// t_a * log(1 - 0.99) / log(1 - p_s): expected cumulative annealing time to
// reach 99% success via independent restarts. p_s = 0 gives +infinity;
// p_s = 1 gives t_a (a single run suffices).
TtsResult time_to_solution(double p_s, double total_anneal_time,
                           TtsResult::Basis basis = TtsResult::Basis::point);

// 1 - (1 - p)^r: probability at least one of r independent runs succeeds.
double restart_success(double p, std::int64_t runs);

// Counts success flags and attaches 95% Clopper-Pearson bounds.
SuccessEstimate estimate(std::span<const RunOutcome> outcomes, std::int64_t steps);
SuccessEstimate estimate_from_counts(std::int64_t successes, std::int64_t repetitions,
                                     std::int64_t steps);

}  // namespace isingbench
