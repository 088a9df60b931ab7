#include "isingbench/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace isingbench {

namespace {

// P(Bin(R, p) <= k) for p in (0, 1), summed term by term in log space.
double binomial_cdf(std::int64_t k, std::int64_t r, double p,
                    const std::vector<double>& log_fact) {
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double sum = 0.0;
  for (std::int64_t j = 0; j <= k; ++j) {
    const double log_term = log_fact[r] - log_fact[j] - log_fact[r - j] +
                            j * log_p + (r - j) * log_q;
    sum += std::exp(log_term);
  }
  return std::min(1.0, sum);
}

}  // namespace

std::pair<double, double> clopper_pearson(std::int64_t successes,
                                          std::int64_t repetitions,
                                          double alpha) {
  const std::int64_t k = successes, r = repetitions;
  if (r < 1 || k < 0 || k > r)
    throw std::invalid_argument("clopper_pearson: need 0 <= k <= R, R >= 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("clopper_pearson: alpha must be in (0, 1)");

  std::vector<double> log_fact(r + 1, 0.0);
  for (std::int64_t i = 2; i <= r; ++i)
    log_fact[i] = log_fact[i - 1] + std::log(static_cast<double>(i));

  const double half_alpha = alpha / 2.0;
  const double tol = 1e-10;

  double low = 0.0;
  if (k > 0) {
    // P(X >= k | p) = 1 - F(k-1; p) increases in p; find where it hits alpha/2.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const double tail = 1.0 - binomial_cdf(k - 1, r, mid, log_fact);
      (tail <= half_alpha ? lo : hi) = mid;
    }
    low = lo;
  }

  double high = 1.0;
  if (k < r) {
    // P(X <= k | p) = F(k; p) decreases in p; find where it hits alpha/2.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const double tail = binomial_cdf(k, r, mid, log_fact);
      (tail <= half_alpha ? hi : lo) = mid;
    }
    high = hi;
  }
  return {low, high};
}

TtsResult time_to_solution(double p_s, double total_anneal_time,
                           TtsResult::Basis basis) {
  if (!(p_s >= 0.0 && p_s <= 1.0))
    throw std::invalid_argument("time_to_solution: p_s must be in [0, 1]");
  if (!(total_anneal_time > 0.0))
    throw std::invalid_argument("time_to_solution: t_a must be positive");
  TtsResult out;
  out.basis = basis;
  if (p_s == 0.0)
    out.tts = std::numeric_limits<double>::infinity();
  else if (p_s == 1.0)
    out.tts = total_anneal_time;
  else
    out.tts = total_anneal_time * std::log(1.0 - 0.99) / std::log(1.0 - p_s);
  return out;
}

double restart_success(double p, std::int64_t runs) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("restart_success: p must be in [0, 1]");
  if (runs < 1) throw std::invalid_argument("restart_success: need r >= 1");
  return 1.0 - std::pow(1.0 - p, static_cast<double>(runs));
}

SuccessEstimate estimate(std::span<const RunOutcome> outcomes, std::int64_t steps) {
  if (outcomes.empty()) throw std::invalid_argument("estimate: empty outcome list");
  std::int64_t k = 0;
  for (const RunOutcome& o : outcomes) k += o.success ? 1 : 0;
  return estimate_from_counts(k, static_cast<std::int64_t>(outcomes.size()), steps);
}

SuccessEstimate estimate_from_counts(std::int64_t successes, std::int64_t repetitions,
                                     std::int64_t steps) {
  SuccessEstimate est;
  std::tie(est.ci_low, est.ci_high) = clopper_pearson(successes, repetitions);
  est.successes = successes;
  est.repetitions = repetitions;
  est.p_s = static_cast<double>(successes) / static_cast<double>(repetitions);
  est.anneal_steps = steps;
  return est;
}

}  // namespace isingbench
