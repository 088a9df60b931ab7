#include "isingbench/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace isingbench {

bool MinimaSet::contains(std::uint64_t label) const {
  return std::binary_search(minima.begin(), minima.end(), label);
}

MinimaSet brute_force_minima(const IsingModel& model, int cap) {
  const int n = model.size();
  if (n > cap)
    throw std::runtime_error("brute_force_minima: n = " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap));
  const std::uint64_t n_states = std::uint64_t{1} << n;
  const Eigen::MatrixXd& j = model.coupling_matrix();
  const Eigen::VectorXd& h = model.fields();

  // Walk labels in Gray-code order: consecutive codes differ in one bit, so
  // each step is a single-flip delta on cached local fields.
  SpinVector s = decode_state(0, n);  // gray(0) = 0 -> all spins down
  Eigen::VectorXd local = j * s;
  double e = energy(model, s);

  double min_e = e;
  std::vector<std::uint64_t> candidates{0};
  const double rel_tol = 1e-12;
  const double gate_tol = 1e-9;  // loose gate; members are re-checked exactly
  auto tol_of = [](double ref, double t) { return t * std::max(1.0, std::abs(ref)); };

  for (std::uint64_t label = 1; label < n_states; ++label) {
    const std::uint64_t gray_prev = (label - 1) ^ ((label - 1) >> 1);
    const std::uint64_t gray = label ^ (label >> 1);
    const int bit = std::countr_zero(gray ^ gray_prev);
    const int i = n - 1 - bit;  // bit b of the label is spin n-1-b
    e += 2.0 * h[i] * s[i] + 4.0 * s[i] * local[i];
    local.noalias() += j.col(i) * (-2.0 * s[i]);
    s[i] = -s[i];
    if (e <= min_e + tol_of(min_e, gate_tol)) {
      const double exact = energy(model, s);
      e = exact;  // resync the accumulator while we are at it
      if (exact < min_e) min_e = exact;
      if (exact <= min_e + tol_of(min_e, gate_tol)) candidates.push_back(gray);
    }
  }

  MinimaSet out;
  out.n = n;
  out.minimum_energy = min_e;
  for (std::uint64_t label : candidates) {
    const double exact = energy(model, decode_state(label, n));
    if (exact <= min_e + tol_of(min_e, rel_tol)) out.minima.push_back(label);
  }
  std::sort(out.minima.begin(), out.minima.end());
  return out;
}

double bf_success_probability(std::uint64_t n_states, std::uint64_t budget,
                              std::uint64_t n_minima) {
  const std::uint64_t n = n_states, k = budget, g = n_minima;
  if (k < 1 || k > n || g < 1 || g > n)
    throw std::invalid_argument("bf_success_probability: need 1 <= K <= N and 1 <= g <= N");
  if (k + g > n) return 1.0;  // fewer than K non-minimum states exist
  // C(N-g, K) / C(N, K) = prod_{t=0}^{g-1} (N-K-t) / (N-t). Keep numerator
  // and denominator as exact integer products while they fit in a double;
  // the final single division is then correctly rounded, making the
  // endpoints (K = N, K = 1) exact.
  const double exact_limit = 9007199254740992.0;  // 2^53
  double num = 1.0, den = 1.0, folded = 1.0;
  bool exact = true;
  for (std::uint64_t t = 0; t < g; ++t) {
    const double fn = static_cast<double>(n - k - t);
    const double fd = static_cast<double>(n - t);
    if (num * fn >= exact_limit || den * fd >= exact_limit) {
      folded *= num / den;
      num = 1.0;
      den = 1.0;
      exact = false;
    }
    num *= fn;
    den *= fd;
  }
  if (exact) return (den - num) / den;
  return 1.0 - folded * (num / den);
}

std::map<double, std::int64_t> energy_histogram(const IsingModel& model, int cap) {
  const int n = model.size();
  if (n > cap)
    throw std::runtime_error("energy_histogram: n = " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap));
  const std::uint64_t n_states = std::uint64_t{1} << n;
  std::map<double, std::int64_t> hist;
  for (std::uint64_t label = 0; label < n_states; ++label)
    ++hist[energy(model, decode_state(label, n))];
  return hist;
}

}  // namespace isingbench
