#include "isingbench/annealer.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace isingbench {

std::string to_string(Method m) {
  switch (m) {
    case Method::SA: return "SA";
    case Method::SAM: return "SAM";
    case Method::SAQ: return "SAQ";
  }
  return "?";
}

Method method_from_string(const std::string& name) {
  if (name == "SA") return Method::SA;
  if (name == "SAM") return Method::SAM;
  if (name == "SAQ") return Method::SAQ;
  throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

// Shared flip sampler: the public propose_* functions and the run loop must
// consume the rng identically so proposal sequences match across methods
// sharing a stream. `pool` holds a permutation of 0..n-1 and may arrive in
// any order; a partial Fisher-Yates pass selects a uniform m-subset.
void sample_flips(int n, bool multi, Rng& rng, std::vector<int>& pool,
                  std::vector<int>& flips) {
  flips.clear();
  if (!multi) {
    flips.push_back(static_cast<int>(rng.uniform_below(n)));
    return;
  }
  const int m = 1 + static_cast<int>(rng.uniform_below(n));
  for (int t = 0; t < m; ++t) {
    const int j = t + static_cast<int>(rng.uniform_below(n - t));
    std::swap(pool[t], pool[j]);
    flips.push_back(pool[t]);
  }
}

Proposal make_proposal(const Eigen::Ref<const SpinVector>& s, bool multi, Rng& rng) {
  const int n = static_cast<int>(s.size());
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Proposal p;
  p.candidate = s;
  sample_flips(n, multi, rng, pool, p.flips);
  for (int i : p.flips) p.candidate[i] = -p.candidate[i];
  return p;
}

}  // namespace

Proposal propose_single(const Eigen::Ref<const SpinVector>& s, Rng& rng) {
  return make_proposal(s, false, rng);
}

Proposal propose_multi(const Eigen::Ref<const SpinVector>& s, Rng& rng) {
  return make_proposal(s, true, rng);
}

double accept_prob_boltzmann(double delta_e, double temperature) {
  if (temperature <= 0.0) return 1.0;  // T0 = 0 degenerate case
  const double p = std::exp(-delta_e / temperature);
  return std::min(1.0, std::max(0.0, p));
}

double accept_prob_quantum(double delta_e, double temperature, int hamming_d) {
  if (temperature <= 0.0) return 1.0;
  const double p = std::exp(-hamming_d * std::sqrt(delta_e / temperature));
  return std::min(1.0, std::max(0.0, p));
}

int hamming_distance(const Eigen::Ref<const SpinVector>& a,
                     const Eigen::Ref<const SpinVector>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: length mismatch");
  int d = 0;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++d;
  return d;
}

RunOutcome anneal_run(const IsingModel& model, const AnnealParams& params,
                      const Eigen::Ref<const SpinVector>& initial,
                      std::ostream* trace) {
  const int n = model.size();
  if (initial.size() != n)
    throw std::invalid_argument("anneal_run: initial state length does not match model");
  if (params.steps < 1) throw std::invalid_argument("anneal_run: steps must be >= 1");

  const bool multi = params.method != Method::SA;
  const bool quantum = params.method == Method::SAQ;
  const Schedule schedule{params.t0_override.value_or(initial_temperature(model))};

  Rng rng(params.rng_stream);
  if (trace) trace->precision(17);  // keep replayed energies faithful
  const Eigen::MatrixXd& j = model.coupling_matrix();
  const Eigen::VectorXd& h = model.fields();

  SpinVector s = initial;
  Eigen::VectorXd local = j * s;  // local[i] = (J s)_i, updated on acceptance
  double current_e = energy(model, s);

  RunOutcome out;
  out.best_state = s;
  out.best_energy = current_e;

  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> flips;
  flips.reserve(n);

  for (std::int64_t k = 1; k <= params.steps; ++k) {
    sample_flips(n, multi, rng, pool, flips);

    // E(s') - E(s), from cached local fields:
    //   2 sum_F h_i s_i + 4 sum_F s_i (J s)_i - 4 sum_{i,k in F} J_ik s_i s_k
    double field_term = 0.0;
    double cross_term = 0.0;
    for (int i : flips) {
      field_term += h[i] * s[i];
      cross_term += s[i] * local[i];
    }
    double in_set = 0.0;
    const int m = static_cast<int>(flips.size());
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) in_set += j(flips[a], flips[b]) * s[flips[a]] * s[flips[b]];
    const double delta = 2.0 * field_term + 4.0 * cross_term - 8.0 * in_set;

    const double temperature = schedule.temperature(k);
    // The acceptance uniform is drawn every step, so all methods consume the
    // stream identically and share proposal sequences for equal seeds.
    const double u = rng.uniform01();
    bool accept = delta < 0.0 || schedule.t0 <= 0.0;
    if (!accept) {
      const double p = quantum ? accept_prob_quantum(delta, temperature, m)
                               : accept_prob_boltzmann(delta, temperature);
      accept = u < p;
    }

    if (trace) {
      *trace << k << ' ' << temperature << ' ';
      for (int a = 0; a < m; ++a) *trace << (a ? "," : "") << flips[a];
      *trace << ' ' << delta << ' ' << (accept ? 1 : 0) << '\n';
    }

    if (accept) {
      for (int i : flips) {
        local.noalias() += j.col(i) * (-2.0 * s[i]);
        s[i] = -s[i];
      }
      current_e += delta;
      ++out.accepted_moves;
      if (current_e < out.best_energy) {
        out.best_energy = current_e;
        out.best_state = s;
      }
    }

#ifndef NDEBUG
    if ((k & 1023) == 0) {
      const double exact = energy(model, s);
      assert(std::abs(current_e - exact) <=
             1e-9 * std::max(1.0, std::abs(exact)));
    }
#endif
  }

  out.final_state = std::move(s);
  out.final_energy = current_e;
  return out;
}

}  // namespace isingbench
