#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "isingbench/rng.hpp"

namespace isingbench {

// A spin state s in {-1,+1}^n. Entries are exactly -1.0 or +1.0; the
// ops below assume but do not re-check this on every call.
using SpinVector = Eigen::VectorXd;

// One stored coupling J_ij = J_ji with i < j (upper triangle, 0-based).
struct Coupling {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

// Provenance of a generated instance; round-trips through the problem file.
struct ModelInfo {
  std::string family;
  std::uint64_t seed = 0;  // derived per-realization stream seed
  std::map<std::string, double> params;
};

// Immutable Ising problem instance: energy
//   E(s) = -( sum_i h_i s_i + sum_i sum_j J_ij s_i s_j )
// with the double sum over all ordered pairs, so each stored coupling
// contributes twice. Couplings are kept as a sorted upper-triangular pair
// list (the serialization format) plus a dense symmetric matrix for
// evaluation. Safe to share across threads after construction.
class IsingModel {
 public:
  IsingModel(Eigen::VectorXd h, std::vector<Coupling> couplings,
             ModelInfo info = {});

  int size() const { return static_cast<int>(h_.size()); }
  const Eigen::VectorXd& fields() const { return h_; }
  const std::vector<Coupling>& couplings() const { return couplings_; }
  const Eigen::MatrixXd& coupling_matrix() const { return j_; }
  const ModelInfo& info() const { return info_; }

 private:
  Eigen::VectorXd h_;
  std::vector<Coupling> couplings_;  // sorted by (i, j), i < j
  Eigen::MatrixXd j_;                // symmetric, zero diagonal
  ModelInfo info_;
};

// E(s); throws std::invalid_argument on dimension mismatch.
double energy(const IsingModel& model, const Eigen::Ref<const SpinVector>& s);

// E(s') - E(s) where s' negates the listed spins. Indices must be distinct
// and in range, flips nonempty.
double delta_energy(const IsingModel& model, const Eigen::Ref<const SpinVector>& s,
                    std::span<const int> flips);

// T0 = sum_i |h_i| + sum_i sum_j |J_ij| >= |E(s)| for all s.
double initial_temperature(const IsingModel& model);

// Integer label x = x_1 2^(n-1) + ... + x_n 2^0 with x_i = (s_i + 1)/2;
// spin 0 is the most significant bit. Requires n <= 63.
std::uint64_t encode_state(const Eigen::Ref<const SpinVector>& s);

// Inverse of encode_state; throws if x >= 2^n.
SpinVector decode_state(std::uint64_t x, int n);

// Each spin -1 or +1 with equal probability, one draw per spin.
SpinVector random_spins(int n, Rng& rng);

bool is_spin_vector(const Eigen::Ref<const SpinVector>& s);

}  // namespace isingbench
