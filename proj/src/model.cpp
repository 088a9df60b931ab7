#include "isingbench/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace isingbench {

IsingModel::IsingModel(Eigen::VectorXd h, std::vector<Coupling> couplings,
                       ModelInfo info)
    : h_(std::move(h)), couplings_(std::move(couplings)), info_(std::move(info)) {
  const int n = static_cast<int>(h_.size());
  if (n < 1) throw std::invalid_argument("IsingModel: n must be >= 1");
  std::sort(couplings_.begin(), couplings_.end(),
            [](const Coupling& a, const Coupling& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });
  j_ = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < couplings_.size(); ++k) {
    const Coupling& c = couplings_[k];
    if (c.i < 0 || c.j >= n || c.i >= c.j)
      throw std::invalid_argument("IsingModel: coupling indices must satisfy 0 <= i < j < n");
    if (k > 0 && couplings_[k - 1].i == c.i && couplings_[k - 1].j == c.j)
      throw std::invalid_argument("IsingModel: duplicate coupling pair");
    j_(c.i, c.j) = c.value;
    j_(c.j, c.i) = c.value;
  }
}

double energy(const IsingModel& model, const Eigen::Ref<const SpinVector>& s) {
  if (s.size() != model.size())
    throw std::invalid_argument("energy: state length does not match model");
  // Ordered-pair double sum: each stored coupling enters twice.
  double quad = 0.0;
  for (const Coupling& c : model.couplings())
    quad += 2.0 * c.value * s[c.i] * s[c.j];
  return -(model.fields().dot(s) + quad) + 0.0;  // +0.0 normalizes -0
}

double delta_energy(const IsingModel& model, const Eigen::Ref<const SpinVector>& s,
                    std::span<const int> flips) {
  const int n = model.size();
  if (s.size() != n)
    throw std::invalid_argument("delta_energy: state length does not match model");
  if (flips.empty()) throw std::invalid_argument("delta_energy: empty flip set");
  for (std::size_t a = 0; a < flips.size(); ++a) {
    if (flips[a] < 0 || flips[a] >= n)
      throw std::invalid_argument("delta_energy: flip index out of range");
    for (std::size_t b = a + 1; b < flips.size(); ++b)
      if (flips[a] == flips[b])
        throw std::invalid_argument("delta_energy: duplicate flip index");
  }
  const Eigen::MatrixXd& j = model.coupling_matrix();
  double field_term = 0.0;
  double cross_term = 0.0;  // sum_{i in F} s_i (J s)_i
  for (int i : flips) {
    field_term += model.fields()[i] * s[i];
    cross_term += s[i] * j.col(i).dot(s);
  }
  double in_set = 0.0;  // sum_{i,j in F} J_ij s_i s_j (ordered)
  for (int i : flips)
    for (int k : flips) in_set += j(i, k) * s[i] * s[k];
  return 2.0 * field_term + 4.0 * cross_term - 4.0 * in_set;
}

double initial_temperature(const IsingModel& model) {
  double t0 = model.fields().cwiseAbs().sum();
  for (const Coupling& c : model.couplings()) t0 += 2.0 * std::abs(c.value);
  return t0;
}

std::uint64_t encode_state(const Eigen::Ref<const SpinVector>& s) {
  const int n = static_cast<int>(s.size());
  if (n < 1 || n > 63)
    throw std::invalid_argument("encode_state: need 1 <= n <= 63");
  std::uint64_t x = 0;
  for (int i = 0; i < n; ++i) {
    x <<= 1;
    if (s[i] > 0.0) x |= 1;
  }
  return x;
}

SpinVector decode_state(std::uint64_t x, int n) {
  if (n < 1 || n > 63 || x >= (std::uint64_t{1} << n))
    throw std::invalid_argument("decode_state: label out of range for n");
  SpinVector s(n);
  for (int i = 0; i < n; ++i)
    s[i] = (x >> (n - 1 - i)) & 1 ? 1.0 : -1.0;
  return s;
}

SpinVector random_spins(int n, Rng& rng) {
  SpinVector s(n);
  for (int i = 0; i < n; ++i) s[i] = rng.random_sign();
  return s;
}

bool is_spin_vector(const Eigen::Ref<const SpinVector>& s) {
  for (int i = 0; i < s.size(); ++i)
    if (s[i] != 1.0 && s[i] != -1.0) return false;
  return s.size() > 0;
}

}  // namespace isingbench
