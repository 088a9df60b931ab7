#include "isingbench/generators.hpp"

#include <functional>
#include <stdexcept>

namespace isingbench {

namespace {

std::uint64_t family_tag(const std::string& family) {
  // FNV-1a, so the stream depends on the family name itself.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : family) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::uint64_t generator_stream_seed(const std::string& family, GeneratorSeed seed) {
  return derive_seed(seed.master_seed, family_tag(family), seed.realization_index);
}

IsingModel gen_false_minimum(FalseMinimumParams params) {
  const int n = params.n;
  if (n < 4 || n % 4 != 0)
    throw std::invalid_argument("gen_false_minimum: n must be a positive multiple of 4");
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
    throw std::invalid_argument("gen_false_minimum: epsilon must be in (0, 1)");
  const int half = n / 2;
  Eigen::VectorXd h(n);
  for (int i = 0; i < n; ++i) h[i] = i < half ? 1.0 - params.epsilon : -1.0;
  std::vector<Coupling> couplings;
  couplings.reserve(half * (half - 1) + half);
  for (int i = 0; i < half; ++i)
    for (int j = i + 1; j < half; ++j) couplings.push_back({i, j, 1.0});
  for (int i = half; i < n; ++i)
    for (int j = i + 1; j < n; ++j) couplings.push_back({i, j, 1.0});
  for (int i = 0; i < half; ++i) couplings.push_back({i, i + half, 1.0});
  ModelInfo info{kFamilyFalseMinimum, 0, {{"epsilon", params.epsilon}}};
  return IsingModel(std::move(h), std::move(couplings), std::move(info));
}

IsingModel gen_zero_coupling(int n, GeneratorSeed seed) {
  if (n < 1) throw std::invalid_argument("gen_zero_coupling: n must be >= 1");
  const std::uint64_t stream = generator_stream_seed(kFamilyZeroCoupling, seed);
  Rng rng(stream);
  Eigen::VectorXd h(n);
  for (int i = 0; i < n; ++i) h[i] = rng.random_sign();
  return IsingModel(std::move(h), {}, ModelInfo{kFamilyZeroCoupling, stream, {}});
}

IsingModel gen_uniform_spin_glass(int n, GeneratorSeed seed) {
  if (n < 2) throw std::invalid_argument("gen_uniform_spin_glass: n must be >= 2");
  const std::uint64_t stream = generator_stream_seed(kFamilyUniformGlass, seed);
  Rng rng(stream);
  std::vector<Coupling> couplings;
  couplings.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) couplings.push_back({i, j, rng.random_sign()});
  return IsingModel(Eigen::VectorXd::Zero(n), std::move(couplings),
                    ModelInfo{kFamilyUniformGlass, stream, {}});
}

IsingModel gen_gaussian_spin_glass(int n, GeneratorSeed seed) {
  if (n < 2) throw std::invalid_argument("gen_gaussian_spin_glass: n must be >= 2");
  const std::uint64_t stream = generator_stream_seed(kFamilyGaussianGlass, seed);
  Rng rng(stream);
  std::vector<Coupling> couplings;
  couplings.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) couplings.push_back({i, j, rng.normal()});
  return IsingModel(Eigen::VectorXd::Zero(n), std::move(couplings),
                    ModelInfo{kFamilyGaussianGlass, stream, {}});
}

IsingModel generate(const std::string& family, int n,
                    const std::map<std::string, double>& params, GeneratorSeed seed) {
  if (family == kFamilyFalseMinimum) {
    FalseMinimumParams p;
    p.n = n;
    if (auto it = params.find("epsilon"); it != params.end()) p.epsilon = it->second;
    return gen_false_minimum(p);
  }
  if (family == kFamilyZeroCoupling) return gen_zero_coupling(n, seed);
  if (family == kFamilyUniformGlass) return gen_uniform_spin_glass(n, seed);
  if (family == kFamilyGaussianGlass) return gen_gaussian_spin_glass(n, seed);
  throw std::invalid_argument("generate: unknown family '" + family + "'");
}

}  // namespace isingbench
