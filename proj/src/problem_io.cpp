#include "isingbench/problem_io.hpp"

#include <fstream>
#include <stdexcept>

namespace isingbench {

nlohmann::json model_to_json(const IsingModel& model) {
  nlohmann::json j;
  j["n"] = model.size();
  j["h"] = std::vector<double>(model.fields().begin(), model.fields().end());
  nlohmann::json pairs = nlohmann::json::array();
  for (const Coupling& c : model.couplings())
    pairs.push_back(nlohmann::json::array({c.i, c.j, c.value}));
  j["J"] = std::move(pairs);
  j["family"] = model.info().family;
  j["seed"] = model.info().seed;
  j["params"] = model.info().params;
  return j;
}

IsingModel model_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const auto h_vals = j.at("h").get<std::vector<double>>();
  if (static_cast<int>(h_vals.size()) != n)
    throw std::runtime_error("problem file: h length does not match n");
  Eigen::VectorXd h(n);
  for (int i = 0; i < n; ++i) h[i] = h_vals[i];
  std::vector<Coupling> couplings;
  for (const auto& entry : j.at("J")) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::runtime_error("problem file: J entries must be [i, j, value]");
    couplings.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<double>()});
  }
  ModelInfo info;
  info.family = j.value("family", std::string{});
  info.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("params"))
    info.params = j.at("params").get<std::map<std::string, double>>();
  return IsingModel(std::move(h), std::move(couplings), std::move(info));
}

nlohmann::json minima_to_json(const MinimaSet& set) {
  nlohmann::json j;
  j["n"] = set.n;
  j["min_energy"] = set.minimum_energy;
  j["minima"] = set.minima;
  j["g"] = set.degeneracy();
  return j;
}

MinimaSet minima_from_json(const nlohmann::json& j) {
  MinimaSet set;
  set.n = j.at("n").get<int>();
  set.minimum_energy = j.at("min_energy").get<double>();
  set.minima = j.at("minima").get<std::vector<std::uint64_t>>();
  if (j.contains("g") && j.at("g").get<std::uint64_t>() != set.minima.size())
    throw std::runtime_error("minima file: g does not match minima list length");
  return set;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_model(const std::filesystem::path& path, const IsingModel& model) {
  write_json_file(path, model_to_json(model));
}

IsingModel read_model(const std::filesystem::path& path) {
  return model_from_json(read_json_file(path));
}

void write_minima(const std::filesystem::path& path, const MinimaSet& set) {
  write_json_file(path, minima_to_json(set));
}

MinimaSet read_minima(const std::filesystem::path& path) {
  return minima_from_json(read_json_file(path));
}

}  // namespace isingbench
