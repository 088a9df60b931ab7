#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "isingbench/model.hpp"
#include "isingbench/oracle.hpp"

namespace isingbench {

// Problem file schema (0-based indices, couplings listed with i < j):
//   { "n": int, "h": [real; n], "J": [[i, j, value], ...],
//     "family": string, "seed": uint64, "params": object }
nlohmann::json model_to_json(const IsingModel& model);
IsingModel model_from_json(const nlohmann::json& j);

// Minima cache schema: { "n": int, "min_energy": real,
//                        "minima": [uint64 labels], "g": uint64 }
nlohmann::json minima_to_json(const MinimaSet& set);
MinimaSet minima_from_json(const nlohmann::json& j);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

void write_model(const std::filesystem::path& path, const IsingModel& model);
IsingModel read_model(const std::filesystem::path& path);
void write_minima(const std::filesystem::path& path, const MinimaSet& set);
MinimaSet read_minima(const std::filesystem::path& path);

}  // namespace isingbench
