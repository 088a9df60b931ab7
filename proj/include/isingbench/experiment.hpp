#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "isingbench/generators.hpp"
#include "isingbench/model.hpp"
#include "isingbench/oracle.hpp"
#include "isingbench/stats.hpp"

namespace isingbench {

// Methods the benchmark can run; BF is the analytic brute-force reference,
// not an annealer.
enum class RunMethod { SA, SAM, SAQ, BF };

std::string to_string(RunMethod m);
RunMethod run_method_from_string(const std::string& name);

// One experiment sweep: a problem family crossed with sizes, methods,
// realizations and step-budget ratios. Mirrors the JSON config file.
struct ExperimentConfig {
  std::string family = kFamilyGaussianGlass;
  std::map<std::string, double> family_params;
  std::vector<int> n_values{4, 8, 12, 16};
  std::vector<RunMethod> methods{RunMethod::SA, RunMethod::SAM};
  int realizations = 1;
  std::map<int, std::int64_t> repetitions;  // n -> R; defaults per size below
  std::vector<double> ratios{1.0};          // K = max(1, round(ratio * 2^n))
  std::uint64_t master_seed = 1;
  int oracle_cap = kDefaultEnumerationCap;
  std::string out;  // default output directory; the CLI --out overrides it

  std::int64_t repetitions_for(int n) const;
  static std::int64_t steps_for(double ratio, int n);
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::filesystem::path& path);
void validate(const ExperimentConfig& config);  // throws std::invalid_argument

// One result cell: (n, realization, method, K).
struct ResultRecord {
  std::string family;
  int n = 0;
  RunMethod method = RunMethod::SA;
  int realization_index = 0;
  std::int64_t anneal_steps = 0;  // K
  std::int64_t repetitions = 0;   // R; 0 marks an analytic BF record
  std::int64_t successes = 0;
  double p_s = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double tts = 0.0;
  double tts_ci_low = 0.0;
  double tts_ci_high = 0.0;

  std::string cell_id() const;
};

nlohmann::json record_to_json(const ResultRecord& rec);
ResultRecord record_from_json(const nlohmann::json& j);

// A generated problem together with its exact minima set.
struct Instance {
  int n = 0;
  int realization = 0;
  IsingModel model;
  MinimaSet minima;
};

std::string instance_stem(const std::string& family, int n, int realization);

// In-memory suite for the config's (n, realization) grid.
std::vector<Instance> make_instances(const ExperimentConfig& config);

// Directory layout under an output root.
std::filesystem::path problems_dir(const std::filesystem::path& out);
std::filesystem::path minima_dir(const std::filesystem::path& out);
std::filesystem::path results_path(const std::filesystem::path& out);
std::filesystem::path timing_path(const std::filesystem::path& out);
std::filesystem::path reports_dir(const std::filesystem::path& out);

// Writes one problem file and one minima file per (n, realization);
// deterministic, so reruns with the same seed are byte-identical.
void generate_suite(const ExperimentConfig& config, const std::filesystem::path& out);

// Loads a previously generated suite; throws if any file is missing.
std::vector<Instance> load_suite(const ExperimentConfig& config,
                                 const std::filesystem::path& out);

using ProgressFn = std::function<void(const ResultRecord&, double wall_seconds)>;

// Runs every cell in canonical order (n, realization, method, ratio) and
// returns the records. Repetitions are split across `workers` threads with
// per-repetition seed streams derived from indices, so results are
// bit-identical for any worker count. `skip` cells are omitted (resume).
std::vector<ResultRecord> run_cells(const ExperimentConfig& config,
                                    const std::vector<Instance>& instances,
                                    int workers,
                                    const std::vector<std::string>& skip = {},
                                    const ProgressFn& progress = nullptr);

// File-level run: loads the suite from `out`, honors --resume by skipping
// cells already present in results.jsonl (a clean prefix of an interrupted
// run resumes to byte-identical output), and appends records as JSON lines.
// Wall-clock per cell goes to timing.jsonl, keeping results.jsonl
// deterministic.
void run_experiment(const ExperimentConfig& config, const std::filesystem::path& out,
                    int workers, bool resume, const ProgressFn& progress = nullptr);

std::vector<ResultRecord> load_records(const std::filesystem::path& results_file);

// Plot-data exports (CSV with a header row, one row per plotted point).
void write_success_vs_n_csv(const std::vector<ResultRecord>& records,
                            const std::filesystem::path& path);
void write_tts_scatter_csv(const std::vector<ResultRecord>& records,
                           RunMethod baseline, RunMethod comparison,
                           const std::filesystem::path& path);
void write_success_vs_ratio_csv(const std::vector<ResultRecord>& records,
                                const std::filesystem::path& path);

// Crossing of the SA and SAM mean-success curves over the ratio grid.
struct CrossoverResult {
  std::string family;
  int n = 0;
  bool found = false;
  double ratio_low = 0.0;     // bracketing sampled ratios of the principal
  double ratio_high = 0.0;    // (last) sign change
  double ratio_interp = 0.0;  // linear interpolation inside the bracket
  bool ci_overlap = false;    // method CIs overlap at a bracketing ratio
  std::vector<std::pair<double, double>> all_crossings;
};

// Requires at least 4 sampled ratios per method per (family, n).
std::vector<CrossoverResult> crossover_analysis(const std::vector<ResultRecord>& records);
nlohmann::json crossover_to_json(const std::vector<CrossoverResult>& results);

}  // namespace isingbench
