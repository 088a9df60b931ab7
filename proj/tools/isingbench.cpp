#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "isingbench/experiment.hpp"
#include "isingbench/problem_io.hpp"

namespace fs = std::filesystem;
using namespace isingbench;

namespace {

ExperimentConfig load_config_with_seed(const std::string& config_path,
                                       const std::optional<std::uint64_t>& seed) {
  ExperimentConfig config = load_config(config_path);
  if (seed) config.master_seed = *seed;
  return config;
}

int cmd_generate(const ExperimentConfig& config, const fs::path& out) {
  generate_suite(config, out);
  const std::size_t count = config.n_values.size() * config.realizations;
  std::cerr << "generated " << count << " problem(s) + minima under " << out << "\n";
  return 0;
}

int cmd_run(const ExperimentConfig& config, const fs::path& out, int workers,
            bool resume) {
  run_experiment(config, out, workers, resume,
                 [](const ResultRecord& rec, double wall) {
                   std::cerr << rec.cell_id() << "  p_s=" << rec.p_s << " ("
                             << rec.successes << '/' << rec.repetitions << ")  "
                             << wall << "s\n";
                 });
  std::cerr << "results: " << results_path(out) << "\n";
  return 0;
}

int cmd_report(const fs::path& out, const std::string& mode) {
  const std::vector<ResultRecord> records = load_records(results_path(out));
  if (records.empty())
    throw std::runtime_error("no records in " + results_path(out).string());
  std::set<RunMethod> present;
  for (const ResultRecord& rec : records) present.insert(rec.method);
  const fs::path dir = reports_dir(out);
  if (mode == "success_vs_n") {
    write_success_vs_n_csv(records, dir / "success_vs_n.csv");
    std::cerr << "wrote " << (dir / "success_vs_n.csv") << "\n";
  } else if (mode == "tts_scatter") {
    bool wrote = false;
    if (present.count(RunMethod::SA) && present.count(RunMethod::SAM)) {
      write_tts_scatter_csv(records, RunMethod::SA, RunMethod::SAM,
                            dir / "tts_scatter_sam_vs_sa.csv");
      std::cerr << "wrote " << (dir / "tts_scatter_sam_vs_sa.csv") << "\n";
      wrote = true;
    }
    if (present.count(RunMethod::SAM) && present.count(RunMethod::SAQ)) {
      write_tts_scatter_csv(records, RunMethod::SAM, RunMethod::SAQ,
                            dir / "tts_scatter_saq_vs_sam.csv");
      std::cerr << "wrote " << (dir / "tts_scatter_saq_vs_sam.csv") << "\n";
      wrote = true;
    }
    if (!wrote)
      throw std::runtime_error(
          "tts_scatter needs results for a method pair (SA+SAM or SAM+SAQ)");
  } else {  // success_vs_ratio, enforced by the CLI option check
    write_success_vs_ratio_csv(records, dir / "success_vs_ratio.csv");
    std::cerr << "wrote " << (dir / "success_vs_ratio.csv") << "\n";
  }
  return 0;
}

int cmd_crossover(const fs::path& out) {
  const std::vector<ResultRecord> records = load_records(results_path(out));
  if (records.empty())
    throw std::runtime_error("no records in " + results_path(out).string());
  const std::vector<CrossoverResult> results = crossover_analysis(records);
  fs::create_directories(reports_dir(out));
  write_json_file(reports_dir(out) / "crossover.json", crossover_to_json(results));
  for (const CrossoverResult& res : results) {
    std::cout << res.family << " n=" << res.n << ": ";
    if (!res.found) {
      std::cout << "no crossover in sampled range\n";
      continue;
    }
    std::cout << "SA/SAM mean-success curves cross in K/N = [" << res.ratio_low << ", "
              << res.ratio_high << "], interpolated at " << res.ratio_interp;
    if (res.ci_overlap) std::cout << " (CIs overlap: not statistically resolved)";
    std::cout << "\n";
  }
  std::cerr << "wrote " << (reports_dir(out) / "crossover.json") << "\n";
  return 0;
}

int cmd_oracle(const std::string& problem_path, const std::string& out_path, int cap,
               bool with_histogram) {
  const IsingModel model = read_model(problem_path);
  const MinimaSet minima = brute_force_minima(model, cap);
  nlohmann::json j = minima_to_json(minima);
  if (with_histogram) {
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [e, count] : energy_histogram(model, cap))
      hist.push_back(nlohmann::json::array({e, count}));
    j["histogram"] = std::move(hist);
  }
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out_path, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ising simulated-annealing benchmark (SA / SAM / SAQ / BF)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "bench_out";
  std::optional<std::uint64_t> seed;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  bool resume = false;

  auto* gen = app.add_subcommand("generate", "Generate problem and minima files");
  gen->add_option("--config", config_path, "Experiment config (JSON)")->required();
  gen->add_option("--seed", seed, "Override the config's master seed");
  auto* gen_out = gen->add_option("--out", out_dir, "Output directory");

  auto* run = app.add_subcommand("run", "Run the configured method sweep");
  run->add_option("--config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--seed", seed, "Override the config's master seed");
  auto* run_out = run->add_option("--out", out_dir, "Output directory");
  run->add_option("--workers", workers, "Worker threads for repetitions");
  run->add_flag("--resume", resume, "Skip cells already present in results.jsonl");

  std::string mode;
  auto* report = app.add_subcommand("report", "Export plot-data CSV from results");
  report->add_option("--out", out_dir, "Directory holding results.jsonl");
  report->add_option("--mode", mode, "Plot data to export")
      ->required()
      ->check(CLI::IsMember({"success_vs_n", "tts_scatter", "success_vs_ratio"}));

  auto* crossover = app.add_subcommand("crossover", "Locate the SA/SAM crossover ratio");
  crossover->add_option("--out", out_dir, "Directory holding results.jsonl");

  std::string problem_path, oracle_out;
  int cap = kDefaultEnumerationCap;
  bool with_histogram = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force minima for a problem file");
  oracle->add_option("problem", problem_path, "Problem file (JSON)")->required();
  oracle->add_option("--out", oracle_out, "Write minima JSON here (default: stdout)");
  oracle->add_option("--cap", cap, "Enumeration cap on n");
  oracle->add_flag("--histogram", with_histogram, "Include the exact energy histogram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      const ExperimentConfig config = load_config_with_seed(config_path, seed);
      return cmd_generate(config, gen_out->count() || config.out.empty() ? out_dir
                                                                         : config.out);
    }
    if (run->parsed()) {
      const ExperimentConfig config = load_config_with_seed(config_path, seed);
      return cmd_run(config,
                     run_out->count() || config.out.empty() ? out_dir : config.out,
                     workers, resume);
    }
    if (report->parsed()) return cmd_report(out_dir, mode);
    if (crossover->parsed()) return cmd_crossover(out_dir);
    if (oracle->parsed()) return cmd_oracle(problem_path, oracle_out, cap, with_histogram);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
