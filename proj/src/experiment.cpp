#include "isingbench/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "isingbench/annealer.hpp"
#include "isingbench/problem_io.hpp"

namespace isingbench {

namespace fs = std::filesystem;

std::string to_string(RunMethod m) {
  switch (m) {
    case RunMethod::SA: return "SA";
    case RunMethod::SAM: return "SAM";
    case RunMethod::SAQ: return "SAQ";
    case RunMethod::BF: return "BF";
  }
  return "?";
}

RunMethod run_method_from_string(const std::string& name) {
  if (name == "SA") return RunMethod::SA;
  if (name == "SAM") return RunMethod::SAM;
  if (name == "SAQ") return RunMethod::SAQ;
  if (name == "BF") return RunMethod::BF;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::int64_t ExperimentConfig::repetitions_for(int n) const {
  if (auto it = repetitions.find(n); it != repetitions.end()) return it->second;
  switch (n) {
    case 4: return 10000;
    case 8: return 1000;
    case 12: return 1000;
    case 16: return 100;
    default:
      throw std::invalid_argument("no repetition count configured for n = " +
                                  std::to_string(n));
  }
}

std::int64_t ExperimentConfig::steps_for(double ratio, int n) {
  const double n_states = std::ldexp(1.0, n);
  return std::max<std::int64_t>(1, std::llround(ratio * n_states));
}

void validate(const ExperimentConfig& config) {
  if (config.n_values.empty()) throw std::invalid_argument("config: empty n_values");
  if (config.methods.empty()) throw std::invalid_argument("config: empty methods");
  if (config.realizations < 1)
    throw std::invalid_argument("config: realizations must be >= 1");
  for (int n : config.n_values) {
    if (n < 1) throw std::invalid_argument("config: n values must be positive");
    if (config.family == kFamilyFalseMinimum && n % 4 != 0)
      throw std::invalid_argument("config: false_minimum requires n to be a multiple of 4");
    if ((config.family == kFamilyUniformGlass ||
         config.family == kFamilyGaussianGlass) && n < 2)
      throw std::invalid_argument("config: spin-glass families require n >= 2");
    if (n > config.oracle_cap)
      throw std::invalid_argument("config: n exceeds the oracle enumeration cap");
    config.repetitions_for(n);  // throws when unconfigured
  }
  if (config.ratios.empty()) throw std::invalid_argument("config: empty ratios");
  for (double r : config.ratios)
    if (!(r > 0.0 && r <= 1.0))
      throw std::invalid_argument("config: ratios must lie in (0, 1]");
  if (config.family == kFamilyFalseMinimum) {
    double eps = 0.1;
    if (auto it = config.family_params.find("epsilon"); it != config.family_params.end())
      eps = it->second;
    if (!(eps > 0.0 && eps < 1.0))
      throw std::invalid_argument("config: epsilon must lie in (0, 1)");
  }
  if (config.family != kFamilyFalseMinimum && config.family != kFamilyZeroCoupling &&
      config.family != kFamilyUniformGlass && config.family != kFamilyGaussianGlass)
    throw std::invalid_argument("config: unknown family '" + config.family + "'");
  std::set<RunMethod> seen(config.methods.begin(), config.methods.end());
  if (seen.size() != config.methods.size())
    throw std::invalid_argument("config: duplicate methods");
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.family = j.at("family").get<std::string>();
  if (j.contains("params"))
    c.family_params = j.at("params").get<std::map<std::string, double>>();
  if (j.contains("n_values")) c.n_values = j.at("n_values").get<std::vector<int>>();
  if (j.contains("methods")) {
    c.methods.clear();
    for (const auto& m : j.at("methods"))
      c.methods.push_back(run_method_from_string(m.get<std::string>()));
  }
  if (j.contains("realizations")) c.realizations = j.at("realizations").get<int>();
  if (j.contains("repetitions")) {
    for (const auto& [key, value] : j.at("repetitions").items())
      c.repetitions[std::stoi(key)] = value.get<std::int64_t>();
  }
  if (j.contains("ratios")) c.ratios = j.at("ratios").get<std::vector<double>>();
  if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
  if (j.contains("oracle_cap")) c.oracle_cap = j.at("oracle_cap").get<int>();
  if (j.contains("out")) c.out = j.at("out").get<std::string>();
  validate(c);
  return c;
}

nlohmann::json config_to_json(const ExperimentConfig& config) {
  nlohmann::json j;
  j["family"] = config.family;
  if (!config.family_params.empty()) j["params"] = config.family_params;
  j["n_values"] = config.n_values;
  nlohmann::json methods = nlohmann::json::array();
  for (RunMethod m : config.methods) methods.push_back(to_string(m));
  j["methods"] = std::move(methods);
  j["realizations"] = config.realizations;
  nlohmann::json reps;
  for (const auto& [n, r] : config.repetitions) reps[std::to_string(n)] = r;
  if (!reps.is_null()) j["repetitions"] = std::move(reps);
  j["ratios"] = config.ratios;
  j["master_seed"] = config.master_seed;
  j["oracle_cap"] = config.oracle_cap;
  if (!config.out.empty()) j["out"] = config.out;
  return j;
}

ExperimentConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed config " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

std::string ResultRecord::cell_id() const {
  std::ostringstream os;
  os << family << "|n" << n << "|r" << realization_index << '|' << to_string(method)
     << "|K" << anneal_steps;
  return os.str();
}

namespace {

nlohmann::json finite_or_null(double x) {
  if (std::isinf(x)) return nullptr;
  return x;
}

double null_to_inf(const nlohmann::json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

}  // namespace

nlohmann::json record_to_json(const ResultRecord& rec) {
  nlohmann::json j;
  j["family"] = rec.family;
  j["n"] = rec.n;
  j["method"] = to_string(rec.method);
  j["realization_index"] = rec.realization_index;
  j["K"] = rec.anneal_steps;
  j["R"] = rec.repetitions;
  j["successes"] = rec.successes;
  j["p_s"] = rec.p_s;
  j["ci_low"] = rec.ci_low;
  j["ci_high"] = rec.ci_high;
  j["tts"] = finite_or_null(rec.tts);
  j["tts_ci_low"] = finite_or_null(rec.tts_ci_low);
  j["tts_ci_high"] = finite_or_null(rec.tts_ci_high);
  return j;
}

ResultRecord record_from_json(const nlohmann::json& j) {
  ResultRecord rec;
  rec.family = j.at("family").get<std::string>();
  rec.n = j.at("n").get<int>();
  rec.method = run_method_from_string(j.at("method").get<std::string>());
  rec.realization_index = j.at("realization_index").get<int>();
  rec.anneal_steps = j.at("K").get<std::int64_t>();
  rec.repetitions = j.at("R").get<std::int64_t>();
  rec.successes = j.at("successes").get<std::int64_t>();
  rec.p_s = j.at("p_s").get<double>();
  rec.ci_low = j.at("ci_low").get<double>();
  rec.ci_high = j.at("ci_high").get<double>();
  rec.tts = null_to_inf(j.at("tts"));
  rec.tts_ci_low = null_to_inf(j.at("tts_ci_low"));
  rec.tts_ci_high = null_to_inf(j.at("tts_ci_high"));
  return rec;
}

std::string instance_stem(const std::string& family, int n, int realization) {
  std::ostringstream os;
  os << family << "_n" << n << "_r" << std::setw(3) << std::setfill('0') << realization;
  return os.str();
}

std::vector<Instance> make_instances(const ExperimentConfig& config) {
  validate(config);
  std::vector<Instance> out;
  out.reserve(config.n_values.size() * config.realizations);
  for (int n : config.n_values) {
    for (int r = 0; r < config.realizations; ++r) {
      IsingModel model = generate(config.family, n, config.family_params,
                                  {config.master_seed, static_cast<std::uint64_t>(r)});
      MinimaSet minima = brute_force_minima(model, config.oracle_cap);
      out.push_back({n, r, std::move(model), std::move(minima)});
    }
  }
  return out;
}

fs::path problems_dir(const fs::path& out) { return out / "problems"; }
fs::path minima_dir(const fs::path& out) { return out / "minima"; }
fs::path results_path(const fs::path& out) { return out / "results.jsonl"; }
fs::path timing_path(const fs::path& out) { return out / "timing.jsonl"; }
fs::path reports_dir(const fs::path& out) { return out / "reports"; }

void generate_suite(const ExperimentConfig& config, const fs::path& out) {
  fs::create_directories(problems_dir(out));
  fs::create_directories(minima_dir(out));
  for (const Instance& inst : make_instances(config)) {
    const std::string stem = instance_stem(config.family, inst.n, inst.realization);
    write_model(problems_dir(out) / (stem + ".json"), inst.model);
    write_minima(minima_dir(out) / (stem + ".json"), inst.minima);
  }
}

std::vector<Instance> load_suite(const ExperimentConfig& config, const fs::path& out) {
  validate(config);
  std::vector<Instance> instances;
  for (int n : config.n_values) {
    for (int r = 0; r < config.realizations; ++r) {
      const std::string stem = instance_stem(config.family, n, r);
      const fs::path problem = problems_dir(out) / (stem + ".json");
      const fs::path minima = minima_dir(out) / (stem + ".json");
      if (!fs::exists(problem) || !fs::exists(minima))
        throw std::runtime_error("missing suite files for " + stem +
                                 " under " + out.string() + " (run `generate` first)");
      instances.push_back({n, r, read_model(problem), read_minima(minima)});
    }
  }
  return instances;
}

namespace {

struct RepCounts {
  std::int64_t successes = 0;
  std::int64_t best_successes = 0;
};

// Worker body: repetitions [begin, end) of one cell. Each repetition draws
// its own seed stream from its index, so the split is irrelevant.
RepCounts run_repetitions(const IsingModel& model, const MinimaSet& minima,
                          Method method, std::int64_t steps, std::uint64_t cell_seed,
                          std::int64_t begin, std::int64_t end) {
  RepCounts counts;
  AnnealParams params;
  params.method = method;
  params.steps = steps;
  for (std::int64_t rep = begin; rep < end; ++rep) {
    const std::uint64_t rep_seed = derive_seed(cell_seed, static_cast<std::uint64_t>(rep));
    Rng init_rng(derive_seed(rep_seed, 1));
    const SpinVector initial = random_spins(model.size(), init_rng);
    params.rng_stream = derive_seed(rep_seed, 2);
    RunOutcome outcome = anneal_run(model, params, initial);
    outcome.success = minima.contains(encode_state(outcome.final_state));
    outcome.best_success = minima.contains(encode_state(outcome.best_state));
    counts.successes += outcome.success ? 1 : 0;
    counts.best_successes += outcome.best_success ? 1 : 0;
  }
  return counts;
}

ResultRecord make_record(const ExperimentConfig& config, const Instance& inst,
                         RunMethod method, std::int64_t steps, std::int64_t reps,
                         std::int64_t successes) {
  ResultRecord rec;
  rec.family = config.family;
  rec.n = inst.n;
  rec.method = method;
  rec.realization_index = inst.realization;
  rec.anneal_steps = steps;
  const double t_a = static_cast<double>(steps);
  if (method == RunMethod::BF) {
    const std::uint64_t n_states = std::uint64_t{1} << inst.n;
    const double p = bf_success_probability(n_states, static_cast<std::uint64_t>(steps),
                                            inst.minima.degeneracy());
    rec.repetitions = 0;
    rec.successes = 0;
    rec.p_s = rec.ci_low = rec.ci_high = p;
    rec.tts = time_to_solution(p, t_a).tts;
    rec.tts_ci_low = rec.tts_ci_high = rec.tts;
    return rec;
  }
  const SuccessEstimate est = estimate_from_counts(successes, reps, steps);
  rec.repetitions = est.repetitions;
  rec.successes = est.successes;
  rec.p_s = est.p_s;
  rec.ci_low = est.ci_low;
  rec.ci_high = est.ci_high;
  rec.tts = time_to_solution(est.p_s, t_a).tts;
  // TTS decreases in p_s, so the interval endpoints swap.
  rec.tts_ci_low = time_to_solution(est.ci_high, t_a, TtsResult::Basis::ci_high).tts;
  rec.tts_ci_high = time_to_solution(est.ci_low, t_a, TtsResult::Basis::ci_low).tts;
  return rec;
}

}  // namespace

std::vector<ResultRecord> run_cells(const ExperimentConfig& config,
                                    const std::vector<Instance>& instances,
                                    int workers,
                                    const std::vector<std::string>& skip,
                                    const ProgressFn& progress) {
  validate(config);
  if (workers < 1) workers = 1;
  const std::set<std::string> skipped(skip.begin(), skip.end());

  auto find_instance = [&](int n, int r) -> const Instance& {
    for (const Instance& inst : instances)
      if (inst.n == n && inst.realization == r) return inst;
    throw std::runtime_error("run_cells: missing instance n=" + std::to_string(n) +
                             " r=" + std::to_string(r));
  };

  std::vector<ResultRecord> records;
  for (int n : config.n_values) {
    const std::int64_t reps = config.repetitions_for(n);
    for (int r = 0; r < config.realizations; ++r) {
      const Instance& inst = find_instance(n, r);
      for (RunMethod method : config.methods) {
        for (double ratio : config.ratios) {
          const std::int64_t steps = ExperimentConfig::steps_for(ratio, n);
          ResultRecord probe;
          probe.family = config.family;
          probe.n = n;
          probe.method = method;
          probe.realization_index = r;
          probe.anneal_steps = steps;
          if (skipped.count(probe.cell_id())) continue;

          const auto t_start = std::chrono::steady_clock::now();
          ResultRecord rec;
          if (method == RunMethod::BF) {
            rec = make_record(config, inst, method, steps, 0, 0);
          } else {
            const std::uint64_t cell_seed = derive_seed(
                generator_stream_seed(config.family,
                                      {config.master_seed, static_cast<std::uint64_t>(r)}),
                0x52554e5355ULL, static_cast<std::uint64_t>(n),
                static_cast<std::uint64_t>(method), static_cast<std::uint64_t>(steps));
            const Method anneal_method = method == RunMethod::SA    ? Method::SA
                                         : method == RunMethod::SAM ? Method::SAM
                                                                    : Method::SAQ;
            std::int64_t successes = 0;
            const int used = static_cast<int>(
                std::min<std::int64_t>(workers, reps));
            if (used <= 1) {
              successes = run_repetitions(inst.model, inst.minima, anneal_method,
                                          steps, cell_seed, 0, reps).successes;
            } else {
              std::vector<RepCounts> parts(used);
              std::vector<std::thread> pool;
              pool.reserve(used);
              for (int w = 0; w < used; ++w) {
                const std::int64_t begin = reps * w / used;
                const std::int64_t end = reps * (w + 1) / used;
                pool.emplace_back([&, w, begin, end] {
                  parts[w] = run_repetitions(inst.model, inst.minima, anneal_method,
                                             steps, cell_seed, begin, end);
                });
              }
              for (auto& t : pool) t.join();
              for (const RepCounts& c : parts) successes += c.successes;
            }
            rec = make_record(config, inst, method, steps, reps, successes);
          }
          const double wall =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
                  .count();
          if (progress) progress(rec, wall);
          records.push_back(std::move(rec));
        }
      }
    }
  }
  return records;
}

std::vector<ResultRecord> load_records(const fs::path& results_file) {
  std::vector<ResultRecord> records;
  std::ifstream in(results_file);
  if (!in) return records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // An interrupted run can leave a torn final line; stop there and let the
    // caller rewrite the clean prefix.
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) break;
    records.push_back(record_from_json(j));
  }
  return records;
}

void run_experiment(const ExperimentConfig& config, const fs::path& out,
                    int workers, bool resume, const ProgressFn& progress) {
  std::vector<Instance> instances = load_suite(config, out);
  fs::create_directories(out);

  std::vector<std::string> skip;
  if (resume) {
    const std::vector<ResultRecord> existing = load_records(results_path(out));
    // Rewrite the clean prefix so a torn trailing line cannot corrupt appends.
    std::ofstream rewrite(results_path(out), std::ios::trunc);
    for (const ResultRecord& rec : existing) {
      rewrite << record_to_json(rec).dump() << '\n';
      skip.push_back(rec.cell_id());
    }
  } else {
    std::ofstream(results_path(out), std::ios::trunc);
    std::ofstream(timing_path(out), std::ios::trunc);
  }

  std::ofstream results(results_path(out), std::ios::app);
  std::ofstream timing(timing_path(out), std::ios::app);
  if (!results || !timing)
    throw std::runtime_error("cannot open output files under " + out.string());

  const ProgressFn sink = [&](const ResultRecord& rec, double wall) {
    results << record_to_json(rec).dump() << '\n';
    results.flush();
    nlohmann::json t;
    t["cell"] = rec.cell_id();
    t["wall_clock_seconds"] = wall;
    timing << t.dump() << '\n';
    timing.flush();
    if (progress) progress(rec, wall);
  };
  run_cells(config, instances, workers, skip, sink);
}

namespace {

struct MeanCi {
  double mean = 0.0;
  double low = 0.0;
  double high = 1.0;
  int count = 0;
};

// Across-realization aggregate: a single cell keeps its exact binomial
// bounds; several cells get a normal-approximation interval on the mean.
MeanCi aggregate(const std::vector<const ResultRecord*>& cells) {
  MeanCi out;
  out.count = static_cast<int>(cells.size());
  if (cells.empty()) return out;
  double sum = 0.0;
  for (const ResultRecord* rec : cells) sum += rec->p_s;
  out.mean = sum / out.count;
  if (out.count == 1) {
    out.low = cells[0]->ci_low;
    out.high = cells[0]->ci_high;
    return out;
  }
  double ss = 0.0;
  for (const ResultRecord* rec : cells) ss += (rec->p_s - out.mean) * (rec->p_s - out.mean);
  const double se = std::sqrt(ss / (out.count - 1) / out.count);
  out.low = std::max(0.0, out.mean - 1.96 * se);
  out.high = std::min(1.0, out.mean + 1.96 * se);
  return out;
}

std::ofstream open_csv(const fs::path& path) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << std::setprecision(10);
  return out;
}

std::string csv_num(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

double ratio_of(const ResultRecord& rec) {
  return static_cast<double>(rec.anneal_steps) / std::ldexp(1.0, rec.n);
}

}  // namespace

void write_success_vs_n_csv(const std::vector<ResultRecord>& records,
                            const fs::path& path) {
  std::map<std::tuple<std::string, int, std::string>, std::vector<const ResultRecord*>>
      groups;
  for (const ResultRecord& rec : records)
    groups[{rec.family, rec.n, to_string(rec.method)}].push_back(&rec);
  std::ofstream out = open_csv(path);
  out << "family,n,method,realizations,p_s,ci_low,ci_high\n";
  for (const auto& [key, cells] : groups) {
    const MeanCi agg = aggregate(cells);
    out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ','
        << agg.count << ',' << csv_num(agg.mean) << ',' << csv_num(agg.low) << ','
        << csv_num(agg.high) << '\n';
  }
}

void write_tts_scatter_csv(const std::vector<ResultRecord>& records,
                           RunMethod baseline, RunMethod comparison,
                           const fs::path& path) {
  std::map<std::tuple<std::string, int, std::int64_t, int>, const ResultRecord*> base,
      comp;
  for (const ResultRecord& rec : records) {
    const auto key = std::make_tuple(rec.family, rec.n, rec.anneal_steps,
                                     rec.realization_index);
    if (rec.method == baseline) base[key] = &rec;
    if (rec.method == comparison) comp[key] = &rec;
  }
  std::ofstream out = open_csv(path);
  out << "family,n,K,realization,x,y,x_lo,x_hi,y_lo,y_hi,below_diagonal\n";
  for (const auto& [key, b] : base) {
    auto it = comp.find(key);
    if (it == comp.end()) continue;
    const ResultRecord* c = it->second;
    out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ','
        << std::get<3>(key) << ',' << csv_num(b->tts) << ',' << csv_num(c->tts) << ','
        << csv_num(b->tts_ci_low) << ',' << csv_num(b->tts_ci_high) << ','
        << csv_num(c->tts_ci_low) << ',' << csv_num(c->tts_ci_high) << ','
        << (c->tts < b->tts ? 1 : 0) << '\n';
  }
}

void write_success_vs_ratio_csv(const std::vector<ResultRecord>& records,
                                const fs::path& path) {
  std::map<std::tuple<std::string, int, std::string, double>,
           std::vector<const ResultRecord*>>
      groups;
  std::set<std::pair<std::string, int>> panels;
  std::map<std::pair<std::string, int>, std::set<std::int64_t>> budgets;
  bool have_bf = false;
  for (const ResultRecord& rec : records) {
    groups[{rec.family, rec.n, to_string(rec.method), ratio_of(rec)}].push_back(&rec);
    panels.insert({rec.family, rec.n});
    budgets[{rec.family, rec.n}].insert(rec.anneal_steps);
    if (rec.method == RunMethod::BF) have_bf = true;
  }
  std::ofstream out = open_csv(path);
  out << "family,n,method,ratio,K,realizations,p_s,ci_low,ci_high,tts,tts_lo,tts_hi\n";
  auto emit = [&](const std::string& family, int n, const std::string& method,
                  double ratio, std::int64_t steps, const MeanCi& agg) {
    const double t_a = static_cast<double>(steps);
    out << family << ',' << n << ',' << method << ',' << csv_num(ratio) << ',' << steps
        << ',' << agg.count << ',' << csv_num(agg.mean) << ',' << csv_num(agg.low) << ','
        << csv_num(agg.high) << ',' << csv_num(time_to_solution(agg.mean, t_a).tts)
        << ',' << csv_num(time_to_solution(agg.high, t_a).tts) << ','
        << csv_num(time_to_solution(agg.low, t_a).tts) << '\n';
  };
  for (const auto& [key, cells] : groups)
    emit(std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key),
         cells[0]->anneal_steps, aggregate(cells));
  // Reference brute-force curve when the run itself did not include BF;
  // two-minima closed form.
  if (!have_bf) {
    for (const auto& [family, n] : panels) {
      for (std::int64_t steps : budgets[{family, n}]) {
        const std::uint64_t n_states = std::uint64_t{1} << n;
        const double p =
            bf_success_probability(n_states, static_cast<std::uint64_t>(steps), 2);
        MeanCi agg;
        agg.mean = agg.low = agg.high = p;
        agg.count = 0;
        emit(family, n, "BF", static_cast<double>(steps) / static_cast<double>(n_states),
             steps, agg);
      }
    }
  }
}

std::vector<CrossoverResult> crossover_analysis(const std::vector<ResultRecord>& records) {
  struct Curve {
    std::map<double, std::vector<const ResultRecord*>> by_ratio;
  };
  std::map<std::pair<std::string, int>, std::map<RunMethod, Curve>> panels;
  for (const ResultRecord& rec : records) {
    if (rec.method != RunMethod::SA && rec.method != RunMethod::SAM) continue;
    panels[{rec.family, rec.n}][rec.method].by_ratio[ratio_of(rec)].push_back(&rec);
  }
  std::vector<CrossoverResult> results;
  for (const auto& [panel, curves] : panels) {
    CrossoverResult res;
    res.family = panel.first;
    res.n = panel.second;
    auto sa_it = curves.find(RunMethod::SA);
    auto sam_it = curves.find(RunMethod::SAM);
    if (sa_it == curves.end() || sam_it == curves.end())
      throw std::runtime_error("crossover: need both SA and SAM results for " +
                               res.family + " n=" + std::to_string(res.n));
    if (sa_it->second.by_ratio.size() < 4 || sam_it->second.by_ratio.size() < 4)
      throw std::runtime_error("crossover: insufficient ratio grid (need >= 4 ratios)");
    struct Point {
      double ratio;
      MeanCi sa, sam;
    };
    std::vector<Point> pts;
    for (const auto& [ratio, sa_cells] : sa_it->second.by_ratio) {
      auto m = sam_it->second.by_ratio.find(ratio);
      if (m == sam_it->second.by_ratio.end()) continue;
      pts.push_back({ratio, aggregate(sa_cells), aggregate(m->second)});
    }
    if (pts.size() < 4)
      throw std::runtime_error("crossover: insufficient shared ratio grid");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double d0 = pts[i].sa.mean - pts[i].sam.mean;
      const double d1 = pts[i + 1].sa.mean - pts[i + 1].sam.mean;
      if (d0 == 0.0 && d1 == 0.0) continue;
      if ((d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0) || d0 == 0.0 || d1 == 0.0) {
        res.found = true;
        res.ratio_low = pts[i].ratio;
        res.ratio_high = pts[i + 1].ratio;
        const double t = d0 == d1 ? 0.5 : d0 / (d0 - d1);
        res.ratio_interp = pts[i].ratio + t * (pts[i + 1].ratio - pts[i].ratio);
        const auto overlap = [](const MeanCi& a, const MeanCi& b) {
          return a.low <= b.high && b.low <= a.high;
        };
        res.ci_overlap = overlap(pts[i].sa, pts[i].sam) ||
                         overlap(pts[i + 1].sa, pts[i + 1].sam);
        res.all_crossings.push_back({pts[i].ratio, pts[i + 1].ratio});
      }
    }
    results.push_back(std::move(res));
  }
  return results;
}

nlohmann::json crossover_to_json(const std::vector<CrossoverResult>& results) {
  nlohmann::json out = nlohmann::json::array();
  for (const CrossoverResult& res : results) {
    nlohmann::json j;
    j["family"] = res.family;
    j["n"] = res.n;
    j["found"] = res.found;
    if (res.found) {
      j["ratio_low"] = res.ratio_low;
      j["ratio_high"] = res.ratio_high;
      j["ratio_interp"] = res.ratio_interp;
      j["ci_overlap"] = res.ci_overlap;
      nlohmann::json all = nlohmann::json::array();
      for (const auto& [lo, hi] : res.all_crossings)
        all.push_back(nlohmann::json::array({lo, hi}));
      j["all_crossings"] = std::move(all);
    } else {
      j["note"] = "no crossover in sampled range";
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace isingbench
