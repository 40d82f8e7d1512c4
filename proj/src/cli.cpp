// Copyright 2026 The lrqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lrqaoa/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lrqaoa/circuit.hpp"
#include "lrqaoa/error.hpp"
#include "lrqaoa/io.hpp"
#include "lrqaoa/noise.hpp"
#include "lrqaoa/parallel.hpp"
#include "lrqaoa/problem.hpp"
#include "lrqaoa/rng.hpp"
#include "lrqaoa/sharded.hpp"
#include "lrqaoa/statevector.hpp"
#include "lrqaoa/stats.hpp"

namespace lrqaoa {

namespace fs = std::filesystem;
using io::json;

namespace {

constexpr const char* kVersion = LRQAOA_VERSION;

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Everything needed to re-run a command and check its outputs.
class Manifest {
 public:
  Manifest(std::string command, std::vector<std::string> argv)
      : command_(std::move(command)), argv_(std::move(argv)), started_(utc_now()) {}

  json& parameters() { return parameters_; }
  json& seeds() { return seeds_; }

  void input(const fs::path& path) { inputs_[path.string()] = io::sha256_file(path); }
  // Timing outputs vary between runs and are skipped on replay.
  void output(const fs::path& path, bool timing = false) {
    outputs_[path.string()] = {{"sha256", io::sha256_file(path)}, {"timing", timing}};
  }

  void write(const fs::path& path) const {
    json j = {{"tool", "lrqaoa"},
              {"version", kVersion},
              {"command", command_},
              {"argv", argv_},
              {"parameters", parameters_},
              {"seeds", seeds_},
              {"started_utc", started_},
              {"finished_utc", utc_now()},
              {"inputs", inputs_},
              {"outputs", outputs_}};
    io::write_json(path, j);
  }

 private:
  std::string command_;
  std::vector<std::string> argv_;
  std::string started_;
  json parameters_ = json::object();
  json seeds_ = json::object();
  json inputs_ = json::object();
  json outputs_ = json::object();
};

fs::path manifest_path_for(const std::string& explicit_path, const fs::path& primary) {
  if (!explicit_path.empty()) return explicit_path;
  return primary.string() + ".manifest.json";
}

std::vector<double> ratios_of(const ShotSet& shots, const WmcInstance& inst) {
  if (shots.num_qubits != inst.num_vertices) {
    throw Error(Errc::dimension, fmt::format("shots have {} qubits, instance has {} vertices", shots.num_qubits,
                                             inst.num_vertices));
  }
  return shot_ratios(shots, inst);
}

struct Context {
  std::vector<std::string> argv;
  std::ostream& out;
  std::ostream& err;
};

// gen ----------------------------------------------------------------------

struct GenArgs {
  unsigned n = 0;
  std::uint64_t seed = 0;
  std::string out;
  unsigned max_bruteforce = kDefaultBruteForceLimit;
  std::string manifest;
};

void cmd_gen(const GenArgs& a, Context& ctx) {
  auto inst = generate_instance(a.n, a.seed);
  if (a.n <= a.max_bruteforce) {
    solve_in_place(inst, a.max_bruteforce);
  } else {
    ctx.err << fmt::format("warning: {} vertices exceeds the brute-force cap of {}; optimal cut left null\n", a.n,
                           a.max_bruteforce);
  }
  io::write_json(a.out, io::to_json(inst));

  Manifest m("gen", ctx.argv);
  m.parameters() = {{"n", a.n}, {"max_bruteforce", a.max_bruteforce}};
  m.seeds() = {{"instance", a.seed}};
  m.output(a.out);
  m.write(manifest_path_for(a.manifest, a.out));
  ctx.out << fmt::format("wrote {} ({} edges, optimal {})\n", a.out, inst.edges.size(),
                         inst.optimal_cut ? fmt::format("{:.12g}", inst.optimal_cut->value) : "null");
}

// simulate -----------------------------------------------------------------

struct SimulateArgs {
  std::string instance;
  unsigned p = 3;
  double delta = 0.2;
  std::optional<double> delta_beta;
  std::optional<double> delta_gamma;
  std::string mode = "noiseless";
  double epsilon = 0.0;
  std::uint64_t trajectories = 0;
  std::uint64_t shards = 1;
  std::uint64_t shots = 100;
  std::uint64_t seed = 0;
  std::string precision = "fp32";
  std::string out;
  std::string timing_csv;
  std::string dump_state;
  std::string circuit_out;
  std::string manifest;
};

void cmd_simulate(const SimulateArgs& a, Context& ctx) {
  const auto inst = io::instance_from_json(io::read_json(a.instance));
  const LrQaoaParams params{a.p, a.delta_beta.value_or(a.delta), a.delta_gamma.value_or(a.delta)};
  params.validate();
  const auto precision = parse_precision(a.precision);
  const auto circuit = build_circuit(inst, params);
  if (a.mode != "noiseless" && a.mode != "noisy") {
    throw Error(Errc::invalid_argument, fmt::format("mode must be noiseless or noisy, got '{}'", a.mode));
  }

  Manifest m("simulate", ctx.argv);
  m.input(a.instance);
  json results = {{"n", inst.num_vertices},
                  {"instance_seed", inst.seed},
                  {"p", params.p},
                  {"delta_beta", params.delta_beta},
                  {"delta_gamma", params.delta_gamma},
                  {"mode", a.mode},
                  {"precision", precision_name(precision)},
                  {"shards", a.shards},
                  {"seed", a.seed}};
  results["random_baseline"] = inst.optimal_cut ? json(random_baseline_expectation(inst)) : json(nullptr);

  ShotSet shots;
  std::optional<double> exact_r;
  json noisy = nullptr;
  std::vector<std::pair<fs::path, bool>> outputs;

  if (a.mode == "noiseless") {
    const auto plan = plan_for_shards(inst.num_vertices, a.shards);
    ShardedOptions opts;
    auto res = run_circuit_sharded(circuit, plan, precision, opts);
    shots = sample(res.state, a.shots, a.seed);
    if (inst.optimal_cut) exact_r = exact_expected_r(res.state, inst);
    const fs::path timing_path = a.timing_csv.empty() ? fs::path(a.out + ".timing.csv") : fs::path(a.timing_csv);
    io::write_file(timing_path, timing_csv_header() + timing_csv_rows(res.timing));
    outputs.emplace_back(timing_path, true);
    if (!a.dump_state.empty()) {
      io::write_file(a.dump_state, io::state_dump(res.state));
      outputs.emplace_back(a.dump_state, false);
    }
    ctx.out << fmt::format("compute {:.6f} s, exchange {:.6f} s, {} amplitudes exchanged\n",
                           res.timing.compute_seconds, res.timing.exchange_seconds, res.timing.amps_exchanged);
  } else {
    if (a.shards != 1) throw Error(Errc::invalid_config, "noisy mode runs unsharded trajectories; use --shards 1");
    const std::uint64_t traj = a.trajectories == 0 ? a.shots : a.trajectories;
    if (traj == 0 || a.shots % traj != 0) {
      throw Error(Errc::invalid_config,
                  fmt::format("shot count {} must be a multiple of the trajectory count {}", a.shots, traj));
    }
    const DepolarizingConfig cfg{a.epsilon, traj, a.seed};
    shots = run_noisy_ensemble(circuit, cfg, a.shots / traj, precision);
    io::NoisyRunSummary summary;
    summary.epsilon = a.epsilon;
    summary.trajectories = traj;
    summary.shots = a.shots;
    summary.n_2q = gate_counts(inst.num_vertices, params.p).two_qubit;
    if (inst.optimal_cut) {
      summary.mean_r = noisy_expected_r(circuit, inst, cfg, precision).mean_r;
      summary.r_ideal = exact_expected_r(run_circuit(circuit, precision), inst);
      summary.r_random = random_baseline_expectation(inst);
      try {
        summary.r_ovl = r_ovl(summary.mean_r, *summary.r_random, *summary.r_ideal);
      } catch (const Error& e) {
        ctx.err << "warning: " << e.what() << "\n";
      }
    } else {
      summary.mean_r = std::nan("");
      ctx.err << "warning: instance has no optimal cut; ratios are not available\n";
    }
    noisy = io::to_json(summary);
    if (!inst.optimal_cut) noisy["mean_r"] = nullptr;
  }

  shots.source.origin = a.mode == "noiseless" ? ShotOrigin::noiseless : ShotOrigin::noisy;
  results["exact_expected_r"] = exact_r ? json(*exact_r) : json(nullptr);
  results["mean_r"] = inst.optimal_cut ? json(mean_ratio(shots, inst)) : json(nullptr);
  results["noisy"] = noisy;
  results["shots"] = io::to_json(shots);
  io::write_json(a.out, results);
  outputs.emplace(outputs.begin(), a.out, false);

  if (!a.circuit_out.empty()) {
    io::write_file(a.circuit_out, to_text(circuit));
    outputs.emplace_back(a.circuit_out, false);
  }

  m.parameters() = {{"p", params.p},          {"delta_beta", params.delta_beta}, {"delta_gamma", params.delta_gamma},
                    {"mode", a.mode},         {"epsilon", a.epsilon},            {"shards", a.shards},
                    {"shots", a.shots},       {"precision", a.precision},        {"trajectories", a.trajectories}};
  m.seeds() = {{"run", a.seed}};
  for (const auto& [path, timing] : outputs) m.output(path, timing);
  m.write(manifest_path_for(a.manifest, a.out));

  if (results["mean_r"].is_number()) ctx.out << fmt::format("mean r {:.6f}", results["mean_r"].get<double>());
  if (exact_r) ctx.out << fmt::format(", exact r {:.6f}", *exact_r);
  if (results["random_baseline"].is_number()) {
    ctx.out << fmt::format(", random baseline {:.6f}", results["random_baseline"].get<double>());
  }
  ctx.out << "\n";
}

// classify -----------------------------------------------------------------

struct ClassifyArgs {
  std::string qpu;
  std::string instance;
  std::uint64_t random_pool_size = 10000;
  std::string noiseless;
  std::size_t ns = 10;
  std::size_t repeats = 100;
  std::uint64_t seed = 0;
  bool replacement = false;
  std::string out;
  std::string kde_prefix;
  std::string manifest;
};

void cmd_classify(const ClassifyArgs& a, Context& ctx) {
  const auto inst = io::instance_from_json(io::read_json(a.instance));
  inst.require_optimal();
  const auto qpu = ratios_of(io::shots_from_json(io::read_json(a.qpu)), inst);
  if (a.random_pool_size < 10 * a.ns) {
    throw Error(Errc::invalid_config, fmt::format("random pool of {} must hold at least 10 * n_s = {} shots",
                                                  a.random_pool_size, 10 * a.ns));
  }
  const auto random_shots = uniform_sampler(inst, a.random_pool_size, derive_seed(a.seed, 0x554e4946));
  const auto random_pool = ratios_of(random_shots, inst);

  Manifest m("classify", ctx.argv);
  m.input(a.qpu);
  m.input(a.instance);
  std::optional<std::vector<double>> noiseless;
  if (!a.noiseless.empty()) {
    noiseless = ratios_of(io::shots_from_json(io::read_json(a.noiseless)), inst);
    m.input(a.noiseless);
  } else {
    ctx.err << "warning: no noiseless reference; verdict limited to Transition or Random\n";
  }

  const ResampleConfig cfg{a.ns, a.repeats, a.seed, a.replacement};
  std::optional<std::span<const double>> noiseless_view;
  if (noiseless) noiseless_view = std::span<const double>(*noiseless);
  const auto report = classify(qpu, random_pool, noiseless_view, cfg);
  json j = io::to_json(report);
  j["random_pool_size"] = a.random_pool_size;
  io::write_json(a.out, j);
  m.output(a.out);

  if (!a.kde_prefix.empty()) {
    const fs::path rnd = a.kde_prefix + "_random.csv";
    io::write_file(rnd, io::kde_csv(kde_curve(report.random_stats.subsample_means)));
    m.output(rnd);
    if (report.noiseless_stats) {
      const fs::path ideal = a.kde_prefix + "_noiseless.csv";
      io::write_file(ideal, io::kde_csv(kde_curve(report.noiseless_stats->subsample_means)));
      m.output(ideal);
    }
  }
  m.parameters() = {{"random_pool_size", a.random_pool_size},
                    {"ns", a.ns},
                    {"repeats", a.repeats},
                    {"replacement", a.replacement}};
  m.seeds() = {{"resample", a.seed}};
  m.write(manifest_path_for(a.manifest, a.out));

  ctx.out << fmt::format("verdict {}: qpu mean r {:.6f}, random threshold {:.6f}", regime_name(report.verdict),
                         report.qpu_mean_r, report.random_threshold);
  if (report.noiseless_interval) {
    ctx.out << fmt::format(", noiseless interval [{:.6f}, {:.6f}]", report.noiseless_interval->lower,
                           report.noiseless_interval->upper);
  }
  ctx.out << "\n";
}

// bench --------------------------------------------------------------------

struct BenchArgs {
  std::string mode = "strong";
  unsigned nq = 20;
  std::vector<std::uint64_t> shards{1, 2, 4};
  unsigned nq_min = 16;
  unsigned nq_max = 22;
  unsigned base_local = 16;
  unsigned p = 1;
  double delta = 0.2;
  unsigned repeat = 1;
  std::uint64_t seed = 1;
  std::string precision = "fp32";
  std::string out;
  std::string summary;
  std::string manifest;
};

void cmd_bench(const BenchArgs& a, Context& ctx) {
  ScalingConfig cfg;
  if (a.mode == "strong") cfg.mode = ScalingMode::strong;
  else if (a.mode == "size") cfg.mode = ScalingMode::problem_size;
  else throw Error(Errc::invalid_argument, fmt::format("bench mode must be strong or size, got '{}'", a.mode));
  cfg.nq = a.nq;
  cfg.shard_counts = a.shards;
  cfg.nq_min = a.nq_min;
  cfg.nq_max = a.nq_max;
  cfg.base_local = a.base_local;
  cfg.params = {a.p, a.delta, a.delta};
  cfg.instance_seed = a.seed;
  cfg.precision = parse_precision(a.precision);
  cfg.repeats = a.repeat;

  const auto records = scaling_sweep(cfg);
  std::string csv = timing_csv_header();
  for (const auto& r : records) csv += timing_csv_rows(r.timing);
  io::write_file(a.out, csv);
  const fs::path summary_path = a.summary.empty() ? fs::path(a.out + ".summary.csv") : fs::path(a.summary);
  const std::string summary = sweep_summary_csv(records);
  io::write_file(summary_path, summary);
  ctx.out << summary;

  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& t = records[k].timing;
    if (t.amps_exchanged != records[k].predicted_volume) {
      throw Error(Errc::aborted_run, fmt::format("measured exchange {} differs from predicted {}", t.amps_exchanged,
                                                 records[k].predicted_volume));
    }
    if (k > 0 && cfg.mode == ScalingMode::strong && records[k].wall_times[records[k].wall_times.size() / 2] >
                                                        records[k - 1].wall_times[records[k - 1].wall_times.size() / 2]) {
      ctx.err << fmt::format("note: median wall time rose from {} to {} shards\n", records[k - 1].timing.num_shards,
                             t.num_shards);
    }
    if (k > 0 && cfg.mode == ScalingMode::problem_size && t.amps_exchanged < records[k - 1].timing.amps_exchanged) {
      ctx.err << fmt::format("note: exchange volume fell from nq={} to nq={}\n", records[k - 1].timing.nq, t.nq);
    }
  }

  Manifest m("bench", ctx.argv);
  m.parameters() = {{"mode", a.mode},       {"nq", a.nq},       {"shards", a.shards},     {"nq_min", a.nq_min},
                    {"nq_max", a.nq_max},   {"base_local", a.base_local}, {"p", a.p}, {"delta", a.delta},
                    {"repeat", a.repeat},   {"precision", a.precision}};
  m.seeds() = {{"instance", a.seed}};
  m.output(a.out, true);
  m.output(summary_path, true);
  m.write(manifest_path_for(a.manifest, a.out));
}

// fitnoise -----------------------------------------------------------------

struct FitArgs {
  std::vector<std::string> inputs;
  std::string points_csv;
  std::string out;
  std::string manifest;
};

std::vector<NoisePoint> points_from_csv(const std::string& text) {
  std::vector<NoisePoint> pts;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.rfind("epsilon_acc", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(Errc::invalid_argument, fmt::format("points line {}: expected 'epsilon_acc,r_ovl'", lineno));
    }
    try {
      pts.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    } catch (const std::exception&) {
      throw Error(Errc::invalid_argument, fmt::format("points line {}: cannot parse '{}'", lineno, line));
    }
  }
  return pts;
}

void cmd_fitnoise(const FitArgs& a, Context& ctx) {
  Manifest m("fitnoise", ctx.argv);
  std::vector<NoisePoint> pts;
  if (!a.points_csv.empty()) {
    pts = points_from_csv(io::read_file(a.points_csv));
    m.input(a.points_csv);
  }
  for (const auto& path : a.inputs) {
    auto j = io::read_json(path);
    if (j.contains("noisy") && j["noisy"].is_object()) j = j["noisy"];
    const auto run = io::noisy_run_from_json(j);
    if (!run.n_2q) throw Error(Errc::invalid_argument, fmt::format("'{}' lacks n_2q", path));
    if (!run.r_ovl) throw Error(Errc::invalid_argument, fmt::format("'{}' has no r_ovl", path));
    pts.push_back({static_cast<double>(*run.n_2q) * run.epsilon, *run.r_ovl});
    m.input(path);
  }
  if (pts.empty()) throw Error(Errc::invalid_argument, "fitnoise needs noisy-run files or --points");
  const auto fit = fit_k0(pts);
  io::write_json(a.out, io::to_json(fit));
  m.output(a.out);
  m.write(manifest_path_for(a.manifest, a.out));
  ctx.out << fmt::format("k0 {:.9g} over {} points ({} excluded), R^2 {:.6f}\n", fit.k0, fit.points.size(),
                         fit.excluded, fit.r_squared);
}

// hqc ----------------------------------------------------------------------

struct HqcArgs {
  unsigned n = 0;
  unsigned p = 0;
  std::uint64_t shots = 0;
  std::optional<std::uint64_t> n1q;
  std::optional<std::uint64_t> n2q;
  std::optional<std::uint64_t> nm;
  std::string out;
  std::string manifest;
};

void cmd_hqc(const HqcArgs& a, Context& ctx) {
  const auto counts = gate_counts(a.n, a.p);
  const std::uint64_t n1q = a.n1q.value_or(counts.one_qubit);
  const std::uint64_t n2q = a.n2q.value_or(counts.two_qubit);
  const std::uint64_t nm = a.nm.value_or(a.n);
  const double cost = hqc_cost(n1q, n2q, nm, a.shots);
  ctx.out << fmt::format("N_1q={} N_2q={} N_m={} n_s={} HQC={:.6g}\n", n1q, n2q, nm, a.shots, cost);
  if (!a.out.empty()) {
    io::write_json(a.out, {{"n_1q", n1q}, {"n_2q", n2q}, {"n_m", nm}, {"n_s", a.shots}, {"hqc", cost}});
    Manifest m("hqc", ctx.argv);
    m.parameters() = {{"n", a.n}, {"p", a.p}, {"shots", a.shots}};
    m.output(a.out);
    m.write(manifest_path_for(a.manifest, a.out));
  }
}

// replay -------------------------------------------------------------------

void cmd_replay(const std::string& manifest_path, Context& ctx) {
  const auto manifest = io::read_json(manifest_path);
  const auto argv = manifest.at("argv").get<std::vector<std::string>>();
  const auto recorded = manifest.at("outputs");
  std::ostringstream sub_out;
  const int code = run_cli(argv, sub_out, ctx.err);
  if (code != 0) throw Error(Errc::aborted_run, fmt::format("replayed command exited with {}", code));
  std::size_t mismatches = 0;
  std::size_t checked = 0;
  for (const auto& [path, info] : recorded.items()) {
    if (info.value("timing", false)) continue;
    ++checked;
    const auto digest = io::sha256_file(path);
    if (digest != info.at("sha256").get<std::string>()) {
      ++mismatches;
      ctx.err << fmt::format("mismatch: {}\n", path);
    }
  }
  if (mismatches > 0) {
    throw Error(Errc::aborted_run, fmt::format("{} of {} outputs differ from the manifest", mismatches, checked));
  }
  ctx.out << fmt::format("replay reproduced {} output(s)\n", checked);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LR-QAOA state-vector simulation and benchmark verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       fmt::format("lrqaoa {} (C++{}, {})", kVersion, __cplusplus / 100 % 100, __VERSION__));
  int threads = 0;
  app.add_option("--threads", threads, "cap on worker threads (default: LRQAOA_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a weighted complete-graph instance");
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--seed", gen.seed, "instance seed")->required();
  gen_cmd->add_option("--out", gen.out, "instance JSON path")->required();
  gen_cmd->add_option("--max-bruteforce", gen.max_bruteforce, "largest n solved exactly");
  gen_cmd->add_option("--manifest", gen.manifest, "manifest path (default <out>.manifest.json)");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "simulate an LR-QAOA circuit and sample it");
  sim_cmd->add_option("--instance", sim.instance, "instance JSON")->required();
  sim_cmd->add_option("--p", sim.p, "layer count");
  sim_cmd->add_option("--delta", sim.delta, "delta_beta = delta_gamma");
  sim_cmd->add_option("--delta-beta", sim.delta_beta);
  sim_cmd->add_option("--delta-gamma", sim.delta_gamma);
  sim_cmd->add_option("--mode", sim.mode, "noiseless | noisy");
  sim_cmd->add_option("--epsilon", sim.epsilon, "two-qubit depolarizing rate");
  sim_cmd->add_option("--trajectories", sim.trajectories, "noise trajectories (default: one per shot)");
  sim_cmd->add_option("--shards", sim.shards, "power-of-two shard count");
  sim_cmd->add_option("--shots", sim.shots, "number of samples");
  sim_cmd->add_option("--seed", sim.seed, "sampling and noise seed");
  sim_cmd->add_option("--precision", sim.precision, "fp32 | fp64");
  sim_cmd->add_option("--out", sim.out, "results JSON path")->required();
  sim_cmd->add_option("--timing-csv", sim.timing_csv, "timing CSV path (default <out>.timing.csv)");
  sim_cmd->add_option("--dump-state", sim.dump_state, "binary amplitude dump path");
  sim_cmd->add_option("--circuit-out", sim.circuit_out, "circuit text path");
  sim_cmd->add_option("--manifest", sim.manifest);

  ClassifyArgs cls;
  auto* cls_cmd = app.add_subcommand("classify", "classify a sample set against random and noiseless references");
  cls_cmd->add_option("--qpu", cls.qpu, "shots JSON under test")->required();
  cls_cmd->add_option("--instance", cls.instance, "instance JSON with optimal cut")->required();
  cls_cmd->add_option("--random-pool-size", cls.random_pool_size, "uniform reference pool size");
  cls_cmd->add_option("--noiseless", cls.noiseless, "noiseless shots JSON");
  cls_cmd->add_option("--ns", cls.ns, "subsample size");
  cls_cmd->add_option("--repeats", cls.repeats, "subsample repeats");
  cls_cmd->add_option("--seed", cls.seed, "resampling seed");
  cls_cmd->add_flag("--replacement", cls.replacement, "subsample with replacement");
  cls_cmd->add_option("--out", cls.out, "report JSON path")->required();
  cls_cmd->add_option("--kde-prefix", cls.kde_prefix, "write <prefix>_random.csv and <prefix>_noiseless.csv");
  cls_cmd->add_option("--manifest", cls.manifest);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "strong-scaling or problem-size sweep of the sharded engine");
  bench_cmd->add_option("--mode", bench.mode, "strong | size");
  bench_cmd->add_option("--nq", bench.nq, "qubits for strong scaling");
  bench_cmd->add_option("--shards", bench.shards, "shard counts for strong scaling")->delimiter(',');
  bench_cmd->add_option("--nq-min", bench.nq_min);
  bench_cmd->add_option("--nq-max", bench.nq_max);
  bench_cmd->add_option("--base-local", bench.base_local, "local qubits per shard in size sweeps");
  bench_cmd->add_option("--p", bench.p);
  bench_cmd->add_option("--delta", bench.delta);
  bench_cmd->add_option("--repeat", bench.repeat, "runs per configuration");
  bench_cmd->add_option("--seed", bench.seed, "instance seed");
  bench_cmd->add_option("--precision", bench.precision);
  bench_cmd->add_option("--out", bench.out, "per-gate timing CSV")->required();
  bench_cmd->add_option("--summary", bench.summary, "summary CSV (default <out>.summary.csv)");
  bench_cmd->add_option("--manifest", bench.manifest);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fitnoise", "fit k0 in r_ovl = 2^(-k0 eps_acc)");
  fit_cmd->add_option("inputs", fit.inputs, "noisy-run or simulate results JSON files");
  fit_cmd->add_option("--points", fit.points_csv, "CSV of epsilon_acc,r_ovl");
  fit_cmd->add_option("--out", fit.out, "fit JSON path")->required();
  fit_cmd->add_option("--manifest", fit.manifest);

  HqcArgs hqc;
  auto* hqc_cmd = app.add_subcommand("hqc", "Hardware Quantum Credit cost of an LR-QAOA run");
  hqc_cmd->add_option("--n", hqc.n, "qubits")->required();
  hqc_cmd->add_option("--p", hqc.p, "layers")->required();
  hqc_cmd->add_option("--shots", hqc.shots, "shots")->required();
  hqc_cmd->add_option("--n1q", hqc.n1q, "override one-qubit gate count");
  hqc_cmd->add_option("--n2q", hqc.n2q, "override two-qubit gate count");
  hqc_cmd->add_option("--nm", hqc.nm, "override measured qubits");
  hqc_cmd->add_option("--out", hqc.out, "optional JSON output");
  hqc_cmd->add_option("--manifest", hqc.manifest);

  std::string replay_manifest;
  auto* replay_cmd = app.add_subcommand("replay", "re-run a manifest and verify its outputs");
  replay_cmd->add_option("manifest", replay_manifest, "manifest JSON")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Context ctx{args, out, err};
  try {
    if (threads > 0) set_max_threads(threads);
    if (*gen_cmd) cmd_gen(gen, ctx);
    else if (*sim_cmd) cmd_simulate(sim, ctx);
    else if (*cls_cmd) cmd_classify(cls, ctx);
    else if (*bench_cmd) cmd_bench(bench, ctx);
    else if (*fit_cmd) cmd_fitnoise(fit, ctx);
    else if (*hqc_cmd) cmd_hqc(hqc, ctx);
    else if (*replay_cmd) cmd_replay(replay_manifest, ctx);
  } catch (const Error& e) {
    err << fmt::format("error ({}): {}\n", errc_name(e.code()), e.what());
    return exit_code(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << fmt::format("error ({}): {}\n", errc_name(Errc::io), e.what());
    return exit_code(Errc::io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace lrqaoa
