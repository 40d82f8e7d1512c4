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

#include "lrqaoa/sharded.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <bit>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "lrqaoa/error.hpp"
#include "lrqaoa/kernels.hpp"
#include "lrqaoa/parallel.hpp"

namespace lrqaoa {

ShardPlan plan_shards(unsigned nq, unsigned nq_local) {
  if (nq_local < 1 || nq_local > nq) {
    throw Error(Errc::invalid_argument,
                fmt::format("local qubit count {} must lie in [1, {}]", nq_local, nq));
  }
  if (nq - nq_local > 62 || nq_local > 62) {
    throw Error(Errc::capacity, fmt::format("plan ({}, {}) overflows 64-bit shard arithmetic", nq, nq_local));
  }
  return {nq, nq_local, std::uint64_t{1} << (nq - nq_local), std::uint64_t{1} << nq_local};
}

ShardPlan plan_for_shards(unsigned nq, std::uint64_t num_shards) {
  if (num_shards == 0 || !std::has_single_bit(num_shards)) {
    throw Error(Errc::invalid_argument, fmt::format("shard count {} is not a power of two", num_shards));
  }
  const unsigned global = static_cast<unsigned>(std::countr_zero(num_shards));
  if (global >= nq) {
    throw Error(Errc::invalid_argument, fmt::format("{} shards leave no local qubits out of {}", num_shards, nq));
  }
  return plan_shards(nq, nq - global);
}

std::uint64_t partner_shard(const ShardPlan& plan, std::uint64_t shard, unsigned global_qubit) {
  if (global_qubit < plan.nq_local || global_qubit >= plan.nq) {
    throw Error(Errc::invalid_argument, fmt::format("qubit {} is not global in plan ({}, {})", global_qubit,
                                                    plan.nq, plan.nq_local));
  }
  return shard ^ (std::uint64_t{1} << (global_qubit - plan.nq_local));
}

ExchangeStep exchange_step(const ShardPlan& plan, unsigned global_qubit) {
  ExchangeStep step;
  step.global_qubit = global_qubit;
  step.amplitudes_per_shard = plan.shard_len / 2;
  for (std::uint64_t s = 0; s < plan.num_shards; ++s) {
    const std::uint64_t t = partner_shard(plan, s, global_qubit);
    if (s < t) step.pairs.emplace_back(s, t);
  }
  return step;
}

namespace {

// Distinct global qubits of a gate, in operand order.
std::vector<unsigned> global_qubits(const GateOp& gate, const ShardPlan& plan) {
  std::vector<unsigned> out;
  if (!plan.is_local(gate.q0)) out.push_back(gate.q0);
  if (gate.is_two_qubit() && !plan.is_local(gate.q1)) out.push_back(gate.q1);
  return out;
}

}  // namespace

unsigned exchange_steps_for(const GateOp& gate, const ShardPlan& plan) {
  if (plan.num_shards == 1) return 0;
  return 2 * static_cast<unsigned>(global_qubits(gate, plan).size());
}

std::uint64_t exchange_volume(const CircuitIR& circuit, const ShardPlan& plan) {
  if (circuit.num_qubits != plan.nq) {
    throw Error(Errc::dimension, fmt::format("circuit has {} qubits, plan has {}", circuit.num_qubits, plan.nq));
  }
  std::uint64_t steps = 0;
  for (const auto& g : circuit.gates) steps += exchange_steps_for(g, plan);
  return steps * plan.num_shards * (plan.shard_len / 2);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct RunAborted {};

template <typename Block>
class Mailbox {
 public:
  void send(std::uint64_t from, Block block) {
    {
      std::lock_guard lock(mutex_);
      queue_.emplace_back(from, std::move(block));
    }
    ready_.notify_all();
  }

  Block receive(std::uint64_t from) {
    std::unique_lock lock(mutex_);
    for (;;) {
      if (closed_) throw RunAborted{};
      auto it = std::find_if(queue_.begin(), queue_.end(), [from](const auto& m) { return m.first == from; });
      if (it != queue_.end()) {
        Block block = std::move(it->second);
        queue_.erase(it);
        return block;
      }
      ready_.wait(lock);
    }
  }

  void close() {
    {
      std::lock_guard lock(mutex_);
      closed_ = true;
    }
    ready_.notify_all();
  }

 private:
  std::mutex mutex_;
  std::condition_variable ready_;
  std::deque<std::pair<std::uint64_t, Block>> queue_;
  bool closed_ = false;
};

struct WorkerGateStats {
  double compute_s = 0.0;
  double exchange_s = 0.0;
  std::uint64_t sent = 0;
};

template <typename Real>
class ShardedRun {
 public:
  using Amp = std::complex<Real>;
  using Block = std::vector<Amp>;

  ShardedRun(const CircuitIR& circuit, const ShardPlan& plan, const ShardedOptions& options)
      : circuit_(circuit),
        plan_(plan),
        options_(options),
        shards_(plan.num_shards),
        stats_(circuit.gates.size() * plan.num_shards),
        barrier_(static_cast<std::ptrdiff_t>(plan.num_shards)) {
    mailboxes_.reserve(plan.num_shards);
    for (std::uint64_t s = 0; s < plan.num_shards; ++s) mailboxes_.push_back(std::make_unique<Mailbox<Block>>());
    const int total = options.threads > 0 ? options.threads : max_threads();
    worker_threads_ = std::max<int>(1, total / static_cast<int>(std::min<std::uint64_t>(plan.num_shards, 1 << 20)));
  }

  ShardedResult run() {
    const auto t0 = Clock::now();
    {
      std::vector<std::jthread> workers;
      workers.reserve(plan_.num_shards);
      for (std::uint64_t s = 0; s < plan_.num_shards; ++s) workers.emplace_back([this, s] { work(s); });
    }
    if (error_) std::rethrow_exception(error_);

    Block full;
    if (plan_.num_shards == 1) {
      full = std::move(shards_[0]);
    } else {
      full.reserve(plan_.shard_len * plan_.num_shards);
      for (auto& shard : shards_) {
        full.insert(full.end(), shard.begin(), shard.end());
        Block().swap(shard);
      }
    }
    TimingRecord timing = collect_timing();
    timing.wall_seconds = seconds_since(t0);
    return {StateVector::from_amplitudes(std::move(full)), std::move(timing)};
  }

 private:
  void work(std::uint64_t s) {
    try {
      Block& local = shards_[s];
      local.assign(plan_.shard_len, Amp(0));
      if (s == 0) local[0] = Amp(1);
      for (std::size_t k = 0; k < circuit_.gates.size(); ++k) {
        if (options_.fail_at_gate && *options_.fail_at_gate == k && s == 0) {
          throw Error(Errc::aborted_run, fmt::format("injected failure on shard 0 at gate {}", k));
        }
        apply(s, k, local);
        barrier_.arrive_and_wait();
        if (aborted_.load()) {
          barrier_.arrive_and_drop();
          return;
        }
      }
    } catch (const RunAborted&) {
      barrier_.arrive_and_drop();
    } catch (...) {
      abort(std::current_exception());
      barrier_.arrive_and_drop();
    }
  }

  void abort(std::exception_ptr e) {
    {
      std::lock_guard lock(error_mutex_);
      if (!error_) error_ = e;
    }
    aborted_.store(true);
    for (auto& m : mailboxes_) m->close();
  }

  void apply(std::uint64_t s, std::size_t k, Block& local) {
    const GateOp& gate = circuit_.gates[k];
    WorkerGateStats& st = stats_[k * plan_.num_shards + s];
    const auto globals = global_qubits(gate, plan_);

    // Pick the highest free local qubits as slots for the global operands.
    std::vector<std::pair<unsigned, unsigned>> swaps;  // (global, slot)
    unsigned candidate = plan_.nq_local;
    for (unsigned g : globals) {
      do {
        if (candidate == 0) {
          throw Error(Errc::invalid_config, fmt::format("no free local slot for gate {} with {} local qubits", k,
                                                        plan_.nq_local));
        }
        --candidate;
      } while ((plan_.is_local(gate.q0) && candidate == gate.q0) ||
               (gate.is_two_qubit() && plan_.is_local(gate.q1) && candidate == gate.q1));
      swaps.emplace_back(g, candidate);
    }

    for (const auto& [g, slot] : swaps) swap_with_partner(s, g, slot, st);

    auto remap = [&](unsigned q) {
      for (const auto& [g, slot] : swaps) {
        if (q == g) return slot;
      }
      return q;
    };
    const auto t0 = Clock::now();
    const std::span<Amp> view(local);
    switch (gate.kind) {
      case GateKind::h: kernels::apply_h(view, remap(gate.q0), worker_threads_); break;
      case GateKind::rx: kernels::apply_rx(view, gate.theta, remap(gate.q0), worker_threads_); break;
      case GateKind::rzz:
        kernels::apply_rzz(view, gate.theta, remap(gate.q0), remap(gate.q1), worker_threads_);
        break;
    }
    st.compute_s += seconds_since(t0);

    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) swap_with_partner(s, it->first, it->second, st);
  }

  // One ExchangeStep: trade the half whose slot bit differs from this shard's
  // bit for global qubit g, which swaps qubits g and slot.
  void swap_with_partner(std::uint64_t s, unsigned g, unsigned slot, WorkerGateStats& st) {
    const auto t0 = Clock::now();
    Block& local = shards_[s];
    const unsigned shift = g - plan_.nq_local;
    const std::uint64_t own_bit = (s >> shift) & 1U;
    const std::uint64_t partner = s ^ (std::uint64_t{1} << shift);
    const std::uint64_t half = plan_.shard_len / 2;
    const std::uint64_t flip = (own_bit ^ 1U) << slot;

    Block out(half);
    for (std::uint64_t k = 0; k < half; ++k) out[k] = local[kernels::insert_zero(k, slot) | flip];
    mailboxes_[partner]->send(s, std::move(out));
    st.sent += half;

    Block in = mailboxes_[s]->receive(partner);
    for (std::uint64_t k = 0; k < half; ++k) local[kernels::insert_zero(k, slot) | flip] = in[k];
    st.exchange_s += seconds_since(t0);
  }

  TimingRecord collect_timing() const {
    TimingRecord rec;
    rec.nq = plan_.nq;
    rec.p = circuit_.params.p;
    rec.num_shards = plan_.num_shards;
    rec.gates.reserve(circuit_.gates.size());
    for (std::size_t k = 0; k < circuit_.gates.size(); ++k) {
      GateTiming gt;
      gt.gate_index = k;
      gt.kind = circuit_.gates[k].kind;
      for (std::uint64_t s = 0; s < plan_.num_shards; ++s) {
        const auto& st = stats_[k * plan_.num_shards + s];
        gt.compute_s = std::max(gt.compute_s, st.compute_s);
        gt.exchange_s = std::max(gt.exchange_s, st.exchange_s);
        gt.amps_exchanged += st.sent;
      }
      rec.compute_seconds += gt.compute_s;
      rec.exchange_seconds += gt.exchange_s;
      rec.amps_exchanged += gt.amps_exchanged;
      rec.gates.push_back(gt);
    }
    return rec;
  }

  const CircuitIR& circuit_;
  const ShardPlan& plan_;
  const ShardedOptions& options_;
  std::vector<Block> shards_;
  std::vector<std::unique_ptr<Mailbox<Block>>> mailboxes_;
  std::vector<WorkerGateStats> stats_;
  std::barrier<> barrier_;
  std::atomic<bool> aborted_{false};
  std::mutex error_mutex_;
  std::exception_ptr error_;
  int worker_threads_ = 1;
};

}  // namespace

ShardedResult run_circuit_sharded(const CircuitIR& circuit, const ShardPlan& plan, Precision precision,
                                  const ShardedOptions& options) {
  circuit.validate();
  if (circuit.num_qubits != plan.nq) {
    throw Error(Errc::dimension, fmt::format("circuit has {} qubits, plan has {}", circuit.num_qubits, plan.nq));
  }
  if (plan.num_shards > 1 && plan.nq_local < 2) {
    throw Error(Errc::invalid_config, "sharded runs need at least 2 local qubits per shard");
  }
  options.budget.check(plan.nq, precision);
  if (precision == Precision::fp32) return ShardedRun<float>(circuit, plan, options).run();
  return ShardedRun<double>(circuit, plan, options).run();
}

std::string timing_csv_header() { return "nq,p,num_shards,gate_index,kind,compute_s,exchange_s,amps_exchanged\n"; }

std::string timing_csv_rows(const TimingRecord& record) {
  std::string out;
  for (const auto& g : record.gates) {
    out += fmt::format("{},{},{},{},{},{:.9e},{:.9e},{}\n", record.nq, record.p, record.num_shards, g.gate_index,
                       gate_name(g.kind), g.compute_s, g.exchange_s, g.amps_exchanged);
  }
  return out;
}

std::vector<SweepRecord> scaling_sweep(const ScalingConfig& config) {
  config.params.validate();
  if (config.repeats < 1) throw Error(Errc::invalid_config, "repeat count must be at least 1");

  std::vector<ShardPlan> plans;
  if (config.mode == ScalingMode::strong) {
    if (config.shard_counts.empty()) throw Error(Errc::invalid_config, "strong scaling needs shard counts");
    for (auto n : config.shard_counts) plans.push_back(plan_for_shards(config.nq, n));
  } else {
    if (config.nq_min > config.nq_max || config.nq_min < config.base_local) {
      throw Error(Errc::invalid_config,
                  fmt::format("problem-size sweep needs base_local <= nq_min <= nq_max, got {} <= {} <= {}",
                              config.base_local, config.nq_min, config.nq_max));
    }
    for (unsigned nq = config.nq_min; nq <= config.nq_max; ++nq) plans.push_back(plan_shards(nq, config.base_local));
  }
  for (const auto& plan : plans) config.budget.check(plan.nq, config.precision);

  std::vector<SweepRecord> out;
  for (const auto& plan : plans) {
    const auto inst = generate_instance(plan.nq, config.instance_seed);
    const auto circuit = build_circuit(inst, config.params);
    ShardedOptions opts;
    opts.budget = config.budget;
    opts.threads = config.threads;
    std::vector<TimingRecord> runs;
    for (unsigned r = 0; r < config.repeats; ++r) {
      runs.push_back(run_circuit_sharded(circuit, plan, config.precision, opts).timing);
    }
    std::vector<std::size_t> order(runs.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return runs[a].wall_seconds < runs[b].wall_seconds; });
    SweepRecord rec;
    for (auto k : order) rec.wall_times.push_back(runs[k].wall_seconds);
    rec.timing = std::move(runs[order[order.size() / 2]]);
    rec.predicted_volume = exchange_volume(circuit, plan);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string sweep_summary_csv(const std::vector<SweepRecord>& records) {
  std::string out =
      "nq,p,num_shards,repeats,wall_min_s,wall_median_s,wall_max_s,compute_s,exchange_s,amps_exchanged\n";
  for (const auto& r : records) {
    const auto& w = r.wall_times;
    out += fmt::format("{},{},{},{},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{}\n", r.timing.nq, r.timing.p,
                       r.timing.num_shards, w.size(), w.front(), w[w.size() / 2], w.back(), r.timing.compute_seconds,
                       r.timing.exchange_seconds, r.timing.amps_exchanged);
  }
  return out;
}

}  // namespace lrqaoa
