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

#pragma once

// Sharded state-vector execution.
//
// The 2^nq amplitudes are split over num_shards = 2^(nq - nq_local) workers.
// Shard s holds the contiguous block whose top (nq - nq_local) index bits equal
// s, so qubits below nq_local are local and the rest are global. Workers share
// no amplitude memory: they only trade blocks through mailboxes.
//
// A gate on local qubits runs on each shard independently. A gate touching a
// global qubit g first swaps g with a free local slot qubit: shard s and its
// partner s ^ 2^(g - nq_local) trade the L/2 amplitudes whose slot bit differs
// from their own g bit (one ExchangeStep). The gate then runs locally on the
// slot, and a second ExchangeStep swaps the qubits back. A gate with two global
// qubits does this for each, using two distinct slots.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrqaoa/circuit.hpp"
#include "lrqaoa/statevector.hpp"

namespace lrqaoa {

struct ShardPlan {
  unsigned nq = 0;
  unsigned nq_local = 0;
  std::uint64_t num_shards = 1;
  std::uint64_t shard_len = 1;

  unsigned global_bits() const noexcept { return nq - nq_local; }
  bool is_local(unsigned qubit) const noexcept { return qubit < nq_local; }
};

ShardPlan plan_shards(unsigned nq, unsigned nq_local);
/// Plan with the given power-of-two shard count.
ShardPlan plan_for_shards(unsigned nq, std::uint64_t num_shards);

std::uint64_t partner_shard(const ShardPlan& plan, std::uint64_t shard, unsigned global_qubit);

struct ExchangeStep {
  unsigned global_qubit = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::uint64_t amplitudes_per_shard = 0;
};

ExchangeStep exchange_step(const ShardPlan& plan, unsigned global_qubit);

/// Number of ExchangeSteps a gate triggers: two per global qubit it touches.
unsigned exchange_steps_for(const GateOp& gate, const ShardPlan& plan);

/// Total amplitudes sent between workers over the whole circuit.
std::uint64_t exchange_volume(const CircuitIR& circuit, const ShardPlan& plan);

struct GateTiming {
  std::size_t gate_index = 0;
  GateKind kind = GateKind::h;
  double compute_s = 0.0;
  double exchange_s = 0.0;
  std::uint64_t amps_exchanged = 0;
};

/// Per-gate times are the slowest shard's; totals are sums over gates.
struct TimingRecord {
  unsigned nq = 0;
  unsigned p = 0;
  std::uint64_t num_shards = 1;
  double compute_seconds = 0.0;
  double exchange_seconds = 0.0;
  double wall_seconds = 0.0;
  std::uint64_t amps_exchanged = 0;
  std::vector<GateTiming> gates;
};

struct ShardedOptions {
  MemoryBudget budget;
  /// Threads available to the whole run; split evenly over workers.
  int threads = 0;
  /// Test hook: the worker for shard 0 throws before this gate.
  std::optional<std::size_t> fail_at_gate;
};

struct ShardedResult {
  StateVector state;
  TimingRecord timing;
};

ShardedResult run_circuit_sharded(const CircuitIR& circuit, const ShardPlan& plan,
                                  Precision precision = Precision::fp32, const ShardedOptions& options = {});

/// Timing CSV: nq,p,num_shards,gate_index,kind,compute_s,exchange_s,amps_exchanged
std::string timing_csv_header();
std::string timing_csv_rows(const TimingRecord& record);

enum class ScalingMode { strong, problem_size };

struct ScalingConfig {
  ScalingMode mode = ScalingMode::strong;
  // strong: fixed nq, shard counts listed.
  unsigned nq = 20;
  std::vector<std::uint64_t> shard_counts{1, 2, 4};
  // problem_size: nq in [nq_min, nq_max], shards = 2^(nq - base_local).
  unsigned nq_min = 16;
  unsigned nq_max = 22;
  unsigned base_local = 16;

  LrQaoaParams params{1, 0.2, 0.2};
  std::uint64_t instance_seed = 1;
  Precision precision = Precision::fp32;
  unsigned repeats = 1;
  int threads = 0;
  MemoryBudget budget;
};

struct SweepRecord {
  TimingRecord timing;  // the run with the median wall time
  std::vector<double> wall_times;
  std::uint64_t predicted_volume = 0;
};

std::vector<SweepRecord> scaling_sweep(const ScalingConfig& config);

/// Summary CSV: nq,p,num_shards,repeats,wall_min_s,wall_median_s,wall_max_s,
/// compute_s,exchange_s,amps_exchanged
std::string sweep_summary_csv(const std::vector<SweepRecord>& records);

}  // namespace lrqaoa
