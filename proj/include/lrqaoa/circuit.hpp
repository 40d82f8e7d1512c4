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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lrqaoa/problem.hpp"

namespace lrqaoa {

struct LrQaoaParams {
  unsigned p = 1;
  double delta_beta = 0.0;
  double delta_gamma = 0.0;

  void validate() const;
};

/// Linear ramps: betas fall from delta_beta to delta_beta/p, gammas rise from
/// delta_gamma/p to delta_gamma.
struct Schedule {
  std::vector<double> betas;
  std::vector<double> gammas;
};

enum class GateKind { h, rx, rzz };

const char* gate_name(GateKind kind) noexcept;

/// One gate of the IR.
///
///   H(q)
///   RX(theta, q)       = exp(-i theta/2 X_q)
///   RZZ(theta, q0, q1) = exp(-i theta/2 Z_q0 Z_q1)
///                      = diag(e^{-i theta/2}, e^{+i theta/2}, e^{+i theta/2}, e^{-i theta/2})
struct GateOp {
  GateKind kind = GateKind::h;
  double theta = 0.0;
  unsigned q0 = 0;
  unsigned q1 = 0;

  static GateOp h(unsigned q) { return {GateKind::h, 0.0, q, q}; }
  static GateOp rx(double theta, unsigned q) { return {GateKind::rx, theta, q, q}; }
  static GateOp rzz(double theta, unsigned a, unsigned b) { return {GateKind::rzz, theta, a, b}; }

  bool is_two_qubit() const noexcept { return kind == GateKind::rzz; }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

struct CircuitIR {
  unsigned num_qubits = 0;
  std::vector<GateOp> gates;
  LrQaoaParams params;
  Schedule schedule;
  // Provenance of the instance the circuit was built from.
  std::uint64_t instance_seed = 0;

  /// Throws if any gate index is out of range or an RZZ repeats a qubit.
  void validate() const;
};

Schedule build_schedule(const LrQaoaParams& params);

/// H on every qubit, then per layer k one RZZ(2 gamma_k w_ij) per edge in
/// lexicographic order followed by one RX(-2 beta_k) per qubit. The cost layer
/// is exp(-i gamma_k H_C) and the mixer is exp(+i beta_k sum X).
CircuitIR build_circuit(const WmcInstance& inst, const LrQaoaParams& params);

struct GateCounts {
  std::uint64_t one_qubit = 0;
  std::uint64_t two_qubit = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts gate_counts(unsigned n, unsigned p);

/// Hardware credit estimate:
/// 5 + (N_1q + 10 N_2q + 5 N_m) / 5000 * n_s.
double hqc_cost(std::uint64_t n_1q, std::uint64_t n_2q, std::uint64_t n_m, std::uint64_t n_s);

/// Line format: "H q", "RX theta q", "RZZ theta q1 q2", angles with 17
/// significant digits. A header comment carries qubit count and schedule.
std::string to_text(const CircuitIR& circuit);
CircuitIR parse_circuit_text(std::string_view text);

}  // namespace lrqaoa
