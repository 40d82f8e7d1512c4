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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lrqaoa/circuit.hpp"
#include "lrqaoa/problem.hpp"

namespace lrqaoa {

enum class Precision { fp32, fp64 };

const char* precision_name(Precision p) noexcept;
Precision parse_precision(const std::string& text);

/// Bytes per amplitude: 8 for FP32, 16 for FP64.
std::uint64_t amplitude_bytes(Precision p) noexcept;
/// 2^(n+3) bytes for FP32, 2^(n+4) for FP64.
std::uint64_t state_bytes(unsigned num_qubits, Precision p);

struct MemoryBudget {
  std::uint64_t max_bytes = default_max_bytes();

  /// LRQAOA_MEMORY_BUDGET (bytes) if set, else 4 GiB.
  static std::uint64_t default_max_bytes();
  /// Throws Error(capacity) naming the required bytes.
  void check(unsigned num_qubits, Precision p, const char* what = "state vector") const;
};

/// Dense 2^n amplitude vector. Basis index z holds qubit k in bit k.
class StateVector {
 public:
  template <typename Real>
  using Amplitudes = std::vector<std::complex<Real>>;

  static StateVector zero(unsigned num_qubits, Precision precision, const MemoryBudget& budget = {});
  static StateVector basis(unsigned num_qubits, std::uint64_t index, Precision precision,
                           const MemoryBudget& budget = {});
  static StateVector from_amplitudes(Amplitudes<double> amps);
  static StateVector from_amplitudes(Amplitudes<float> amps);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  Precision precision() const noexcept;
  std::uint64_t size() const noexcept { return std::uint64_t{1} << num_qubits_; }

  std::complex<double> amplitude(std::uint64_t z) const;
  std::vector<std::complex<double>> amplitudes() const;
  std::vector<double> probabilities() const;
  double norm_squared() const;

  template <typename F>
  decltype(auto) visit(F&& f) {
    return std::visit(std::forward<F>(f), amps_);
  }
  template <typename F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), amps_);
  }

 private:
  StateVector(unsigned n, std::variant<Amplitudes<float>, Amplitudes<double>> amps)
      : num_qubits_(n), amps_(std::move(amps)) {}

  unsigned num_qubits_ = 0;
  std::variant<Amplitudes<float>, Amplitudes<double>> amps_;
};

/// |+>^n directly, without running the H layer.
StateVector init_plus_state(unsigned num_qubits, Precision precision, const MemoryBudget& budget = {});

void apply_h(StateVector& sv, unsigned q);
void apply_rx(StateVector& sv, double theta, unsigned q);
void apply_rzz(StateVector& sv, double theta, unsigned i, unsigned j);
void apply_gate(StateVector& sv, const GateOp& gate);

enum class Pauli : std::uint8_t { i = 0, x = 1, y = 2, z = 3 };
void apply_pauli(StateVector& sv, Pauli pauli, unsigned q);

/// Runs the IR from |0...0>.
StateVector run_circuit(const CircuitIR& circuit, Precision precision = Precision::fp32,
                        const MemoryBudget& budget = {});

/// sum_z |a_z|^2 C(z) / C(x*).
double exact_expected_r(const StateVector& sv, const WmcInstance& inst);
double exact_expected_r(std::span<const double> probabilities, std::span<const double> cuts,
                        double optimal_value);

enum class ShotOrigin { noiseless, noisy, uniform, external };

const char* shot_origin_name(ShotOrigin origin) noexcept;
ShotOrigin parse_shot_origin(const std::string& text);

struct ShotSource {
  ShotOrigin origin = ShotOrigin::external;
  std::optional<double> epsilon;
  // Trajectories 0..trajectories-1 contributed, in order.
  std::uint64_t trajectories = 0;
};

struct ShotSet {
  unsigned num_qubits = 0;
  std::vector<Bitstring> bitstrings;
  std::uint64_t rng_seed = 0;
  ShotSource source;

  std::size_t size() const noexcept { return bitstrings.size(); }
};

/// Per-shot approximation ratios C(x)/C(x*).
std::vector<double> shot_ratios(const ShotSet& shots, const WmcInstance& inst);
double mean_ratio(const ShotSet& shots, const WmcInstance& inst);

/// Inverse-CDF draws over the cumulative distribution of |a_z|^2.
ShotSet sample(const StateVector& sv, std::uint64_t n_shots, std::uint64_t rng_seed);
std::vector<std::uint64_t> sample_indices(std::span<const double> probabilities, std::uint64_t n_shots,
                                          std::uint64_t rng_seed);

}  // namespace lrqaoa
