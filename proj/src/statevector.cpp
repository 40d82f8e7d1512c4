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

#include "lrqaoa/statevector.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

#include "lrqaoa/error.hpp"
#include "lrqaoa/kernels.hpp"
#include "lrqaoa/parallel.hpp"
#include "lrqaoa/rng.hpp"

namespace lrqaoa {

namespace {

std::atomic<int> g_thread_cap{0};

int initial_thread_cap() {
  if (const char* env = std::getenv("LRQAOA_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1, omp_get_max_threads());
}

void check_qubit(const StateVector& sv, unsigned q) {
  if (q >= sv.num_qubits()) {
    throw Error(Errc::invalid_argument,
                fmt::format("qubit {} out of range for a {}-qubit state", q, sv.num_qubits()));
  }
}

}  // namespace

int max_threads() noexcept {
  int cap = g_thread_cap.load(std::memory_order_relaxed);
  if (cap == 0) {
    cap = initial_thread_cap();
    g_thread_cap.store(cap, std::memory_order_relaxed);
  }
  return cap;
}

void set_max_threads(int threads) noexcept { g_thread_cap.store(std::max(1, threads), std::memory_order_relaxed); }

const char* precision_name(Precision p) noexcept { return p == Precision::fp32 ? "fp32" : "fp64"; }

Precision parse_precision(const std::string& text) {
  if (text == "fp32" || text == "FP32") return Precision::fp32;
  if (text == "fp64" || text == "FP64") return Precision::fp64;
  throw Error(Errc::invalid_argument, fmt::format("unknown precision '{}'", text));
}

std::uint64_t amplitude_bytes(Precision p) noexcept { return p == Precision::fp32 ? 8 : 16; }

std::uint64_t state_bytes(unsigned num_qubits, Precision p) {
  if (num_qubits > 59) throw Error(Errc::capacity, fmt::format("{} qubits overflow a byte count", num_qubits));
  return amplitude_bytes(p) << num_qubits;
}

std::uint64_t MemoryBudget::default_max_bytes() {
  if (const char* env = std::getenv("LRQAOA_MEMORY_BUDGET")) {
    const unsigned long long n = std::strtoull(env, nullptr, 10);
    if (n > 0) return n;
  }
  return std::uint64_t{4} << 30;
}

void MemoryBudget::check(unsigned num_qubits, Precision p, const char* what) const {
  const std::uint64_t need = state_bytes(num_qubits, p);
  if (need > max_bytes) {
    throw Error(Errc::capacity,
                fmt::format("{} of {} qubits at {} requires {} bytes ({} GiB), budget is {} bytes", what,
                            num_qubits, precision_name(p), need, static_cast<double>(need) / (1ULL << 30),
                            max_bytes));
  }
}

StateVector StateVector::zero(unsigned num_qubits, Precision precision, const MemoryBudget& budget) {
  return basis(num_qubits, 0, precision, budget);
}

StateVector StateVector::basis(unsigned num_qubits, std::uint64_t index, Precision precision,
                               const MemoryBudget& budget) {
  budget.check(num_qubits, precision);
  const std::uint64_t size = std::uint64_t{1} << num_qubits;
  if (index >= size) throw Error(Errc::dimension, fmt::format("basis index {} out of range", index));
  if (precision == Precision::fp32) {
    Amplitudes<float> a(size);
    a[index] = 1.0f;
    return StateVector(num_qubits, std::move(a));
  }
  Amplitudes<double> a(size);
  a[index] = 1.0;
  return StateVector(num_qubits, std::move(a));
}

namespace {

template <typename Real>
unsigned qubits_for(const std::vector<std::complex<Real>>& amps) {
  if (amps.empty() || !std::has_single_bit(amps.size())) {
    throw Error(Errc::dimension, fmt::format("{} amplitudes is not a power of two", amps.size()));
  }
  return static_cast<unsigned>(std::countr_zero(amps.size()));
}

}  // namespace

StateVector StateVector::from_amplitudes(Amplitudes<double> amps) {
  const unsigned n = qubits_for(amps);
  return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(Amplitudes<float> amps) {
  const unsigned n = qubits_for(amps);
  return StateVector(n, std::move(amps));
}

Precision StateVector::precision() const noexcept {
  return std::holds_alternative<Amplitudes<float>>(amps_) ? Precision::fp32 : Precision::fp64;
}

std::complex<double> StateVector::amplitude(std::uint64_t z) const {
  if (z >= size()) throw Error(Errc::dimension, fmt::format("basis index {} out of range", z));
  return visit([z](const auto& a) { return std::complex<double>(a[z]); });
}

std::vector<std::complex<double>> StateVector::amplitudes() const {
  return visit([](const auto& a) { return std::vector<std::complex<double>>(a.begin(), a.end()); });
}

std::vector<double> StateVector::probabilities() const {
  return visit([](const auto& a) {
    std::vector<double> p(a.size());
    for (std::size_t z = 0; z < a.size(); ++z) p[z] = std::norm(std::complex<double>(a[z]));
    return p;
  });
}

double StateVector::norm_squared() const {
  return visit([](const auto& a) {
    double sum = 0.0;
    for (const auto& x : a) sum += std::norm(std::complex<double>(x));
    return sum;
  });
}

StateVector init_plus_state(unsigned num_qubits, Precision precision, const MemoryBudget& budget) {
  budget.check(num_qubits, precision);
  auto sv = StateVector::zero(num_qubits, precision, budget);
  const double amp = std::pow(2.0, -0.5 * num_qubits);
  sv.visit([amp](auto& a) {
    using C = typename std::decay_t<decltype(a)>::value_type;
    std::fill(a.begin(), a.end(), C(amp));
  });
  return sv;
}

void apply_h(StateVector& sv, unsigned q) {
  check_qubit(sv, q);
  sv.visit([&](auto& a) { kernels::apply_h(std::span(a), q, max_threads()); });
}

void apply_rx(StateVector& sv, double theta, unsigned q) {
  check_qubit(sv, q);
  sv.visit([&](auto& a) { kernels::apply_rx(std::span(a), theta, q, max_threads()); });
}

void apply_rzz(StateVector& sv, double theta, unsigned i, unsigned j) {
  check_qubit(sv, i);
  check_qubit(sv, j);
  if (i == j) throw Error(Errc::invalid_argument, fmt::format("RZZ needs two distinct qubits, got {} twice", i));
  sv.visit([&](auto& a) { kernels::apply_rzz(std::span(a), theta, i, j, max_threads()); });
}

void apply_gate(StateVector& sv, const GateOp& gate) {
  switch (gate.kind) {
    case GateKind::h: apply_h(sv, gate.q0); break;
    case GateKind::rx: apply_rx(sv, gate.theta, gate.q0); break;
    case GateKind::rzz: apply_rzz(sv, gate.theta, gate.q0, gate.q1); break;
  }
}

void apply_pauli(StateVector& sv, Pauli pauli, unsigned q) {
  check_qubit(sv, q);
  sv.visit([&](auto& a) {
    switch (pauli) {
      case Pauli::i: break;
      case Pauli::x: kernels::apply_x(std::span(a), q); break;
      case Pauli::y: kernels::apply_y(std::span(a), q); break;
      case Pauli::z: kernels::apply_z(std::span(a), q); break;
    }
  });
}

StateVector run_circuit(const CircuitIR& circuit, Precision precision, const MemoryBudget& budget) {
  circuit.validate();
  auto sv = StateVector::zero(circuit.num_qubits, precision, budget);
  for (const auto& g : circuit.gates) apply_gate(sv, g);
  return sv;
}

double exact_expected_r(std::span<const double> probabilities, std::span<const double> cuts,
                        double optimal_value) {
  if (probabilities.size() != cuts.size()) throw Error(Errc::dimension, "probability and cut tables differ in size");
  double sum = 0.0;
  for (std::size_t z = 0; z < cuts.size(); ++z) sum += probabilities[z] * cuts[z];
  return sum / optimal_value;
}

double exact_expected_r(const StateVector& sv, const WmcInstance& inst) {
  const auto& opt = inst.require_optimal();
  if (sv.num_qubits() != inst.num_vertices) {
    throw Error(Errc::dimension, fmt::format("state has {} qubits, instance has {} vertices", sv.num_qubits(),
                                             inst.num_vertices));
  }
  const auto cuts = cut_table(inst);
  const auto probs = sv.probabilities();
  return exact_expected_r(probs, cuts, opt.value);
}

const char* shot_origin_name(ShotOrigin origin) noexcept {
  switch (origin) {
    case ShotOrigin::noiseless: return "noiseless";
    case ShotOrigin::noisy: return "noisy";
    case ShotOrigin::uniform: return "uniform";
    case ShotOrigin::external: return "external";
  }
  return "external";
}

ShotOrigin parse_shot_origin(const std::string& text) {
  if (text == "noiseless") return ShotOrigin::noiseless;
  if (text == "noisy") return ShotOrigin::noisy;
  if (text == "uniform") return ShotOrigin::uniform;
  if (text == "external") return ShotOrigin::external;
  throw Error(Errc::invalid_argument, fmt::format("unknown shot source '{}'", text));
}

std::vector<double> shot_ratios(const ShotSet& shots, const WmcInstance& inst) {
  const double opt = inst.require_optimal().value;
  std::vector<double> r(shots.size());
  for (std::size_t k = 0; k < shots.size(); ++k) r[k] = cut_value(inst, shots.bitstrings[k]) / opt;
  return r;
}

double mean_ratio(const ShotSet& shots, const WmcInstance& inst) {
  return approximation_ratio(inst, shots.bitstrings);
}

std::vector<std::uint64_t> sample_indices(std::span<const double> probabilities, std::uint64_t n_shots,
                                          std::uint64_t rng_seed) {
  if (n_shots < 1) throw Error(Errc::invalid_argument, "shot count must be at least 1");
  std::vector<double> cdf(probabilities.size());
  double running = 0.0;
  for (std::size_t z = 0; z < probabilities.size(); ++z) {
    running += probabilities[z];
    cdf[z] = running;
  }
  if (!(running > 0.0)) throw Error(Errc::state, "cannot sample from a zero distribution");
  Rng rng(rng_seed);
  std::vector<std::uint64_t> out(n_shots);
  for (auto& z : out) {
    const double u = rng.uniform01() * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
      // u rounded up to the total; take the last outcome with nonzero mass.
      it = std::prev(cdf.end());
      while (it != cdf.begin() && probabilities[it - cdf.begin()] == 0.0) --it;
    }
    z = static_cast<std::uint64_t>(it - cdf.begin());
  }
  return out;
}

ShotSet sample(const StateVector& sv, std::uint64_t n_shots, std::uint64_t rng_seed) {
  const auto probs = sv.probabilities();
  const auto idx = sample_indices(probs, n_shots, rng_seed);
  ShotSet shots;
  shots.num_qubits = sv.num_qubits();
  shots.rng_seed = rng_seed;
  shots.source.origin = ShotOrigin::noiseless;
  shots.bitstrings.reserve(idx.size());
  for (auto z : idx) shots.bitstrings.push_back(Bitstring::from_index(z, sv.num_qubits()));
  return shots;
}

}  // namespace lrqaoa
