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

#include "lrqaoa/noise.hpp"

#include <cmath>

#include <fmt/format.h>

#include "lrqaoa/error.hpp"
#include "lrqaoa/kernels.hpp"
#include "lrqaoa/parallel.hpp"
#include "lrqaoa/rng.hpp"

namespace lrqaoa {

void DepolarizingConfig::validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(Errc::invalid_argument, fmt::format("depolarizing rate {} is outside [0, 1]", epsilon));
  }
  if (trajectory_count < 1) throw Error(Errc::invalid_argument, "trajectory count must be at least 1");
}

std::uint64_t trajectory_noise_seed(std::uint64_t base, std::uint64_t trajectory) {
  return derive_seed(derive_seed(base, stream::trajectory_noise), trajectory);
}

std::uint64_t trajectory_shot_seed(std::uint64_t base, std::uint64_t trajectory) {
  return derive_seed(derive_seed(base, stream::trajectory_shots), trajectory);
}

namespace {

template <typename Real>
void apply_pauli_kernel(std::span<std::complex<Real>> a, unsigned pauli, unsigned q) {
  switch (pauli) {
    case 1: kernels::apply_x(a, q); break;
    case 2: kernels::apply_y(a, q); break;
    case 3: kernels::apply_z(a, q); break;
    default: break;
  }
}

// One trajectory, single-threaded kernels; parallelism lives across trajectories.
template <typename Real>
void evolve(std::span<std::complex<Real>> a, const CircuitIR& circuit, double epsilon, std::uint64_t noise_seed) {
  Rng rng(noise_seed);
  const double fire = 15.0 * epsilon / 16.0;
  std::fill(a.begin(), a.end(), std::complex<Real>(0));
  a[0] = 1;
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::h: kernels::apply_h(a, g.q0, 1); break;
      case GateKind::rx: kernels::apply_rx(a, g.theta, g.q0, 1); break;
      case GateKind::rzz: {
        kernels::apply_rzz(a, g.theta, g.q0, g.q1, 1);
        // One draw decides whether the error fires, a second picks the Pauli
        // pair; the draw count per gate does not depend on epsilon.
        const double u = rng.uniform01();
        const std::uint64_t which = 1 + rng.below(15);
        if (u < fire) {
          apply_pauli_kernel(a, static_cast<unsigned>(which & 3U), g.q0);
          apply_pauli_kernel(a, static_cast<unsigned>(which >> 2), g.q1);
        }
        break;
      }
    }
  }
}

template <typename F>
void for_each_trajectory(const CircuitIR& circuit, const DepolarizingConfig& cfg, Precision precision,
                         const MemoryBudget& budget, F&& consume) {
  cfg.validate();
  circuit.validate();
  budget.check(circuit.num_qubits, precision, "per-trajectory state vector");
  const auto count = static_cast<std::int64_t>(cfg.trajectory_count);
  const std::uint64_t size = std::uint64_t{1} << circuit.num_qubits;
#pragma omp parallel num_threads(max_threads())
  {
    StateVector::Amplitudes<float> buf32;
    StateVector::Amplitudes<double> buf64;
    if (precision == Precision::fp32) buf32.resize(size);
    else buf64.resize(size);
#pragma omp for schedule(dynamic)
    for (std::int64_t t = 0; t < count; ++t) {
      const auto seed = trajectory_noise_seed(cfg.rng_seed, static_cast<std::uint64_t>(t));
      if (precision == Precision::fp32) {
        evolve(std::span(buf32), circuit, cfg.epsilon, seed);
        consume(static_cast<std::uint64_t>(t), std::span<const std::complex<float>>(buf32));
      } else {
        evolve(std::span(buf64), circuit, cfg.epsilon, seed);
        consume(static_cast<std::uint64_t>(t), std::span<const std::complex<double>>(buf64));
      }
    }
  }
}

template <typename Real>
std::vector<double> probabilities_of(std::span<const std::complex<Real>> a) {
  std::vector<double> p(a.size());
  for (std::size_t z = 0; z < a.size(); ++z) p[z] = std::norm(std::complex<double>(a[z]));
  return p;
}

}  // namespace

StateVector run_trajectory(const CircuitIR& circuit, double epsilon, std::uint64_t noise_seed, Precision precision,
                           const MemoryBudget& budget) {
  DepolarizingConfig{epsilon, 1, 0}.validate();
  circuit.validate();
  auto sv = StateVector::zero(circuit.num_qubits, precision, budget);
  sv.visit([&](auto& a) { evolve(std::span(a), circuit, epsilon, noise_seed); });
  return sv;
}

ShotSet run_noisy_ensemble(const CircuitIR& circuit, const DepolarizingConfig& cfg, std::uint64_t shots_per_trajectory,
                           Precision precision, const MemoryBudget& budget) {
  if (shots_per_trajectory < 1) throw Error(Errc::invalid_argument, "shots per trajectory must be at least 1");
  std::vector<std::vector<std::uint64_t>> per_traj(cfg.trajectory_count);
  for_each_trajectory(circuit, cfg, precision, budget, [&](std::uint64_t t, auto amps) {
    const auto probs = probabilities_of(amps);
    per_traj[t] = sample_indices(probs, shots_per_trajectory, trajectory_shot_seed(cfg.rng_seed, t));
  });
  ShotSet shots;
  shots.num_qubits = circuit.num_qubits;
  shots.rng_seed = cfg.rng_seed;
  shots.source = {ShotOrigin::noisy, cfg.epsilon, cfg.trajectory_count};
  shots.bitstrings.reserve(cfg.trajectory_count * shots_per_trajectory);
  for (const auto& block : per_traj) {
    for (auto z : block) shots.bitstrings.push_back(Bitstring::from_index(z, circuit.num_qubits));
  }
  return shots;
}

std::vector<double> noisy_distribution(const CircuitIR& circuit, const DepolarizingConfig& cfg, Precision precision,
                                       const MemoryBudget& budget) {
  std::vector<std::vector<double>> per_traj(cfg.trajectory_count);
  for_each_trajectory(circuit, cfg, precision, budget,
                      [&](std::uint64_t t, auto amps) { per_traj[t] = probabilities_of(amps); });
  std::vector<double> avg(std::uint64_t{1} << circuit.num_qubits, 0.0);
  for (const auto& p : per_traj) {
    for (std::size_t z = 0; z < avg.size(); ++z) avg[z] += p[z];
  }
  for (auto& v : avg) v /= static_cast<double>(cfg.trajectory_count);
  return avg;
}

NoisyExpectation noisy_expected_r(const CircuitIR& circuit, const WmcInstance& inst, const DepolarizingConfig& cfg,
                                  Precision precision, const MemoryBudget& budget) {
  const double opt = inst.require_optimal().value;
  if (inst.num_vertices != circuit.num_qubits) {
    throw Error(Errc::dimension, "instance and circuit sizes differ");
  }
  const auto cuts = cut_table(inst);
  std::vector<double> r(cfg.trajectory_count);
  for_each_trajectory(circuit, cfg, precision, budget, [&](std::uint64_t t, auto amps) {
    double sum = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) sum += std::norm(std::complex<double>(amps[z])) * cuts[z];
    r[t] = sum / opt;
  });
  double mean = 0.0;
  for (double v : r) mean += v;
  mean /= static_cast<double>(r.size());
  double var = 0.0;
  for (double v : r) var += (v - mean) * (v - mean);
  const double n = static_cast<double>(r.size());
  const double se = r.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0;
  return {mean, se};
}

double r_ovl(double r_qpu, double r_random, double r_ideal) {
  const double denom = r_ideal - r_random;
  if (!(std::abs(denom) > 0.0) || !std::isfinite(denom)) {
    throw Error(Errc::undefined_overlap,
                fmt::format("overlap undefined: ideal ratio {} equals random ratio {}", r_ideal, r_random));
  }
  return (r_qpu - r_random) / denom;
}

NoiseFit fit_k0(std::span<const NoisePoint> points) {
  NoiseFit fit;
  for (const auto& pt : points) {
    if (pt.r_ovl > 0.0 && std::isfinite(pt.r_ovl) && std::isfinite(pt.epsilon_acc)) fit.points.push_back(pt);
    else ++fit.excluded;
  }
  if (fit.points.empty()) {
    throw Error(Errc::fit, fmt::format("no point has positive r_ovl ({} excluded)", fit.excluded));
  }
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& pt : fit.points) {
    const double y = -std::log2(pt.r_ovl);
    sxy += pt.epsilon_acc * y;
    sxx += pt.epsilon_acc * pt.epsilon_acc;
  }
  if (!(sxx > 0.0)) throw Error(Errc::fit, "all fitted points have zero accumulated error");
  fit.k0 = sxy / sxx;

  double ss_res = 0.0;
  double mean_y = 0.0;
  for (const auto& pt : fit.points) mean_y += -std::log2(pt.r_ovl);
  mean_y /= static_cast<double>(fit.points.size());
  double ss_tot = 0.0;
  for (const auto& pt : fit.points) {
    const double y = -std::log2(pt.r_ovl);
    const double res = y - fit.k0 * pt.epsilon_acc;
    fit.residuals.push_back(res);
    ss_res += res * res;
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  fit.residual = std::sqrt(ss_res / static_cast<double>(fit.points.size()));
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
  return fit;
}

double predict_r_ovl(double k0, std::uint64_t n_2q, double epsilon) {
  if (!(k0 > 0.0)) throw Error(Errc::invalid_argument, fmt::format("k0 must be positive, got {}", k0));
  return std::exp2(-k0 * static_cast<double>(n_2q) * epsilon);
}

}  // namespace lrqaoa
