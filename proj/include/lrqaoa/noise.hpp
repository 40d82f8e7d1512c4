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
#include <span>
#include <vector>

#include "lrqaoa/circuit.hpp"
#include "lrqaoa/statevector.hpp"

namespace lrqaoa {

/// Two-qubit depolarizing noise. After every RZZ the pair goes through
/// rho -> (1 - epsilon) rho + epsilon I/4, sampled per trajectory as a
/// uniformly random non-identity Pauli pair with probability 15 epsilon / 16.
struct DepolarizingConfig {
  double epsilon = 0.0;
  std::size_t trajectory_count = 1;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// Seeds of trajectory t: independent noise and shot streams.
std::uint64_t trajectory_noise_seed(std::uint64_t base, std::uint64_t trajectory);
std::uint64_t trajectory_shot_seed(std::uint64_t base, std::uint64_t trajectory);

/// Final state of one trajectory.
StateVector run_trajectory(const CircuitIR& circuit, double epsilon, std::uint64_t noise_seed,
                           Precision precision = Precision::fp64, const MemoryBudget& budget = {});

/// Shots from every trajectory, pooled in trajectory order.
ShotSet run_noisy_ensemble(const CircuitIR& circuit, const DepolarizingConfig& cfg, std::uint64_t shots_per_trajectory,
                           Precision precision = Precision::fp32, const MemoryBudget& budget = {});

/// Outcome distribution averaged over trajectories (no shot noise).
std::vector<double> noisy_distribution(const CircuitIR& circuit, const DepolarizingConfig& cfg,
                                       Precision precision = Precision::fp64, const MemoryBudget& budget = {});

struct NoisyExpectation {
  double mean_r = 0.0;
  /// Standard error of mean_r across trajectories.
  double std_error = 0.0;
};

/// Trajectory average of the exact expected r.
NoisyExpectation noisy_expected_r(const CircuitIR& circuit, const WmcInstance& inst, const DepolarizingConfig& cfg,
                                  Precision precision = Precision::fp32, const MemoryBudget& budget = {});

/// (r_qpu - r_random) / (r_ideal - r_random).
double r_ovl(double r_qpu, double r_random, double r_ideal);

struct NoisePoint {
  double epsilon_acc = 0.0;
  double r_ovl = 0.0;
};

struct NoiseFit {
  double k0 = 0.0;
  /// Root-mean-square residual of -log2(r_ovl) against k0 * epsilon_acc.
  double residual = 0.0;
  double r_squared = 1.0;
  std::vector<NoisePoint> points;  // points used in the fit
  std::vector<double> residuals;   // per used point
  std::size_t excluded = 0;        // points with r_ovl <= 0
};

/// Least squares of -log2(r_ovl) = k0 * epsilon_acc through the origin.
NoiseFit fit_k0(std::span<const NoisePoint> points);

/// 2^(-k0 * n_2q * epsilon).
double predict_r_ovl(double k0, std::uint64_t n_2q, double epsilon);

}  // namespace lrqaoa
