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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrqaoa/problem.hpp"
#include "lrqaoa/statevector.hpp"

namespace lrqaoa {

struct ResampleConfig {
  std::size_t subsample_size = 10;
  std::size_t repeats = 100;
  std::uint64_t rng_seed = 0;
  bool replacement = false;

  void validate(std::size_t pool_size) const;
};

struct MeanOfMeans {
  double grand_mean = 0.0;
  /// Sample standard deviation (n - 1) of the subsample means.
  double sigma = 0.0;
  std::vector<double> subsample_means;
};

/// Repeated size-n_s subsamples of the pool, one mean per repeat. Repeat i
/// draws from its own derived stream, so results do not depend on threading.
MeanOfMeans mean_of_means(std::span<const double> pool, const ResampleConfig& cfg);

/// Grand mean plus three sigmas.
double random_threshold(std::span<const double> pool, const ResampleConfig& cfg);

enum class Regime { random, transition, noise_tolerant };

const char* regime_name(Regime r) noexcept;

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

struct RegimeReport {
  Regime verdict = Regime::random;
  double qpu_mean_r = 0.0;
  std::size_t qpu_count = 0;
  MeanOfMeans random_stats;
  double random_threshold = 0.0;
  std::optional<MeanOfMeans> noiseless_stats;
  std::optional<Interval> noiseless_interval;
  bool noiseless_unavailable = true;
  bool above_ideal = false;
  ResampleConfig config;
};

/// Noise-tolerant if the qpu mean reaches the lower edge of the noiseless
/// +-3 sigma interval; otherwise random if it is at or below the random
/// threshold, else transition. Without a noiseless pool the verdict is limited
/// to random / transition.
RegimeReport classify(std::span<const double> qpu_r_values, std::span<const double> random_pool,
                      std::optional<std::span<const double>> noiseless_pool, const ResampleConfig& cfg);

struct KdePoint {
  double x = 0.0;
  double density = 0.0;
};

inline constexpr std::size_t kKdeGridPoints = 512;

/// Silverman's rule: 0.9 min(sd, IQR/1.34) n^(-1/5).
double silverman_bandwidth(std::span<const double> values);

/// Gaussian KDE on a 512-point grid over [min - 3h, max + 3h].
std::vector<KdePoint> kde_curve(std::span<const double> values, std::optional<double> bandwidth = std::nullopt);

/// i.i.d. uniform bitstrings.
ShotSet uniform_sampler(const WmcInstance& inst, std::uint64_t n_shots, std::uint64_t rng_seed);

}  // namespace lrqaoa
