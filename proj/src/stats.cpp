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

#include "lrqaoa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "lrqaoa/error.hpp"
#include "lrqaoa/rng.hpp"

namespace lrqaoa {

void ResampleConfig::validate(std::size_t pool_size) const {
  if (pool_size == 0) throw Error(Errc::invalid_config, "resampling pool is empty");
  if (subsample_size < 1) throw Error(Errc::invalid_config, "subsample size must be at least 1");
  if (repeats < 2) throw Error(Errc::invalid_config, "need at least 2 repeats to estimate a spread");
  if (!replacement && pool_size < subsample_size) {
    throw Error(Errc::invalid_config, fmt::format("pool of {} cannot give {} draws without replacement", pool_size,
                                                  subsample_size));
  }
}

MeanOfMeans mean_of_means(std::span<const double> pool, const ResampleConfig& cfg) {
  cfg.validate(pool.size());
  MeanOfMeans out;
  out.subsample_means.resize(cfg.repeats);
  const std::uint64_t base = derive_seed(cfg.rng_seed, stream::resample);
  std::vector<std::size_t> idx;
  for (std::size_t r = 0; r < cfg.repeats; ++r) {
    Rng rng(derive_seed(base, r));
    double sum = 0.0;
    if (cfg.replacement) {
      for (std::size_t k = 0; k < cfg.subsample_size; ++k) sum += pool[rng.below(pool.size())];
    } else {
      // Partial Fisher-Yates over a fresh index permutation.
      idx.resize(pool.size());
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      for (std::size_t k = 0; k < cfg.subsample_size; ++k) {
        const std::size_t pick = k + rng.below(pool.size() - k);
        std::swap(idx[k], idx[pick]);
        sum += pool[idx[k]];
      }
    }
    out.subsample_means[r] = sum / static_cast<double>(cfg.subsample_size);
  }
  const double n = static_cast<double>(cfg.repeats);
  out.grand_mean = std::accumulate(out.subsample_means.begin(), out.subsample_means.end(), 0.0) / n;
  double ss = 0.0;
  for (double m : out.subsample_means) ss += (m - out.grand_mean) * (m - out.grand_mean);
  out.sigma = std::sqrt(ss / (n - 1.0));
  return out;
}

double random_threshold(std::span<const double> pool, const ResampleConfig& cfg) {
  const auto mom = mean_of_means(pool, cfg);
  return mom.grand_mean + 3.0 * mom.sigma;
}

const char* regime_name(Regime r) noexcept {
  switch (r) {
    case Regime::random: return "Random";
    case Regime::transition: return "Transition";
    case Regime::noise_tolerant: return "NoiseTolerant";
  }
  return "Random";
}

RegimeReport classify(std::span<const double> qpu_r_values, std::span<const double> random_pool,
                      std::optional<std::span<const double>> noiseless_pool, const ResampleConfig& cfg) {
  if (qpu_r_values.empty()) throw Error(Errc::invalid_argument, "no QPU values to classify");
  RegimeReport rep;
  rep.config = cfg;
  rep.qpu_count = qpu_r_values.size();
  rep.qpu_mean_r = std::accumulate(qpu_r_values.begin(), qpu_r_values.end(), 0.0) /
                   static_cast<double>(qpu_r_values.size());
  rep.random_stats = mean_of_means(random_pool, cfg);
  rep.random_threshold = rep.random_stats.grand_mean + 3.0 * rep.random_stats.sigma;

  if (noiseless_pool) {
    ResampleConfig ideal_cfg = cfg;
    ideal_cfg.rng_seed = derive_seed(cfg.rng_seed, 1);
    rep.noiseless_stats = mean_of_means(*noiseless_pool, ideal_cfg);
    rep.noiseless_interval = Interval{rep.noiseless_stats->grand_mean - 3.0 * rep.noiseless_stats->sigma,
                                      rep.noiseless_stats->grand_mean + 3.0 * rep.noiseless_stats->sigma};
    rep.noiseless_unavailable = false;
  }

  if (rep.noiseless_interval && rep.qpu_mean_r >= rep.noiseless_interval->lower) {
    rep.verdict = Regime::noise_tolerant;
    rep.above_ideal = rep.qpu_mean_r > rep.noiseless_interval->upper;
  } else if (rep.qpu_mean_r <= rep.random_threshold) {
    rep.verdict = Regime::random;
  } else {
    rep.verdict = Regime::transition;
  }
  return rep;
}

namespace {

double quantile_sorted(const std::vector<double>& v, double q) {
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

}  // namespace

double silverman_bandwidth(std::span<const double> values) {
  if (values.size() < 2) throw Error(Errc::invalid_argument, "bandwidth needs at least 2 values");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  double spread = std::min(sd, iqr / 1.34);
  // Degenerate spreads fall back as in R's bw.nrd0.
  if (!(spread > 0.0)) spread = sd;
  if (!(spread > 0.0)) spread = std::abs(sorted.front());
  if (!(spread > 0.0)) spread = 1.0;
  return 0.9 * spread * std::pow(n, -0.2);
}

std::vector<KdePoint> kde_curve(std::span<const double> values, std::optional<double> bandwidth) {
  if (values.size() < 2) throw Error(Errc::invalid_argument, "KDE needs at least 2 values");
  const double h = bandwidth ? *bandwidth : silverman_bandwidth(values);
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(Errc::invalid_argument, fmt::format("bad KDE bandwidth {}", h));
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it - 3.0 * h;
  const double hi = *hi_it + 3.0 * h;
  const double step = (hi - lo) / static_cast<double>(kKdeGridPoints - 1);
  const double norm = 1.0 / (static_cast<double>(values.size()) * h * std::sqrt(2.0 * std::numbers::pi));
  std::vector<KdePoint> out(kKdeGridPoints);
  for (std::size_t k = 0; k < kKdeGridPoints; ++k) {
    const double x = lo + step * static_cast<double>(k);
    double sum = 0.0;
    for (double v : values) {
      const double u = (x - v) / h;
      sum += std::exp(-0.5 * u * u);
    }
    out[k] = {x, sum * norm};
  }
  return out;
}

ShotSet uniform_sampler(const WmcInstance& inst, std::uint64_t n_shots, std::uint64_t rng_seed) {
  if (n_shots < 1) throw Error(Errc::invalid_argument, "shot count must be at least 1");
  const unsigned n = inst.num_vertices;
  Rng rng(rng_seed);
  ShotSet shots;
  shots.num_qubits = n;
  shots.rng_seed = rng_seed;
  shots.source.origin = ShotOrigin::uniform;
  shots.bitstrings.reserve(n_shots);
  for (std::uint64_t s = 0; s < n_shots; ++s) {
    Bitstring b(n);
    std::uint64_t word = 0;
    for (unsigned k = 0; k < n; ++k) {
      if (k % 64 == 0) word = rng.next();
      b.set(k, (word >> (k % 64)) & 1U);
    }
    shots.bitstrings.push_back(std::move(b));
  }
  return shots;
}

}  // namespace lrqaoa
