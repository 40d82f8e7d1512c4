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

// File formats.
//
//   instance JSON  { "n", "seed", "edges": [[i, j, w], ...],
//                    "optimal": {"bitstring", "value"} | null }
//   shot JSON      { "n", "source", "epsilon", "trajectories", "seed",
//                    "bitstrings": ["0101...", ...] }
//   noisy run JSON { "epsilon", "trajectories", "shots", "mean_r", "r_ovl", ... }
//   state dump     "LRQSV001", u32 qubits, u32 bits per real (32|64), then
//                  interleaved little-endian re/im per amplitude
//
// Bitstrings list vertex 0 first.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrqaoa/noise.hpp"
#include "lrqaoa/problem.hpp"
#include "lrqaoa/sharded.hpp"
#include "lrqaoa/statevector.hpp"
#include "lrqaoa/stats.hpp"

namespace lrqaoa::io {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);
json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& value);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

json to_json(const WmcInstance& inst);
WmcInstance instance_from_json(const json& j);

json to_json(const ShotSet& shots);
/// Accepts a shot-set object or any object with a "shots" member holding one.
ShotSet shots_from_json(const json& j);

struct NoisyRunSummary {
  double epsilon = 0.0;
  std::uint64_t trajectories = 0;
  std::uint64_t shots = 0;
  double mean_r = 0.0;
  std::optional<double> r_ovl;
  // Context needed to place the run on the accumulated-error axis.
  std::optional<std::uint64_t> n_2q;
  std::optional<double> r_ideal;
  std::optional<double> r_random;
};

json to_json(const NoisyRunSummary& run);
NoisyRunSummary noisy_run_from_json(const json& j);

json to_json(const MeanOfMeans& m);
json to_json(const RegimeReport& report);
json to_json(const NoiseFit& fit);

std::string kde_csv(const std::vector<KdePoint>& curve);

std::string state_dump(const StateVector& sv);
StateVector state_from_dump(const std::string& bytes);

}  // namespace lrqaoa::io
