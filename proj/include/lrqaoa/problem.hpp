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
#include <string_view>
#include <vector>

namespace lrqaoa {

/// Assignment of every vertex to one side of a cut. Vertex k maps to bit k of
/// the basis-state index; the text form lists vertex 0 first.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::size_t size) : bits_(size, 0) {}

  static Bitstring from_index(std::uint64_t index, std::size_t size);
  static Bitstring parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t k) const { return bits_[k] != 0; }
  void set(std::size_t k, bool value) { bits_[k] = value ? 1 : 0; }

  /// Basis-state index; requires size() <= 64.
  std::uint64_t to_index() const;
  std::string to_string() const;
  Bitstring complement() const;

  friend bool operator==(const Bitstring&, const Bitstring&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct Edge {
  unsigned i = 0;
  unsigned j = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct OptimalCut {
  Bitstring bitstring;
  double value = 0.0;
};

/// Weighted MaxCut on a complete graph. Edges are stored once per unordered
/// pair with i < j, in lexicographic order.
struct WmcInstance {
  unsigned num_vertices = 0;
  std::vector<Edge> edges;
  std::uint64_t seed = 0;
  std::optional<OptimalCut> optimal_cut;

  /// Builds and validates an instance from an explicit edge list (any order).
  static WmcInstance from_edges(unsigned n, std::vector<Edge> edges, std::uint64_t seed = 0);

  /// Throws Error(invalid_argument) if the complete-graph invariants fail.
  void validate() const;

  double total_weight() const;
  /// Dense symmetric n*n weight matrix, zero diagonal.
  std::vector<double> weight_matrix() const;
  const OptimalCut& require_optimal() const;
};

inline constexpr unsigned kDefaultBruteForceLimit = 24;

WmcInstance generate_instance(unsigned n, std::uint64_t seed);

double cut_value(const WmcInstance& inst, const Bitstring& x);
double cut_value(const WmcInstance& inst, std::uint64_t index);

/// C(z) for every basis index z < 2^n.
std::vector<double> cut_table(const WmcInstance& inst);

/// Exhaustive search. Ties resolve to the lowest basis index.
OptimalCut optimal_cut_bruteforce(const WmcInstance& inst,
                                  unsigned max_vertices = kDefaultBruteForceLimit);

/// Fills inst.optimal_cut by brute force.
void solve_in_place(WmcInstance& inst, unsigned max_vertices = kDefaultBruteForceLimit);

double approximation_ratio(const WmcInstance& inst, std::span<const Bitstring> samples);

/// Expected r of a uniform sampler: each edge is cut with probability 1/2.
double random_baseline_expectation(const WmcInstance& inst);

}  // namespace lrqaoa
