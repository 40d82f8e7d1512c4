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

#include "lrqaoa/problem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "lrqaoa/error.hpp"
#include "lrqaoa/rng.hpp"

namespace lrqaoa {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_size: return "invalid-size";
    case Errc::dimension: return "dimension";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_config: return "invalid-config";
    case Errc::state: return "state";
    case Errc::capacity: return "capacity";
    case Errc::undefined_overlap: return "undefined-overlap";
    case Errc::fit: return "fit";
    case Errc::aborted_run: return "aborted-run";
    case Errc::io: return "io";
  }
  return "unknown";
}

Bitstring Bitstring::from_index(std::uint64_t index, std::size_t size) {
  if (size < 64 && (index >> size) != 0) {
    throw Error(Errc::dimension, fmt::format("index {} does not fit in {} bits", index, size));
  }
  Bitstring b(size);
  for (std::size_t k = 0; k < size && k < 64; ++k) b.bits_[k] = (index >> k) & 1U;
  return b;
}

Bitstring Bitstring::parse(std::string_view text) {
  Bitstring b(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != '0' && text[k] != '1') {
      throw Error(Errc::invalid_argument, fmt::format("bitstring '{}' contains a non-binary character", text));
    }
    b.bits_[k] = text[k] == '1' ? 1 : 0;
  }
  return b;
}

std::uint64_t Bitstring::to_index() const {
  if (bits_.size() > 64) {
    throw Error(Errc::dimension, fmt::format("{}-bit string has no 64-bit index", bits_.size()));
  }
  std::uint64_t z = 0;
  for (std::size_t k = 0; k < bits_.size(); ++k) z |= std::uint64_t{bits_[k]} << k;
  return z;
}

std::string Bitstring::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t k = 0; k < bits_.size(); ++k) s[k] = bits_[k] ? '1' : '0';
  return s;
}

Bitstring Bitstring::complement() const {
  Bitstring c = *this;
  for (auto& bit : c.bits_) bit ^= 1U;
  return c;
}

WmcInstance WmcInstance::from_edges(unsigned n, std::vector<Edge> edges, std::uint64_t seed) {
  for (auto& e : edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  WmcInstance inst{n, std::move(edges), seed, std::nullopt};
  inst.validate();
  return inst;
}

void WmcInstance::validate() const {
  if (num_vertices < 2) {
    throw Error(Errc::invalid_size, fmt::format("instance needs at least 2 vertices, got {}", num_vertices));
  }
  const std::size_t expected = std::size_t{num_vertices} * (num_vertices - 1) / 2;
  if (edges.size() != expected) {
    throw Error(Errc::invalid_argument,
                fmt::format("complete graph on {} vertices has {} edges, got {}", num_vertices,
                            expected, edges.size()));
  }
  std::size_t k = 0;
  for (unsigned i = 0; i < num_vertices; ++i) {
    for (unsigned j = i + 1; j < num_vertices; ++j, ++k) {
      const Edge& e = edges[k];
      if (e.i != i || e.j != j) {
        throw Error(Errc::invalid_argument,
                    fmt::format("edge {} is ({}, {}), expected ({}, {})", k, e.i, e.j, i, j));
      }
      if (!(e.weight >= 0.0 && e.weight <= 1.0)) {
        throw Error(Errc::invalid_argument,
                    fmt::format("weight of edge ({}, {}) is {}, outside [0, 1]", i, j, e.weight));
      }
    }
  }
  if (optimal_cut && optimal_cut->bitstring.size() != num_vertices) {
    throw Error(Errc::dimension, "optimal bitstring length differs from vertex count");
  }
  if (optimal_cut) {
    const double actual = cut_value(*this, optimal_cut->bitstring);
    if (!(std::abs(actual - optimal_cut->value) <= 1e-9 * std::max(1.0, actual))) {
      throw Error(Errc::invalid_argument, fmt::format("optimal value {} disagrees with the cut of {} ({})",
                                                      optimal_cut->value, optimal_cut->bitstring.to_string(),
                                                      actual));
    }
  }
}

double WmcInstance::total_weight() const {
  double sum = 0.0;
  for (const auto& e : edges) sum += e.weight;
  return sum;
}

std::vector<double> WmcInstance::weight_matrix() const {
  std::vector<double> w(std::size_t{num_vertices} * num_vertices, 0.0);
  for (const auto& e : edges) {
    w[std::size_t{e.i} * num_vertices + e.j] = e.weight;
    w[std::size_t{e.j} * num_vertices + e.i] = e.weight;
  }
  return w;
}

const OptimalCut& WmcInstance::require_optimal() const {
  if (!optimal_cut) throw Error(Errc::state, "instance has no optimal cut");
  if (optimal_cut->value <= 0.0) throw Error(Errc::state, "optimal cut value is not positive");
  return *optimal_cut;
}

WmcInstance generate_instance(unsigned n, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::invalid_size, fmt::format("instance needs at least 2 vertices, got {}", n));
  // Weights are drawn in lexicographic edge order from the stream (seed, n).
  Rng rng(derive_seed(derive_seed(seed, stream::instance_weights), n));
  WmcInstance inst;
  inst.num_vertices = n;
  inst.seed = seed;
  inst.edges.reserve(std::size_t{n} * (n - 1) / 2);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) inst.edges.push_back({i, j, rng.uniform01()});
  }
  return inst;
}

double cut_value(const WmcInstance& inst, const Bitstring& x) {
  if (x.size() != inst.num_vertices) {
    throw Error(Errc::dimension, fmt::format("bitstring has {} bits, instance has {} vertices", x.size(),
                                             inst.num_vertices));
  }
  double value = 0.0;
  for (const auto& e : inst.edges) {
    if (x[e.i] != x[e.j]) value += e.weight;
  }
  return value;
}

double cut_value(const WmcInstance& inst, std::uint64_t index) {
  if (inst.num_vertices > 64 || (inst.num_vertices < 64 && (index >> inst.num_vertices) != 0)) {
    throw Error(Errc::dimension, fmt::format("index {} out of range for {} vertices", index, inst.num_vertices));
  }
  double value = 0.0;
  for (const auto& e : inst.edges) {
    if (((index >> e.i) ^ (index >> e.j)) & 1U) value += e.weight;
  }
  return value;
}

std::vector<double> cut_table(const WmcInstance& inst) {
  const unsigned n = inst.num_vertices;
  if (n > 34) throw Error(Errc::capacity, fmt::format("cut table for {} vertices is too large", n));
  const auto w = inst.weight_matrix();
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<double> table(size, 0.0);
  // Setting the highest bit h of z' (all higher bits zero) toggles the edges
  // from h: cut to zero-side neighbours, uncut to one-side neighbours.
  for (unsigned h = 0; h < n; ++h) {
    const std::uint64_t top = std::uint64_t{1} << h;
    const double* row = &w[std::size_t{h} * n];
#pragma omp parallel for schedule(static) if (top >= (1U << 14))
    for (std::uint64_t low = 0; low < top; ++low) {
      double delta = 0.0;
      for (unsigned j = 0; j < n; ++j) {
        if (j == h) continue;
        delta += ((low >> j) & 1U) ? -row[j] : row[j];
      }
      table[top | low] = table[low] + delta;
    }
  }
  return table;
}

namespace {

struct Candidate {
  std::uint64_t index = 0;
  double value = -1.0;
};

}  // namespace

OptimalCut optimal_cut_bruteforce(const WmcInstance& inst, unsigned max_vertices) {
  const unsigned n = inst.num_vertices;
  if (n < 2) throw Error(Errc::invalid_size, "instance needs at least 2 vertices");
  if (n > max_vertices || n > 62) {
    throw Error(Errc::capacity,
                fmt::format("brute force over {} vertices exceeds the limit of {}", n, max_vertices));
  }
  const auto w = inst.weight_matrix();
  // Complements have equal cuts, and of each pair the one with vertex n-1 on
  // the zero side has the lower index, so only those are enumerated.
  const unsigned free_bits = n - 1;
  const unsigned chunk_bits = std::min(free_bits, 6U);
  const unsigned walk_bits = free_bits - chunk_bits;
  const std::uint64_t num_chunks = std::uint64_t{1} << chunk_bits;
  const double tol = 1e-9 * std::max(1.0, inst.total_weight());

  std::vector<Candidate> best(num_chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::uint64_t c = 0; c < num_chunks; ++c) {
    std::uint64_t z = c << walk_bits;
    double value = cut_value(inst, z);
    Candidate local{z, value};
    const std::uint64_t steps = std::uint64_t{1} << walk_bits;
    for (std::uint64_t t = 1; t < steps; ++t) {
      const unsigned k = static_cast<unsigned>(std::countr_zero(t));
      const bool xk = (z >> k) & 1U;
      const double* row = &w[std::size_t{k} * n];
      double delta = 0.0;
      for (unsigned j = 0; j < n; ++j) {
        if (j == k) continue;
        const bool xj = (z >> j) & 1U;
        delta += (xj == xk) ? row[j] : -row[j];
      }
      z ^= std::uint64_t{1} << k;
      value += delta;
      if (value > local.value + tol || (value >= local.value - tol && z < local.index)) {
        local = {z, value};
      }
    }
    best[c] = local;
  }

  // Re-evaluate chunk winners exactly so the final comparison carries no
  // accumulated rounding from the Gray-code walk.
  Candidate winner{0, -std::numeric_limits<double>::infinity()};
  for (const auto& cand : best) {
    const double exact = cut_value(inst, cand.index);
    if (exact > winner.value || (exact == winner.value && cand.index < winner.index)) {
      winner = {cand.index, exact};
    }
  }
  return {Bitstring::from_index(winner.index, n), winner.value};
}

void solve_in_place(WmcInstance& inst, unsigned max_vertices) {
  inst.optimal_cut = optimal_cut_bruteforce(inst, max_vertices);
}

double approximation_ratio(const WmcInstance& inst, std::span<const Bitstring> samples) {
  const auto& opt = inst.require_optimal();
  if (samples.empty()) throw Error(Errc::invalid_argument, "approximation ratio needs at least one sample");
  double sum = 0.0;
  for (const auto& x : samples) sum += cut_value(inst, x);
  return sum / static_cast<double>(samples.size()) / opt.value;
}

double random_baseline_expectation(const WmcInstance& inst) {
  const auto& opt = inst.require_optimal();
  return inst.total_weight() / 2.0 / opt.value;
}

}  // namespace lrqaoa
