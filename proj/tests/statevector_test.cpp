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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "lrqaoa/error.hpp"
#include "lrqaoa/io.hpp"
#include "lrqaoa/rng.hpp"
#include "lrqaoa/statevector.hpp"
#include "oracle.hpp"

using namespace lrqaoa;
using cd = std::complex<double>;

namespace {

double max_diff(const std::vector<cd>& a, const oracle::Vec& b) {
  double m = 0.0;
  for (std::size_t z = 0; z < a.size(); ++z) m = std::max(m, std::abs(a[z] - b(static_cast<Eigen::Index>(z))));
  return m;
}

}  // namespace

TEST_CASE("state_bytes and the memory budget") {
  CHECK(state_bytes(10, Precision::fp32) == 8192);
  CHECK(state_bytes(10, Precision::fp64) == 16384);
  CHECK(state_bytes(33, Precision::fp32) == (std::uint64_t{64} << 30));

  MemoryBudget budget{std::uint64_t{4} << 30};
  try {
    budget.check(33, Precision::fp32);
    FAIL("expected a capacity error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::capacity);
    const std::string msg = e.what();
    CHECK(msg.find("68719476736") != std::string::npos);
    CHECK(msg.find("64 GiB") != std::string::npos);
  }
  CHECK_NOTHROW(budget.check(29, Precision::fp32));
  CHECK_THROWS_AS(StateVector::zero(33, Precision::fp32, budget), Error);
  CHECK(exit_code(Errc::capacity) == 3);
}

TEST_CASE("plus state is uniform") {
  for (auto prec : {Precision::fp32, Precision::fp64}) {
    auto sv = init_plus_state(5, prec);
    for (std::uint64_t z = 0; z < 32; ++z) CHECK(std::abs(sv.amplitude(z) - cd(1.0 / std::sqrt(32.0), 0)) < 1e-7);
    auto via_h = StateVector::zero(5, prec);
    for (unsigned q = 0; q < 5; ++q) apply_h(via_h, q);
    for (std::uint64_t z = 0; z < 32; ++z) CHECK(std::abs(sv.amplitude(z) - via_h.amplitude(z)) < 1e-7);
  }
}

TEST_CASE("RZZ(pi) on the two-qubit plus state") {
  auto sv = init_plus_state(2, Precision::fp64);
  apply_rzz(sv, std::numbers::pi, 0, 1);
  const cd expect[4] = {cd(0, -0.5), cd(0, 0.5), cd(0, 0.5), cd(0, -0.5)};
  for (std::uint64_t z = 0; z < 4; ++z) CHECK(std::abs(sv.amplitude(z) - expect[z]) < 1e-15);
}

TEST_CASE("single gates agree with dense matrices") {
  const unsigned n = 4;
  std::vector<cd> amps(16);
  Rng rng(99);
  for (auto& a : amps) a = cd(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
  oracle::Vec v(16);
  for (int z = 0; z < 16; ++z) v(z) = amps[z];

  std::vector<GateOp> gates;
  for (unsigned q = 0; q < n; ++q) {
    gates.push_back(GateOp::h(q));
    gates.push_back(GateOp::rx(0.3 + q, q));
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j) gates.push_back(GateOp::rzz(0.17 * (i + 1) - 0.05 * j, i, j));

  for (const auto& g : gates) {
    auto sv = StateVector::from_amplitudes(amps);
    apply_gate(sv, g);
    const oracle::Vec expect = oracle::gate_matrix(n, g) * v;
    CHECK(max_diff(sv.amplitudes(), expect) < 1e-13);
  }
  auto sv = StateVector::from_amplitudes(amps);
  CHECK_THROWS_AS(apply_rzz(sv, 0.1, 2, 2), Error);
}

TEST_CASE("Pauli gates match their matrices") {
  std::vector<cd> amps(8);
  for (int z = 0; z < 8; ++z) amps[z] = cd(z + 1, -z);
  oracle::Vec v(8);
  for (int z = 0; z < 8; ++z) v(z) = amps[z];
  for (int which = 1; which <= 3; ++which) {
    for (unsigned q = 0; q < 3; ++q) {
      auto sv = StateVector::from_amplitudes(amps);
      apply_pauli(sv, static_cast<Pauli>(which), q);
      const oracle::Vec expect = oracle::embed(3, q, oracle::pauli(which)) * v;
      CHECK(max_diff(sv.amplitudes(), expect) < 1e-13);
    }
  }
}

TEST_CASE("full circuits agree with the dense oracle") {
  for (unsigned n : {2U, 3U, 6U}) {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const auto inst = generate_instance(n, seed);
      const auto c = build_circuit(inst, {3, 0.2, 0.2});
      const auto expect = oracle::run(c);
      CHECK(max_diff(run_circuit(c, Precision::fp64).amplitudes(), expect) < 1e-12);
      CHECK(max_diff(run_circuit(c, Precision::fp32).amplitudes(), expect) < 1e-5);
    }
  }
  const auto c = build_circuit(generate_instance(6, 5), {4, 0.7, 0.45});
  CHECK(max_diff(run_circuit(c, Precision::fp64).amplitudes(), oracle::run(c)) < 1e-12);
}

TEST_CASE("FP32 tracks FP64 at 12 qubits, p = 10") {
  auto inst = generate_instance(12, 4);
  solve_in_place(inst);
  const auto c = build_circuit(inst, {10, 0.2, 0.2});
  const auto s32 = run_circuit(c, Precision::fp32);
  const auto s64 = run_circuit(c, Precision::fp64);
  CHECK(std::abs(s32.norm_squared() - 1.0) < 1e-5);
  CHECK(std::abs(s64.norm_squared() - 1.0) < 1e-12);
  const auto p32 = s32.probabilities();
  const auto p64 = s64.probabilities();
  double max_dp = 0.0;
  for (std::size_t z = 0; z < p32.size(); ++z) max_dp = std::max(max_dp, std::abs(p32[z] - p64[z]));
  CHECK(max_dp < 1e-6);
  CHECK(std::abs(exact_expected_r(s32, inst) - exact_expected_r(s64, inst)) < 1e-4);
}

TEST_CASE("RZZ layers commute") {
  const auto inst = generate_instance(5, 8);
  auto a = init_plus_state(5, Precision::fp64);
  auto b = init_plus_state(5, Precision::fp64);
  std::vector<GateOp> layer;
  for (const auto& e : inst.edges) layer.push_back(GateOp::rzz(0.4 * e.weight, e.i, e.j));
  for (const auto& g : layer) apply_gate(a, g);
  std::reverse(layer.begin(), layer.end());
  std::rotate(layer.begin(), layer.begin() + 3, layer.end());
  for (const auto& g : layer) apply_gate(b, g);
  for (std::uint64_t z = 0; z < 32; ++z) CHECK(std::abs(a.amplitude(z) - b.amplitude(z)) < 1e-14);
}

TEST_CASE("exact_expected_r") {
  auto inst = generate_instance(6, 3);
  solve_in_place(inst);
  const auto opt = inst.require_optimal();
  // A basis state on the optimum gives exactly 1.
  auto sv = StateVector::basis(6, opt.bitstring.to_index(), Precision::fp64);
  CHECK(exact_expected_r(sv, inst) == doctest::Approx(1.0).epsilon(1e-14));
  // The plus state gives the uniform average.
  CHECK(exact_expected_r(init_plus_state(6, Precision::fp64), inst) ==
        doctest::Approx(random_baseline_expectation(inst)).epsilon(1e-12));
  // Explicit distribution.
  const std::vector<double> probs{0.25, 0.75};
  const std::vector<double> cuts{0.0, 2.0};
  CHECK(exact_expected_r(probs, cuts, 2.0) == doctest::Approx(0.75));
  CHECK_THROWS_AS(exact_expected_r(init_plus_state(5, Precision::fp64), inst), Error);

  WmcInstance unsolved = generate_instance(4, 1);
  CHECK_THROWS_AS(exact_expected_r(init_plus_state(4, Precision::fp64), unsolved), Error);
}

TEST_CASE("sampling follows the distribution") {
  const std::vector<double> probs{0.1, 0.0, 0.6, 0.3};
  const std::uint64_t shots = 200000;
  const auto idx = sample_indices(probs, shots, 17);
  std::vector<double> counts(4, 0.0);
  for (auto z : idx) counts[z] += 1;
  CHECK(counts[1] == 0.0);
  // Chi-square with 2 degrees of freedom; 13.8 is the 0.999 quantile.
  double chi2 = 0.0;
  for (int z : {0, 2, 3}) chi2 += std::pow(counts[z] - shots * probs[z], 2) / (shots * probs[z]);
  CHECK(chi2 < 13.8);

  CHECK(sample_indices(probs, 1000, 5) == sample_indices(probs, 1000, 5));
  CHECK(sample_indices(probs, 1000, 5) != sample_indices(probs, 1000, 6));
  const std::vector<double> point{0.0, 0.0, 1.0, 0.0};
  for (auto z : sample_indices(point, 500, 1)) CHECK(z == 2);
  CHECK_THROWS_AS(sample_indices(probs, 0, 1), Error);
  const std::vector<double> zero(4, 0.0);
  CHECK_THROWS_AS(sample_indices(zero, 10, 1), Error);
}

TEST_CASE("sample returns bitstrings with vertex 0 first") {
  auto sv = StateVector::basis(4, 0b0001, Precision::fp32);
  const auto shots = sample(sv, 20, 3);
  CHECK(shots.num_qubits == 4);
  CHECK(shots.size() == 20);
  CHECK(shots.rng_seed == 3);
  for (const auto& b : shots.bitstrings) CHECK(b.to_string() == "1000");

  auto inst = generate_instance(6, 2);
  solve_in_place(inst);
  const auto c = build_circuit(inst, {5, 0.2, 0.2});
  const auto state = run_circuit(c, Precision::fp64);
  const auto big = sample(state, 40000, 11);
  const double exact = exact_expected_r(state, inst);
  const auto ratios = shot_ratios(big, inst);
  double mean = 0.0, var = 0.0;
  for (double r : ratios) mean += r;
  mean /= ratios.size();
  for (double r : ratios) var += (r - mean) * (r - mean);
  const double se = std::sqrt(var / (ratios.size() - 1) / ratios.size());
  CHECK(std::abs(mean - exact) < 5 * se);
  CHECK(mean_ratio(big, inst) == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("state dump round trip") {
  const auto c = build_circuit(generate_instance(5, 1), {2, 0.2, 0.2});
  for (auto prec : {Precision::fp32, Precision::fp64}) {
    const auto sv = run_circuit(c, prec);
    const auto bytes = io::state_dump(sv);
    CHECK(bytes.size() == 16 + state_bytes(5, prec));
    CHECK(bytes.substr(0, 8) == "LRQSV001");
    const auto back = io::state_from_dump(bytes);
    CHECK(back.precision() == prec);
    CHECK(back.amplitudes() == sv.amplitudes());
  }
  CHECK_THROWS_AS(io::state_from_dump("LRQSV00X"), Error);
}

TEST_CASE("precision names") {
  CHECK(parse_precision("fp32") == Precision::fp32);
  CHECK(parse_precision("fp64") == Precision::fp64);
  CHECK(std::string(precision_name(Precision::fp64)) == "fp64");
  CHECK_THROWS_AS(parse_precision("fp16"), Error);
}
