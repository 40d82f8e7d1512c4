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

#include <cmath>

#include "lrqaoa/circuit.hpp"
#include "lrqaoa/error.hpp"
#include "oracle.hpp"

using namespace lrqaoa;

TEST_CASE("build_schedule follows the linear ramps") {
  auto s1 = build_schedule({1, 0.2, 0.2});
  CHECK(s1.betas == std::vector<double>{0.2});
  CHECK(s1.gammas == std::vector<double>{0.2});

  auto s3 = build_schedule({3, 0.2, 0.2});
  REQUIRE(s3.betas.size() == 3);
  CHECK(s3.betas[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(s3.betas[1] == doctest::Approx(0.4 / 3).epsilon(1e-15));
  CHECK(s3.betas[2] == doctest::Approx(0.2 / 3).epsilon(1e-15));
  CHECK(s3.gammas[0] == doctest::Approx(0.2 / 3).epsilon(1e-15));
  CHECK(s3.gammas[1] == doctest::Approx(0.4 / 3).epsilon(1e-15));
  CHECK(s3.gammas[2] == doctest::Approx(0.2).epsilon(1e-15));

  auto s100 = build_schedule({100, 0.2, 0.2});
  CHECK(s100.betas[99] == doctest::Approx(0.002).epsilon(1e-13));
  CHECK(s100.gammas[0] == doctest::Approx(0.002).epsilon(1e-13));
  for (std::size_t i = 1; i < 100; ++i) {
    CHECK(s100.betas[i] < s100.betas[i - 1]);
    CHECK(s100.gammas[i] > s100.gammas[i - 1]);
  }

  auto asym = build_schedule({4, 0.8, 0.3});
  CHECK(asym.betas[0] == 0.8);
  CHECK(asym.betas[3] == doctest::Approx(0.8 / 4));
  CHECK(asym.gammas[3] == doctest::Approx(0.3));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(build_schedule({0, 0.2, 0.2}), Error);
  CHECK_THROWS_AS(build_schedule({3, 0.0, 0.2}), Error);
  CHECK_THROWS_AS(build_schedule({3, 0.2, -1.0}), Error);
  CHECK_THROWS_AS(build_schedule({3, 0.2, std::nan("")}), Error);
  CHECK_THROWS_AS(build_circuit(generate_instance(3, 1), {0, 0.2, 0.2}), Error);
}

TEST_CASE("build_circuit structure") {
  const auto inst = WmcInstance::from_edges(3, {{0, 1, 0.5}, {0, 2, 1.0}, {1, 2, 0.25}});
  const auto c = build_circuit(inst, {1, 0.2, 0.3});
  REQUIRE(c.gates.size() == 9);
  for (unsigned q = 0; q < 3; ++q) CHECK(c.gates[q] == GateOp::h(q));
  CHECK(c.gates[3] == GateOp::rzz(2 * 0.3 * 0.5, 0, 1));
  CHECK(c.gates[4] == GateOp::rzz(2 * 0.3 * 1.0, 0, 2));
  CHECK(c.gates[5] == GateOp::rzz(2 * 0.3 * 0.25, 1, 2));
  for (unsigned q = 0; q < 3; ++q) CHECK(c.gates[6 + q] == GateOp::rx(-2 * 0.2, q));

  const auto big = build_circuit(generate_instance(40, 1), {3, 0.2, 0.2});
  std::size_t rzz = 0;
  for (const auto& g : big.gates) rzz += g.kind == GateKind::rzz;
  CHECK(rzz == 2340);
}

TEST_CASE("gate counts match the built circuit") {
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned p : {1U, 2U, 5U}) {
      const auto c = build_circuit(generate_instance(n, n), {p, 0.2, 0.2});
      const auto counts = gate_counts(n, p);
      std::uint64_t one = 0, two = 0;
      for (const auto& g : c.gates) (g.is_two_qubit() ? two : one)++;
      CHECK(one == counts.one_qubit);
      CHECK(two == counts.two_qubit);
    }
  }
  CHECK(gate_counts(40, 3) == GateCounts{160, 2340});
  CHECK(gate_counts(48, 3).two_qubit == 3384);
  CHECK(gate_counts(93, 3).two_qubit == 12834);
}

TEST_CASE("hqc_cost evaluates the credit formula") {
  CHECK(hqc_cost(0, 0, 0, 1) == 5.0);
  // 5 + (160 + 23400 + 200) / 5000 * 10 = 52.52. The quoted figure for this
  // configuration is ~68; the gap is not modelled here.
  CHECK(hqc_cost(160, 2340, 40, 10) == doctest::Approx(52.52).epsilon(1e-12));
  CHECK(hqc_cost(160, 2340, 40, 20) - 5.0 == doctest::Approx(2 * (52.52 - 5.0)).epsilon(1e-12));
  CHECK_THROWS_AS(hqc_cost(1, 1, 1, 0), Error);
}

TEST_CASE("gate conventions match matrix exponentials") {
  const double theta = 0.731;
  // RZZ(theta) = diag(e^{-i t/2}, e^{+i t/2}, e^{+i t/2}, e^{-i t/2}).
  const auto rzz = oracle::gate_matrix(2, GateOp::rzz(theta, 0, 1));
  const std::complex<double> same = std::exp(std::complex<double>(0, -theta / 2));
  const std::complex<double> diff = std::exp(std::complex<double>(0, theta / 2));
  CHECK(std::abs(rzz(0, 0) - same) < 1e-14);
  CHECK(std::abs(rzz(1, 1) - diff) < 1e-14);
  CHECK(std::abs(rzz(2, 2) - diff) < 1e-14);
  CHECK(std::abs(rzz(3, 3) - same) < 1e-14);

  // One cost layer on an edge equals exp(-i gamma w ZZ); one mixer gate
  // equals exp(+i beta X).
  const double gamma = 0.37, w = 0.8, beta = 0.22;
  const auto circuit_gate = oracle::gate_matrix(2, GateOp::rzz(2 * gamma * w, 0, 1));
  const oracle::Mat target = (std::complex<double>(0, -gamma * w) * oracle::zz(2, 0, 1)).exp();
  CHECK((circuit_gate - target).norm() < 1e-13);
  const auto mixer = oracle::gate_matrix(1, GateOp::rx(-2 * beta, 0));
  const oracle::Mat mixer_target = (std::complex<double>(0, beta) * oracle::pauli(1)).exp();
  CHECK((mixer - mixer_target).norm() < 1e-13);
}

TEST_CASE("circuit text format") {
  const auto c = build_circuit(generate_instance(4, 2), {2, 0.2, 0.3});
  const auto text = to_text(c);
  CHECK(text.rfind("# qubits 4 p 2", 0) == 0);
  CHECK(text.find("\nH 0\n") != std::string::npos);
  CHECK(text.find("RX -0.40000000000000002 0\n") != std::string::npos);

  const auto back = parse_circuit_text(text);
  CHECK(back.num_qubits == 4);
  CHECK(back.gates == c.gates);
  CHECK(to_text(back) == text);
  CHECK(to_text(build_circuit(generate_instance(4, 2), {2, 0.2, 0.3})) == text);

  CHECK_THROWS_AS(parse_circuit_text("H 0\n"), Error);
  CHECK_THROWS_AS(parse_circuit_text("# qubits 2\nCNOT 0 1\n"), Error);
  CHECK_THROWS_AS(parse_circuit_text("# qubits 2\nRZZ 0.1 1 1\n"), Error);
  CHECK_THROWS_AS(parse_circuit_text("# qubits 2\nH 5\n"), Error);
}
