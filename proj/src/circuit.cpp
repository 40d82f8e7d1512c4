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

#include "lrqaoa/circuit.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "lrqaoa/error.hpp"

namespace lrqaoa {

const char* gate_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::h: return "H";
    case GateKind::rx: return "RX";
    case GateKind::rzz: return "RZZ";
  }
  return "?";
}

void LrQaoaParams::validate() const {
  if (p < 1) throw Error(Errc::invalid_argument, "layer count p must be at least 1");
  if (!std::isfinite(delta_beta) || delta_beta <= 0.0) {
    throw Error(Errc::invalid_argument, fmt::format("delta_beta must be finite and positive, got {}", delta_beta));
  }
  if (!std::isfinite(delta_gamma) || delta_gamma <= 0.0) {
    throw Error(Errc::invalid_argument, fmt::format("delta_gamma must be finite and positive, got {}", delta_gamma));
  }
}

void CircuitIR::validate() const {
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const auto& g = gates[k];
    if (g.q0 >= num_qubits || g.q1 >= num_qubits) {
      throw Error(Errc::invalid_argument, fmt::format("gate {} addresses a qubit outside [0, {})", k, num_qubits));
    }
    if (g.kind == GateKind::rzz && g.q0 == g.q1) {
      throw Error(Errc::invalid_argument, fmt::format("RZZ gate {} acts twice on qubit {}", k, g.q0));
    }
  }
}

Schedule build_schedule(const LrQaoaParams& params) {
  params.validate();
  Schedule s;
  s.betas.resize(params.p);
  s.gammas.resize(params.p);
  const double p = params.p;
  for (unsigned i = 0; i < params.p; ++i) {
    s.betas[i] = (1.0 - i / p) * params.delta_beta;
    s.gammas[i] = ((i + 1) / p) * params.delta_gamma;
  }
  return s;
}

CircuitIR build_circuit(const WmcInstance& inst, const LrQaoaParams& params) {
  inst.validate();
  CircuitIR c;
  c.num_qubits = inst.num_vertices;
  c.params = params;
  c.schedule = build_schedule(params);
  c.instance_seed = inst.seed;
  const auto counts = gate_counts(inst.num_vertices, params.p);
  c.gates.reserve(counts.one_qubit + counts.two_qubit);
  for (unsigned q = 0; q < c.num_qubits; ++q) c.gates.push_back(GateOp::h(q));
  for (unsigned k = 0; k < params.p; ++k) {
    const double gamma = c.schedule.gammas[k];
    const double beta = c.schedule.betas[k];
    for (const auto& e : inst.edges) c.gates.push_back(GateOp::rzz(2.0 * gamma * e.weight, e.i, e.j));
    for (unsigned q = 0; q < c.num_qubits; ++q) c.gates.push_back(GateOp::rx(-2.0 * beta, q));
  }
  return c;
}

GateCounts gate_counts(unsigned n, unsigned p) {
  if (n < 2) throw Error(Errc::invalid_size, "gate counts need at least 2 qubits");
  if (p < 1) throw Error(Errc::invalid_argument, "layer count p must be at least 1");
  const std::uint64_t nq = n;
  return {(std::uint64_t{p} + 1) * nq, std::uint64_t{p} * nq * (nq - 1) / 2};
}

double hqc_cost(std::uint64_t n_1q, std::uint64_t n_2q, std::uint64_t n_m, std::uint64_t n_s) {
  if (n_s < 1) throw Error(Errc::invalid_argument, "shot count must be at least 1");
  const double weighted = static_cast<double>(n_1q) + 10.0 * static_cast<double>(n_2q) +
                          5.0 * static_cast<double>(n_m);
  return 5.0 + weighted / 5000.0 * static_cast<double>(n_s);
}

std::string to_text(const CircuitIR& circuit) {
  std::string out = fmt::format("# qubits {} p {} delta_beta {:.17g} delta_gamma {:.17g} seed {}\n",
                                circuit.num_qubits, circuit.params.p, circuit.params.delta_beta,
                                circuit.params.delta_gamma, circuit.instance_seed);
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::h:
        out += fmt::format("H {}\n", g.q0);
        break;
      case GateKind::rx:
        out += fmt::format("RX {:.17g} {}\n", g.theta, g.q0);
        break;
      case GateKind::rzz:
        out += fmt::format("RZZ {:.17g} {} {}\n", g.theta, g.q0, g.q1);
        break;
    }
  }
  return out;
}

CircuitIR parse_circuit_text(std::string_view text) {
  CircuitIR c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string op;
    fields >> op;
    auto fail = [&] {
      return Error(Errc::invalid_argument, fmt::format("circuit line {}: cannot parse '{}'", lineno, line));
    };
    if (op == "#") {
      std::string key;
      while (fields >> key) {
        if (key == "qubits") fields >> c.num_qubits;
        else if (key == "p") fields >> c.params.p;
        else if (key == "delta_beta") fields >> c.params.delta_beta;
        else if (key == "delta_gamma") fields >> c.params.delta_gamma;
        else if (key == "seed") fields >> c.instance_seed;
        if (!fields) throw fail();
      }
      have_header = true;
      continue;
    }
    GateOp g;
    if (op == "H") {
      g.kind = GateKind::h;
      fields >> g.q0;
      g.q1 = g.q0;
    } else if (op == "RX") {
      g.kind = GateKind::rx;
      fields >> g.theta >> g.q0;
      g.q1 = g.q0;
    } else if (op == "RZZ") {
      g.kind = GateKind::rzz;
      fields >> g.theta >> g.q0 >> g.q1;
    } else {
      throw fail();
    }
    if (!fields) throw fail();
    c.gates.push_back(g);
  }
  if (!have_header) throw Error(Errc::invalid_argument, "circuit text lacks the '# qubits' header");
  if (c.params.p >= 1 && c.params.delta_beta > 0 && c.params.delta_gamma > 0) {
    c.schedule = build_schedule(c.params);
  }
  c.validate();
  return c;
}

}  // namespace lrqaoa
