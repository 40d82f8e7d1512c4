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
#include <vector>

#include "lrqaoa/error.hpp"
#include "lrqaoa/problem.hpp"
#include "lrqaoa/rng.hpp"

using namespace lrqaoa;

namespace {

WmcInstance triangle() {
  return WmcInstance::from_edges(3, {{0, 1, 0.5}, {0, 2, 1.0}, {1, 2, 0.25}});
}

// C(x) = sum_{k<l} w_kl (x_k + x_l - 2 x_k x_l), evaluated literally.
double cost_by_definition(const WmcInstance& inst, std::uint64_t z) {
  double c = 0.0;
  for (const auto& e : inst.edges) {
    const int xk = (z >> e.i) & 1;
    const int xl = (z >> e.j) & 1;
    c += e.weight * (xk + xl - 2 * xk * xl);
  }
  return c;
}

}  // namespace

TEST_CASE("generate_instance builds complete graphs deterministically") {
  auto two = generate_instance(2, 99);
  REQUIRE(two.edges.size() == 1);
  CHECK(two.edges[0].weight >= 0.0);
  CHECK(two.edges[0].weight <= 1.0);

  auto forty = generate_instance(40, 3);
  CHECK(forty.edges.size() == 780);
  forty.validate();

  auto a = generate_instance(5, 7);
  auto b = generate_instance(5, 7);
  CHECK(a.edges == b.edges);
  CHECK(generate_instance(5, 8).edges != a.edges);

  CHECK_THROWS_AS(generate_instance(1, 0), Error);
  try {
    generate_instance(1, 0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_size);
  }
}

TEST_CASE("generated weights look uniform on [0, 1]") {
  auto inst = generate_instance(60, 11);
  double sum = 0.0;
  for (const auto& e : inst.edges) sum += e.weight;
  const double mean = sum / static_cast<double>(inst.edges.size());
  // 1770 draws: standard error of the mean is sqrt(1/12/1770) ~ 0.0069.
  CHECK(std::abs(mean - 0.5) < 4 * 0.0069);
}

TEST_CASE("instance validation rejects malformed graphs") {
  CHECK_THROWS_AS(WmcInstance::from_edges(3, {{0, 1, 0.5}, {0, 2, 1.0}}), Error);
  CHECK_THROWS_AS(WmcInstance::from_edges(3, {{0, 1, 0.5}, {0, 2, 1.5}, {1, 2, 0.2}}), Error);
  CHECK_THROWS_AS(WmcInstance::from_edges(3, {{0, 1, 0.5}, {0, 1, 0.5}, {1, 2, 0.2}}), Error);
  CHECK_THROWS_AS(WmcInstance::from_edges(3, {{0, 0, 0.5}, {0, 2, 0.5}, {1, 2, 0.2}}), Error);
  // Reversed pairs are normalized.
  auto inst = WmcInstance::from_edges(3, {{2, 1, 0.25}, {1, 0, 0.5}, {2, 0, 1.0}});
  CHECK(inst.edges == triangle().edges);
}

TEST_CASE("bitstring text and index forms") {
  auto b = Bitstring::parse("101");
  CHECK(b[0]);
  CHECK_FALSE(b[1]);
  CHECK(b[2]);
  CHECK(b.to_index() == 0b101);
  CHECK(Bitstring::from_index(1, 3).to_string() == "100");
  CHECK(Bitstring::from_index(6, 3).to_string() == "011");
  CHECK(b.complement().to_string() == "010");
  CHECK_THROWS_AS(Bitstring::parse("10x"), Error);
  CHECK_THROWS_AS(Bitstring::from_index(8, 3), Error);
  CHECK_THROWS_AS(Bitstring(65).to_index(), Error);
}

TEST_CASE("cut_value") {
  const auto inst = triangle();
  CHECK(cut_value(inst, Bitstring(3)) == 0.0);
  CHECK(cut_value(inst, Bitstring::parse("101")) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(cut_value(inst, Bitstring(4)), Error);

  const auto big = generate_instance(9, 4);
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const std::uint64_t z = rng.below(1 << 9);
    const auto x = Bitstring::from_index(z, 9);
    CHECK(cut_value(big, x) == doctest::Approx(cut_value(big, x.complement())).epsilon(1e-12));
    CHECK(cut_value(big, x) == doctest::Approx(cost_by_definition(big, z)).epsilon(1e-12));
    CHECK(cut_value(big, z) == doctest::Approx(cost_by_definition(big, z)).epsilon(1e-12));
    CHECK(cut_value(big, x) <= big.total_weight());
  }
}

TEST_CASE("cut_table agrees with the definition") {
  const auto inst = generate_instance(10, 21);
  const auto table = cut_table(inst);
  REQUIRE(table.size() == 1024);
  for (std::uint64_t z = 0; z < table.size(); ++z) {
    CHECK(table[z] == doctest::Approx(cost_by_definition(inst, z)).epsilon(1e-12));
  }
}

TEST_CASE("optimal_cut_bruteforce") {
  SUBCASE("triangle") {
    const auto opt = optimal_cut_bruteforce(triangle());
    CHECK(opt.bitstring.to_string() == "100");
    CHECK(opt.value == doctest::Approx(1.5).epsilon(1e-15));
  }
  SUBCASE("single edge: lowest-index maximizer") {
    const auto inst = WmcInstance::from_edges(2, {{0, 1, 0.3}});
    const auto opt = optimal_cut_bruteforce(inst);
    CHECK(opt.value == doctest::Approx(0.3));
    CHECK(opt.bitstring.to_index() == 1);
  }
  SUBCASE("matches full enumeration with lowest-index ties") {
    for (unsigned n : {4U, 7U, 11U, 14U}) {
      const auto inst = generate_instance(n, 100 + n);
      double best = -1.0;
      std::uint64_t best_z = 0;
      for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
        const double c = cost_by_definition(inst, z);
        if (c > best + 1e-12) {
          best = c;
          best_z = z;
        }
      }
      const auto opt = optimal_cut_bruteforce(inst);
      CHECK(opt.value == doctest::Approx(best).epsilon(1e-12));
      CHECK(opt.bitstring.to_index() == std::min(best_z, best_z ^ ((std::uint64_t{1} << n) - 1)));
    }
  }
  SUBCASE("beats random bitstrings") {
    const auto inst = generate_instance(16, 5);
    const auto opt = optimal_cut_bruteforce(inst);
    Rng rng(17);
    for (int k = 0; k < 1000; ++k) CHECK(opt.value >= cut_value(inst, rng.below(1 << 16)));
  }
  SUBCASE("all-equal weights tie everywhere") {
    std::vector<Edge> edges;
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = i + 1; j < 4; ++j) edges.push_back({i, j, 1.0});
    const auto opt = optimal_cut_bruteforce(WmcInstance::from_edges(4, edges));
    CHECK(opt.value == 4.0);
    CHECK(opt.bitstring.to_index() == 0b0011);
  }
  SUBCASE("capacity limit") {
    const auto inst = generate_instance(12, 1);
    try {
      optimal_cut_bruteforce(inst, 10);
      FAIL("expected capacity error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::capacity);
    }
  }
}

TEST_CASE("approximation_ratio") {
  auto inst = triangle();
  CHECK_THROWS_AS(approximation_ratio(inst, std::vector<Bitstring>{Bitstring(3)}), Error);
  solve_in_place(inst);
  const auto& best = inst.optimal_cut->bitstring;
  CHECK(approximation_ratio(inst, std::vector<Bitstring>{best}) == 1.0);
  CHECK(approximation_ratio(inst, std::vector<Bitstring>{Bitstring(3)}) == 0.0);
  const std::vector<Bitstring> two{Bitstring::parse("101"), Bitstring::parse("100")};
  CHECK(approximation_ratio(inst, two) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(approximation_ratio(inst, std::vector<Bitstring>{}), Error);
}

TEST_CASE("random_baseline_expectation") {
  auto inst = triangle();
  try {
    random_baseline_expectation(inst);
    FAIL("expected state error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::state);
  }
  solve_in_place(inst);
  CHECK(random_baseline_expectation(inst) == doctest::Approx(1.75 / 2 / 1.5).epsilon(1e-15));

  // Enumeration oracle: the mean over all 2^n bitstrings equals sum(w)/2.
  auto mid = generate_instance(10, 8);
  solve_in_place(mid);
  double sum = 0.0;
  for (std::uint64_t z = 0; z < 1024; ++z) sum += cost_by_definition(mid, z);
  CHECK(sum / 1024 / mid.optimal_cut->value == doctest::Approx(random_baseline_expectation(mid)).epsilon(1e-12));

  // Monte Carlo: 1e5 uniform samples within 3 standard errors.
  Rng rng(3);
  const int n = 100000;
  double s = 0.0, s2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double r = cut_value(mid, rng.below(1024)) / mid.optimal_cut->value;
    s += r;
    s2 += r * r;
  }
  const double mean = s / n;
  const double se = std::sqrt((s2 / n - mean * mean) / n);
  CHECK(std::abs(mean - random_baseline_expectation(mid)) < 3 * se);
}
