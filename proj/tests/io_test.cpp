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

#include <filesystem>

#include "lrqaoa/error.hpp"
#include "lrqaoa/io.hpp"

using namespace lrqaoa;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("lrqaoa_io_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("sha256 known answers") {
  CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto dir = scratch_dir("sha");
  io::write_file(dir / "a.txt", "abc");
  CHECK(io::sha256_file(dir / "a.txt") == io::sha256_hex("abc"));
}

TEST_CASE("file helpers report io errors") {
  try {
    io::read_file("/definitely/not/here.json");
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io);
    CHECK(exit_code(e.code()) == 4);
  }
  const auto dir = scratch_dir("files");
  io::write_json(dir / "x.json", io::json{{"a", 1}});
  CHECK(io::read_json(dir / "x.json")["a"] == 1);
  io::write_file(dir / "bad.json", "{not json");
  CHECK_THROWS_AS(io::read_json(dir / "bad.json"), Error);
}

TEST_CASE("instance JSON round trip") {
  auto inst = generate_instance(7, 12);
  solve_in_place(inst);
  const auto j = io::to_json(inst);
  CHECK(j["n"] == 7);
  CHECK(j["seed"] == 12);
  CHECK(j["edges"].size() == 21);
  CHECK(j["edges"][0][0] == 0);
  CHECK(j["optimal"]["bitstring"].get<std::string>().size() == 7);
  const auto back = io::instance_from_json(io::json::parse(j.dump()));
  CHECK(back.num_vertices == 7);
  CHECK(back.seed == 12);
  REQUIRE(back.edges.size() == inst.edges.size());
  for (std::size_t k = 0; k < back.edges.size(); ++k) CHECK(back.edges[k].weight == inst.edges[k].weight);
  CHECK(back.require_optimal().value == inst.require_optimal().value);
  CHECK(back.require_optimal().bitstring == inst.require_optimal().bitstring);

  const auto unsolved = io::to_json(generate_instance(5, 1));
  CHECK(unsolved["optimal"].is_null());
  CHECK_FALSE(io::instance_from_json(unsolved).optimal_cut.has_value());

  auto broken = j;
  broken["edges"][0] = io::json::array({0, 1});
  CHECK_THROWS_AS(io::instance_from_json(broken), Error);
  auto wrong = j;
  wrong["optimal"]["value"] = 0.5;
  CHECK_THROWS_AS(io::instance_from_json(wrong), Error);
  CHECK_THROWS_AS(io::instance_from_json(io::json{{"n", 3}}), Error);
}

TEST_CASE("shot JSON round trip") {
  ShotSet shots;
  shots.num_qubits = 3;
  shots.rng_seed = 77;
  shots.source = {ShotOrigin::noisy, 0.01, 4};
  shots.bitstrings = {Bitstring::parse("100"), Bitstring::parse("011")};
  const auto j = io::to_json(shots);
  CHECK(j["bitstrings"][0] == "100");
  CHECK(j["source"] == "noisy");
  const auto back = io::shots_from_json(j);
  CHECK(back.bitstrings == shots.bitstrings);
  CHECK(back.rng_seed == 77);
  CHECK(back.source.origin == ShotOrigin::noisy);
  CHECK(back.source.epsilon == 0.01);
  CHECK(back.source.trajectories == 4);

  const auto wrapped = io::shots_from_json(io::json{{"mean_r", 0.5}, {"shots", j}});
  CHECK(wrapped.bitstrings == shots.bitstrings);

  auto bad = j;
  bad["bitstrings"].push_back("10");
  CHECK_THROWS_AS(io::shots_from_json(bad), Error);
  bad = j;
  bad["bitstrings"].push_back("1x1");
  CHECK_THROWS_AS(io::shots_from_json(bad), Error);
}

TEST_CASE("noisy run summary JSON") {
  io::NoisyRunSummary run{0.002, 100, 1000, 0.81, 0.6, 84, 0.86, 0.72};
  const auto j = io::to_json(run);
  CHECK(j["epsilon_acc"].get<double>() == doctest::Approx(0.168));
  const auto back = io::noisy_run_from_json(j);
  CHECK(back.epsilon == 0.002);
  CHECK(back.trajectories == 100);
  CHECK(back.r_ovl == 0.6);
  CHECK(back.n_2q == 84u);
  CHECK(back.r_ideal == 0.86);
  CHECK(back.r_random == 0.72);
  io::NoisyRunSummary bare{0.1, 1, 1, 0.5, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  const auto jb = io::to_json(bare);
  CHECK(jb["r_ovl"].is_null());
  CHECK_FALSE(jb.contains("epsilon_acc"));
  CHECK_FALSE(io::noisy_run_from_json(jb).r_ovl.has_value());
}

TEST_CASE("report JSON and KDE CSV") {
  const std::vector<double> pool{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  const ResampleConfig cfg{3, 10, 1, false};
  const std::vector<double> qpu{0.9, 0.95};
  const auto rep = classify(qpu, pool, std::nullopt, cfg);
  const auto j = io::to_json(rep);
  CHECK(j["verdict"] == regime_name(rep.verdict));
  CHECK(j["random"]["subsample_means"].size() == 10);
  CHECK(j["noiseless_unavailable"] == true);

  const std::vector<NoisePoint> pts{{1.0, 0.5}, {2.0, 0.25}};
  const auto fj = io::to_json(fit_k0(pts));
  CHECK(fj["k0"].get<double>() == doctest::Approx(1.0));
  CHECK(fj["points"].size() == 2);

  const auto csv = io::kde_csv(kde_curve(pool));
  CHECK(csv.rfind("x,density\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 513);
}
