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

#include "lrqaoa/io.hpp"

#include <openssl/evp.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "lrqaoa/error.hpp"

namespace lrqaoa::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, fmt::format("cannot open '{}' for reading", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io, fmt::format("cannot open '{}' for writing", path.string()));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(Errc::io, fmt::format("write to '{}' failed", path.string()));
}

json read_json(const std::filesystem::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(Errc::invalid_argument, fmt::format("'{}' is not valid JSON: {}", path.string(), e.what()));
  }
}

void write_json(const std::filesystem::path& path, const json& value) { write_file(path, value.dump(2) + "\n"); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::io, "SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(read_file(path)); }

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::invalid_argument, fmt::format("missing field '{}'", key));
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, fmt::format("field '{}': {}", key, e.what()));
  }
}

}  // namespace

json to_json(const WmcInstance& inst) {
  json edges = json::array();
  for (const auto& e : inst.edges) edges.push_back(json::array({e.i, e.j, e.weight}));
  json j = {{"n", inst.num_vertices}, {"seed", inst.seed}, {"edges", std::move(edges)}};
  if (inst.optimal_cut) {
    j["optimal"] = {{"bitstring", inst.optimal_cut->bitstring.to_string()}, {"value", inst.optimal_cut->value}};
  } else {
    j["optimal"] = nullptr;
  }
  return j;
}

WmcInstance instance_from_json(const json& j) {
  const auto n = field<unsigned>(j, "n");
  const auto seed = field<std::uint64_t>(j, "seed");
  std::vector<Edge> edges;
  for (const auto& e : field<json>(j, "edges")) {
    if (!e.is_array() || e.size() != 3) throw Error(Errc::invalid_argument, "edge entries must be [i, j, w]");
    edges.push_back({e[0].get<unsigned>(), e[1].get<unsigned>(), e[2].get<double>()});
  }
  auto inst = WmcInstance::from_edges(n, std::move(edges), seed);
  if (j.contains("optimal") && !j["optimal"].is_null()) {
    const auto& o = j["optimal"];
    inst.optimal_cut = OptimalCut{Bitstring::parse(field<std::string>(o, "bitstring")), field<double>(o, "value")};
    inst.validate();
  }
  return inst;
}

json to_json(const ShotSet& shots) {
  json bits = json::array();
  for (const auto& b : shots.bitstrings) bits.push_back(b.to_string());
  json j = {{"n", shots.num_qubits},
            {"source", shot_origin_name(shots.source.origin)},
            {"seed", shots.rng_seed},
            {"trajectories", shots.source.trajectories},
            {"bitstrings", std::move(bits)}};
  j["epsilon"] = shots.source.epsilon ? json(*shots.source.epsilon) : json(nullptr);
  return j;
}

ShotSet shots_from_json(const json& j) {
  if (j.is_object() && j.contains("shots") && j["shots"].is_object()) return shots_from_json(j["shots"]);
  ShotSet shots;
  shots.num_qubits = field<unsigned>(j, "n");
  shots.source.origin = j.contains("source") ? parse_shot_origin(j["source"].get<std::string>()) : ShotOrigin::external;
  if (j.contains("epsilon") && !j["epsilon"].is_null()) shots.source.epsilon = j["epsilon"].get<double>();
  if (j.contains("trajectories")) shots.source.trajectories = j["trajectories"].get<std::uint64_t>();
  if (j.contains("seed")) shots.rng_seed = j["seed"].get<std::uint64_t>();
  for (const auto& s : field<json>(j, "bitstrings")) {
    auto b = Bitstring::parse(s.get<std::string>());
    if (b.size() != shots.num_qubits) {
      throw Error(Errc::dimension, fmt::format("bitstring '{}' has {} bits, expected {}", s.get<std::string>(),
                                               b.size(), shots.num_qubits));
    }
    shots.bitstrings.push_back(std::move(b));
  }
  return shots;
}

json to_json(const NoisyRunSummary& run) {
  json j = {{"epsilon", run.epsilon},
            {"trajectories", run.trajectories},
            {"shots", run.shots},
            {"mean_r", run.mean_r}};
  j["r_ovl"] = run.r_ovl ? json(*run.r_ovl) : json(nullptr);
  if (run.n_2q) {
    j["n_2q"] = *run.n_2q;
    j["epsilon_acc"] = static_cast<double>(*run.n_2q) * run.epsilon;
  }
  if (run.r_ideal) j["r_ideal"] = *run.r_ideal;
  if (run.r_random) j["r_random"] = *run.r_random;
  return j;
}

NoisyRunSummary noisy_run_from_json(const json& j) {
  NoisyRunSummary run;
  run.epsilon = field<double>(j, "epsilon");
  run.trajectories = field<std::uint64_t>(j, "trajectories");
  run.shots = field<std::uint64_t>(j, "shots");
  run.mean_r = field<double>(j, "mean_r");
  if (j.contains("r_ovl") && !j["r_ovl"].is_null()) run.r_ovl = j["r_ovl"].get<double>();
  if (j.contains("n_2q")) run.n_2q = j["n_2q"].get<std::uint64_t>();
  if (j.contains("r_ideal")) run.r_ideal = j["r_ideal"].get<double>();
  if (j.contains("r_random")) run.r_random = j["r_random"].get<double>();
  return run;
}

json to_json(const MeanOfMeans& m) {
  return {{"grand_mean", m.grand_mean}, {"sigma", m.sigma}, {"subsample_means", m.subsample_means}};
}

json to_json(const RegimeReport& report) {
  json j = {{"verdict", regime_name(report.verdict)},
            {"qpu_mean_r", report.qpu_mean_r},
            {"qpu_count", report.qpu_count},
            {"random_threshold", report.random_threshold},
            {"random", to_json(report.random_stats)},
            {"noiseless_unavailable", report.noiseless_unavailable},
            {"above_ideal", report.above_ideal},
            {"subsample_size", report.config.subsample_size},
            {"repeats", report.config.repeats},
            {"seed", report.config.rng_seed},
            {"replacement", report.config.replacement}};
  if (report.noiseless_stats) {
    j["noiseless"] = to_json(*report.noiseless_stats);
    j["noiseless_interval"] = {report.noiseless_interval->lower, report.noiseless_interval->upper};
  } else {
    j["noiseless"] = nullptr;
    j["noiseless_interval"] = nullptr;
  }
  return j;
}

json to_json(const NoiseFit& fit) {
  json points = json::array();
  for (std::size_t k = 0; k < fit.points.size(); ++k) {
    points.push_back({{"epsilon_acc", fit.points[k].epsilon_acc},
                      {"r_ovl", fit.points[k].r_ovl},
                      {"residual", fit.residuals[k]}});
  }
  return {{"k0", fit.k0},
          {"residual", fit.residual},
          {"r_squared", fit.r_squared},
          {"excluded", fit.excluded},
          {"points", std::move(points)}};
}

std::string kde_csv(const std::vector<KdePoint>& curve) {
  std::string out = "x,density\n";
  for (const auto& pt : curve) out += fmt::format("{:.17g},{:.17g}\n", pt.x, pt.density);
  return out;
}

namespace {

constexpr char kDumpMagic[8] = {'L', 'R', 'Q', 'S', 'V', '0', '0', '1'};

template <typename U>
void put_le(std::string& out, U value) {
  for (unsigned k = 0; k < sizeof(U); ++k) out.push_back(static_cast<char>((value >> (8 * k)) & 0xff));
}

template <typename U>
U get_le(const std::string& in, std::size_t& pos) {
  if (pos + sizeof(U) > in.size()) throw Error(Errc::invalid_argument, "state dump is truncated");
  U value = 0;
  for (unsigned k = 0; k < sizeof(U); ++k) {
    value |= static_cast<U>(static_cast<unsigned char>(in[pos + k])) << (8 * k);
  }
  pos += sizeof(U);
  return value;
}

}  // namespace

std::string state_dump(const StateVector& sv) {
  std::string out(kDumpMagic, sizeof(kDumpMagic));
  put_le<std::uint32_t>(out, sv.num_qubits());
  put_le<std::uint32_t>(out, sv.precision() == Precision::fp32 ? 32 : 64);
  sv.visit([&out](const auto& a) {
    using Real = typename std::decay_t<decltype(a)>::value_type::value_type;
    using Bits = std::conditional_t<sizeof(Real) == 4, std::uint32_t, std::uint64_t>;
    out.reserve(out.size() + a.size() * 2 * sizeof(Real));
    for (const auto& x : a) {
      put_le(out, std::bit_cast<Bits>(x.real()));
      put_le(out, std::bit_cast<Bits>(x.imag()));
    }
  });
  return out;
}

StateVector state_from_dump(const std::string& bytes) {
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kDumpMagic, sizeof(kDumpMagic)) != 0) {
    throw Error(Errc::invalid_argument, "not a state dump");
  }
  std::size_t pos = sizeof(kDumpMagic);
  const auto n = get_le<std::uint32_t>(bytes, pos);
  const auto bits = get_le<std::uint32_t>(bytes, pos);
  if (n > 40) throw Error(Errc::capacity, fmt::format("state dump of {} qubits is too large", n));
  const std::uint64_t size = std::uint64_t{1} << n;
  if (bits == 32) {
    StateVector::Amplitudes<float> a(size);
    for (auto& x : a) {
      const float re = std::bit_cast<float>(get_le<std::uint32_t>(bytes, pos));
      const float im = std::bit_cast<float>(get_le<std::uint32_t>(bytes, pos));
      x = {re, im};
    }
    return StateVector::from_amplitudes(std::move(a));
  }
  if (bits == 64) {
    StateVector::Amplitudes<double> a(size);
    for (auto& x : a) {
      const double re = std::bit_cast<double>(get_le<std::uint64_t>(bytes, pos));
      const double im = std::bit_cast<double>(get_le<std::uint64_t>(bytes, pos));
      x = {re, im};
    }
    return StateVector::from_amplitudes(std::move(a));
  }
  throw Error(Errc::invalid_argument, fmt::format("unknown precision tag {} in state dump", bits));
}

}  // namespace lrqaoa::io
