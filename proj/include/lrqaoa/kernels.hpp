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

// Gate kernels on a flat amplitude span. Qubit k of the span is bit k of the
// local index. Every kernel touches disjoint pairs (one-qubit) or single
// entries (diagonal two-qubit) so work splits across threads without changing
// any result.

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>

namespace lrqaoa::kernels {

inline constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;

// Index of the n-th pair's lower member when bit q is spliced in as zero.
inline std::uint64_t insert_zero(std::uint64_t i, unsigned q) noexcept {
  const std::uint64_t low = (std::uint64_t{1} << q) - 1;
  return ((i & ~low) << 1) | (i & low);
}

template <typename Real>
void apply_2x2(std::span<std::complex<Real>> amps, unsigned q, const std::complex<double> (&m)[2][2],
               int threads) {
  using C = std::complex<Real>;
  const C m00(m[0][0]), m01(m[0][1]), m10(m[1][0]), m11(m[1][1]);
  const std::uint64_t half = amps.size() / 2;
  const std::uint64_t stride = std::uint64_t{1} << q;
  C* a = amps.data();
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1 && half >= kParallelThreshold)
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = insert_zero(k, q);
    const std::uint64_t i1 = i0 | stride;
    const C x0 = a[i0];
    const C x1 = a[i1];
    a[i0] = m00 * x0 + m01 * x1;
    a[i1] = m10 * x0 + m11 * x1;
  }
}

template <typename Real>
void apply_h(std::span<std::complex<Real>> amps, unsigned q, int threads) {
  const double s = 1.0 / std::sqrt(2.0);
  const std::complex<double> m[2][2] = {{s, s}, {s, -s}};
  apply_2x2(amps, q, m, threads);
}

template <typename Real>
void apply_rx(std::span<std::complex<Real>> amps, double theta, unsigned q, int threads) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const std::complex<double> m[2][2] = {{{c, 0.0}, {0.0, -s}}, {{0.0, -s}, {c, 0.0}}};
  apply_2x2(amps, q, m, threads);
}

template <typename Real>
void apply_rzz(std::span<std::complex<Real>> amps, double theta, unsigned i, unsigned j, int threads) {
  using C = std::complex<Real>;
  const C same(std::cos(theta / 2.0), -std::sin(theta / 2.0));
  const C diff(std::cos(theta / 2.0), std::sin(theta / 2.0));
  const std::uint64_t size = amps.size();
  C* a = amps.data();
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1 && size >= kParallelThreshold)
  for (std::uint64_t z = 0; z < size; ++z) {
    a[z] *= (((z >> i) ^ (z >> j)) & 1U) ? diff : same;
  }
}

template <typename Real>
void apply_x(std::span<std::complex<Real>> amps, unsigned q) {
  const std::uint64_t half = amps.size() / 2;
  const std::uint64_t stride = std::uint64_t{1} << q;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = insert_zero(k, q);
    std::swap(amps[i0], amps[i0 | stride]);
  }
}

// Y = [[0, -i], [i, 0]]
template <typename Real>
void apply_y(std::span<std::complex<Real>> amps, unsigned q) {
  using C = std::complex<Real>;
  const std::uint64_t half = amps.size() / 2;
  const std::uint64_t stride = std::uint64_t{1} << q;
  const C i_unit(0, 1);
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = insert_zero(k, q);
    const C x0 = amps[i0];
    const C x1 = amps[i0 | stride];
    amps[i0] = -i_unit * x1;
    amps[i0 | stride] = i_unit * x0;
  }
}

template <typename Real>
void apply_z(std::span<std::complex<Real>> amps, unsigned q) {
  const std::uint64_t half = amps.size() / 2;
  const std::uint64_t stride = std::uint64_t{1} << q;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i1 = insert_zero(k, q) | stride;
    amps[i1] = -amps[i1];
  }
}

}  // namespace lrqaoa::kernels
