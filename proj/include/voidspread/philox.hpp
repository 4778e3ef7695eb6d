// Copyright 2026 The voidspread Authors
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

// Counter-based randomness: the Philox-4x32-10 block function and small
// helpers that turn blocks into uniforms and Gaussians. A draw is addressed
// by an explicit (position, stream, sample) counter plus a 64-bit key, so
// any element of any random object can be regenerated independently and in
// parallel with bit-identical results.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace voidspread {

// One application of the Philox-4x32 bijection with 10 rounds (the standard
// multipliers 0xD2511F53 / 0xCD9E8D57 and Weyl key increments 0x9E3779B9 /
// 0xBB67AE85).
inline std::array<std::uint32_t, 4> philox4x32(
    std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round != 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    const std::uint64_t product0 =
        static_cast<std::uint64_t>(kMul0) * counter[0];
    const std::uint64_t product1 =
        static_cast<std::uint64_t>(kMul1) * counter[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(product0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(product0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(product1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(product1);
    counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
  }
  return counter;
}

// 53-bit uniform in [0, 1) from two 32-bit words.
inline double uniform_from_words(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t bits =
      (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// One standard complex Gaussian (independent N(0,1) real and imaginary
// parts) per block, via Box-Muller on the block's two uniforms.
inline std::complex<double> complex_gaussian_from_block(
    const std::array<std::uint32_t, 4> &block) {
  // 1 - u in (0, 1] keeps the logarithm finite.
  const double u1 = 1.0 - uniform_from_words(block[0], block[1]);
  const double u2 = uniform_from_words(block[2], block[3]);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

// Addressed Gaussian stream: draw `position` of stream `stream` of sample
// `sample`, all under one 64-bit seed. Distinct addresses give independent
// values; identical addresses always reproduce the same value.
inline std::complex<double> addressed_complex_gaussian(std::uint64_t seed,
                                                       std::uint32_t position,
                                                       std::uint32_t stream,
                                                       std::uint32_t sample) {
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed),
      static_cast<std::uint32_t>(seed >> 32)};
  return complex_gaussian_from_block(
      philox4x32({position, stream, sample, 0u}, key));
}

}  // namespace voidspread
