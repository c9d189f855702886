// Copyright 2026 The PCS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pcs {

/// Finalizer of SplitMix64. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Order-sensitive combination of two 64-bit words.
std::uint64_t hash_combine64(std::uint64_t seed, std::uint64_t value) noexcept;

/// FNV-1a over the bytes of `text`, then mixed.
std::uint64_t hash_string64(std::string_view text) noexcept;

/// Seeded random stream. The engine is mt19937_64 and normals come from
/// Boost's ziggurat sampler, so a given seed yields the same sequence on
/// every platform. Streams are single-owner; parallel callers split.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  /// Child stream for `index`. Depends only on (seed, index), never on how
  /// much of this stream has been consumed.
  RngStream split(std::uint64_t index) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace pcs
