// Copyright 2026 The parq Authors
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

#include <cstdint>
#include <random>

namespace parq {

/// Derives a child seed from a parent seed and a stream index.
///
/// Derivation is a fixed splitmix64-style mix, so a tree of seeds
/// (trial -> repetition -> copy) is reproducible no matter which order or on
/// which thread the children are consumed.
uint64_t derive_seed(uint64_t parent, uint64_t stream);

/// Seeded generator. Every draw is computed from raw 64-bit engine output so
/// results do not depend on the standard library's distribution
/// implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    uint64_t seed() const {
        return seed_;
    }

    uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound);

    /// Independent generator for the given stream, derived from this one's seed.
    Rng split(uint64_t stream) const;

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace parq
