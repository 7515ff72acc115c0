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

#include "parq/rng.h"

#include <stdexcept>

namespace parq {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t derive_seed(uint64_t parent, uint64_t stream) {
    return splitmix64(splitmix64(parent) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

Rng::Rng(uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {
}

uint64_t Rng::next_u64() {
    return engine_();
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::below requires a positive bound");
    }
    // Rejection sampling on the largest multiple of bound.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
        uint64_t v = engine_();
        if (v < limit) {
            return v % bound;
        }
    }
}

Rng Rng::split(uint64_t stream) const {
    return Rng(derive_seed(seed_, stream));
}

}  // namespace parq
