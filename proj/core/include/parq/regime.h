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
#include <string_view>

namespace parq {

/// The four (k vs d) cases of the parallel algorithm, each with its own cap on
/// targets per partition cell.
enum class Regime : uint8_t {
    kFewItems = 1,       // k <= sqrt(d)
    kModerate = 2,       // sqrt(d) < k <= d
    kMany = 3,           // d < k <= d lg d
    kVeryMany = 4,       // k > d lg d
};

std::string_view regime_name(Regime regime);

inline constexpr uint32_t kMaxRepetitions = 10;

struct RegimeParams {
    Regime regime = Regime::kFewItems;
    /// Per-cell target cap t.
    uint64_t cap = 1;
    uint32_t max_repetitions = kMaxRepetitions;
    /// d or k exceeds sqrt(N); the bounds are stated under d, k <= sqrt(N).
    bool assumption_violated = false;
};

/// t = 2, ceil(5 lg d), ceil(5 k lg d / d) or ceil(2k / d) by regime.
/// Throws std::invalid_argument when d or k is zero.
RegimeParams choose_regime(uint64_t address_count, uint64_t copies, uint64_t items);

/// max(lg d, 1); the degenerate lg 1 = 0 is replaced by 1.
double lg_at_least_one(uint64_t copies);

/// C(k, t) d^-t, the chance a fixed cell receives more than t of k targets
/// (union bound). Zero when t > k.
double maxload_bound(uint64_t items, uint64_t cap, uint64_t copies);

/// sqrt(N k lg d / (d min{k, d})) with lg d replaced by max(lg d, 1).
double upper_bound_formula(uint64_t address_count, uint64_t copies, uint64_t items);

/// The parallel-round bound for the regime of (d, k):
/// sqrt(N/d), sqrt(N k lg d / (d min{k, d})) or sqrt(N k) / d.
double regime_round_bound(uint64_t address_count, uint64_t copies, uint64_t items);

}  // namespace parq
