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

#include <cstddef>
#include <cstdint>
#include <optional>

#include "parq/database.h"
#include "parq/partition.h"
#include "parq/regime.h"
#include "parq/search.h"

namespace parq {

struct ParallelSearchOptions {
    /// Replaces the regime's per-cell cap t.
    std::optional<uint64_t> cap_override;
    uint32_t max_repetitions = kMaxRepetitions;
    MultiSearchOptions cell;
};

/// Seed used for the random partition of repetition `rep`.
uint64_t partition_seed(uint64_t seed, uint32_t rep);
/// Seed driving copy `copy`'s cell search in repetition `rep`.
uint64_t copy_seed(uint64_t seed, uint32_t rep, size_t copy);

/// Locates every target using d copies of the database queried in lockstep.
///
/// Each repetition draws a fresh random equipartition of [N] into d cells and
/// runs multi_item_search on every cell with one copy per cell, capped at
/// min(t, targets still missing). Items found in earlier repetitions stay
/// found. Repetitions stop once verify_locations passes or after
/// max_repetitions.
///
/// Throws std::invalid_argument when d is 0 or exceeds N.
SearchOutcome parallel_search(const Database &db, uint64_t copies, const TargetSet &targets, uint64_t seed,
                              ParallelSearchOptions options = {});

}  // namespace parq
