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

#include "parq/parallel_search.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace parq {

namespace {

constexpr uint64_t kPartitionStream = 0x7061727469746eULL;

uint64_t repetition_seed(uint64_t seed, uint32_t rep) {
    return derive_seed(seed, rep);
}

}  // namespace

uint64_t partition_seed(uint64_t seed, uint32_t rep) {
    return derive_seed(repetition_seed(seed, rep), kPartitionStream);
}

uint64_t copy_seed(uint64_t seed, uint32_t rep, size_t copy) {
    return derive_seed(repetition_seed(seed, rep), copy);
}

SearchOutcome parallel_search(const Database &db, uint64_t copies, const TargetSet &targets, uint64_t seed,
                              ParallelSearchOptions options) {
    const uint64_t n = db.size();
    if (copies == 0 || copies > n) {
        throw std::invalid_argument("copy count d=" + std::to_string(copies) + " must be in [1, N=" +
                                    std::to_string(n) + "]");
    }
    const RegimeParams regime = choose_regime(n, copies, targets.size());
    const uint64_t cap = options.cap_override.value_or(regime.cap);

    SearchOutcome outcome;
    outcome.ledger = QueryLedger(copies);
    for (Item y : targets.items()) {
        auto entries = db.entries();
        if (std::find(entries.begin(), entries.end(), y) == entries.end()) {
            outcome.promise_violated = true;
        }
    }

    for (uint32_t rep = 0; rep < options.max_repetitions; rep++) {
        std::vector<Item> missing;
        for (Item y : targets.items()) {
            if (!outcome.located.contains(y)) {
                missing.push_back(y);
            }
        }
        const uint64_t cell_cap = std::min<uint64_t>(cap, missing.size());

        Partition partition = random_partition(n, copies, partition_seed(seed, rep));
        QueryLedger round_ledger(copies);
        for (size_t c = 0; c < copies; c++) {
            Rng rng(copy_seed(seed, rep, c));
            CellSearchResult cell =
                multi_item_search(db, partition.cell(c), missing, cell_cap, rng, round_ledger, c, options.cell);
            outcome.located.insert(cell.located.begin(), cell.located.end());
        }
        outcome.parallel_rounds += round_ledger.rounds();
        outcome.ledger.absorb(round_ledger);
        outcome.repetitions = rep + 1;

        if (verify_locations(db, targets, outcome)) {
            outcome.success = true;
            break;
        }
    }
    return outcome;
}

}  // namespace parq
