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
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "parq/database.h"
#include "parq/grover.h"
#include "parq/query_ledger.h"
#include "parq/rng.h"

namespace parq {

/// k >= 1 pairwise-distinct m-bit items to be located.
class TargetSet {
   public:
    /// Throws std::invalid_argument on an empty list, duplicates, or items wider than item_bits.
    TargetSet(std::vector<Item> items, unsigned item_bits);

    size_t size() const {
        return items_.size();
    }
    std::span<const Item> items() const {
        return items_;
    }
    unsigned item_bits() const {
        return item_bits_;
    }
    bool contains(Item item) const;

   private:
    std::vector<Item> items_;
    unsigned item_bits_;
};

/// Result of a single-item search attempt.
struct SearchResult {
    std::optional<Address> address;
    uint64_t queries = 0;
};

/// Result of locating a whole target set.
struct SearchOutcome {
    /// item -> address where it was found. Every entry satisfies f(address) = item.
    std::map<Item, Address> located;
    /// All k items located (and, for parallel search, verified).
    bool success = false;
    /// Per-copy oracle queries summed over repetitions, plus verification rounds.
    QueryLedger ledger{1};
    /// Sum over repetitions of that repetition's max per-copy query count.
    uint64_t parallel_rounds = 0;
    uint32_t repetitions = 0;
    /// Some target is absent from the database, so success was never possible.
    bool promise_violated = false;
};

/// Known-count Grover search assuming `assumed_count` marked states.
///
/// Runs optimal_iterations(|S|, assumed_count) iterations from the uniform
/// state, measures once and keeps the result only if it is marked. The
/// membership check of the measured address is not charged.
SearchResult grover_search_known(const MarkedPredicate &marked, uint64_t assumed_count, Rng &rng,
                                 QueryLedger &ledger, size_t copy = 0);
SearchResult grover_search_known(const Database &db, std::span<const Address> subdomain, const TargetSet &targets,
                                 uint64_t assumed_count, uint64_t seed);

/// Growth factor of the iteration cutoff between stages of the unknown-count search.
inline constexpr double kBbhtGrowth = 6.0 / 5.0;

/// ceil(9/4 sqrt(M)) + 2 ceil(log_{6/5} sqrt(M)).
uint64_t bbht_query_cutoff(uint64_t space_size);

/// Unknown-count search with exponentially growing iteration cutoffs.
///
/// Stage s draws an iteration count uniformly from [0, min(1.2^s, sqrt(M))],
/// runs it, measures, and spends one more query checking the result. Gives up
/// before the total would exceed bbht_query_cutoff(M).
SearchResult bbht_search_unknown(const MarkedPredicate &marked, Rng &rng, QueryLedger &ledger, size_t copy = 0);
SearchResult bbht_search_unknown(const Database &db, std::span<const Address> subdomain, const TargetSet &targets,
                                 uint64_t seed);

struct MultiSearchOptions {
    /// After a failed known-count step, retry that step with bbht_search_unknown.
    bool bbht_fallback = false;
};

/// Items found by one run of the iterated search on one address set.
struct CellSearchResult {
    std::map<Item, Address> located;
    uint64_t queries = 0;
};

/// Iterated search for up to `cap` items of `targets` within `subdomain`.
///
/// Step i (i = 1..cap) runs a known-count search assuming cap - i + 1 marked
/// addresses. A found item leaves the target set and its address leaves the
/// search space. Stops early once every target is found.
CellSearchResult multi_item_search(const Database &db, std::span<const Address> subdomain,
                                   std::span<const Item> targets, uint64_t cap, Rng &rng, QueryLedger &ledger,
                                   size_t copy = 0, MultiSearchOptions options = {});

/// Single-copy convenience form. success means every target was located.
SearchOutcome multi_item_search(const Database &db, std::span<const Address> subdomain, const TargetSet &targets,
                                uint64_t cap, uint64_t seed, MultiSearchOptions options = {});

/// Classical check that `outcome` names a correct address for every target.
/// Charges ceil(k / d) verification rounds to outcome.ledger, d being its copy count.
bool verify_locations(const Database &db, const TargetSet &targets, SearchOutcome &outcome);

}  // namespace parq
