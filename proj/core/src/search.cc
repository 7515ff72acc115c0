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

#include "parq/search.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace parq {

TargetSet::TargetSet(std::vector<Item> items, unsigned item_bits) : items_(std::move(items)), item_bits_(item_bits) {
    if (items_.empty()) {
        throw std::invalid_argument("target set must contain at least one item");
    }
    std::vector<Item> sorted = items_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("target items must be pairwise distinct");
    }
    for (Item y : items_) {
        if (!fits_in_bits(y, item_bits_)) {
            throw std::invalid_argument("target item " + std::to_string(y) + " does not fit in " +
                                        std::to_string(item_bits_) + " bits");
        }
    }
}

bool TargetSet::contains(Item item) const {
    return std::find(items_.begin(), items_.end(), item) != items_.end();
}

SearchResult grover_search_known(const MarkedPredicate &marked, uint64_t assumed_count, Rng &rng,
                                 QueryLedger &ledger, size_t copy) {
    const uint64_t space = marked.domain_size();
    if (space == 0) {
        throw std::invalid_argument("cannot search an empty address set");
    }
    if (assumed_count == 0 || assumed_count > space) {
        throw std::invalid_argument("assumed marked count " + std::to_string(assumed_count) +
                                    " outside [1, " + std::to_string(space) + "]");
    }
    SearchResult result;
    result.queries = optimal_iterations(space, assumed_count);
    StateVector state = StateVector::uniform(space);
    for (uint64_t r = 0; r < result.queries; r++) {
        grover_iterate(state, marked, ledger, copy);
    }
    size_t local = measure(state, rng);
    if (marked.marked(local)) {
        result.address = marked.address(local);
    }
    return result;
}

namespace {

std::vector<Address> to_vector(std::span<const Address> s) {
    return {s.begin(), s.end()};
}

}  // namespace

SearchResult grover_search_known(const Database &db, std::span<const Address> subdomain, const TargetSet &targets,
                                 uint64_t assumed_count, uint64_t seed) {
    MarkedPredicate marked(db, targets.items(), to_vector(subdomain));
    Rng rng(seed);
    QueryLedger ledger;
    return grover_search_known(marked, assumed_count, rng, ledger, 0);
}

uint64_t bbht_query_cutoff(uint64_t space_size) {
    double root = std::sqrt(static_cast<double>(space_size));
    auto base = static_cast<uint64_t>(std::ceil(2.25 * root));
    auto stages = static_cast<uint64_t>(std::ceil(std::log(root) / std::log(kBbhtGrowth)));
    return base + 2 * stages;
}

SearchResult bbht_search_unknown(const MarkedPredicate &marked, Rng &rng, QueryLedger &ledger, size_t copy) {
    const uint64_t space = marked.domain_size();
    if (space == 0) {
        throw std::invalid_argument("cannot search an empty address set");
    }
    const double root = std::sqrt(static_cast<double>(space));
    const uint64_t cutoff = bbht_query_cutoff(space);

    SearchResult result;
    double stage_cap = 1.0;
    while (true) {
        auto iterations = rng.below(static_cast<uint64_t>(std::floor(std::min(stage_cap, root))) + 1);
        // Iterations plus the membership check of the measured address.
        if (result.queries + iterations + 1 > cutoff) {
            return result;
        }
        StateVector state = StateVector::uniform(space);
        for (uint64_t r = 0; r < iterations; r++) {
            grover_iterate(state, marked, ledger, copy);
        }
        size_t local = measure(state, rng);
        ledger.record(copy);
        result.queries += iterations + 1;
        if (marked.marked(local)) {
            result.address = marked.address(local);
            return result;
        }
        stage_cap *= kBbhtGrowth;
    }
}

SearchResult bbht_search_unknown(const Database &db, std::span<const Address> subdomain, const TargetSet &targets,
                                 uint64_t seed) {
    MarkedPredicate marked(db, targets.items(), to_vector(subdomain));
    Rng rng(seed);
    QueryLedger ledger;
    return bbht_search_unknown(marked, rng, ledger, 0);
}

CellSearchResult multi_item_search(const Database &db, std::span<const Address> subdomain,
                                   std::span<const Item> targets, uint64_t cap, Rng &rng, QueryLedger &ledger,
                                   size_t copy, MultiSearchOptions options) {
    CellSearchResult out;
    std::vector<Item> remaining(targets.begin(), targets.end());
    std::vector<Address> domain = to_vector(subdomain);
    const uint64_t before = ledger.count(copy);

    for (uint64_t step = 1; step <= cap; step++) {
        if (remaining.empty() || domain.empty()) {
            break;
        }
        uint64_t assumed = std::min<uint64_t>(cap - step + 1, domain.size());
        MarkedPredicate marked(db, remaining, domain);
        SearchResult found = grover_search_known(marked, assumed, rng, ledger, copy);
        if (!found.address && options.bbht_fallback) {
            found = bbht_search_unknown(marked, rng, ledger, copy);
        }
        if (!found.address) {
            continue;
        }
        Address x = *found.address;
        Item y = db.at(x);
        out.located.emplace(y, x);
        remaining.erase(std::find(remaining.begin(), remaining.end(), y));
        domain.erase(std::find(domain.begin(), domain.end(), x));
    }
    out.queries = ledger.count(copy) - before;
    return out;
}

SearchOutcome multi_item_search(const Database &db, std::span<const Address> subdomain, const TargetSet &targets,
                                uint64_t cap, uint64_t seed, MultiSearchOptions options) {
    SearchOutcome outcome;
    Rng rng(seed);
    CellSearchResult cell = multi_item_search(db, subdomain, targets.items(), cap, rng, outcome.ledger, 0, options);
    outcome.located = std::move(cell.located);
    outcome.parallel_rounds = outcome.ledger.rounds();
    outcome.repetitions = 1;
    outcome.success = outcome.located.size() == targets.size();
    return outcome;
}

bool verify_locations(const Database &db, const TargetSet &targets, SearchOutcome &outcome) {
    const uint64_t k = targets.size();
    const uint64_t d = outcome.ledger.copies();
    outcome.ledger.record_verification((k + d - 1) / d);
    if (outcome.located.size() != k) {
        return false;
    }
    for (Item y : targets.items()) {
        auto it = outcome.located.find(y);
        if (it == outcome.located.end() || it->second >= db.size() || db.at(it->second) != y) {
            return false;
        }
    }
    return true;
}

}  // namespace parq
