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

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <numeric>

using namespace parq;

namespace {

// Targets 2^n .. 2^n + k - 1 at k distinct random addresses; every other
// address x holds x.
struct Instance {
    Database db;
    TargetSet targets;
};

Instance random_instance(unsigned n, uint64_t k, uint64_t seed) {
    const uint64_t size = uint64_t{1} << n;
    std::vector<Item> entries(size);
    std::iota(entries.begin(), entries.end(), Item{0});
    std::vector<Address> perm(size);
    std::iota(perm.begin(), perm.end(), Address{0});
    Rng rng(seed);
    std::vector<Item> items;
    for (uint64_t i = 0; i < k; i++) {
        std::swap(perm[i], perm[i + rng.below(size - i)]);
        entries[perm[i]] = size + i;
        items.push_back(size + i);
    }
    return {Database(n, n + 1, entries), TargetSet(items, n + 1)};
}

struct Summary {
    double success_rate;
    double mean_rounds;
};

Summary run_trials(unsigned n, uint64_t d, uint64_t k, int trials, uint64_t seed) {
    int ok = 0;
    uint64_t rounds = 0;
    for (int i = 0; i < trials; i++) {
        Instance inst = random_instance(n, k, derive_seed(seed, 2 * i));
        SearchOutcome out = parallel_search(inst.db, d, inst.targets, derive_seed(seed, 2 * i + 1));
        ok += out.success;
        rounds += out.parallel_rounds;
    }
    return {static_cast<double>(ok) / trials, static_cast<double>(rounds) / trials};
}

}  // namespace

TEST(ParallelSearch, single_copy_reduces_to_multi_item_search) {
    for (uint64_t trial = 0; trial < 60; trial++) {
        Instance inst = random_instance(8, 1 + trial % 5, trial);
        const uint64_t seed = derive_seed(1000, trial);
        SearchOutcome par = parallel_search(inst.db, 1, inst.targets, seed);

        std::vector<Address> all(inst.db.size());
        std::iota(all.begin(), all.end(), Address{0});
        SearchOutcome single =
            multi_item_search(inst.db, all, inst.targets, inst.targets.size(), copy_seed(seed, 0, 0));
        if (single.success) {
            ASSERT_EQ(par.repetitions, 1u);
            ASSERT_EQ(par.located, single.located);
            ASSERT_EQ(par.ledger.count(0), single.ledger.count(0));
            ASSERT_EQ(par.parallel_rounds, single.parallel_rounds);
        } else {
            ASSERT_GT(par.repetitions, 1u);
        }
    }
}

TEST(ParallelSearch, case_one_envelope) {
    Summary s = run_trials(10, 4, 2, 1000, 77);
    ASSERT_GE(s.success_rate, 0.75);
    ASSERT_LE(s.mean_rounds, 4 * std::sqrt(1024.0 / 4));
}

TEST(ParallelSearch, case_two_envelope) {
    Summary s = run_trials(12, 16, 16, 1000, 78);
    ASSERT_GE(s.success_rate, 0.75);
    ASSERT_LE(s.mean_rounds, 128.0);
}

TEST(ParallelSearch, ledger_consistency_and_soundness) {
    for (uint64_t trial = 0; trial < 80; trial++) {
        uint64_t d = 1 + trial % 7;
        Instance inst = random_instance(9, 1 + trial % 9, trial + 500);
        SearchOutcome out = parallel_search(inst.db, d, inst.targets, trial);
        ASSERT_EQ(out.ledger.copies(), d);
        ASSERT_GE(out.parallel_rounds, out.ledger.rounds());
        ASSERT_LE(out.parallel_rounds, out.ledger.total());
        if (out.repetitions == 1) {
            ASSERT_EQ(out.parallel_rounds, out.ledger.rounds());
        }
        uint64_t per_verify = (inst.targets.size() + d - 1) / d;
        ASSERT_EQ(out.ledger.verification(), per_verify * out.repetitions);
        for (auto [item, x] : out.located) {
            ASSERT_EQ(inst.db.at(x), item);
        }
        if (out.success) {
            ASSERT_EQ(out.located.size(), inst.targets.size());
        }
    }
}

TEST(ParallelSearch, deterministic_for_fixed_seed) {
    Instance inst = random_instance(10, 6, 3);
    SearchOutcome a = parallel_search(inst.db, 5, inst.targets, 99);
    SearchOutcome b = parallel_search(inst.db, 5, inst.targets, 99);
    ASSERT_EQ(a.located, b.located);
    ASSERT_EQ(a.parallel_rounds, b.parallel_rounds);
    ASSERT_TRUE(std::equal(a.ledger.per_copy().begin(), a.ledger.per_copy().end(), b.ledger.per_copy().begin()));
}

TEST(ParallelSearch, uneven_cells) {
    Instance inst = random_instance(8, 3, 12);
    SearchOutcome out = parallel_search(inst.db, 3, inst.targets, 4);
    ASSERT_TRUE(out.success);
}

TEST(ParallelSearch, promise_violation_is_flagged) {
    Instance inst = random_instance(6, 2, 1);
    TargetSet with_absent({64, 65, 100}, 7);
    SearchOutcome out = parallel_search(inst.db, 2, with_absent, 5);
    ASSERT_TRUE(out.promise_violated);
    ASSERT_FALSE(out.success);
    ASSERT_EQ(out.repetitions, kMaxRepetitions);
    for (auto [item, x] : out.located) {
        ASSERT_EQ(inst.db.at(x), item);
    }
}

TEST(ParallelSearch, cap_override_is_used) {
    Instance inst = random_instance(8, 4, 2);
    ParallelSearchOptions opts;
    opts.cap_override = 1;
    opts.max_repetitions = 1;
    SearchOutcome out = parallel_search(inst.db, 1, inst.targets, 4, opts);
    // One step with one assumed item finds at most one.
    ASSERT_LE(out.located.size(), 1u);
}

TEST(ParallelSearch, rejects_bad_copy_count) {
    Instance inst = random_instance(3, 1, 1);
    ASSERT_THROW(parallel_search(inst.db, 9, inst.targets, 1), std::invalid_argument);
    ASSERT_THROW(parallel_search(inst.db, 0, inst.targets, 1), std::invalid_argument);
}

TEST(ParallelSearch, scaling_ratio_is_bounded) {
    const uint64_t d = 4, k = 4;
    for (unsigned n = 8; n <= 14; n++) {
        Summary s = run_trials(n, d, k, 40, 1234 + n);
        double ratio = s.mean_rounds / upper_bound_formula(uint64_t{1} << n, d, k);
        ASSERT_GE(ratio, 1.0 / 8) << "n=" << n;
        ASSERT_LE(ratio, 4.0) << "n=" << n;
    }
}
