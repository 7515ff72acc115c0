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

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <numeric>
#include <set>

#include "parq/partition.h"
#include "parq/regime.h"

using namespace parq;

TEST(Partition, single_cell_is_everything) {
    Partition p = random_partition(16, 1, 3);
    ASSERT_EQ(p.cell_count(), 1u);
    auto cell = p.cell(0);
    ASSERT_EQ(cell.size(), 16u);
    for (Address x = 0; x < 16; x++) {
        ASSERT_EQ(cell[x], x);
    }
}

TEST(Partition, eight_into_four) {
    Partition p = random_partition(8, 4, 12);
    std::set<Address> seen;
    for (size_t c = 0; c < 4; c++) {
        ASSERT_EQ(p.cell(c).size(), 2u);
        for (Address x : p.cell(c)) {
            ASSERT_TRUE(seen.insert(x).second);
            ASSERT_EQ(p.cell_of(x), c);
        }
    }
    ASSERT_EQ(seen.size(), 8u);
}

TEST(Partition, rejects_too_many_cells) {
    ASSERT_THROW(random_partition(8, 9, 1), std::invalid_argument);
    ASSERT_THROW(random_partition(8, 0, 1), std::invalid_argument);
}

TEST(Partition, soundness_for_many_seeds) {
    Rng gen(4);
    for (int trial = 0; trial < 300; trial++) {
        uint64_t n = 1 + gen.below(300);
        uint64_t d = 1 + gen.below(n);
        Partition p = random_partition(n, d, gen.next_u64());
        ASSERT_EQ(p.cell_count(), d);
        std::vector<int> hit(n, 0);
        for (size_t c = 0; c < d; c++) {
            auto cell = p.cell(c);
            ASSERT_GE(cell.size(), n / d);
            ASSERT_LE(cell.size(), (n + d - 1) / d);
            ASSERT_TRUE(std::is_sorted(cell.begin(), cell.end()));
            for (Address x : cell) {
                hit[x]++;
            }
        }
        for (int h : hit) {
            ASSERT_EQ(h, 1);
        }
    }
}

TEST(Partition, cell_membership_is_uniform) {
    // P(address 5 lands in cell 2) = 1/4 for a uniform split of 16 into 4.
    const int trials = 40000;
    int hits = 0;
    for (int i = 0; i < trials; i++) {
        hits += random_partition(16, 4, derive_seed(17, i)).cell_of(5) == 2;
    }
    ASSERT_NEAR(static_cast<double>(hits) / trials, 0.25, 0.01);
}

TEST(Partition, load_never_exceeds_cap_when_cap_above_k) {
    std::vector<Address> targets{0, 1, 2, 3, 4, 5, 6, 7};
    Rng rng(8);
    for (int i = 0; i < 100000; i++) {
        auto loads = random_partition(1024, 16, rng).loads(targets);
        ASSERT_LE(*std::max_element(loads.begin(), loads.end()), 20u);
    }
}

TEST(Partition, max_load_respects_union_bound) {
    const uint64_t k = 8, d = 4, t = 4;
    std::vector<Address> targets(k);
    std::iota(targets.begin(), targets.end(), Address{0});
    Rng rng(21);
    const int trials = 20000;
    int exceed = 0;
    for (int i = 0; i < trials; i++) {
        auto loads = random_partition(256, d, rng).loads(targets);
        exceed += *std::max_element(loads.begin(), loads.end()) > t;
    }
    double p = static_cast<double>(exceed) / trials;
    double se = std::sqrt(p * (1 - p) / trials);
    ASSERT_LE(p, d * maxload_bound(k, t, d) + 3 * se);
}

TEST(Regime, four_cases) {
    auto r1 = choose_regime(1 << 12, 64, 4);
    ASSERT_EQ(r1.regime, Regime::kFewItems);
    ASSERT_EQ(r1.cap, 2u);
    ASSERT_EQ(r1.max_repetitions, 10u);

    auto r2 = choose_regime(1 << 12, 16, 10);
    ASSERT_EQ(r2.regime, Regime::kModerate);
    ASSERT_EQ(r2.cap, 20u);

    auto r3 = choose_regime(1 << 12, 16, 32);
    ASSERT_EQ(r3.regime, Regime::kMany);
    ASSERT_EQ(r3.cap, 40u);  // ceil(5 * 32 * 4 / 16)

    auto r4 = choose_regime(1 << 12, 4, 64);
    ASSERT_EQ(r4.regime, Regime::kVeryMany);
    ASSERT_EQ(r4.cap, 32u);
}

TEST(Regime, boundaries_and_warnings) {
    // k = sqrt(d) exactly belongs to the first case.
    ASSERT_EQ(choose_regime(1 << 12, 16, 4).regime, Regime::kFewItems);
    ASSERT_EQ(choose_regime(1 << 12, 16, 5).regime, Regime::kModerate);
    ASSERT_EQ(choose_regime(1 << 12, 16, 16).regime, Regime::kModerate);
    // k = d lg d exactly belongs to the third case.
    ASSERT_EQ(choose_regime(1 << 12, 16, 64).regime, Regime::kMany);
    ASSERT_EQ(choose_regime(1 << 12, 16, 65).regime, Regime::kVeryMany);
    ASSERT_EQ(choose_regime(1 << 12, 1, 1).cap, 2u);
    ASSERT_EQ(choose_regime(1 << 12, 1, 3).regime, Regime::kVeryMany);

    ASSERT_FALSE(choose_regime(1 << 12, 64, 64).assumption_violated);
    ASSERT_TRUE(choose_regime(1 << 12, 65, 4).assumption_violated);
    ASSERT_TRUE(choose_regime(1 << 12, 4, 65).assumption_violated);
    ASSERT_THROW(choose_regime(16, 0, 1), std::invalid_argument);
}

TEST(MaxloadBound, values) {
    ASSERT_DOUBLE_EQ(maxload_bound(2, 2, 4), 0.0625);
    ASSERT_DOUBLE_EQ(maxload_bound(1, 1, 1), 1.0);
    ASSERT_NEAR(maxload_bound(4, 2, 64), 6.0 / 4096, 1e-15);
    ASSERT_NEAR(4 * maxload_bound(8, 4, 4), 1.09375, 1e-12);
    ASSERT_NEAR(8 * maxload_bound(32, 8, 8), 5.01551628112793, 1e-9);
    ASSERT_EQ(maxload_bound(16, 20, 16), 0.0);
}

TEST(RoundBounds, formulas) {
    ASSERT_DOUBLE_EQ(upper_bound_formula(1024, 1, 1), 32.0);
    ASSERT_DOUBLE_EQ(regime_round_bound(1 << 12, 64, 4), 8.0);
    ASSERT_DOUBLE_EQ(regime_round_bound(1 << 12, 16, 16), 32.0);
    ASSERT_DOUBLE_EQ(regime_round_bound(1 << 14, 8, 64), 128.0);
    ASSERT_DOUBLE_EQ(regime_round_bound(1 << 10, 4, 2), 16.0);
    ASSERT_DOUBLE_EQ(lg_at_least_one(1), 1.0);
    ASSERT_DOUBLE_EQ(lg_at_least_one(8), 3.0);
}
