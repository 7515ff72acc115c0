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

#include "parq_harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "parq/parallel_search.h"
#include "parq/partition.h"

namespace parq::harness {

namespace {

constexpr unsigned kMaxExperimentAddressBits = 24;
constexpr unsigned kMaxMaxloadAddressBits = 20;
constexpr uint64_t kDatabaseStream = 0xDB;
constexpr uint64_t kSearchStream = 1;

// Runs body(i) for i in [0, count) on up to `threads` workers. Results must be
// written to per-index slots; the first exception is rethrown.
void for_each_index(uint64_t count, unsigned threads, const std::function<void(uint64_t)> &body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<uint64_t>(count, 256))));
    if (threads == 1) {
        for (uint64_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    std::atomic<uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; w++) {
        workers.emplace_back([&] {
            while (true) {
                uint64_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto &w : workers) {
        w.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

double falling_factorial(double n, uint64_t count) {
    double out = 1;
    for (uint64_t i = 0; i < count; i++) {
        out *= n - static_cast<double>(i);
    }
    return out;
}

double factorial(uint64_t n) {
    return falling_factorial(static_cast<double>(n), n);
}

}  // namespace

unsigned ExperimentConfig::resolved_item_bits() const {
    return item_bits.value_or(address_bits + 1);
}

void ExperimentConfig::validate() const {
    if (address_bits > kMaxExperimentAddressBits) {
        throw UsageError("--n must be at most " + std::to_string(kMaxExperimentAddressBits));
    }
    const uint64_t n = address_count();
    if (trials == 0) {
        throw UsageError("--trials must be at least 1");
    }
    if (copies == 0 || copies > n) {
        throw UsageError("--d must be in [1, N=" + std::to_string(n) + "], got " + std::to_string(copies));
    }
    if (items == 0 || items > n) {
        throw UsageError("--k must be in [1, N=" + std::to_string(n) + "], got " + std::to_string(items));
    }
    if (cap && *cap == 0) {
        throw UsageError("--t must be at least 1");
    }
    if (threads == 0) {
        throw UsageError("--threads must be at least 1");
    }
    const unsigned m = resolved_item_bits();
    if (m == 0 || m > Database::kMaxItemBits) {
        throw UsageError("--m must be in [1, " + std::to_string(Database::kMaxItemBits) + "]");
    }
    const double values = std::ldexp(1.0, static_cast<int>(m));
    if (zero_filler) {
        if (static_cast<double>(items) > values - 1) {
            throw UsageError("--m too small: k non-zero targets need k <= 2^m - 1");
        }
    } else if (static_cast<double>(n + items) > values) {
        throw UsageError("--m too small: distinct fillers and targets need N + k <= 2^m");
    }
}

std::vector<std::string> ExperimentConfig::warnings() const {
    std::vector<std::string> out;
    const uint64_t n = address_count();
    if (copies * copies > n) {
        out.push_back("d=" + std::to_string(copies) + " exceeds 2^(n/2); round bounds assume d <= sqrt(N)");
    }
    if (items * items > n) {
        out.push_back("k=" + std::to_string(items) + " exceeds 2^(n/2); round bounds assume k <= sqrt(N)");
    }
    return out;
}

std::pair<Database, TargetSet> make_experiment_database(unsigned address_bits, unsigned item_bits, uint64_t items,
                                                        bool zero_filler, Rng &rng) {
    const uint64_t n = uint64_t{1} << address_bits;
    if (items == 0 || items > n) {
        throw std::invalid_argument("need 1 <= k <= N");
    }
    std::vector<Item> entries(n, 0);
    if (!zero_filler) {
        std::iota(entries.begin(), entries.end(), Item{0});
    }
    const Item first_target = zero_filler ? 1 : n;
    std::vector<Address> perm(n);
    std::iota(perm.begin(), perm.end(), Address{0});
    std::vector<Item> targets;
    for (uint64_t i = 0; i < items; i++) {
        std::swap(perm[i], perm[i + rng.below(n - i)]);
        entries[perm[i]] = first_target + i;
        targets.push_back(first_target + i);
    }
    return {Database(address_bits, item_bits, std::move(entries)), TargetSet(std::move(targets), item_bits)};
}

Aggregates aggregate(const std::vector<TrialRecord> &trials) {
    Aggregates a;
    if (trials.empty()) {
        return a;
    }
    std::vector<uint64_t> rounds;
    uint64_t successes = 0;
    double total = 0;
    for (const auto &t : trials) {
        rounds.push_back(t.parallel_rounds);
        total += static_cast<double>(t.parallel_rounds);
        successes += t.success;
    }
    std::sort(rounds.begin(), rounds.end());
    const size_t mid = rounds.size() / 2;
    a.median_rounds = rounds.size() % 2 == 1 ? static_cast<double>(rounds[mid])
                                             : (static_cast<double>(rounds[mid - 1]) + static_cast<double>(rounds[mid])) / 2;
    a.mean_rounds = total / static_cast<double>(trials.size());
    a.success_rate = static_cast<double>(successes) / static_cast<double>(trials.size());
    return a;
}

ResultRecord run_search_experiment(const ExperimentConfig &config) {
    config.validate();
    ResultRecord record;
    record.config = config;
    record.warnings = config.warnings();
    const uint64_t n = config.address_count();
    record.regime = choose_regime(n, config.copies, config.items);
    record.cap = config.cap.value_or(record.regime.cap);
    record.closed_form_bound = closed_form_bound(n, config.copies, config.items);
    record.regime_bound = regime_round_bound(n, config.copies, config.items);
    record.upper_formula = upper_bound_formula(n, config.copies, config.items);

    ParallelSearchOptions options;
    options.cap_override = config.cap;
    options.cell.bbht_fallback = config.bbht_fallback;

    const unsigned m = config.resolved_item_bits();
    record.trials.resize(config.trials);
    for_each_index(config.trials, config.threads, [&](uint64_t i) {
        const uint64_t trial_seed = derive_seed(config.seed, i);
        Rng db_rng(derive_seed(trial_seed, kDatabaseStream));
        auto [db, targets] = make_experiment_database(config.address_bits, m, config.items, config.zero_filler, db_rng);
        SearchOutcome out = parallel_search(db, config.copies, targets, derive_seed(trial_seed, kSearchStream), options);

        TrialRecord &t = record.trials[i];
        t.trial = i;
        t.success = out.success;
        t.parallel_rounds = out.parallel_rounds;
        t.per_copy_queries.assign(out.ledger.per_copy().begin(), out.ledger.per_copy().end());
        t.verification_rounds = out.ledger.verification();
        t.repetitions = out.repetitions;
        t.located = out.located.size();
    });
    record.aggregates = aggregate(record.trials);
    return record;
}

void MaxloadConfig::validate() const {
    if (address_bits > kMaxMaxloadAddressBits) {
        throw UsageError("--n must be at most " + std::to_string(kMaxMaxloadAddressBits) + " for maxload");
    }
    const uint64_t n = uint64_t{1} << address_bits;
    if (trials == 0) {
        throw UsageError("--trials must be at least 1");
    }
    if (copies == 0 || copies > n) {
        throw UsageError("--d must be in [1, N=" + std::to_string(n) + "]");
    }
    if (items == 0 || items > n) {
        throw UsageError("--k must be in [1, N=" + std::to_string(n) + "]");
    }
}

MaxloadRecord run_maxload_check(const MaxloadConfig &config) {
    config.validate();
    MaxloadRecord r;
    r.config = config;
    r.max_load_histogram.assign(config.items + 1, 0);
    const uint64_t n = uint64_t{1} << config.address_bits;
    std::vector<Address> targets(config.items);
    std::iota(targets.begin(), targets.end(), Address{0});
    Rng rng(config.seed);
    for (uint64_t i = 0; i < config.trials; i++) {
        auto loads = random_partition(n, config.copies, rng).loads(targets);
        uint64_t max_load = *std::max_element(loads.begin(), loads.end());
        r.max_load_histogram[max_load]++;
        r.exceed_count += max_load > config.cap;
    }
    const double trials = static_cast<double>(config.trials);
    r.empirical = static_cast<double>(r.exceed_count) / trials;
    r.standard_error = std::sqrt(r.empirical * (1 - r.empirical) / trials);
    r.cell_bound = maxload_bound(config.items, config.cap, config.copies);
    r.union_bound = static_cast<double>(config.copies) * r.cell_bound;
    r.within_bound = r.empirical <= r.union_bound + 3 * r.standard_error;
    return r;
}

std::vector<BoundsRow> run_bound_table(const BoundsConfig &config) {
    std::vector<BoundsRow> rows;
    uint64_t index = 0;
    for (unsigned n : config.address_bits) {
        for (uint64_t d : config.copies) {
            for (uint64_t k : config.items) {
                ExperimentConfig e;
                e.address_bits = n;
                e.copies = d;
                e.items = k;
                e.trials = config.trials;
                e.seed = derive_seed(config.seed, index++);
                e.threads = config.threads;
                e.bbht_fallback = config.bbht_fallback;
                ResultRecord rec = run_search_experiment(e);

                BoundsRow row;
                row.address_count = e.address_count();
                row.copies = d;
                row.items = k;
                row.regime = rec.regime.regime;
                row.cap = rec.cap;
                row.mean_rounds = rec.aggregates.mean_rounds;
                row.success_rate = rec.aggregates.success_rate;
                row.lower = rec.closed_form_bound;
                row.upper = rec.upper_formula;
                row.regime_bound = rec.regime_bound;
                row.ratio_lower = row.mean_rounds / row.lower;
                row.ratio_upper = row.mean_rounds / row.upper;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

AdversaryReport run_adversary_check(const InstanceFamily &family) {
    try {
        family.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    AdversaryGraph graph = build_adversary_graph(family);

    AdversaryReport r;
    r.family = family;
    r.zero_vertices = graph.zero_count();
    r.one_vertices = graph.one_count();
    r.edges = graph.edges().size();
    const uint64_t n = family.address_count();
    const uint64_t k = family.items;
    const uint64_t d = family.copies;
    const double binom = falling_factorial(static_cast<double>(n), k - 1) / factorial(k - 1);
    r.zero_count_factored = binom * factorial(k - 1) * static_cast<double>(k);
    r.zero_count_binomial_form = binom * factorial(k);
    r.one_count_formula = falling_factorial(static_cast<double>(n), k);

    r.stats = compute_stats(graph, LabelCounting::kBaseLocations);
    try {
        r.dfold_stats = compute_stats(graph, LabelCounting::kDFoldAddresses);
    } catch (const InfeasibleInstance &) {
        r.dfold_stats.reset();
    }

    auto claim = [](std::string name, std::string relation, uint64_t claimed, uint64_t enumerated) {
        bool holds = relation == "==" ? enumerated == claimed : enumerated <= claimed;
        return ClaimCheck{std::move(name), std::move(relation), claimed, enumerated, holds};
    };
    r.claims.push_back(claim("min_degree_zero", "==", n - k + 1, r.stats.min_degree_zero));
    r.claims.push_back(claim("min_degree_one", "==", k, r.stats.min_degree_one));
    r.claims.push_back(claim("max_label_zero", "<=", d, r.stats.max_label_zero));
    r.claims.push_back(claim("max_label_one", "<=", std::min(d, k), r.stats.max_label_one));

    r.closed_form_bound = closed_form_bound(n, d, k);
    r.ambainis_bound = ambainis_bound(r.stats);
    r.all_claims_hold = std::all_of(r.claims.begin(), r.claims.end(), [](const ClaimCheck &c) { return c.holds; }) &&
                        (!r.dfold_stats || *r.dfold_stats == r.stats);
    return r;
}

}  // namespace parq::harness
