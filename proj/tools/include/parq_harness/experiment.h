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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parq/adversary.h"
#include "parq/database.h"
#include "parq/regime.h"
#include "parq/rng.h"
#include "parq/search.h"

namespace parq::harness {

/// Version of the output documents' layout. Bumped on any field change.
inline constexpr const char *kSpecVersion = "1.0";

/// Bad parameters supplied by the caller; the CLI maps this to exit status 1.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { kJson, kCsv };

struct ExperimentConfig {
    unsigned address_bits = 10;
    /// Defaults to address_bits + 1, enough for distinct fillers plus targets.
    std::optional<unsigned> item_bits;
    uint64_t copies = 1;
    uint64_t items = 1;
    std::optional<uint64_t> cap;
    uint64_t trials = 1;
    uint64_t seed = 0;
    bool zero_filler = false;
    bool bbht_fallback = false;
    /// Worker threads for trials. Never affects results.
    unsigned threads = 1;

    unsigned resolved_item_bits() const;
    uint64_t address_count() const {
        return uint64_t{1} << address_bits;
    }
    /// Throws UsageError.
    void validate() const;
    /// Soft violations, e.g. d or k above 2^(n/2).
    std::vector<std::string> warnings() const;
};

/// A database for one trial: targets at k distinct uniformly random addresses.
///
/// With distinct fillers, address x holds x and the targets are N..N+k-1.
/// With the zero filler, every other address holds 0 and the targets are 1..k.
std::pair<Database, TargetSet> make_experiment_database(unsigned address_bits, unsigned item_bits, uint64_t items,
                                                        bool zero_filler, Rng &rng);

struct TrialRecord {
    uint64_t trial = 0;
    bool success = false;
    uint64_t parallel_rounds = 0;
    std::vector<uint64_t> per_copy_queries;
    uint64_t verification_rounds = 0;
    uint32_t repetitions = 0;
    uint64_t located = 0;
};

struct Aggregates {
    double mean_rounds = 0;
    double median_rounds = 0;
    double success_rate = 0;
};

Aggregates aggregate(const std::vector<TrialRecord> &trials);

struct ResultRecord {
    ExperimentConfig config;
    RegimeParams regime;
    uint64_t cap = 0;
    std::vector<std::string> warnings;
    std::vector<TrialRecord> trials;
    Aggregates aggregates;
    double closed_form_bound = 0;
    double regime_bound = 0;
    double upper_formula = 0;
};

/// Runs config.trials independent parallel searches. Trial i uses seed
/// derive_seed(config.seed, i), so output is identical for any thread count.
ResultRecord run_search_experiment(const ExperimentConfig &config);

struct MaxloadConfig {
    uint64_t items = 1;
    uint64_t copies = 1;
    uint64_t cap = 1;
    uint64_t trials = 1;
    uint64_t seed = 0;
    /// Partitions are of [2^address_bits]; the targets are addresses 0..k-1.
    unsigned address_bits = 8;

    void validate() const;
};

struct MaxloadRecord {
    MaxloadConfig config;
    uint64_t exceed_count = 0;
    double empirical = 0;
    double standard_error = 0;
    double cell_bound = 0;   // C(k,t) d^-t
    double union_bound = 0;  // d C(k,t) d^-t
    bool within_bound = false;
    /// histogram[L] = partitions whose largest cell load was L.
    std::vector<uint64_t> max_load_histogram;
};

MaxloadRecord run_maxload_check(const MaxloadConfig &config);

struct BoundsConfig {
    std::vector<unsigned> address_bits;
    std::vector<uint64_t> copies;
    std::vector<uint64_t> items;
    uint64_t trials = 1;
    uint64_t seed = 0;
    unsigned threads = 1;
    bool bbht_fallback = false;
};

struct BoundsRow {
    uint64_t address_count = 0;
    uint64_t copies = 0;
    uint64_t items = 0;
    Regime regime = Regime::kFewItems;
    uint64_t cap = 0;
    double mean_rounds = 0;
    double success_rate = 0;
    double lower = 0;
    double upper = 0;
    double regime_bound = 0;
    double ratio_lower = 0;
    double ratio_upper = 0;
};

/// One row per (n, d, k) in the Cartesian product of the sweep lists.
/// Row r runs its trials from seed derive_seed(config.seed, r).
std::vector<BoundsRow> run_bound_table(const BoundsConfig &config);

struct ClaimCheck {
    std::string name;
    std::string relation;  // "==" or "<="
    uint64_t claimed = 0;
    uint64_t enumerated = 0;
    bool holds = false;
};

struct AdversaryReport {
    InstanceFamily family;
    uint64_t zero_vertices = 0;
    uint64_t one_vertices = 0;
    uint64_t edges = 0;
    /// C(N, k-1) (k-1)! k, and the equivalent C(N, k-1) k!.
    double zero_count_factored = 0;
    double zero_count_binomial_form = 0;
    double one_count_formula = 0;
    AdversaryStats stats;
    /// Second route for l0/l1 (d-fold address scan) when it is affordable.
    std::optional<AdversaryStats> dfold_stats;
    std::vector<ClaimCheck> claims;
    double closed_form_bound = 0;
    double ambainis_bound = 0;
    bool all_claims_hold = false;
};

/// Throws UsageError on precondition failure, InfeasibleInstance if too large.
AdversaryReport run_adversary_check(const InstanceFamily &family);

std::string to_json(const ResultRecord &record);
std::string to_json(const MaxloadRecord &record);
std::string to_json(const BoundsConfig &config, const std::vector<BoundsRow> &rows);
std::string to_json(const AdversaryReport &report);

std::string to_csv(const ResultRecord &record);
std::string to_csv(const MaxloadRecord &record);
std::string to_csv(const std::vector<BoundsRow> &rows);
std::string to_csv(const AdversaryReport &report);

}  // namespace parq::harness
