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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.
//
// Usage: parq_acceptance [path-to-parq-cli]
// Criterion 8 runs the CLI as a subprocess and is reported as FAIL when no
// CLI path is supplied.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "parq/adversary.h"
#include "parq/grover.h"
#include "parq/query_ledger.h"
#include "parq/regime.h"
#include "parq/search.h"
#include "parq/state_vector.h"
#include "parq_harness/experiment.h"

using namespace parq;
using namespace parq::harness;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

unsigned worker_count() {
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string fmt(const char *format, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c, d);
    return buf;
}

// 1. Simulated marked mass agrees with the closed form.
Verdict closed_form_agreement() {
    double worst = 0;
    int pairs = 0;
    for (unsigned bits = 1; bits <= 12; bits++) {
        uint64_t space = uint64_t{1} << bits;
        for (uint64_t marked : {1, 2, 4}) {
            if (marked > space) {
                continue;
            }
            pairs++;
            std::vector<Item> entries(space, 0);
            for (uint64_t i = 0; i < marked; i++) {
                entries[i * (space / marked)] = 1;
            }
            Database db(bits, 1, entries);
            std::vector<Item> target{1};
            MarkedPredicate predicate = MarkedPredicate::over_all(db, target);
            StateVector state = init_uniform(space);
            QueryLedger ledger;
            for (uint64_t r = 0; r <= 50; r++) {
                double simulated = state.mass(predicate.marked_indices());
                worst = std::max(worst, std::abs(simulated - success_probability(space, marked, r)));
                grover_iterate(state, predicate, ledger, 0);
            }
        }
    }
    return {worst <= 1e-9, fmt("max |simulated - closed form| = %.3g over %.0f (M,j) pairs x r=0..50", worst, pairs)};
}

// 2. One iteration on four addresses with one marked succeeds with certainty.
Verdict exact_small_case() {
    Database db(2, 1, {0, 0, 1, 0});
    std::vector<Item> target{1};
    MarkedPredicate predicate = MarkedPredicate::over_all(db, target);
    StateVector state = init_uniform(4);
    QueryLedger ledger;
    grover_iterate(state, predicate, ledger, 0);
    double p = state.probability(2);
    double closed = success_probability(4, 1, 1);
    bool pass = std::abs(p - 1.0) <= 1e-12 && std::abs(closed - 1.0) <= 1e-12 && ledger.total() == 1;
    return {pass, fmt("simulated p = %.17g, closed form = %.17g", p, closed)};
}

// 3. Single-copy multi-item search uses Theta(sqrt(N t)) queries.
Verdict multi_item_scaling() {
    constexpr uint64_t kItems = 4;
    constexpr uint64_t kTrials = 500;
    Verdict v;
    double lo = INFINITY, hi = 0;
    for (unsigned bits : {8u, 10u, 12u, 14u}) {
        uint64_t space = uint64_t{1} << bits;
        std::vector<uint64_t> queries(kTrials);
        std::vector<char> success(kTrials);
        std::vector<std::thread> pool;
        unsigned workers = worker_count();
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                for (uint64_t i = w; i < kTrials; i += workers) {
                    uint64_t seed = derive_seed(derive_seed(3, bits), i);
                    Rng db_rng(derive_seed(seed, 0xDB));
                    auto [db, targets] = make_experiment_database(bits, bits + 1, kItems, false, db_rng);
                    std::vector<Address> all(space);
                    for (Address a = 0; a < space; a++) {
                        all[a] = a;
                    }
                    SearchOutcome out = multi_item_search(db, all, targets, kItems, derive_seed(seed, 1));
                    queries[i] = out.ledger.total();
                    success[i] = out.success;
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
        double mean = 0, rate = 0;
        for (uint64_t i = 0; i < kTrials; i++) {
            mean += queries[i];
            rate += success[i];
        }
        mean /= kTrials;
        rate /= kTrials;
        double ratio = mean / std::sqrt(double(space) * kItems);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        bool ok = rate >= 0.75 && ratio >= 1.0 / 8 && ratio <= 4;
        v.pass = v.pass && ok;
        v.detail += fmt("N=2^%.0f: success=%.3f queries/sqrt(Nt)=%.3f; ", bits, rate, ratio);
    }
    v.detail += fmt("ratio spread [%.3f, %.3f] within [0.125, 4]", lo, hi);
    return v;
}

struct RegimeCell {
    unsigned address_bits;
    uint64_t copies;
    uint64_t items;
    ResultRecord record;
};

std::vector<RegimeCell> &regime_cells() {
    static std::vector<RegimeCell> cells = [] {
        std::vector<RegimeCell> out{{12, 64, 4, {}}, {12, 16, 16, {}}, {14, 8, 64, {}}};
        for (auto &cell : out) {
            ExperimentConfig c;
            c.address_bits = cell.address_bits;
            c.copies = cell.copies;
            c.items = cell.items;
            c.trials = 300;
            c.seed = 2026;
            c.threads = worker_count();
            cell.record = run_search_experiment(c);
        }
        return out;
    }();
    return cells;
}

// 4. Each regime stays within 4x its round bound and succeeds >= 3/4.
Verdict regime_envelopes() {
    Verdict v;
    for (const auto &cell : regime_cells()) {
        const auto &r = cell.record;
        double bound = regime_round_bound(uint64_t{1} << cell.address_bits, cell.copies, cell.items);
        bool ok = r.aggregates.success_rate >= 0.75 && r.aggregates.mean_rounds <= 4 * bound;
        v.pass = v.pass && ok;
        v.detail += fmt("(N=2^%.0f,d=%.0f,k=%.0f) ", cell.address_bits, cell.copies, cell.items);
        v.detail += fmt("regime %.0f success=%.3f rounds=%.1f <= %.1f; ", int(r.regime.regime), r.aggregates.success_rate,
                        r.aggregates.mean_rounds, 4 * bound);
    }
    return v;
}

// 5. The closed-form lower bound sits under 8x the measured rounds.
Verdict sandwich() {
    Verdict v;
    for (const auto &cell : regime_cells()) {
        double lower = closed_form_bound(uint64_t{1} << cell.address_bits, cell.copies, cell.items);
        bool ok = lower <= 8 * cell.record.aggregates.mean_rounds;
        v.pass = v.pass && ok;
        v.detail += fmt("lower=%.2f vs 8*rounds=%.1f; ", lower, 8 * cell.record.aggregates.mean_rounds);
    }
    return v;
}

// 6. Exhaustive adversary-graph statistics on every tiny instance.
Verdict adversary_brute_force() {
    Verdict v;
    int instances = 0, failures = 0;
    for (unsigned n = 1; n <= 3; n++) {
        for (unsigned m = 1; m <= 2; m++) {
            for (uint64_t d = 1; d <= 3; d++) {
                for (uint64_t k = 1; k <= 2; k++) {
                    if (k > (uint64_t{1} << (m - 1)) || k > (uint64_t{1} << n)) {
                        continue;
                    }
                    AdversaryReport r = run_adversary_check({.address_bits = n, .item_bits = m, .copies = d, .items = k});
                    instances++;
                    bool ok = r.all_claims_hold && r.dfold_stats.has_value() && *r.dfold_stats == r.stats;
                    if (!ok) {
                        failures++;
                        v.detail += fmt("failed (n=%.0f,m=%.0f,d=%.0f,k=%.0f); ", n, m, d, k);
                    }
                }
            }
        }
    }
    v.pass = failures == 0 && instances > 0;
    v.detail += fmt("%.0f instances, %.0f failures; both label-counting routes compared", instances, failures);
    return v;
}

// 7. Empirical max-load exceedance under the union bound.
Verdict maxload() {
    Verdict v;
    struct Case {
        uint64_t k, d, t;
    };
    for (Case c : {Case{8, 4, 4}, Case{16, 16, 20}, Case{32, 8, 8}}) {
        MaxloadRecord r = run_maxload_check({.items = c.k, .copies = c.d, .cap = c.t, .trials = 100000, .seed = 77});
        double limit = r.union_bound + 3 * r.standard_error;
        bool ok = r.empirical <= limit;
        v.pass = v.pass && ok;
        v.detail += fmt("(k=%.0f,d=%.0f,t=%.0f): ", c.k, c.d, c.t);
        v.detail += fmt("%.5f <= %.5f; ", r.empirical, limit);
    }
    return v;
}

int run_command(const std::string &command) {
    int status = std::system((command + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

// 8. Every subcommand is byte-for-byte reproducible for a fixed seed.
Verdict determinism(const std::string &cli) {
    if (cli.empty()) {
        return {false, "no CLI path given on the command line"};
    }
    const std::vector<std::string> commands{
        "search --n 10 --d 4 --k 4 --trials 20 --seed 8",
        "search --n 10 --d 4 --k 4 --trials 20 --seed 8 --format csv",
        "maxload --k 8 --d 4 --t 4 --trials 20000 --seed 8",
        "bounds --n 8,10 --d 1,4 --k 2 --trials 5 --seed 8",
        "adversary --n 3 --m 2 --d 3 --k 2",
    };
    Verdict v;
    auto dir = std::filesystem::temp_directory_path();
    int index = 0;
    for (const auto &c : commands) {
        auto a = dir / ("parq_acceptance_" + std::to_string(index) + "_a");
        auto b = dir / ("parq_acceptance_" + std::to_string(index) + "_b");
        int ea = run_command(cli + " " + c + " --out " + a.string());
        int eb = run_command(cli + " " + c + " --out " + b.string());
        std::string sa = slurp(a), sb = slurp(b);
        bool ok = ea == 0 && eb == 0 && !sa.empty() && sa == sb;
        if (!ok) {
            v.pass = false;
            v.detail += "mismatch or failure: " + c + "; ";
        }
        std::filesystem::remove(a);
        std::filesystem::remove(b);
        index++;
    }
    v.detail += std::to_string(commands.size()) + " invocations each run twice";
    return v;
}

}  // namespace

int main(int argc, char **argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"closed-form Grover agreement", closed_form_agreement},
        {"exact small case", exact_small_case},
        {"multi-item search scaling", multi_item_scaling},
        {"parallel regimes within envelope", regime_envelopes},
        {"lower/upper sandwich", sandwich},
        {"adversary brute force", adversary_brute_force},
        {"max-load bound", maxload},
        {"determinism", [&] { return determinism(cli); }},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu: %s (%.1fs) -- %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    seconds, v.detail.c_str());
        std::fflush(stdout);
        failed += !v.pass;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
