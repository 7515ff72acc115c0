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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "parq/adversary.h"
#include "parq_harness/experiment.h"

using namespace parq;
using namespace parq::harness;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

struct Output {
    std::string path;
    OutputFormat format = OutputFormat::kJson;
};

void add_output_flags(CLI::App *cmd, Output &out) {
    cmd->add_option("--out", out.path, "Output file (default: stdout)");
    cmd->add_option("--format", out.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}}));
}

void emit(const Output &out, const std::string &text) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw UsageError("cannot open output file " + out.path);
    }
    f << text;
}

template <typename Record>
std::string render(const Output &out, const Record &record) {
    return out.format == OutputFormat::kJson ? to_json(record) : to_csv(record);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"parq: parallel-query quantum search simulator and bound checker"};
    app.require_subcommand(1);
    const unsigned default_threads = std::max(1u, std::thread::hardware_concurrency());

    ExperimentConfig search;
    search.threads = default_threads;
    Output search_out;
    unsigned search_m = 0;
    uint64_t search_t = 0;
    auto *search_cmd = app.add_subcommand("search", "Monte-Carlo runs of the parallel search algorithm");
    search_cmd->add_option("--n", search.address_bits, "Address width; N = 2^n")->capture_default_str();
    auto *m_opt = search_cmd->add_option("--m", search_m, "Item width (default n + 1)");
    search_cmd->add_option("--d", search.copies, "Database copies")->capture_default_str();
    search_cmd->add_option("--k", search.items, "Target items")->capture_default_str();
    auto *t_opt = search_cmd->add_option("--t", search_t, "Override the per-cell item cap");
    search_cmd->add_option("--trials", search.trials)->capture_default_str();
    search_cmd->add_option("--seed", search.seed)->capture_default_str();
    search_cmd->add_flag("--zero-filler", search.zero_filler, "Non-target addresses hold 0 instead of distinct items");
    search_cmd->add_flag("--bbht-fallback", search.bbht_fallback,
                         "Retry failed known-count steps with the unknown-count search");
    search_cmd->add_option("--threads", search.threads, "Worker threads (results do not depend on this)");
    add_output_flags(search_cmd, search_out);

    MaxloadConfig maxload;
    Output maxload_out;
    auto *maxload_cmd = app.add_subcommand("maxload", "Random-partition max-load check against the union bound");
    maxload_cmd->add_option("--n", maxload.address_bits, "Address width of the partitioned set")->capture_default_str();
    maxload_cmd->add_option("--k", maxload.items)->capture_default_str();
    maxload_cmd->add_option("--d", maxload.copies)->capture_default_str();
    maxload_cmd->add_option("--t", maxload.cap, "Load cap")->capture_default_str();
    maxload_cmd->add_option("--trials", maxload.trials)->capture_default_str();
    maxload_cmd->add_option("--seed", maxload.seed)->capture_default_str();
    add_output_flags(maxload_cmd, maxload_out);

    BoundsConfig bounds;
    bounds.threads = default_threads;
    Output bounds_out;
    auto *bounds_cmd = app.add_subcommand("bounds", "Measured rounds against the lower and upper bound formulas");
    bounds_cmd->add_option("--n", bounds.address_bits, "Comma-separated address widths")->delimiter(',');
    bounds_cmd->add_option("--d", bounds.copies, "Comma-separated copy counts")->delimiter(',');
    bounds_cmd->add_option("--k", bounds.items, "Comma-separated item counts")->delimiter(',');
    bounds_cmd->add_option("--trials", bounds.trials)->capture_default_str();
    bounds_cmd->add_option("--seed", bounds.seed)->capture_default_str();
    bounds_cmd->add_flag("--bbht-fallback", bounds.bbht_fallback);
    bounds_cmd->add_option("--threads", bounds.threads);
    add_output_flags(bounds_cmd, bounds_out);

    InstanceFamily family;
    Output adversary_out;
    auto *adversary_cmd = app.add_subcommand("adversary", "Brute-force adversary graph statistics");
    adversary_cmd->add_option("--n", family.address_bits)->capture_default_str();
    adversary_cmd->add_option("--m", family.item_bits)->capture_default_str();
    adversary_cmd->add_option("--d", family.copies)->capture_default_str();
    adversary_cmd->add_option("--k", family.items)->capture_default_str();
    add_output_flags(adversary_cmd, adversary_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*search_cmd) {
            if (*m_opt) {
                search.item_bits = search_m;
            }
            if (*t_opt) {
                search.cap = search_t;
            }
            search.validate();
            for (const auto &w : search.warnings()) {
                std::cerr << "warning: " << w << "\n";
            }
            emit(search_out, render(search_out, run_search_experiment(search)));
        } else if (*maxload_cmd) {
            emit(maxload_out, render(maxload_out, run_maxload_check(maxload)));
        } else if (*bounds_cmd) {
            if (bounds.trials == 0) {
                throw UsageError("--trials must be at least 1");
            }
            auto rows = run_bound_table(bounds);
            emit(bounds_out, bounds_out.format == OutputFormat::kJson ? to_json(bounds, rows) : to_csv(rows));
        } else if (*adversary_cmd) {
            emit(adversary_out, render(adversary_out, run_adversary_check(family)));
        }
    } catch (const InfeasibleInstance &e) {
        std::cerr << "infeasible: " << e.what() << " (estimate " << e.estimate() << ")\n";
        return kExitInfeasible;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
