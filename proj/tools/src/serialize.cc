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

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "parq_harness/experiment.h"

namespace parq::harness {

using Json = nlohmann::ordered_json;

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

Json header(const char *command) {
    Json j;
    j["spec_version"] = kSpecVersion;
    j["command"] = command;
    return j;
}

Json regime_json(const RegimeParams &r, uint64_t cap, uint64_t items) {
    Json j;
    j["case"] = static_cast<int>(r.regime);
    j["name"] = std::string(regime_name(r.regime));
    j["regime_cap"] = r.cap;
    j["cap"] = cap;
    j["effective_cap"] = std::min(cap, items);
    j["max_repetitions"] = r.max_repetitions;
    j["assumption_violated"] = r.assumption_violated;
    return j;
}

}  // namespace

std::string to_json(const ResultRecord &record) {
    const ExperimentConfig &c = record.config;
    Json j = header("search");
    Json cfg;
    cfg["n"] = c.address_bits;
    cfg["N"] = c.address_count();
    cfg["m"] = c.resolved_item_bits();
    cfg["d"] = c.copies;
    cfg["k"] = c.items;
    cfg["t"] = c.cap ? Json(*c.cap) : Json(nullptr);
    cfg["trials"] = c.trials;
    cfg["seed"] = c.seed;
    cfg["filler"] = c.zero_filler ? "zero" : "distinct";
    cfg["bbht_fallback"] = c.bbht_fallback;
    j["config"] = cfg;
    j["regime"] = regime_json(record.regime, record.cap, c.items);
    j["warnings"] = record.warnings;

    Json trials = Json::array();
    for (const auto &t : record.trials) {
        Json tj;
        tj["trial"] = t.trial;
        tj["success"] = t.success;
        tj["parallel_rounds"] = t.parallel_rounds;
        tj["per_copy_queries"] = t.per_copy_queries;
        tj["verification_rounds"] = t.verification_rounds;
        tj["repetitions"] = t.repetitions;
        tj["located"] = t.located;
        trials.push_back(tj);
    }
    j["trials"] = trials;

    Json agg;
    agg["mean_rounds"] = record.aggregates.mean_rounds;
    agg["median_rounds"] = record.aggregates.median_rounds;
    agg["success_rate"] = record.aggregates.success_rate;
    j["aggregates"] = agg;

    Json ref;
    ref["closed_form_bound"] = record.closed_form_bound;
    ref["regime_bound"] = record.regime_bound;
    ref["regime_envelope"] = 4 * record.regime_bound;
    ref["upper_formula"] = record.upper_formula;
    j["reference"] = ref;
    return dump(j);
}

std::string to_csv(const ResultRecord &record) {
    const ExperimentConfig &c = record.config;
    std::ostringstream out;
    out << "n,N,d,k,t,regime,trials,seed,success_rate,mean_rounds,median_rounds,closed_form_bound,regime_bound,"
           "upper_formula\n";
    out << c.address_bits << ',' << c.address_count() << ',' << c.copies << ',' << c.items << ',' << record.cap << ','
        << static_cast<int>(record.regime.regime) << ',' << c.trials << ',' << c.seed << ','
        << num(record.aggregates.success_rate) << ',' << num(record.aggregates.mean_rounds) << ','
        << num(record.aggregates.median_rounds) << ',' << num(record.closed_form_bound) << ','
        << num(record.regime_bound) << ',' << num(record.upper_formula) << '\n';
    return out.str();
}

std::string to_json(const MaxloadRecord &r) {
    Json j = header("maxload");
    Json cfg;
    cfg["n"] = r.config.address_bits;
    cfg["k"] = r.config.items;
    cfg["d"] = r.config.copies;
    cfg["t"] = r.config.cap;
    cfg["trials"] = r.config.trials;
    cfg["seed"] = r.config.seed;
    j["config"] = cfg;
    j["exceed_count"] = r.exceed_count;
    j["empirical"] = r.empirical;
    j["standard_error"] = r.standard_error;
    j["cell_bound"] = r.cell_bound;
    j["union_bound"] = r.union_bound;
    j["within_bound"] = r.within_bound;
    j["max_load_histogram"] = r.max_load_histogram;
    return dump(j);
}

std::string to_csv(const MaxloadRecord &r) {
    std::ostringstream out;
    out << "n,k,d,t,trials,seed,exceed_count,empirical,standard_error,cell_bound,union_bound,within_bound\n";
    out << r.config.address_bits << ',' << r.config.items << ',' << r.config.copies << ',' << r.config.cap << ','
        << r.config.trials << ',' << r.config.seed << ',' << r.exceed_count << ',' << num(r.empirical) << ','
        << num(r.standard_error) << ',' << num(r.cell_bound) << ',' << num(r.union_bound) << ','
        << (r.within_bound ? "true" : "false") << '\n';
    return out.str();
}

std::string to_json(const BoundsConfig &config, const std::vector<BoundsRow> &rows) {
    Json j = header("bounds");
    Json cfg;
    cfg["n"] = config.address_bits;
    cfg["d"] = config.copies;
    cfg["k"] = config.items;
    cfg["trials"] = config.trials;
    cfg["seed"] = config.seed;
    cfg["bbht_fallback"] = config.bbht_fallback;
    j["config"] = cfg;
    Json table = Json::array();
    for (const auto &r : rows) {
        Json rj;
        rj["N"] = r.address_count;
        rj["d"] = r.copies;
        rj["k"] = r.items;
        rj["regime"] = static_cast<int>(r.regime);
        rj["t"] = r.cap;
        rj["mean_rounds"] = r.mean_rounds;
        rj["success_rate"] = r.success_rate;
        rj["lower"] = r.lower;
        rj["upper"] = r.upper;
        rj["regime_bound"] = r.regime_bound;
        rj["ratio_lower"] = r.ratio_lower;
        rj["ratio_upper"] = r.ratio_upper;
        table.push_back(rj);
    }
    j["rows"] = table;
    return dump(j);
}

std::string to_csv(const std::vector<BoundsRow> &rows) {
    std::ostringstream out;
    out << "N,d,k,regime,t,mean_rounds,success_rate,lower,upper,regime_bound,ratio_lower,ratio_upper\n";
    for (const auto &r : rows) {
        out << r.address_count << ',' << r.copies << ',' << r.items << ',' << static_cast<int>(r.regime) << ','
            << r.cap << ',' << num(r.mean_rounds) << ',' << num(r.success_rate) << ',' << num(r.lower) << ','
            << num(r.upper) << ',' << num(r.regime_bound) << ',' << num(r.ratio_lower) << ',' << num(r.ratio_upper)
            << '\n';
    }
    return out.str();
}

namespace {

Json stats_json(const AdversaryStats &s) {
    Json j;
    j["min_degree_zero"] = s.min_degree_zero;
    j["min_degree_one"] = s.min_degree_one;
    j["max_label_zero"] = s.max_label_zero;
    j["max_label_one"] = s.max_label_one;
    return j;
}

}  // namespace

std::string to_json(const AdversaryReport &r) {
    Json j = header("adversary");
    Json cfg;
    cfg["n"] = r.family.address_bits;
    cfg["m"] = r.family.item_bits;
    cfg["d"] = r.family.copies;
    cfg["k"] = r.family.items;
    j["config"] = cfg;
    Json graph;
    graph["zero_vertices"] = r.zero_vertices;
    graph["one_vertices"] = r.one_vertices;
    graph["edges"] = r.edges;
    graph["zero_count_factored"] = r.zero_count_factored;
    graph["zero_count_binomial_form"] = r.zero_count_binomial_form;
    graph["one_count_formula"] = r.one_count_formula;
    j["graph"] = graph;
    j["stats"] = stats_json(r.stats);
    j["dfold_stats"] = r.dfold_stats ? stats_json(*r.dfold_stats) : Json(nullptr);
    Json claims = Json::array();
    for (const auto &c : r.claims) {
        Json cj;
        cj["name"] = c.name;
        cj["relation"] = c.relation;
        cj["claimed"] = c.claimed;
        cj["enumerated"] = c.enumerated;
        cj["holds"] = c.holds;
        claims.push_back(cj);
    }
    j["claims"] = claims;
    j["closed_form_bound"] = r.closed_form_bound;
    j["ambainis_bound"] = r.ambainis_bound;
    j["all_claims_hold"] = r.all_claims_hold;
    return dump(j);
}

std::string to_csv(const AdversaryReport &r) {
    std::ostringstream out;
    out << "n,m,d,k,zero_vertices,one_vertices,edges,min_degree_zero,min_degree_one,max_label_zero,max_label_one,"
           "closed_form_bound,ambainis_bound,all_claims_hold\n";
    out << r.family.address_bits << ',' << r.family.item_bits << ',' << r.family.copies << ',' << r.family.items << ','
        << r.zero_vertices << ',' << r.one_vertices << ',' << r.edges << ',' << r.stats.min_degree_zero << ','
        << r.stats.min_degree_one << ',' << r.stats.max_label_zero << ',' << r.stats.max_label_one << ','
        << num(r.closed_form_bound) << ',' << num(r.ambainis_bound) << ',' << (r.all_claims_hold ? "true" : "false")
        << '\n';
    return out.str();
}

}  // namespace parq::harness
