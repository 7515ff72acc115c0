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

#include "parq/adversary.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace parq {

namespace {

constexpr unsigned kMaxFamilyAddressBits = 20;
constexpr unsigned kMaxFamilyItemBits = 16;
// Bound on elementary steps for the exhaustive edge search and d-fold scan.
constexpr double kMaxEnumerationWork = 4e9;

// Calls visit(placement) for every injective assignment of the non-absent
// targets to locations, in lexicographic order.
void for_each_placement(uint64_t locations, uint64_t items, uint64_t absent_slot,
                        const std::function<void(const std::vector<uint32_t> &)> &visit) {
    std::vector<uint32_t> placement(items, AdversaryGraph::kAbsent);
    std::vector<bool> used(locations, false);
    std::function<void(uint64_t)> fill = [&](uint64_t slot) {
        if (slot == items) {
            visit(placement);
            return;
        }
        if (slot == absent_slot) {
            fill(slot + 1);
            return;
        }
        for (uint32_t x = 0; x < locations; x++) {
            if (used[x]) {
                continue;
            }
            used[x] = true;
            placement[slot] = x;
            fill(slot + 1);
            used[x] = false;
        }
        placement[slot] = AdversaryGraph::kAbsent;
    };
    fill(0);
}

// Reads a database back into a placement. Returns false if it is not a
// family member: some location holds a non-target non-filler item, or a
// target appears twice.
bool placement_of(std::span<const Item> contents, uint64_t items, std::vector<uint32_t> &placement) {
    placement.assign(items, AdversaryGraph::kAbsent);
    for (size_t x = 0; x < contents.size(); x++) {
        Item v = contents[x];
        if (v == InstanceFamily::kFiller) {
            continue;
        }
        if (v > items || placement[v - 1] != AdversaryGraph::kAbsent) {
            return false;
        }
        placement[v - 1] = static_cast<uint32_t>(x);
    }
    return true;
}

bool all_present(const std::vector<uint32_t> &placement) {
    return std::find(placement.begin(), placement.end(), AdversaryGraph::kAbsent) == placement.end();
}

}  // namespace

double closed_form_bound(uint64_t address_count, uint64_t copies, uint64_t items) {
    if (address_count == 0 || copies == 0 || items == 0) {
        throw std::invalid_argument("N, d and k must be at least 1");
    }
    const double n = static_cast<double>(address_count);
    const double d = static_cast<double>(copies);
    const double k = static_cast<double>(items);
    return std::sqrt(n * k / (d * std::min(d, k)));
}

void InstanceFamily::validate() const {
    if (address_bits > kMaxFamilyAddressBits) {
        throw std::invalid_argument("address width too large for brute-force enumeration");
    }
    if (item_bits == 0 || item_bits > kMaxFamilyItemBits) {
        throw std::invalid_argument("item width must be in [1, " + std::to_string(kMaxFamilyItemBits) + "]");
    }
    if (copies == 0) {
        throw std::invalid_argument("d must be at least 1");
    }
    if (items == 0) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (items > (uint64_t{1} << (item_bits - 1))) {
        throw std::invalid_argument("k=" + std::to_string(items) + " exceeds 2^(m-1)=" +
                                    std::to_string(uint64_t{1} << (item_bits - 1)));
    }
    if (items > address_count()) {
        throw std::invalid_argument("k=" + std::to_string(items) + " exceeds N=" + std::to_string(address_count()));
    }
}

std::vector<Item> InstanceFamily::targets() const {
    std::vector<Item> out(items);
    for (uint64_t i = 0; i < items; i++) {
        out[i] = i + 1;
    }
    return out;
}

VertexCountEstimate estimate_vertex_counts(const InstanceFamily &family) {
    const double n = static_cast<double>(family.address_count());
    VertexCountEstimate e;
    double falling = 1;  // N (N-1) ... (N-k+2)
    for (uint64_t i = 0; i + 1 < family.items; i++) {
        falling *= n - static_cast<double>(i);
    }
    e.zero_side = falling * static_cast<double>(family.items);
    e.one_side = falling * (n - static_cast<double>(family.items - 1));
    return e;
}

AdversaryGraph::AdversaryGraph(InstanceFamily family, std::vector<uint32_t> zero_placements,
                               std::vector<uint32_t> one_placements, std::vector<AdversaryEdge> edges)
    : family_(family), zero_(std::move(zero_placements)), one_(std::move(one_placements)), edges_(std::move(edges)) {
    family_.validate();
    if (zero_.size() % family_.items != 0 || one_.size() % family_.items != 0) {
        throw std::invalid_argument("placement arrays must hold k entries per vertex");
    }
    for (const auto &e : edges_) {
        if (e.zero_vertex >= zero_count() || e.one_vertex >= one_count() || e.location >= family_.address_count()) {
            throw std::invalid_argument("edge refers to a missing vertex or location");
        }
    }
}

std::span<const uint32_t> AdversaryGraph::zero_placement(size_t v) const {
    return std::span<const uint32_t>(zero_).subspan(v * family_.items, family_.items);
}

std::span<const uint32_t> AdversaryGraph::one_placement(size_t v) const {
    return std::span<const uint32_t>(one_).subspan(v * family_.items, family_.items);
}

std::vector<Item> AdversaryGraph::contents(std::span<const uint32_t> placement) const {
    std::vector<Item> out(family_.address_count(), InstanceFamily::kFiller);
    for (size_t i = 0; i < placement.size(); i++) {
        if (placement[i] != kAbsent) {
            out[placement[i]] = i + 1;
        }
    }
    return out;
}

std::vector<Item> AdversaryGraph::zero_contents(size_t v) const {
    return contents(zero_placement(v));
}

std::vector<Item> AdversaryGraph::one_contents(size_t v) const {
    return contents(one_placement(v));
}

AdversaryGraph build_adversary_graph(const InstanceFamily &family) {
    family.validate();
    const uint64_t n = family.address_count();
    const uint64_t k = family.items;

    VertexCountEstimate est = estimate_vertex_counts(family);
    double largest = std::max(est.zero_side, est.one_side);
    if (largest > kMaxAdversaryVertices) {
        throw InfeasibleInstance("adversary graph would have about " + std::to_string(largest) +
                                     " vertices on one side (limit " + std::to_string(kMaxAdversaryVertices) + ")",
                                 largest);
    }
    double work = est.zero_side * static_cast<double>(n) * static_cast<double>(n) *
                  std::ldexp(1.0, static_cast<int>(family.item_bits));
    if (work > kMaxEnumerationWork) {
        throw InfeasibleInstance("exhaustive edge search would take about " + std::to_string(work) + " steps", work);
    }

    std::vector<uint32_t> one;
    std::map<std::vector<uint32_t>, uint32_t> one_index;
    for_each_placement(n, k, k, [&](const std::vector<uint32_t> &p) {
        one_index.emplace(p, static_cast<uint32_t>(one_index.size()));
        one.insert(one.end(), p.begin(), p.end());
    });

    std::vector<uint32_t> zero;
    for (uint64_t missing = 0; missing < k; missing++) {
        for_each_placement(n, k, missing, [&](const std::vector<uint32_t> &p) {
            zero.insert(zero.end(), p.begin(), p.end());
        });
    }

    // Rewrite each location of each V0 database to every other item and keep
    // the rewrites that land in V1.
    std::vector<AdversaryEdge> edges;
    const Item item_limit = Item{1} << family.item_bits;
    std::vector<uint32_t> probe;
    const size_t zero_vertices = zero.size() / k;
    for (size_t v = 0; v < zero_vertices; v++) {
        std::vector<Item> contents(n, InstanceFamily::kFiller);
        for (size_t i = 0; i < k; i++) {
            uint32_t x = zero[v * k + i];
            if (x != AdversaryGraph::kAbsent) {
                contents[x] = i + 1;
            }
        }
        for (Address x = 0; x < n; x++) {
            const Item original = contents[x];
            for (Item value = 0; value < item_limit; value++) {
                if (value == original) {
                    continue;
                }
                contents[x] = value;
                if (placement_of(contents, k, probe) && all_present(probe)) {
                    edges.push_back({static_cast<uint32_t>(v), one_index.at(probe), x});
                }
            }
            contents[x] = original;
        }
    }
    return AdversaryGraph(family, std::move(zero), std::move(one), std::move(edges));
}

namespace {

// Sum of the d largest label multiplicities among one vertex's edges.
uint64_t top_label_sum(std::vector<Address> labels, uint64_t copies) {
    std::sort(labels.begin(), labels.end());
    std::vector<uint64_t> runs;
    for (size_t i = 0; i < labels.size();) {
        size_t j = i;
        while (j < labels.size() && labels[j] == labels[i]) {
            j++;
        }
        runs.push_back(j - i);
        i = j;
    }
    std::sort(runs.rbegin(), runs.rend());
    uint64_t total = 0;
    for (size_t i = 0; i < runs.size() && i < copies; i++) {
        total += runs[i];
    }
    return total;
}

// Max over d-fold addresses of the number of neighbours whose d-fold database
// differs from `self` at that address.
uint64_t max_dfold_multiplicity(const std::vector<Item> &self, const std::vector<std::vector<Item>> &neighbours,
                                uint64_t locations, uint64_t copies) {
    std::vector<uint64_t> tuple(copies, 0);
    uint64_t best = 0;
    while (true) {
        uint64_t count = 0;
        for (const auto &other : neighbours) {
            for (uint64_t x : tuple) {
                if (self[x] != other[x]) {
                    count++;
                    break;
                }
            }
        }
        best = std::max(best, count);
        size_t pos = 0;
        while (pos < copies && ++tuple[pos] == locations) {
            tuple[pos] = 0;
            pos++;
        }
        if (pos == copies) {
            return best;
        }
    }
}

}  // namespace

AdversaryStats compute_stats(const AdversaryGraph &graph, LabelCounting counting) {
    const size_t zn = graph.zero_count();
    const size_t on = graph.one_count();
    if (zn == 0 || on == 0 || graph.edges().empty()) {
        throw std::invalid_argument("adversary statistics need a nonempty graph");
    }
    const uint64_t copies = graph.family().copies;
    const uint64_t n = graph.family().address_count();

    std::vector<std::vector<uint32_t>> zero_adj(zn);
    std::vector<std::vector<uint32_t>> one_adj(on);
    for (uint32_t e = 0; e < graph.edges().size(); e++) {
        zero_adj[graph.edges()[e].zero_vertex].push_back(e);
        one_adj[graph.edges()[e].one_vertex].push_back(e);
    }

    AdversaryStats s;
    s.min_degree_zero = UINT64_MAX;
    s.min_degree_one = UINT64_MAX;
    for (const auto &adj : zero_adj) {
        s.min_degree_zero = std::min<uint64_t>(s.min_degree_zero, adj.size());
    }
    for (const auto &adj : one_adj) {
        s.min_degree_one = std::min<uint64_t>(s.min_degree_one, adj.size());
    }

    if (counting == LabelCounting::kBaseLocations) {
        for (const auto &adj : zero_adj) {
            std::vector<Address> labels;
            for (uint32_t e : adj) {
                labels.push_back(graph.edges()[e].location);
            }
            s.max_label_zero = std::max(s.max_label_zero, top_label_sum(std::move(labels), copies));
        }
        for (const auto &adj : one_adj) {
            std::vector<Address> labels;
            for (uint32_t e : adj) {
                labels.push_back(graph.edges()[e].location);
            }
            s.max_label_one = std::max(s.max_label_one, top_label_sum(std::move(labels), copies));
        }
        return s;
    }

    double work = static_cast<double>(2 * graph.edges().size()) * std::pow(static_cast<double>(n), copies) *
                  static_cast<double>(copies);
    if (work > kMaxEnumerationWork) {
        throw InfeasibleInstance("d-fold address scan would take about " + std::to_string(work) + " steps", work);
    }
    for (size_t v = 0; v < zn; v++) {
        std::vector<std::vector<Item>> nbrs;
        for (uint32_t e : zero_adj[v]) {
            nbrs.push_back(graph.one_contents(graph.edges()[e].one_vertex));
        }
        s.max_label_zero = std::max(s.max_label_zero, max_dfold_multiplicity(graph.zero_contents(v), nbrs, n, copies));
    }
    for (size_t v = 0; v < on; v++) {
        std::vector<std::vector<Item>> nbrs;
        for (uint32_t e : one_adj[v]) {
            nbrs.push_back(graph.zero_contents(graph.edges()[e].zero_vertex));
        }
        s.max_label_one = std::max(s.max_label_one, max_dfold_multiplicity(graph.one_contents(v), nbrs, n, copies));
    }
    return s;
}

double ambainis_bound(const AdversaryStats &stats) {
    if (stats.min_degree_zero == 0 || stats.min_degree_one == 0 || stats.max_label_zero == 0 ||
        stats.max_label_one == 0) {
        throw std::invalid_argument("ambainis bound needs positive degrees and label multiplicities");
    }
    return std::sqrt(static_cast<double>(stats.min_degree_zero) * static_cast<double>(stats.min_degree_one) /
                     (static_cast<double>(stats.max_label_zero) * static_cast<double>(stats.max_label_one)));
}

}  // namespace parq
