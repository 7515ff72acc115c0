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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "parq/database.h"

namespace parq {

/// sqrt(N k / (d min{d, k})): the parallel-query lower bound for locating k items with d copies.
double closed_form_bound(uint64_t address_count, uint64_t copies, uint64_t items);

/// Refusal to enumerate an instance that is too large for brute force.
class InfeasibleInstance : public std::runtime_error {
   public:
    InfeasibleInstance(const std::string &what, double estimate) : std::runtime_error(what), estimate_(estimate) {
    }
    double estimate() const {
        return estimate_;
    }

   private:
    double estimate_;
};

/// Brute force is refused above this many vertices.
inline constexpr double kMaxAdversaryVertices = 1e6;

/// Hard instances for the "all k present vs exactly k-1 present" problem.
///
/// Targets are the items 1..k; every location not holding a target holds the
/// all-zeros filler item.
struct InstanceFamily {
    unsigned address_bits = 1;
    unsigned item_bits = 1;
    uint64_t copies = 1;
    uint64_t items = 1;

    /// Throws std::invalid_argument unless 1 <= k <= 2^(m-1), k <= N, d >= 1.
    void validate() const;
    uint64_t address_count() const {
        return uint64_t{1} << address_bits;
    }
    std::vector<Item> targets() const;
    static constexpr Item kFiller = 0;
};

/// Vertex counts predicted by direct counting, as floating point to avoid overflow.
struct VertexCountEstimate {
    double zero_side = 0;  // C(N, k-1) (k-1)! k
    double one_side = 0;   // C(N, k) k!
};
VertexCountEstimate estimate_vertex_counts(const InstanceFamily &family);

/// One edge of the adversary graph. Its endpoints differ at exactly one base
/// location; the d-fold addresses that touch that location are its labels.
struct AdversaryEdge {
    uint32_t zero_vertex;
    uint32_t one_vertex;
    Address location;
};

/// Explicit bipartite graph: V0 holds databases with exactly k-1 targets, V1
/// databases with all k, each present target stored exactly once.
///
/// A vertex is stored as its placement: for each target, the location holding
/// it, or kAbsent.
class AdversaryGraph {
   public:
    static constexpr uint32_t kAbsent = UINT32_MAX;

    AdversaryGraph(InstanceFamily family, std::vector<uint32_t> zero_placements, std::vector<uint32_t> one_placements,
                   std::vector<AdversaryEdge> edges);

    const InstanceFamily &family() const {
        return family_;
    }
    size_t zero_count() const {
        return zero_.size() / family_.items;
    }
    size_t one_count() const {
        return one_.size() / family_.items;
    }
    std::span<const AdversaryEdge> edges() const {
        return edges_;
    }
    std::span<const uint32_t> zero_placement(size_t v) const;
    std::span<const uint32_t> one_placement(size_t v) const;

    /// Full contents of a base database f (not f^{(x)d}).
    std::vector<Item> zero_contents(size_t v) const;
    std::vector<Item> one_contents(size_t v) const;

   private:
    std::vector<Item> contents(std::span<const uint32_t> placement) const;

    InstanceFamily family_;
    std::vector<uint32_t> zero_;
    std::vector<uint32_t> one_;
    std::vector<AdversaryEdge> edges_;
};

/// Enumerates both vertex sets and finds every edge by trying all single-location
/// rewrites of every V0 database against the set of V1 databases.
///
/// Throws InfeasibleInstance if either side would exceed kMaxAdversaryVertices,
/// std::invalid_argument if the family is invalid.
AdversaryGraph build_adversary_graph(const InstanceFamily &family);

struct AdversaryStats {
    uint64_t min_degree_zero = 0;  // Delta_0
    uint64_t min_degree_one = 0;   // Delta_1
    uint64_t max_label_zero = 0;   // l_0
    uint64_t max_label_one = 0;    // l_1

    bool operator==(const AdversaryStats &) const = default;
};

enum class LabelCounting {
    /// Per vertex, sum the d largest base-location multiplicities.
    kBaseLocations,
    /// Per vertex, scan every d-fold address and compare the d-fold databases directly.
    kDFoldAddresses,
};

/// Exact statistics by enumeration. Throws std::invalid_argument on an empty
/// graph, InfeasibleInstance if kDFoldAddresses would scan too many addresses.
AdversaryStats compute_stats(const AdversaryGraph &graph, LabelCounting counting = LabelCounting::kBaseLocations);

/// sqrt(Delta_0 Delta_1 / (l_0 l_1)). Throws std::invalid_argument if any statistic is zero.
double ambainis_bound(const AdversaryStats &stats);

}  // namespace parq
