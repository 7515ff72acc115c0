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
#include <vector>

#include "parq/database.h"
#include "parq/query_ledger.h"
#include "parq/rng.h"
#include "parq/state_vector.h"

namespace parq {

/// Membership test x -> [f(x) in Y] restricted to an address subdomain S.
///
/// Local index i refers to subdomain()[i]. The database must outlive the
/// predicate. The marked set is resolved once at construction; applying the
/// phase oracle is what gets charged as a query.
class MarkedPredicate {
   public:
    MarkedPredicate(const Database &db, std::span<const Item> targets, std::vector<Address> subdomain);

    /// Predicate over the full address range [N].
    static MarkedPredicate over_all(const Database &db, std::span<const Item> targets);

    const Database &database() const {
        return *db_;
    }
    size_t domain_size() const {
        return subdomain_.size();
    }
    std::span<const Address> subdomain() const {
        return subdomain_;
    }
    std::span<const Item> targets() const {
        return targets_;
    }
    Address address(size_t local) const {
        return subdomain_.at(local);
    }
    bool is_target(Item item) const;
    bool marked(size_t local) const;
    std::span<const size_t> marked_indices() const {
        return marked_;
    }
    size_t marked_count() const {
        return marked_.size();
    }
    bool empty_target_set() const {
        return targets_.empty();
    }

   private:
    const Database *db_;
    std::vector<Item> targets_;  // sorted, unique
    std::vector<Address> subdomain_;
    std::vector<size_t> marked_;
};

/// One Grover iteration: phase oracle on marked states, then inversion about
/// the mean. Charges one query to `copy` in `ledger`.
///
/// Throws std::invalid_argument when the state dimension differs from the
/// predicate's domain size.
void grover_iterate(StateVector &state, const MarkedPredicate &marked, QueryLedger &ledger, size_t copy);

/// Samples a basis index with probability |a_i|^2.
/// Throws std::invalid_argument if the state drifted from unit norm beyond kNormTolerance.
size_t measure(const StateVector &state, Rng &rng);
size_t measure(const StateVector &state, uint64_t seed);

/// sin^2((2r+1) asin(sqrt(j/M))): marked mass after r iterations from uniform.
/// Requires 1 <= j <= M.
double success_probability(uint64_t space_size, uint64_t marked_count, uint64_t iterations);

/// floor(pi / (4 theta)) with sin^2 theta = j/M, the iteration count used when
/// the number of marked states is assumed to be j.
uint64_t optimal_iterations(uint64_t space_size, uint64_t marked_count);

}  // namespace parq
