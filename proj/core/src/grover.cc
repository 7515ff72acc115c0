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

#include "parq/grover.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace parq {

MarkedPredicate::MarkedPredicate(const Database &db, std::span<const Item> targets, std::vector<Address> subdomain)
    : db_(&db), targets_(targets.begin(), targets.end()), subdomain_(std::move(subdomain)) {
    std::sort(targets_.begin(), targets_.end());
    targets_.erase(std::unique(targets_.begin(), targets_.end()), targets_.end());
    for (size_t i = 0; i < subdomain_.size(); i++) {
        if (subdomain_[i] >= db.size()) {
            throw std::invalid_argument("subdomain address " + std::to_string(subdomain_[i]) +
                                        " outside database");
        }
        if (is_target(db.at(subdomain_[i]))) {
            marked_.push_back(i);
        }
    }
}

MarkedPredicate MarkedPredicate::over_all(const Database &db, std::span<const Item> targets) {
    std::vector<Address> all(db.size());
    for (size_t x = 0; x < all.size(); x++) {
        all[x] = x;
    }
    return MarkedPredicate(db, targets, std::move(all));
}

bool MarkedPredicate::is_target(Item item) const {
    return std::binary_search(targets_.begin(), targets_.end(), item);
}

bool MarkedPredicate::marked(size_t local) const {
    return is_target(db_->at(subdomain_.at(local)));
}

void grover_iterate(StateVector &state, const MarkedPredicate &marked, QueryLedger &ledger, size_t copy) {
    if (state.dim() != marked.domain_size()) {
        throw std::invalid_argument("state dimension " + std::to_string(state.dim()) +
                                    " does not match predicate domain size " +
                                    std::to_string(marked.domain_size()));
    }
    ledger.record(copy);
    state.phase_flip(marked.marked_indices());
    state.reflect_about_mean();
}

size_t measure(const StateVector &state, Rng &rng) {
    double n = state.norm_squared();
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw std::invalid_argument("cannot measure unnormalized state (sum |a|^2 = " + std::to_string(n) + ")");
    }
    double u = rng.uniform() * n;
    auto amps = state.amplitudes();
    double acc = 0;
    size_t last_nonzero = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        double p = std::norm(amps[i]);
        if (p > 0) {
            last_nonzero = i;
        }
        acc += p;
        if (u < acc) {
            return i;
        }
    }
    // Rounding left u just past the cumulative total.
    return last_nonzero;
}

size_t measure(const StateVector &state, uint64_t seed) {
    Rng rng(seed);
    return measure(state, rng);
}

double success_probability(uint64_t space_size, uint64_t marked_count, uint64_t iterations) {
    if (marked_count == 0) {
        throw std::invalid_argument("success probability is undefined with no marked states");
    }
    if (marked_count > space_size) {
        throw std::invalid_argument("marked count exceeds search space size");
    }
    double theta = std::asin(std::sqrt(static_cast<double>(marked_count) / static_cast<double>(space_size)));
    double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
    return s * s;
}

uint64_t optimal_iterations(uint64_t space_size, uint64_t marked_count) {
    if (marked_count == 0 || marked_count > space_size) {
        throw std::invalid_argument("assumed marked count must be in [1, M]");
    }
    double theta = std::asin(std::sqrt(static_cast<double>(marked_count) / static_cast<double>(space_size)));
    return static_cast<uint64_t>(std::floor(std::numbers::pi / (4.0 * theta)));
}

}  // namespace parq
