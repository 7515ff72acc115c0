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

#include "parq/state_vector.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace parq {

StateVector::StateVector(std::vector<Amplitude> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw std::invalid_argument("state vector dimension must be at least 1");
    }
    double n = norm_squared();
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state vector is not normalized (sum |a|^2 = " + std::to_string(n) + ")");
    }
}

StateVector StateVector::uniform(size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("state vector dimension must be at least 1");
    }
    return StateVector(std::vector<Amplitude>(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

StateVector init_uniform(size_t dim) {
    return StateVector::uniform(dim);
}

double StateVector::probability(size_t index) const {
    return std::norm(amplitudes_.at(index));
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::mass(std::span<const size_t> indices) const {
    double total = 0;
    for (size_t i : indices) {
        total += std::norm(amplitudes_.at(i));
    }
    return total;
}

void StateVector::phase_flip(std::span<const size_t> indices) {
    for (size_t i : indices) {
        amplitudes_.at(i) = -amplitudes_[i];
    }
}

void StateVector::reflect_about_mean() {
    Amplitude sum = 0;
    for (const auto &a : amplitudes_) {
        sum += a;
    }
    Amplitude twice_mean = 2.0 * sum / static_cast<double>(amplitudes_.size());
    for (auto &a : amplitudes_) {
        a = twice_mean - a;
    }
}

}  // namespace parq
