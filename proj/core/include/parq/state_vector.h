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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace parq {

using Amplitude = std::complex<double>;

/// Tolerance on sum |a_i|^2 = 1 enforced by construction and by measurement.
inline constexpr double kNormTolerance = 1e-9;

/// Normalized amplitude vector over a search space of size M >= 1.
///
/// Search spaces are dense re-indexings of an address subset, so index i is a
/// position in that subset, not a database address.
class StateVector {
   public:
    /// Throws std::invalid_argument if empty or not normalized within kNormTolerance.
    explicit StateVector(std::vector<Amplitude> amplitudes);

    /// The uniform superposition over dim basis states.
    static StateVector uniform(size_t dim);

    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    double probability(size_t index) const;
    double norm_squared() const;

    /// Total probability on the given indices.
    double mass(std::span<const size_t> indices) const;

    /// a_i -> -a_i for each listed index.
    void phase_flip(std::span<const size_t> indices);

    /// a_i -> 2<a> - a_i, the inversion about the mean amplitude.
    void reflect_about_mean();

   private:
    std::vector<Amplitude> amplitudes_;
};

/// Uniform start state; throws std::invalid_argument when dim == 0.
StateVector init_uniform(size_t dim);

}  // namespace parq
