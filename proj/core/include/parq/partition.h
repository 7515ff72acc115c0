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
#include "parq/rng.h"

namespace parq {

/// A split of [N] into d disjoint cells whose sizes differ by at most one.
/// Addresses inside each cell are kept in increasing order.
class Partition {
   public:
    /// Takes a permutation of [N] and cuts it into d contiguous blocks, the
    /// first N mod d of which get one extra address.
    Partition(std::span<const Address> permutation, size_t cells);

    size_t cell_count() const {
        return cells_.size();
    }
    std::span<const Address> cell(size_t index) const {
        return cells_.at(index);
    }
    size_t cell_of(Address x) const {
        return owner_.at(x);
    }
    size_t address_count() const {
        return owner_.size();
    }

    /// Number of the given addresses falling into each cell.
    std::vector<uint64_t> loads(std::span<const Address> addresses) const;

   private:
    std::vector<std::vector<Address>> cells_;
    std::vector<uint32_t> owner_;
};

/// Uniformly random equipartition of [N] into d cells.
/// Throws std::invalid_argument unless 1 <= d <= N.
Partition random_partition(uint64_t address_count, uint64_t cells, Rng &rng);
Partition random_partition(uint64_t address_count, uint64_t cells, uint64_t seed);

}  // namespace parq
