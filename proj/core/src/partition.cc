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

#include "parq/partition.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace parq {

Partition::Partition(std::span<const Address> permutation, size_t cells)
    : cells_(cells), owner_(permutation.size(), UINT32_MAX) {
    const size_t n = permutation.size();
    if (cells == 0 || cells > n) {
        throw std::invalid_argument("cell count must be in [1, N]");
    }
    const size_t small = n / cells;
    const size_t big_cells = n % cells;
    size_t pos = 0;
    for (size_t c = 0; c < cells; c++) {
        size_t len = small + (c < big_cells ? 1 : 0);
        auto &cell = cells_[c];
        cell.assign(permutation.begin() + pos, permutation.begin() + pos + len);
        std::sort(cell.begin(), cell.end());
        for (Address x : cell) {
            if (x >= n || owner_[x] != UINT32_MAX) {
                throw std::invalid_argument("input is not a permutation of [N]");
            }
            owner_[x] = static_cast<uint32_t>(c);
        }
        pos += len;
    }
}

std::vector<uint64_t> Partition::loads(std::span<const Address> addresses) const {
    std::vector<uint64_t> out(cells_.size(), 0);
    for (Address x : addresses) {
        out[cell_of(x)]++;
    }
    return out;
}

Partition random_partition(uint64_t address_count, uint64_t cells, Rng &rng) {
    if (cells == 0 || cells > address_count) {
        throw std::invalid_argument("cannot split " + std::to_string(address_count) + " addresses into " +
                                    std::to_string(cells) + " nonempty cells");
    }
    std::vector<Address> perm(address_count);
    for (uint64_t x = 0; x < address_count; x++) {
        perm[x] = x;
    }
    // Fisher-Yates.
    for (uint64_t i = address_count; i > 1; i--) {
        std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    return Partition(perm, cells);
}

Partition random_partition(uint64_t address_count, uint64_t cells, uint64_t seed) {
    Rng rng(seed);
    return random_partition(address_count, cells, rng);
}

}  // namespace parq
