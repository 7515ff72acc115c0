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

namespace parq {

using Address = uint64_t;
using Item = uint64_t;

/// A database f: [N] -> {0,1}^m with N = 2^n. Every address holds exactly one
/// m-bit item. This is the ground truth that oracles are built from.
class Database {
   public:
    static constexpr unsigned kMaxAddressBits = 30;
    static constexpr unsigned kMaxItemBits = 63;

    /// Throws std::invalid_argument unless entries.size() == 2^address_bits
    /// and every entry fits in item_bits bits.
    Database(unsigned address_bits, unsigned item_bits, std::vector<Item> entries);

    /// Every address holds `filler`.
    static Database filled(unsigned address_bits, unsigned item_bits, Item filler);

    unsigned address_bits() const {
        return address_bits_;
    }
    unsigned item_bits() const {
        return item_bits_;
    }
    size_t size() const {
        return entries_.size();
    }
    Item at(Address x) const;
    std::span<const Item> entries() const {
        return entries_;
    }

    /// Returns a copy with address x overwritten.
    Database with(Address x, Item value) const;

    bool operator==(const Database &other) const = default;

   private:
    unsigned address_bits_;
    unsigned item_bits_;
    std::vector<Item> entries_;
};

/// True when `value` fits in `bits` bits.
bool fits_in_bits(Item value, unsigned bits);

}  // namespace parq
