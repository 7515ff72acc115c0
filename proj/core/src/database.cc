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

#include "parq/database.h"

#include <stdexcept>
#include <string>

namespace parq {

bool fits_in_bits(Item value, unsigned bits) {
    return bits >= 64 || (value >> bits) == 0;
}

Database::Database(unsigned address_bits, unsigned item_bits, std::vector<Item> entries)
    : address_bits_(address_bits), item_bits_(item_bits), entries_(std::move(entries)) {
    if (address_bits_ > kMaxAddressBits) {
        throw std::invalid_argument("address width " + std::to_string(address_bits_) + " exceeds " +
                                    std::to_string(kMaxAddressBits) + " bits");
    }
    if (item_bits_ == 0 || item_bits_ > kMaxItemBits) {
        throw std::invalid_argument("item width must be in [1, " + std::to_string(kMaxItemBits) + "]");
    }
    if (entries_.size() != (size_t{1} << address_bits_)) {
        throw std::invalid_argument("database needs exactly 2^n = " + std::to_string(size_t{1} << address_bits_) +
                                    " entries, got " + std::to_string(entries_.size()));
    }
    for (size_t x = 0; x < entries_.size(); x++) {
        if (!fits_in_bits(entries_[x], item_bits_)) {
            throw std::invalid_argument("item at address " + std::to_string(x) + " does not fit in " +
                                        std::to_string(item_bits_) + " bits");
        }
    }
}

Database Database::filled(unsigned address_bits, unsigned item_bits, Item filler) {
    if (address_bits > kMaxAddressBits) {
        throw std::invalid_argument("address width too large");
    }
    return Database(address_bits, item_bits, std::vector<Item>(size_t{1} << address_bits, filler));
}

Item Database::at(Address x) const {
    if (x >= entries_.size()) {
        throw std::out_of_range("address " + std::to_string(x) + " outside database of size " +
                                std::to_string(entries_.size()));
    }
    return entries_[x];
}

Database Database::with(Address x, Item value) const {
    std::vector<Item> copy = entries_;
    if (x >= copy.size()) {
        throw std::out_of_range("address outside database");
    }
    copy[x] = value;
    return Database(address_bits_, item_bits_, std::move(copy));
}

}  // namespace parq
