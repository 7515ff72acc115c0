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

#include "parq/query_ledger.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parq {

QueryLedger::QueryLedger(size_t copies) : per_copy_(copies, 0) {
    if (copies == 0) {
        throw std::invalid_argument("ledger needs at least one copy");
    }
}

void QueryLedger::record(size_t copy, uint64_t count) {
    if (copy >= per_copy_.size()) {
        throw std::out_of_range("copy index outside ledger");
    }
    per_copy_[copy] += count;
}

void QueryLedger::record_verification(uint64_t rounds) {
    verification_ += rounds;
}

uint64_t QueryLedger::count(size_t copy) const {
    if (copy >= per_copy_.size()) {
        throw std::out_of_range("copy index outside ledger");
    }
    return per_copy_[copy];
}

uint64_t QueryLedger::rounds() const {
    return *std::max_element(per_copy_.begin(), per_copy_.end());
}

uint64_t QueryLedger::total() const {
    return std::accumulate(per_copy_.begin(), per_copy_.end(), uint64_t{0});
}

void QueryLedger::absorb(const QueryLedger &other) {
    if (other.copies() != copies()) {
        throw std::invalid_argument("cannot merge ledgers with different copy counts");
    }
    for (size_t c = 0; c < per_copy_.size(); c++) {
        per_copy_[c] += other.per_copy_[c];
    }
    verification_ += other.verification_;
}

}  // namespace parq
