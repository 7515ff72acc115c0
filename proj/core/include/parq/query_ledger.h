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

/// Oracle-query accounting for d database copies queried in lockstep.
///
/// One parallel query applies the oracle to every copy at once, so the number
/// of parallel rounds is the largest per-copy count. Verification queries are
/// tracked on their own and never folded into the per-copy counts.
class QueryLedger {
   public:
    explicit QueryLedger(size_t copies = 1);

    size_t copies() const {
        return per_copy_.size();
    }

    /// Adds `count` queries against copy `copy`. Throws std::out_of_range for a bad copy.
    void record(size_t copy, uint64_t count = 1);
    void record_verification(uint64_t rounds);

    uint64_t count(size_t copy) const;
    std::span<const uint64_t> per_copy() const {
        return per_copy_;
    }
    uint64_t rounds() const;
    uint64_t total() const;
    uint64_t verification() const {
        return verification_;
    }

    /// Adds another ledger's counts copy-by-copy. Copy counts must agree.
    void absorb(const QueryLedger &other);

   private:
    std::vector<uint64_t> per_copy_;
    uint64_t verification_ = 0;
};

}  // namespace parq
