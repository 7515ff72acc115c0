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

#include "parq/regime.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parq {

namespace {

// Guards ceil() against values like 20.000000000000004.
uint64_t ceil_count(double x) {
    return static_cast<uint64_t>(std::max(1.0, std::ceil(x - 1e-9)));
}

}  // namespace

std::string_view regime_name(Regime regime) {
    switch (regime) {
        case Regime::kFewItems:
            return "k<=sqrt(d)";
        case Regime::kModerate:
            return "sqrt(d)<k<=d";
        case Regime::kMany:
            return "d<k<=d*lg(d)";
        case Regime::kVeryMany:
            return "k>d*lg(d)";
    }
    return "unknown";
}

RegimeParams choose_regime(uint64_t address_count, uint64_t copies, uint64_t items) {
    if (copies == 0 || items == 0) {
        throw std::invalid_argument("d and k must be at least 1");
    }
    const double d = static_cast<double>(copies);
    const double k = static_cast<double>(items);
    const double lg = std::log2(d);

    RegimeParams p;
    if (items * items <= copies) {
        p.regime = Regime::kFewItems;
        p.cap = 2;
    } else if (items <= copies) {
        p.regime = Regime::kModerate;
        p.cap = ceil_count(5.0 * lg);
    } else if (k <= d * lg) {
        p.regime = Regime::kMany;
        p.cap = ceil_count(5.0 * k * lg / d);
    } else {
        p.regime = Regime::kVeryMany;
        p.cap = ceil_count(2.0 * k / d);
    }
    p.assumption_violated = copies * copies > address_count || items * items > address_count;
    return p;
}

double lg_at_least_one(uint64_t copies) {
    return std::max(1.0, std::log2(static_cast<double>(copies)));
}

double maxload_bound(uint64_t items, uint64_t cap, uint64_t copies) {
    if (copies == 0) {
        throw std::invalid_argument("d must be at least 1");
    }
    if (cap > items) {
        return 0.0;
    }
    // prod_{i=1..t} (k - t + i) / (i d), interleaved to stay in range.
    double p = 1.0;
    for (uint64_t i = 1; i <= cap; i++) {
        p *= static_cast<double>(items - cap + i) / (static_cast<double>(i) * static_cast<double>(copies));
    }
    return p;
}

double upper_bound_formula(uint64_t address_count, uint64_t copies, uint64_t items) {
    const double n = static_cast<double>(address_count);
    const double d = static_cast<double>(copies);
    const double k = static_cast<double>(items);
    return std::sqrt(n * k * lg_at_least_one(copies) / (d * std::min(k, d)));
}

double regime_round_bound(uint64_t address_count, uint64_t copies, uint64_t items) {
    const double n = static_cast<double>(address_count);
    const double d = static_cast<double>(copies);
    const double k = static_cast<double>(items);
    switch (choose_regime(address_count, copies, items).regime) {
        case Regime::kFewItems:
            return std::sqrt(n / d);
        case Regime::kModerate:
        case Regime::kMany:
            return upper_bound_formula(address_count, copies, items);
        case Regime::kVeryMany:
            return std::sqrt(n * k) / d;
    }
    return 0.0;
}

}  // namespace parq
