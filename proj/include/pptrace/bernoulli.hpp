/*
 * Copyright 2026 The pptrace authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <mutex>
#include <vector>

#include "pptrace/bigint.hpp"

namespace pptrace {

/// Exact Bernoulli number B_n (B_1 = -1/2 convention), from the
/// recurrence sum_{j<=m} C(m+1, j) B_j = 0. Cached; thread-safe.
inline BigRat bernoulli_number(unsigned n) {
    static std::mutex mtx;
    static std::vector<BigRat> cache{BigRat(1), BigRat(-1, 2)};
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        if (m % 2 == 1) {
            cache.emplace_back(0);
            continue;
        }
        BigRat acc(0);
        BigInt c(1); // C(m+1, j), updated incrementally
        for (unsigned j = 0; j < m; ++j) {
            acc += BigRat(c) * cache[j];
            c *= m + 1 - j;
            c /= j + 1;
        }
        acc /= m + 1;
        cache.emplace_back(-acc);
    }
    return cache[n];
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace pptrace
