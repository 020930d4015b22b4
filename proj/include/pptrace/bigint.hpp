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

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <vector>

namespace pptrace {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

/// Exact binomial coefficient C(n, k).
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i; // exact at every step
    }
    return c;
}

/// Row of binomials C(n0 + j, j) for j = 0..jmax (the expansion
/// coefficients of (1 - x)^{-(n0+1)}).
inline std::vector<BigInt> binomial_row(long n0, long jmax) {
    std::vector<BigInt> row(static_cast<std::size_t>(jmax) + 1);
    row[0] = 1;
    for (long j = 1; j <= jmax; ++j) {
        row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] * (n0 + j) / j;
    }
    return row;
}

/// Number of bits in |v| (0 for v = 0).
inline unsigned long bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.backend().data(), 2);
}

} // namespace pptrace
