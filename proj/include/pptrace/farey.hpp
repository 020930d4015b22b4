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

#include <stdexcept>
#include <vector>

#include "pptrace/real.hpp"

namespace pptrace {

/// Exact small rational, used for arc endpoints and gaps.
struct Frac {
    long long num = 0;
    long long den = 1;

    Real value() const { return Real(num) / den; }

    friend bool operator==(const Frac& x, const Frac& y) {
        return static_cast<__int128>(x.num) * y.den == static_cast<__int128>(y.num) * x.den;
    }
};

/// A member h/k of the Farey sequence together with its mediant gaps:
/// the arc of h/k runs from h/k - theta_lo to h/k + theta_hi. Both gaps
/// lie in (1/(2kN), 1/(kN)].
struct FareyArc {
    long long h = 0;
    long long k = 1;
    Frac theta_lo; // distance to the mediant with the left neighbor
    Frac theta_hi; // distance to the mediant with the right neighbor
};

/// The Farey sequence of order N (all reduced h/k with k <= N), from 0/1
/// to 1/1 inclusive, in increasing order, each fraction with its mediant
/// gaps. The dissection is periodic: the neighbor of 0/1 on the left is
/// the last proper fraction shifted by -1, and symmetrically for 1/1, so
/// the arcs of the proper fractions tile a unit period exactly once
/// (0/1 and 1/1 carry the same arc).
inline std::vector<FareyArc> farey(long N) {
    if (N < 1) throw std::domain_error("farey: N must be >= 1");
    std::vector<std::pair<long long, long long>> fr; // (h, k)
    long long h0 = 0, k0 = 1, h1 = 1, k1 = N;
    fr.emplace_back(h0, k0);
    while (h1 != 1 || k1 != 1) {
        fr.emplace_back(h1, k1);
        long long step = (N + k0) / k1;
        long long h2 = step * h1 - h0;
        long long k2 = step * k1 - k0;
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
    }
    fr.emplace_back(1, 1);

    std::vector<FareyArc> out(fr.size());
    auto gap = [](long long k, long long k_neighbor) {
        // h/k and its Farey neighbor h'/k' satisfy |h k' - h' k| = 1, so
        // the distance from h/k to the mediant is 1 / (k (k + k')).
        return Frac{1, k * (k + k_neighbor)};
    };
    long last = static_cast<long>(fr.size()) - 1;
    for (long i = 0; i <= last; ++i) {
        auto [h, k] = fr[static_cast<std::size_t>(i)];
        long long k_left = (i > 0) ? fr[static_cast<std::size_t>(i - 1)].second
                                   : fr[static_cast<std::size_t>(last - 1)].second;
        long long k_right = (i < last) ? fr[static_cast<std::size_t>(i + 1)].second
                                       : fr[1].second;
        out[static_cast<std::size_t>(i)] = FareyArc{h, k, gap(k, k_left), gap(k, k_right)};
    }
    return out;
}

} // namespace pptrace
