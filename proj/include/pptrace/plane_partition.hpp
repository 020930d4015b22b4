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

#include <vector>

#include "pptrace/errors.hpp"

namespace pptrace {

/// A plane partition in canonical form: rows of positive integers, each
/// row weakly decreasing, each row entrywise <= the row above (with zero
/// padding), no trailing zero entries and no empty rows.
struct PlanePartition {
    std::vector<std::vector<int>> rows;

    long long size() const {
        long long s = 0;
        for (const auto& r : rows)
            for (int e : r) s += e;
        return s;
    }

    /// Sum of the diagonal entries.
    long long trace() const {
        long long t = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i < rows[i].size()) t += rows[i][i];
        return t;
    }

    friend bool operator==(const PlanePartition& x, const PlanePartition& y) {
        return x.rows == y.rows;
    }
};

namespace detail {

// Emits every nonempty weakly decreasing row that fits under `bound`
// entrywise with entry sum <= budget, extending `cur` in place. Rows come
// out in a fixed order: entries chosen largest-first at each position.
template <class Fn>
void for_each_dominated_row(const std::vector<int>& bound, int budget, std::vector<int>& cur,
                            Fn&& fn) {
    std::size_t pos = cur.size();
    if (pos == bound.size()) return;
    int cap = bound[pos];
    if (!cur.empty() && cur.back() < cap) cap = cur.back();
    if (budget < cap) cap = budget;
    for (int e = cap; e >= 1; --e) {
        cur.push_back(e);
        fn(cur);
        for_each_dominated_row(bound, budget - e, cur, fn);
        cur.pop_back();
    }
}

inline void extend_partition(std::vector<std::vector<int>>& rows, const std::vector<int>& prev,
                             int remaining, std::vector<PlanePartition>& out) {
    if (remaining == 0) {
        out.push_back(PlanePartition{rows});
        return;
    }
    std::vector<int> cur;
    for_each_dominated_row(prev, remaining, cur, [&](const std::vector<int>& row) {
        int s = 0;
        for (int e : row) s += e;
        rows.push_back(row);
        extend_partition(rows, row, remaining - s, out);
        rows.pop_back();
    });
}

} // namespace detail

/// All plane partitions of n, each exactly once, in a deterministic
/// order. n = 0 yields the single empty partition.
inline std::vector<PlanePartition> enumerate_plane_partitions(int n, int cap = 12) {
    if (n < 0) throw std::domain_error("enumerate_plane_partitions: n must be >= 0");
    if (n > cap) throw resource_error("enumerate_plane_partitions: n exceeds cap");
    std::vector<PlanePartition> out;
    if (n == 0) {
        out.push_back(PlanePartition{});
        return out;
    }
    std::vector<std::vector<int>> rows;
    std::vector<int> top(static_cast<std::size_t>(n), n); // first row unconstrained
    detail::extend_partition(rows, top, n, out);
    return out;
}

} // namespace pptrace
