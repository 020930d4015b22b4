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
#include <utility>
#include <vector>

#include "pptrace/bigint.hpp"
#include "pptrace/errors.hpp"

namespace pptrace {

namespace detail {

// Triangular array c[n][m], 0 <= m <= n <= max_n, of exact integers.
// Rows are the coefficient lists of the q^n coefficient as a polynomial
// in the twist variable.
class BivariateTable {
  public:
    explicit BivariateTable(long max_n) : max_n_(max_n) {
        if (max_n < 0) throw std::domain_error("table: max_n must be >= 0");
        rows_.resize(static_cast<std::size_t>(max_n) + 1);
        for (long n = 0; n <= max_n; ++n)
            rows_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        rows_[0][0] = 1;
    }

    long max_n() const { return max_n_; }

    const BigInt& coeff(long m, long n) const {
        check_n(n);
        if (m < 0 || m > n) return zero_;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }

    const std::vector<BigInt>& row(long n) const {
        check_n(n);
        return rows_[static_cast<std::size_t>(n)];
    }

    BigInt row_sum(long n) const {
        check_n(n);
        BigInt s = 0;
        for (const auto& v : rows_[static_cast<std::size_t>(n)]) s += v;
        return s;
    }

    // Multiplies the stored series in place by a factor
    //   sum_{j>=0} coeffs[j] * zeta^{j*zeta_step} * q^{j*q_step},
    // coeffs[0] = 1, q_step >= 1. Descending n keeps reads on the
    // not-yet-updated rows, so the update is a clean convolution.
    void apply_factor(const std::vector<BigInt>& coeffs, long q_step, long zeta_step) {
        for (long n = max_n_; n >= q_step; --n) {
            auto& dst = rows_[static_cast<std::size_t>(n)];
            long jmax = n / q_step;
            if (jmax >= static_cast<long>(coeffs.size())) jmax = static_cast<long>(coeffs.size()) - 1;
            for (long j = 1; j <= jmax; ++j) {
                const auto& src = rows_[static_cast<std::size_t>(n - j * q_step)];
                const BigInt& cj = coeffs[static_cast<std::size_t>(j)];
                if (cj == 0) continue;
                long shift = j * zeta_step;
                long m_hi = static_cast<long>(src.size()) - 1 + shift;
                if (m_hi > n) m_hi = n;
                for (long m = shift; m <= m_hi; ++m)
                    dst[static_cast<std::size_t>(m)] +=
                        cj * src[static_cast<std::size_t>(m - shift)];
            }
        }
    }

  private:
    void check_n(long n) const {
        if (n < 0 || n > max_n_) throw std::out_of_range("table: n out of range");
    }

    long max_n_;
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_{0};
};

} // namespace detail

/// Exact coefficients pp(m, n) of the trace-refined MacMahon product
/// prod_{k>=1} (1 - zeta q^k)^{-k}: coeff(m, n) counts plane partitions
/// of n with trace m. All entries are exact nonnegative integers.
class TraceTable {
  public:
    long max_n() const { return table_.max_n(); }
    const BigInt& coeff(long m, long n) const { return table_.coeff(m, n); }
    const std::vector<BigInt>& row(long n) const { return table_.row(n); }

    /// pp(n) = sum_m coeff(m, n).
    BigInt pp(long n) const { return table_.row_sum(n); }

    friend TraceTable build_trace_table(long N);

  private:
    explicit TraceTable(detail::BivariateTable t) : table_(std::move(t)) {}
    detail::BivariateTable table_;
};

/// Builds the trace table up to q^N by sequential truncated
/// multiplication of the factor expansions
/// (1 - zeta q^k)^{-k} = sum_j C(k+j-1, j) zeta^j q^{kj}.
inline TraceTable build_trace_table(long N) {
    detail::BivariateTable t(N);
    for (long k = 1; k <= N; ++k)
        t.apply_factor(binomial_row(k - 1, N / k), k, 1);
    return TraceTable(std::move(t));
}

/// Exact signed coefficients of prod_{k>=1} ((1 - zeta q^k)/(1 - q^k))^k.
/// Substituting zeta = -1 in the q^n coefficient counts plane
/// overpartitions of n.
class OverTable {
  public:
    long max_n() const { return table_.max_n(); }
    const BigInt& coeff(long m, long n) const { return table_.coeff(m, n); }
    const std::vector<BigInt>& row(long n) const { return table_.row(n); }
    BigInt row_sum(long n) const { return table_.row_sum(n); }

    friend OverTable build_over_table(long N);

  private:
    explicit OverTable(detail::BivariateTable t) : table_(std::move(t)) {}
    detail::BivariateTable table_;
};

/// Builds the over table up to q^N: numerators (1 - zeta q^k)^k by the
/// signed binomial expansion, denominators (1 - q^k)^{-k} at zeta-degree
/// zero.
inline OverTable build_over_table(long N) {
    detail::BivariateTable t(N);
    for (long k = 1; k <= N; ++k) {
        long jmax = std::min(k, N / k);
        std::vector<BigInt> num(static_cast<std::size_t>(jmax) + 1);
        for (long j = 0; j <= jmax; ++j) {
            num[static_cast<std::size_t>(j)] = binomial(k, j);
            if (j % 2 == 1) num[static_cast<std::size_t>(j)] = -num[static_cast<std::size_t>(j)];
        }
        t.apply_factor(num, k, 1);
    }
    for (long k = 1; k <= N; ++k)
        t.apply_factor(binomial_row(k - 1, N / k), k, 0);
    return OverTable(std::move(t));
}

/// pp(n) alone for n <= N, via the untwisted MacMahon product. Much
/// cheaper than a full table when only the counts are needed.
inline std::vector<BigInt> pp_series(long N) {
    if (N < 0) throw std::domain_error("pp_series: N must be >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1;
    for (long k = 1; k <= N; ++k) {
        auto bin = binomial_row(k - 1, N / k);
        for (long n = N; n >= k; --n) {
            BigInt& dst = c[static_cast<std::size_t>(n)];
            for (long j = 1; j <= n / k; ++j)
                dst += bin[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(n - k * j)];
        }
    }
    return c;
}

/// Exact counts pp(a, b, n) of plane partitions of n with trace = a mod b.
struct ResidueCounts {
    long b = 1;
    long max_n = 0;
    std::vector<std::vector<BigInt>> counts; // counts[n][a]

    const BigInt& at(long a, long n) const { return counts.at(n).at(a); }
};

inline ResidueCounts residue_counts_direct(const TraceTable& t, long b) {
    if (b < 1) throw std::domain_error("residue_counts_direct: b must be >= 1");
    ResidueCounts rc;
    rc.b = b;
    rc.max_n = t.max_n();
    rc.counts.resize(static_cast<std::size_t>(rc.max_n) + 1);
    for (long n = 0; n <= rc.max_n; ++n) {
        auto& out = rc.counts[static_cast<std::size_t>(n)];
        out.assign(static_cast<std::size_t>(b), BigInt(0));
        const auto& row = t.row(n);
        for (long m = 0; m < static_cast<long>(row.size()); ++m)
            out[static_cast<std::size_t>(m % b)] += row[static_cast<std::size_t>(m)];
    }
    return rc;
}

/// Exact differences pp(a1, b, n) - pp(a2, b, n) for n in [n_lo, n_hi].
inline std::vector<BigInt> difference_series(const TraceTable& t, long a1, long a2, long b,
                                             long n_lo, long n_hi) {
    if (b < 1) throw std::domain_error("difference_series: b must be >= 1");
    if (((a1 - a2) % b + b) % b == 0)
        throw std::domain_error("difference_series: classes must be distinct mod b");
    if (n_lo < 0 || n_hi > t.max_n() || n_lo > n_hi)
        throw std::out_of_range("difference_series: n range outside table");
    a1 = ((a1 % b) + b) % b;
    a2 = ((a2 % b) + b) % b;
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo) + 1);
    for (long n = n_lo; n <= n_hi; ++n) {
        BigInt d = 0;
        const auto& row = t.row(n);
        for (long m = 0; m < static_cast<long>(row.size()); ++m) {
            long r = m % b;
            if (r == a1)
                d += row[static_cast<std::size_t>(m)];
            else if (r == a2)
                d -= row[static_cast<std::size_t>(m)];
        }
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace pptrace
