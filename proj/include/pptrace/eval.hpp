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

#include <algorithm>
#include <cmath>
#include <vector>

#include "pptrace/complex.hpp"
#include "pptrace/errors.hpp"
#include "pptrace/root_of_unity.hpp"
#include "pptrace/trace_table.hpp"

namespace pptrace {

namespace detail {

// Exact sums of row coefficients within each residue class of m mod b.
// Cancellation between huge coefficients happens here, in integers.
inline std::vector<BigInt> residue_class_sums(const std::vector<BigInt>& row, long b) {
    std::vector<BigInt> sums(static_cast<std::size_t>(b));
    for (long m = 0; m < static_cast<long>(row.size()); ++m)
        sums[static_cast<std::size_t>(m % b)] += row[static_cast<std::size_t>(m)];
    return sums;
}

inline unsigned digits_for_root_eval(const std::vector<BigInt>& sums, long b, const Real& abs_err) {
    unsigned long bits = 0;
    for (const auto& s : sums) bits = std::max(bits, bit_length(s));
    using std::log2;
    double err_bits = static_cast<double>(-log2(static_cast<double>(abs_err)));
    if (err_bits < 0) err_bits = 0;
    double want = static_cast<double>(bits) + err_bits + 2.0 * std::log2(static_cast<double>(b) + 1.0) + 40.0;
    return digits_for_bits(static_cast<unsigned>(want));
}

// sum_r sums[r] * e^{2 pi i a r / b}, evaluated at a working precision
// wide enough that the result carries absolute error below abs_err.
inline Cx combine_residue_sums(const std::vector<BigInt>& sums, long a, long b,
                               const Real& abs_err) {
    ScopedPrecision sp(digits_for_root_eval(sums, b, abs_err));
    Real two_pi = 2 * pi_value();
    Cx acc;
    for (long r = 0; r < b; ++r) {
        const BigInt& s = sums[static_cast<std::size_t>(r)];
        if (s == 0) continue;
        long e = static_cast<long>((static_cast<__int128>(a) * r) % b);
        Real angle = two_pi * e / b;
        using std::cos;
        using std::sin;
        Real sv(s);
        acc += Cx(sv * cos(angle), sv * sin(angle));
    }
    return acc;
}

} // namespace detail

/// T_n at the root of unity z, i.e. sum_m coeff(m, n) e^{2 pi i a m / b},
/// with the residue-class sums taken exactly before any rounding.
inline Cx eval_at_root(const TraceTable& t, long n, RootOfUnity z, const PrecisionSpec& prec) {
    if (n < 0 || n > t.max_n()) throw std::out_of_range("eval_at_root: n out of range");
    auto sums = detail::residue_class_sums(t.row(n), z.b);
    return detail::combine_residue_sums(sums, z.a, z.b, prec.abs_err);
}

/// Same evaluation for the over table's polynomial A_n.
inline Cx eval_at_root(const OverTable& t, long n, RootOfUnity z, const PrecisionSpec& prec) {
    if (n < 0 || n > t.max_n()) throw std::out_of_range("eval_at_root: n out of range");
    auto sums = detail::residue_class_sums(t.row(n), z.b);
    return detail::combine_residue_sums(sums, z.a, z.b, prec.abs_err);
}

/// Residue counts recovered through root-of-unity orthogonality:
/// pp(a, b, n) = pp(n)/b + (1/b) sum_{v=1}^{b-1} e^{-2 pi i a v / b} T_n(e^{2 pi i v / b}).
/// The complex result must round to an integer within 0.25, otherwise a
/// precision_error is thrown (retry with a smaller abs_err).
inline ResidueCounts residue_counts_via_roots(const TraceTable& t, long b,
                                              const PrecisionSpec& prec) {
    if (b < 1) throw std::domain_error("residue_counts_via_roots: b must be >= 1");
    ResidueCounts rc;
    rc.b = b;
    rc.max_n = t.max_n();
    rc.counts.resize(static_cast<std::size_t>(rc.max_n) + 1);

    for (long n = 0; n <= rc.max_n; ++n) {
        auto sums = detail::residue_class_sums(t.row(n), b);
        ScopedPrecision sp(detail::digits_for_root_eval(sums, b, prec.abs_err));
        Real two_pi = 2 * pi_value();

        // Unit-circle values e^{2 pi i e / b} for e = 0..b-1, shared by the
        // T_n evaluations and the orthogonality combination below.
        std::vector<Cx> unit(static_cast<std::size_t>(b));
        for (long e = 0; e < b; ++e) {
            using std::cos;
            using std::sin;
            Real angle = two_pi * e / b;
            unit[static_cast<std::size_t>(e)] = Cx(cos(angle), sin(angle));
        }

        std::vector<Cx> tvals(static_cast<std::size_t>(b)); // tvals[v] = T_n at e^{2 pi i v/b}
        for (long v = 0; v < b; ++v) {
            Cx acc;
            for (long r = 0; r < b; ++r) {
                const BigInt& s = sums[static_cast<std::size_t>(r)];
                if (s == 0) continue;
                acc += unit[static_cast<std::size_t>((v * r) % b)] * Real(s);
            }
            tvals[static_cast<std::size_t>(v)] = acc;
        }

        auto& out = rc.counts[static_cast<std::size_t>(n)];
        out.resize(static_cast<std::size_t>(b));
        for (long a = 0; a < b; ++a) {
            Cx acc = tvals[0]; // v = 0 term is T_n(1) = pp(n)
            for (long v = 1; v < b; ++v) {
                long e = static_cast<long>(((static_cast<__int128>(b) - a) * v) % b);
                acc += unit[static_cast<std::size_t>(e)] * tvals[static_cast<std::size_t>(v)];
            }
            acc /= Real(b);
            using std::abs;
            using std::floor;
            Real rounded = floor(acc.re + Real(0.5));
            if (abs(acc.re - rounded) > Real(0.25) || abs(acc.im) > Real(0.25))
                throw precision_error("residue_counts_via_roots: rounding ambiguous at n=" +
                                      std::to_string(n));
            out[static_cast<std::size_t>(a)] = BigInt(rounded);
        }
    }
    return rc;
}

} // namespace pptrace
