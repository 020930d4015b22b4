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

#include "pptrace/real.hpp"

namespace pptrace {

/// Forward difference Delta^m(a)_n = sum_j C(m, j) (-1)^j a(n + j).
/// A sequence is strictly r-fold monotone when these are positive for
/// all n and m <= r; that is the hypothesis driving the monotonicity
/// statements checked in the test suite.
template <class Seq>
Real forward_difference(Seq&& a, int m, long n) {
    if (m < 0) throw std::domain_error("forward_difference: m must be >= 0");
    Real acc = 0;
    BigInt c = 1;
    for (int j = 0; j <= m; ++j) {
        Real term = Real(c) * a(n + j);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
        c *= m - j;
        c /= j + 1;
    }
    return acc;
}

/// Truncation of the cosine-coefficient sequence of
/// |zeta(3) - Li_3(e^{i theta})|^2 = zeta(3)^2 + zeta(6) - 2 sum A_n cos(n theta):
///   A_n = zeta(3)/n^3 - sum_{k>=1} 1/(k^3 (k+n)^3),
/// keeping k <= K. The dropped tail is itself a positive combination of
/// completely monotone sequences, so truncation only lowers every
/// forward difference; see gap_coeff_tail_bound.
inline std::vector<Real> gap_modulus_coeffs(long n_max, long K) {
    std::vector<Real> a(static_cast<std::size_t>(n_max) + 1);
    Real z3 = zeta_value(3);
    for (long n = 1; n <= n_max; ++n) {
        Real s = 0;
        for (long k = 1; k <= K; ++k) {
            Real kk = Real(k) * k * k;
            Real kn = Real(k + n);
            s += Real(1) / (kk * kn * kn * kn);
        }
        a[static_cast<std::size_t>(n)] = z3 / (Real(n) * n * n) - s;
    }
    return a;
}

/// Upper bound for Delta^m of the dropped tail sum_{k>K} 1/(k^3 (k+n)^3):
/// by the integral identity for Delta^m(1/nu^3),
///   Delta^m(tail)_n <= (sum_{k>K} 1/k^3) * Delta^m(1/nu^3)_{n+K+1}
///                   <= (1/(2K^2)) * Delta^m(1/nu^3)_{n+K+1}.
/// Delta^m(truncated)_n > this bound certifies Delta^m(A)_n > 0.
inline Real gap_coeff_tail_bound(int m, long n, long K) {
    auto inv_cube = [](long nu) {
        Real v(nu);
        return Real(1) / (v * v * v);
    };
    return forward_difference(inv_cube, m, n + K + 1) / (2 * Real(K) * K);
}

} // namespace pptrace
