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

#include <cmath>

#include "pptrace/bernoulli.hpp"
#include "pptrace/complex.hpp"
#include "pptrace/errors.hpp"
#include "pptrace/root_of_unity.hpp"

namespace pptrace {

/// Li_s(e^{2 pi i theta}) by direct summation of z^n / n^s with the tail
/// bound sum_{n>N} n^{-s} <= N^{1-s}/(s-1). Intentionally the slow,
/// assumption-free evaluation; the faster routes below are checked
/// against it.
inline Cx li_series(int s, Rotation theta, const PrecisionSpec& prec) {
    if (s < 2) throw std::domain_error("li_series: s must be >= 2 (boundary convergence)");
    const Real err = prec.abs_err / 2;
    using std::ceil;
    using std::log10;
    using std::pow;
    Real nr = ceil(pow(Real(1) / (err * (s - 1)), Real(1) / (s - 1)));
    if (nr > Real(6000000)) throw resource_error("li_series: too many terms for requested error");
    long N = static_cast<long>(nr);
    if (N < 4) N = 4;

    unsigned extra = static_cast<unsigned>(log10(static_cast<double>(N))) + 10;
    ScopedPrecision sp(Real::default_precision() + extra);
    Cx w = unit_circle(Real(theta.theta));
    Cx z(Real(1));
    Cx sum;
    for (long n = 1; n <= N; ++n) {
        z *= w;
        Real p = Real(n);
        for (int i = 1; i < s; ++i) p *= n;
        Real recip = Real(1) / p;
        sum += Cx(z.re * recip, z.im * recip);
    }
    return sum;
}

/// Hurwitz zeta(s, a) for integer s >= 2 and real a > 0, by
/// Euler-Maclaurin with exact Bernoulli-number corrections. The
/// remainder of the completely monotone summand is bounded by the first
/// omitted correction term, so the truncation is certified.
inline Real hurwitz_zeta(int s, const Real& a, const PrecisionSpec& prec) {
    if (s < 2) throw std::domain_error("hurwitz_zeta: s must be >= 2");
    if (!(a > 0)) throw std::domain_error("hurwitz_zeta: a must be > 0");
    const Real err = prec.abs_err / 2;

    unsigned digits = Real::default_precision();
    unsigned J = std::min(60u, std::max(8u, digits / 3));

    // |R| <= |B_{2J+2}|/(2J+2)! * prod_{i=0}^{2J}(s+i) * (M+a)^{-(s+2J+1)}
    Real cj = Real(bernoulli_number(2 * J + 2)) / Real(factorial(2 * J + 2));
    using std::fabs;
    cj = fabs(cj);
    for (int i = 0; i <= 2 * static_cast<int>(J); ++i) cj *= s + i;
    using std::ceil;
    using std::pow;
    Real base = pow(cj / err, Real(1) / (s + 2 * static_cast<int>(J) + 1));
    long M = 1;
    if (base > a) M = static_cast<long>(ceil(base - a)) + 1;
    if (M > 10000000) throw resource_error("hurwitz_zeta: truncation too large");

    ScopedPrecision sp(digits + 10);
    Real sum = 0;
    for (long n = 0; n < M; ++n) sum += pow(a + n, Real(-s));
    Real ma = a + M;
    sum += pow(ma, Real(1 - s)) / (s - 1);
    sum += pow(ma, Real(-s)) / 2;
    Real rising = Real(s);             // s(s+1)...(s+2j-2), updated per j
    Real mak = pow(ma, Real(-s - 1));  // (M+a)^{-s-2j+1}
    Real ma2 = Real(1) / (ma * ma);
    for (unsigned j = 1; j <= J; ++j) {
        Real term = Real(bernoulli_number(2 * j)) / Real(factorial(2 * j));
        sum += term * rising * mak;
        rising *= (s + 2 * j - 1);
        rising *= (s + 2 * j);
        mak *= ma2;
    }
    return sum;
}

/// Li_3 at the root of unity e^{2 pi i a/b} through the Hurwitz
/// decomposition Li_3(z) = b^{-3} sum_{r=1}^{b} z^r zeta(3, r/b).
inline Cx li3_root_of_unity(RootOfUnity z, const PrecisionSpec& prec) {
    const long b = z.b;
    Real err_h = prec.abs_err * b * b / 2;
    ScopedPrecision sp(Real::default_precision() + 10);
    Real two_pi = 2 * pi_value();
    Cx acc;
    for (long r = 1; r <= b; ++r) {
        Real h = hurwitz_zeta(3, Real(r) / b, PrecisionSpec(err_h));
        long e = static_cast<long>((static_cast<__int128>(z.a) * r) % b);
        using std::cos;
        using std::sin;
        Real angle = two_pi * e / b;
        acc += Cx(h * cos(angle), h * sin(angle));
    }
    Real b3 = Real(b) * b * b;
    return acc / b3;
}

/// Li_3(e^{2 pi i theta}) for arbitrary real theta, through the expansion
/// of Li_3(e^mu) around mu = 0 (mu = 2 pi i theta, folded to |theta| <= 1/2
/// by conjugation):
///   Li_3(e^mu) = zeta(3) + zeta(2) mu + mu^2/2 (3/2 - Log(-mu)) - mu^3/12
///                + sum_{m>=1} zeta(1-2m) mu^{2m+2}/(2m+2)!,
/// zeta(1-2m) = -B_{2m}/(2m). The tail is certified with
/// |B_{2m}| = 2 (2m)! zeta(2m) / (2 pi)^{2m} and zeta(2m) <= zeta(2).
inline Cx li3_circle(Rotation theta, const PrecisionSpec& prec) {
    Real th = theta.theta;
    if (th == 0) return Cx(zeta_value(3));
    bool conjugate = false;
    if (th > Real(1) / 2) {
        th = 1 - th;
        conjugate = true;
    }

    ScopedPrecision sp(Real::default_precision() + 8);
    const Real err = prec.abs_err / 2;
    Real x = 2 * pi_value() * th; // 0 < x <= pi
    Cx mu(Real(0), x);
    Cx mu2 = mu * mu;

    Cx sum(zeta_value(3));
    sum += Cx(zeta_value(2)) * mu;
    sum += mu2 * (Cx(Real(3) / 2) - log(-mu)) / Real(2);
    sum -= mu2 * mu / Real(12);

    Real q = th * th;            // (x / 2pi)^2 for folded theta, <= 1/4
    Real zeta2 = zeta_value(2);
    Cx term = mu2 * mu2 / Real(24); // mu^{2m+2}/(2m+2)! at m = 1
    for (unsigned m = 1;; ++m) {
        Real coeff = -Real(bernoulli_number(2 * m)) / (2 * m); // zeta(1-2m)
        sum += term * coeff;
        // tail bound over m' > m
        Real mm = Real(2 * m + 2);
        Real tail = 2 * zeta2 * x * x / (mm * (mm + 1) * (mm + 2));
        using std::pow;
        tail *= pow(q, static_cast<int>(m + 1)) / (1 - q);
        if (tail <= err) break;
        if (m > 2000) throw resource_error("li3_circle: expansion did not converge");
        term *= mu2 / Real((2 * m + 3) * (2 * m + 4));
    }
    return conjugate ? conj(sum) : sum;
}

} // namespace pptrace
