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

#include "pptrace/phase.hpp"

namespace pptrace {

/// Bisection on [lo, hi]; requires a sign change. Returns the midpoint
/// of the final bracket, with half-width <= xtol / 2.
template <class F>
Real bisect(F&& f, Real lo, Real hi, const Real& xtol, int max_iter = 100000) {
    Real flo = f(lo);
    Real fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0))
        throw std::domain_error("bisect: no sign change in the bracket");
    bool neg_lo = flo < 0;
    for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
        Real mid = (lo + hi) / 2;
        Real fm = f(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == neg_lo)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

/// The crossing angle of the k = 1 and k = 2 branch values on [1/4, 1/2]
/// (rotations). Below it the k = 1 branch dominates, above it k = 2.
inline Real solve_theta12(const PrecisionSpec& prec) {
    ScopedPrecision sp(Real::default_precision() + 8);
    auto f = [](const Real& th) {
        Rotation r(th);
        return branch_value(1, r) - branch_value(2, r);
    };
    return bisect(f, Real(1) / 4, Real(1) / 2, prec.abs_err);
}

/// Cached crossing angle at fixed high precision, for case selection.
inline const Real& theta12_cached() {
    static const Real value = [] {
        ScopedPrecision sp(50);
        return solve_theta12(PrecisionSpec(Real("1e-40")));
    }();
    return value;
}

/// The angle (in radians, on (0, pi)) where Re((zeta(3) - Li_3(e^{i x}))^{1/3})
/// passes (7 zeta(3))^{1/3} / 2^{5/3}; unique by monotonicity.
inline Real solve_theta1(const PrecisionSpec& prec) {
    ScopedPrecision sp(Real::default_precision() + 8);
    using std::pow;
    Real target = pow(7 * zeta_value(3), Real(1) / 3) / pow(Real(2), Real(5) / 3);
    Real two_pi = 2 * pi_value();
    auto f = [&](const Real& x) { return re_cbrt_gap(Rotation(x / two_pi)) - target; };
    return bisect(f, Real("0.01"), Real("1.5"), prec.abs_err);
}

} // namespace pptrace
