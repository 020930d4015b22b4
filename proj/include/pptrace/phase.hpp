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

#include "pptrace/polylog.hpp"

namespace pptrace {

/// Default target error for operations without an explicit precision
/// parameter: a few digits above the ambient working precision.
inline PrecisionSpec ambient_precision(unsigned slack_digits = 6) {
    using std::pow;
    int d = static_cast<int>(Real::default_precision()) - static_cast<int>(slack_digits);
    if (d < 8) d = 8;
    return PrecisionSpec(pow(Real(10), -d));
}

inline Cx li3_unit(Rotation theta) { return li3_circle(theta, ambient_precision()); }

inline Real abs_li3(Rotation theta) { return abs(li3_unit(theta)); }

inline Real arg_li3(Rotation theta) { return arg(li3_unit(theta)); }

/// Re of the principal cube root of Li_3(e^{2 pi i theta}).
inline Real re_cbrt_li3(Rotation theta) { return cbrt(li3_unit(theta)).re; }

/// Branch value f_k(theta) = Re(Li_3(e^{2 pi i k theta})^{1/3}) / k.
inline Real branch_value(int k, Rotation theta) {
    if (k < 1) throw std::domain_error("branch_value: k must be >= 1");
    return re_cbrt_li3(Rotation(Real(k) * theta.theta)) / k;
}

struct Dominance {
    Real value;
    int argmax_k;
};

/// max over 1 <= k <= k_max of f_k(theta), with the maximizing k
/// (smallest k on ties). The growth rate of the q^n coefficients is
/// controlled by this maximum; which k attains it selects the dominant
/// arc.
inline Dominance dominance(Rotation theta, int k_max) {
    if (k_max < 2) throw std::domain_error("dominance: k_max must be >= 2");
    Dominance best{branch_value(1, theta), 1};
    for (int k = 2; k <= k_max; ++k) {
        Real v = branch_value(k, theta);
        if (v > best.value) best = {v, k};
    }
    return best;
}

/// zeta(3) - Li_3(e^{2 pi i theta}), the growth parameter of the
/// overpartition-type product.
inline Cx li3_gap(Rotation theta) { return Cx(zeta_value(3)) - li3_unit(theta); }

/// Re of the principal cube root of zeta(3) - Li_3(e^{2 pi i theta});
/// theta = 0 is rejected (the gap vanishes there).
inline Real re_cbrt_gap(Rotation theta) {
    if (theta.theta == 0) throw std::domain_error("re_cbrt_gap: theta must be nonzero");
    return cbrt(li3_gap(theta)).re;
}

/// Arg(zeta(3) - Li_3(e^{2 pi i theta})), lands in (-pi/2, 0) for
/// 0 < theta < 1/2.
inline Real arg_gap(Rotation theta) {
    if (theta.theta == 0) throw std::domain_error("arg_gap: argument undefined at theta = 0");
    return arg(li3_gap(theta));
}

} // namespace pptrace
