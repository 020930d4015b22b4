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

#include "pptrace/polylog.hpp"
#include "pptrace/solvers.hpp"

namespace pptrace {

/// A decomposed asymptotic main term
///   prefactor * n^{n_power} * (-1)^{n * parity_sign} * exp(exp_coeff * n^{2/3}).
struct MainTermEstimate {
    Cx prefactor;
    Cx exp_coeff; // multiplies n^{2/3}; Re > 0
    long n_power_num = 0;
    long n_power_den = 1;
    bool parity_sign = false;

    Cx evaluate(long n) const {
        if (n < 1) throw std::domain_error("MainTermEstimate: n must be >= 1");
        using std::pow;
        Real np = pow(Real(n), Real(n_power_num) / n_power_den);
        Cx v = prefactor * np * exp(exp_coeff * pow(Real(n), Real(2) / 3));
        if (parity_sign && n % 2 == 1) v = -v;
        return v;
    }

    MainTermEstimate conjugated() const {
        return {conj(prefactor), conj(exp_coeff), n_power_num, n_power_den, parity_sign};
    }
};

namespace detail {

inline Real sqrt_3pi() {
    using std::sqrt;
    return sqrt(3 * pi_value());
}

inline Real pow2(long num, long den) {
    using std::pow;
    return pow(Real(2), Real(num) / den);
}

} // namespace detail

/// Main term of T_n at the root of unity z = e^{2 pi i a/b}, a != 0.
/// Inputs with a/b > 1/2 are evaluated by reflection (conjugate of the
/// estimate at the conjugate root). The case boundary at the branch
/// crossing is rejected within a 1e-9 band.
inline MainTermEstimate trace_main_term(RootOfUnity z, const PrecisionSpec& prec) {
    if (z.is_one())
        throw std::domain_error("trace_main_term: zeta = 1 has its own formula (wright_pp_main_term)");
    if (2 * z.a > z.b) return trace_main_term(z.conjugate(), prec).conjugated();

    ScopedPrecision sp(Real::default_precision() + 8);
    Real ratio = Real(z.a) / z.b;
    const Real& th12 = theta12_cached();
    using std::fabs;
    if (fabs(ratio - th12) < Real("1e-9"))
        throw std::domain_error("trace_main_term: a/b too close to the branch crossing");

    MainTermEstimate est;
    Real s3p = detail::sqrt_3pi();
    Cx one_minus = Cx(Real(1)) - z.value();
    if (2 * z.a == z.b) {
        // zeta = -1: the alternating trace difference
        using std::exp;
        using std::pow;
        Real z3 = zeta_value(3);
        est.prefactor = Cx(exp(-zeta_prime_minus1()) * pow(z3, Real(5) / 36) /
                           (detail::pow2(3, 4) * s3p));
        est.exp_coeff = Cx(3 / detail::pow2(5, 3) * pow(z3, Real(1) / 3));
        est.n_power_num = -23;
        est.n_power_den = 36;
        est.parity_sign = true;
    } else if (ratio < th12) {
        Cx li = li3_root_of_unity(z, prec);
        est.prefactor =
            pow(one_minus, Real(1) / 12) * pow(li, Real(1) / 6) / (detail::pow2(1, 3) * s3p);
        est.exp_coeff = cbrt(li) * (3 / detail::pow2(2, 3));
        est.n_power_num = -2;
        est.n_power_den = 3;
    } else {
        Cx li2a = li3_root_of_unity(z.power(2), prec);
        Cx one_plus = Cx(Real(1)) + z.value();
        est.prefactor = pow(one_minus, Real(1) / 6) * pow(li2a, Real(1) / 6) /
                        (pow(one_plus, Real(1) / 12) * detail::pow2(5, 6) * s3p);
        est.exp_coeff = cbrt(li2a) * (3 / detail::pow2(5, 3));
        est.n_power_num = -2;
        est.n_power_den = 3;
        est.parity_sign = true;
    }
    return est;
}

/// The classical main term for pp(n) itself.
inline MainTermEstimate wright_pp_main_term(const PrecisionSpec&) {
    ScopedPrecision sp(Real::default_precision() + 8);
    using std::exp;
    using std::pow;
    Real z3 = zeta_value(3);
    MainTermEstimate est;
    est.prefactor = Cx(pow(z3, Real(7) / 36) * exp(zeta_prime_minus1()) /
                       (detail::pow2(11, 36) * detail::sqrt_3pi()));
    est.exp_coeff = Cx(3 * pow(z3, Real(1) / 3) / detail::pow2(2, 3));
    est.n_power_num = -25;
    est.n_power_den = 36;
    est.parity_sign = false;
    return est;
}

/// Main term of A_n at the root of unity z != 1 (reflection as above).
inline MainTermEstimate over_main_term(RootOfUnity z, const PrecisionSpec& prec) {
    if (z.is_one()) throw std::domain_error("over_main_term: zeta = 1 rejected");
    if (2 * z.a > z.b) return over_main_term(z.conjugate(), prec).conjugated();

    ScopedPrecision sp(Real::default_precision() + 8);
    using std::exp;
    Cx gap = Cx(zeta_value(3)) - li3_root_of_unity(z, prec);
    Cx one_minus = Cx(Real(1)) - z.value();
    MainTermEstimate est;
    est.prefactor = pow(one_minus, Real(-1) / 12) * pow(gap, Real(7) / 36) *
                    (exp(zeta_prime_minus1()) / (detail::pow2(11, 36) * detail::sqrt_3pi()));
    est.exp_coeff = cbrt(gap) * (3 / detail::pow2(2, 3));
    est.n_power_num = -25;
    est.n_power_den = 36;
    est.parity_sign = false;
    return est;
}

/// Amplitude/phase model for the oscillation of
/// pp(a1, b, n) - pp(a2, b, n): the normalized difference follows
/// cos(alpha + 3 * 2^{-2/3} lambda2 n^{2/3}).
struct OscillationModel {
    Real B;       // > 0
    Real alpha;   // in [0, 2 pi)
    Real lambda1; // Re Li_3(zeta_b)^{1/3}
    Real lambda2; // Im Li_3(zeta_b)^{1/3}
};

inline OscillationModel oscillation_model(long a1, long a2, long b, const PrecisionSpec& prec) {
    if (b < 3) throw std::domain_error("oscillation_model: b must be >= 3");
    if (((a1 - a2) % b + b) % b == 0)
        throw std::domain_error("oscillation_model: classes must be distinct mod b");
    ScopedPrecision sp(Real::default_precision() + 8);
    RootOfUnity zb = RootOfUnity::reduced(1, b);
    Cx lambda = cbrt(li3_root_of_unity(zb, prec));
    Cx diff = RootOfUnity::reduced(-a1, b).value() - RootOfUnity::reduced(-a2, b).value();
    Cx c = diff * pow(Cx(Real(1)) - zb.value(), Real(1) / 12) * sqrt(lambda) *
           (detail::pow2(2, 3) / (b * detail::sqrt_3pi()));
    Real alpha = arg(c);
    if (alpha < 0) alpha += 2 * pi_value();
    return OscillationModel{abs(c), alpha, lambda.re, lambda.im};
}

/// B n^{-2/3} exp(3 * 2^{-2/3} lambda1 n^{2/3}) cos(alpha + 3 * 2^{-2/3} lambda2 n^{2/3}).
inline Real predicted_difference(const OscillationModel& m, long n) {
    if (n < 1) throw std::domain_error("predicted_difference: n must be >= 1");
    using std::cos;
    using std::exp;
    using std::pow;
    Real n23 = pow(Real(n), Real(2) / 3);
    Real rate = 3 / detail::pow2(2, 3);
    return m.B * pow(Real(n), Real(-2) / 3) * exp(rate * m.lambda1 * n23) *
           cos(m.alpha + rate * m.lambda2 * n23);
}

struct RatioRow {
    long n;
    Cx ratio;
    Real abs_dev; // |ratio - 1|
};

/// Exact-over-estimate comparison rows on an n grid. The estimate's
/// parity factor is part of its evaluation, so the ratio tends to 1.
template <class ExactFn>
std::vector<RatioRow> ratio_report(ExactFn&& exact, const MainTermEstimate& est,
                                   const std::vector<long>& n_grid) {
    std::vector<RatioRow> rows;
    rows.reserve(n_grid.size());
    for (long n : n_grid) {
        Cx r = Cx(exact(n)) / est.evaluate(n);
        Real dev = abs(r - Cx(Real(1)));
        rows.push_back(RatioRow{n, r, dev});
    }
    return rows;
}

} // namespace pptrace
