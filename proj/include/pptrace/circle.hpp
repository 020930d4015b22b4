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

#include <numeric>
#include <vector>

#include "pptrace/asymptotics.hpp"
#include "pptrace/farey.hpp"
#include "pptrace/polylog.hpp"
#include "pptrace/solvers.hpp"

namespace pptrace {

/// Complex saddle parameter t with Re(t) > 0.
struct SaddleParam {
    Cx t;
};

/// The saddle scale t_n for T_n at z = e^{2 pi i a/b}:
/// 2^{1/3} Li_3(z)^{1/3} n^{-1/3} below the branch crossing, and
/// Li_3(z^2)^{1/3} / (2^{2/3} n^{1/3}) above it.
inline SaddleParam saddle_t(RootOfUnity z, long n, const PrecisionSpec& prec) {
    if (n < 1) throw std::domain_error("saddle_t: n must be >= 1");
    ScopedPrecision sp(Real::default_precision() + 8);
    using std::cbrt;
    Real n13 = cbrt(Real(n));
    Real ratio = Real(z.a) / z.b;
    if (ratio < theta12_cached()) {
        Cx li = li3_root_of_unity(z, prec);
        return SaddleParam{pptrace::cbrt(li) * (detail::pow2(1, 3) / n13)};
    }
    Cx li = li3_root_of_unity(z.power(2), prec);
    return SaddleParam{pptrace::cbrt(li) / (detail::pow2(2, 3) * n13)};
}

/// log PP(z; zeta_k^h e^{-t}) as the double series
/// sum_{nu, l >= 1} nu z^l zeta_k^{h l nu} e^{-nu l t} / l, with the inner
/// nu-sum in closed form u/(1-u)^2 and a geometric tail bound in Re(t).
inline Cx log_pp_twisted(RootOfUnity z, long long h, long long k, const Cx& t,
                         const PrecisionSpec& prec) {
    if (k < 1 || std::gcd(static_cast<long long>(((h % k) + k) % k), k) != 1)
        throw std::domain_error("log_pp_twisted: need k >= 1 and gcd(h, k) = 1");
    Real sigma = t.re;
    if (!(sigma > 0)) throw std::domain_error("log_pp_twisted: Re(t) must be > 0");

    ScopedPrecision sp(Real::default_precision() + 8);
    using std::exp;
    const long b = z.b;
    std::vector<Cx> zpow(static_cast<std::size_t>(b)); // zpow[r] = z^r
    for (long r = 0; r < b; ++r)
        zpow[static_cast<std::size_t>(r)] = unit_circle(Real((z.a * r) % b) / b);

    Cx base = unit_circle(Real(((h % k) + k) % k) / k) * exp(Cx(-t.re, -t.im));
    Real one_minus_q = 1 - exp(-sigma);
    Cx u(Real(1));
    Cx acc;
    const long cap = 20000000;
    for (long l = 1;; ++l) {
        if (l > cap) throw resource_error("log_pp_twisted: Re(t) too small to converge");
        u *= base;
        Cx one_minus_u = Cx(Real(1)) - u;
        Cx term = u / (one_minus_u * one_minus_u);
        acc += zpow[static_cast<std::size_t>(l % b)] * term / Real(l);
        // tail <= e^{-(l+1) sigma} / ((l+1) (1 - e^{-sigma})^3)
        Real tail = exp(-(l + 1) * sigma) /
                    ((l + 1) * one_minus_q * one_minus_q * one_minus_q);
        if (tail <= prec.abs_err) break;
    }
    return acc;
}

/// E_{h,k}(z; t) = log PP(z; zeta_k^h e^{-t}) - Li_3(z^k) / (k^3 t^2),
/// the error term left after removing the polar main part.
inline Cx log_pp_error_term(RootOfUnity z, long long h, long long k, const Cx& t,
                            const PrecisionSpec& prec) {
    Cx lp = log_pp_twisted(z, h, k, t, prec);
    Cx li = li3_root_of_unity(z.power(k), prec);
    Real k3 = Real(k) * k * k;
    return lp - li / (t * t * k3);
}

namespace detail {

inline void reject_kernel_singularity(const Cx& w, const Cx& one_minus_ew) {
    if (abs(w) < Real("1e-30"))
        throw std::domain_error("kernel: w too close to 0 for the direct formula");
    if (abs(one_minus_ew) < Real("1e-30"))
        throw std::domain_error("kernel: w on the singular set e^{-w} = 1");
}

} // namespace detail

/// The lattice kernel g_{j,k}(w) of the error-term expansion:
/// e^{-w - (j/k) w} / (w (1-e^{-w})^2) + (j/k) e^{-(j/k) w} / (w (1-e^{-w})) - 1/w^3.
/// Simple pole at 0 with residue -(j/k)^2/2 - 1/12 + (j/k)/2.
inline Cx err_kernel(long j, long k, const Cx& w) {
    if (k < 1 || j < 1 || j > k) throw std::domain_error("err_kernel: need 1 <= j <= k");
    Real r = Real(j) / k;
    Cx ew = exp(-w);
    Cx one_minus = Cx(Real(1)) - ew;
    detail::reject_kernel_singularity(w, one_minus);
    Cx erw = exp(w * (-r));
    Cx w3 = w * w * w;
    return ew * erw / (w * one_minus * one_minus) + erw * r / (w * one_minus) -
           Cx(Real(1)) / w3;
}

/// Row sum sum_{j=1}^{k} zeta_k^{mjh} g_{j,k}(w) when k | mh:
///   -k/w^3 + e^{-w/k} / (k w (1 - e^{-w/k})^2).
inline Cx kernel_row_sum_aligned(long k, const Cx& w) {
    if (k < 1) throw std::domain_error("kernel_row_sum_aligned: k must be >= 1");
    Cx wk = w / Real(k);
    Cx ewk = exp(-wk);
    Cx one_minus = Cx(Real(1)) - ewk;
    detail::reject_kernel_singularity(w, one_minus);
    Cx w3 = w * w * w;
    return Cx(Real(-k)) / w3 + ewk / (one_minus * one_minus * w * Real(k));
}

/// Row sum when k does not divide mh, with r = mh mod k != 0:
///   zeta_k^r e^{-w/k} / (k w (1 - zeta_k^r e^{-w/k})^2).
inline Cx kernel_row_sum_offset(long k, long r, const Cx& w) {
    if (k < 1) throw std::domain_error("kernel_row_sum_offset: k must be >= 1");
    r = ((r % k) + k) % k;
    if (r == 0) throw std::domain_error("kernel_row_sum_offset: r must be nonzero mod k");
    Cx u = unit_circle(Real(r) / k) * exp(-(w / Real(k)));
    Cx one_minus = Cx(Real(1)) - u;
    detail::reject_kernel_singularity(w, one_minus);
    return u / (one_minus * one_minus * w * Real(k));
}

/// The pole-stripped kernel phi_a(w), holomorphic at 0 and in any cone
/// |Arg w| <= pi/2 - eta; satisfies phi_{j/k}(w) = w g_{j,k}(w).
inline Cx holo_kernel(const Real& a, const Cx& w) {
    if (a < 0 || a > 1) throw std::domain_error("holo_kernel: a must be in [0, 1]");
    Cx ew = exp(-w);
    Cx one_minus = Cx(Real(1)) - ew;
    detail::reject_kernel_singularity(w, one_minus);
    Cx eaw = exp(w * (-a));
    return ew * eaw / (one_minus * one_minus) + eaw * a / one_minus -
           Cx(Real(1)) / (w * w);
}

/// Certified residual of the error-term lattice expansion
///   E_{h,k}(z; t) = sum_{j <= k, m <= bk} z^m zeta_k^{mjh} k^2 t
///                   sum_{l >= 0} g_{j,k}(t (b k^2 l + k m)).
/// The l-sum keeps min_terms explicit terms, replaces the algebraic
/// -1/w^3 part of the rest with a Hurwitz-zeta tail, and folds a
/// certified bound for the remaining exponentially small part into the
/// returned residual. Small parameters only (the (j, m) lattice has
/// b k^2 points).
inline Real lemma42_residual(RootOfUnity z, long long h, long long k, const Cx& t,
                             long min_terms, const PrecisionSpec& prec) {
    const long b = z.b;
    Real sigma = t.re;
    if (!(sigma > 0)) throw std::domain_error("lemma42_residual: Re(t) must be > 0");
    if (k < 1 || b * k * k > 4096)
        throw std::domain_error("lemma42_residual: parameters too large");

    ScopedPrecision sp(Real::default_precision() + 10);
    using std::exp;
    using std::log;
    using std::pow;

    const Real inner_err("1e-30");
    Cx lhs = log_pp_error_term(z, h, k, t, PrecisionSpec(inner_err));

    // Grow L until the exponential part of the l-tail is negligible.
    long L = std::max<long>(min_terms, 16);
    Real tail_total;
    for (;; L *= 2) {
        if (L > 2000000) throw resource_error("lemma42_residual: tail does not converge");
        Real smin = sigma * (b * k * k * L + k); // smallest Re(w) beyond the cut
        Real e1 = exp(-smin), ek = exp(-smin / k);
        Real d2 = 1 - exp(-sigma * b * k * k);
        Real dk = 1 - exp(-sigma * b * k);
        Real om = 1 - e1;
        Real per = e1 / (smin * om * om * d2) + ek / (smin * om * dk);
        tail_total = abs(t) * k * k * (Real(k) * b * k) * per;
        if (tail_total <= prec.abs_err / 10) break;
    }

    Cx rhs;
    Real zeta_err_total = 0;
    Cx tbk2 = t * Real(b) * k * k;
    Cx tbk2_cubed = tbk2 * tbk2 * tbk2;
    for (long m = 1; m <= b * k; ++m) {
        Real hz = hurwitz_zeta(3, Real(L) + Real(m) / (b * k), PrecisionSpec(inner_err));
        Cx alg_tail = Cx(hz) / tbk2_cubed;
        zeta_err_total += inner_err / abs(tbk2_cubed);
        for (long j = 1; j <= k; ++j) {
            Cx inner;
            for (long l = 0; l < L; ++l)
                inner += err_kernel(j, k, t * Real(b * k * k * l + k * m));
            inner -= alg_tail;
            long em = (m * z.a) % b;
            long er = ((m * j) % k) * (h % k) % k;
            Cx tw = unit_circle(Real(em) / b) * unit_circle(Real(er) / k);
            rhs += tw * inner;
        }
    }
    rhs *= t * Real(k) * k;
    zeta_err_total *= abs(t) * k * k * k;

    return abs(lhs - rhs) + tail_total + zeta_err_total + inner_err;
}

/// Partial sum of the twisted harmonic series, sum_{m<=M} e^{2 pi i theta m}/m.
inline Cx twisted_harmonic(long M, Rotation theta) {
    if (M < 1) throw std::domain_error("twisted_harmonic: M must be >= 1");
    Cx w = unit_circle(Real(theta.theta));
    Cx z(Real(1));
    Cx acc;
    for (long m = 1; m <= M; ++m) {
        z *= w;
        acc += z / Real(m);
    }
    return acc;
}

namespace detail {

template <class F>
Cx adaptive_simpson(F&& f, const Real& a, const Real& b, const Cx& fa, const Cx& fb,
                    const Cx& fm, const Cx& whole, const Real& tol, int depth) {
    Real m = (a + b) / 2;
    Real lm = (a + m) / 2, rm = (m + b) / 2;
    Cx flm = f(lm), frm = f(rm);
    Real h6 = (b - a) / 12;
    Cx left = (fa + flm * Real(4) + fm) * h6;
    Cx right = (fm + frm * Real(4) + fb) * h6;
    Cx sum = left + right;
    Cx delta = sum - whole;
    if (depth <= 0) throw resource_error("major_arc_estimate: quadrature did not converge");
    if (abs(delta) <= 15 * tol) return sum + delta / Real(15);
    return adaptive_simpson(f, a, m, fa, fm, flm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, right, tol / 2, depth - 1);
}

template <class F>
Cx integrate_arc(F&& f, const Real& lo, const Real& hi, long panels, const Real& tol) {
    Cx total;
    Real width = hi - lo;
    Real ptol = tol / panels;
    for (long i = 0; i < panels; ++i) {
        Real a = lo + width * i / panels;
        Real b = lo + width * (i + 1) / panels;
        Real m = (a + b) / 2;
        Cx fa = f(a), fb = f(b), fm = f(m);
        Cx whole = (fa + fm * Real(4) + fb) * ((b - a) / 6);
        total += adaptive_simpson(f, a, b, fa, fb, fm, whole, ptol, 36);
    }
    return total;
}

} // namespace detail

/// Quadrature of the dominant-arc integral
///   int exp(Li_3(z^k) / (k^3 t_theta^2) + n t_theta) * (error-term constant) dtheta,
/// t_theta = t_n - 2 pi i theta, over the arc of h/k = 0/1 (below the
/// branch crossing) or 1/2 (above it), times the phase zeta_k^{nh}. An
/// intermediate-accuracy estimate of T_n(z): sharper than the main term,
/// still an approximation. rel_err is relative to the result's modulus;
/// farey_N = 0 picks floor(n^{1/3}).
inline Cx major_arc_estimate(RootOfUnity z, long n, const Real& rel_err, long farey_N = 0) {
    if (n < 1) throw std::domain_error("major_arc_estimate: n must be >= 1");
    ScopedPrecision sp(Real::default_precision() + 10);
    using std::cbrt;
    using std::exp;
    using std::fabs;
    using std::floor;

    long F = farey_N > 0 ? farey_N : static_cast<long>(floor(cbrt(static_cast<double>(n))));
    if (F < 2) F = 2;
    Real ratio = Real(z.a) / z.b;
    const Real& th12 = theta12_cached();
    if (!z.is_one() && fabs(ratio - th12) < Real("1e-9"))
        throw std::domain_error("major_arc_estimate: a/b too close to the branch crossing");

    const PrecisionSpec li_prec{Real("1e-35")};
    Real zp = zeta_prime_minus1();
    Real two_pi = 2 * pi_value();
    Real n13 = cbrt(Real(n));

    Cx li, tn;
    Real k3;
    bool half_arc; // arc at 1/2 (k = 2) rather than 0/1
    if (ratio < th12) {
        li = li3_root_of_unity(z, li_prec);
        tn = pptrace::cbrt(li) * (detail::pow2(1, 3) / n13);
        k3 = 1;
        half_arc = false;
    } else {
        li = li3_root_of_unity(z.power(2), li_prec);
        tn = pptrace::cbrt(li) / (detail::pow2(2, 3) * n13);
        k3 = 8;
        half_arc = true;
    }

    // Arc bounds from the order-F dissection.
    Real theta_lo, theta_hi;
    if (!half_arc) {
        theta_lo = theta_hi = Real(1) / (F + 1);
    } else {
        auto arcs = farey(F);
        theta_lo = theta_hi = Real(1) / (2 * (2 + (F % 2 ? F : F - 1)));
        for (const auto& arc : arcs)
            if (arc.h == 1 && arc.k == 2) {
                theta_lo = arc.theta_lo.value();
                theta_hi = arc.theta_hi.value();
            }
    }

    // Per-theta error-term factor: constant off the two logarithmic
    // cases, t_theta-dependent for z = 1 and z = -1.
    int log_sign = 0; // coefficient of (1/12) Log(t_theta) in the exponent
    Cx e_const;
    if (z.is_one()) {
        log_sign = 1;
        e_const = Cx(exp(zp));
    } else if (2 * z.a == z.b) {
        log_sign = -1;
        e_const = Cx(exp(-zp));
    } else if (!half_arc) {
        e_const = exp(log(Cx(Real(1)) - z.value()) / Real(12));
    } else {
        e_const = exp(log(Cx(Real(1)) - z.value()) / Real(6) -
                      log(Cx(Real(1)) + z.value()) / Real(12));
    }

    auto integrand = [&](const Real& theta) {
        Cx tt = tn - Cx(Real(0), two_pi * theta);
        Cx expo = li / (tt * tt * k3) + tt * Real(n);
        if (log_sign != 0) expo += log(tt) * (Real(log_sign) / 12);
        return exp(expo);
    };

    Real width = theta_lo + theta_hi;
    long panels = static_cast<long>(Real(2 * n) * width) + 8;
    if (panels > 4096) panels = 4096;
    Real peak = abs(integrand(Real(0)));
    Real tol = peak * width * rel_err / 4;

    Cx result = detail::integrate_arc(integrand, -theta_lo, theta_hi, panels, tol) * e_const;
    if (half_arc && n % 2 == 1) result = -result;
    return result;
}

} // namespace pptrace
