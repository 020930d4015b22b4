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

#include <catch2/catch_amalgamated.hpp>

#include "pptrace/asymptotics.hpp"
#include "pptrace/eval.hpp"
#include "pptrace/phase.hpp"

using namespace pptrace;

namespace {
struct Setup {
    Setup() { set_precision_digits(40); }
};
static Setup setup;

PrecisionSpec p20() { return PrecisionSpec(Real("1e-20")); }
PrecisionSpec p30() { return PrecisionSpec(Real("1e-30")); }
Real paper_tol() { return Real("5e-4"); }
} // namespace

TEST_CASE("growth parameter at the fifth root of unity") {
    auto est = trace_main_term(RootOfUnity::reduced(1, 5), p20());
    Cx lambda = est.exp_coeff / (3 / pow(Real(2), Real(2) / 3));
    CHECK(fabs(lambda.re - Real("0.89873")) < paper_tol());
    CHECK(fabs(lambda.im - Real("0.44610")) < paper_tol());
    CHECK(est.n_power_num == -2);
    CHECK(est.n_power_den == 3);
    CHECK_FALSE(est.parity_sign);
    CHECK(est.exp_coeff.re > 0);
}

TEST_CASE("alternating case at -1") {
    auto est = trace_main_term(RootOfUnity::reduced(1, 2), p20());
    CHECK(est.n_power_num == -23);
    CHECK(est.n_power_den == 36);
    CHECK(est.parity_sign);
    CHECK(est.prefactor.im == 0);
    using std::exp;
    using std::pow;
    using std::sqrt;
    Real expect = exp(-zeta_prime_minus1()) * pow(zeta_value(3), Real(5) / 36) /
                  (pow(Real(2), Real(3) / 4) * sqrt(3 * pi_value()));
    CHECK(fabs(est.prefactor.re - expect) < Real("1e-30"));
    CHECK(fabs(est.exp_coeff.re -
               3 / pow(Real(2), Real(5) / 3) * pow(zeta_value(3), Real(1) / 3)) <
          Real("1e-30"));
}

TEST_CASE("second branch beyond the crossing angle") {
    auto est = trace_main_term(RootOfUnity::reduced(49, 100), p30());
    CHECK(est.parity_sign);
    CHECK(est.n_power_num == -2);
    // exponent driven by the square of the root: 49/50 reduces the double angle
    Cx li = li3_root_of_unity(RootOfUnity::reduced(98, 100), p30());
    Cx expect = cbrt(li) * (3 / pow(Real(2), Real(5) / 3));
    CHECK(abs(est.exp_coeff - expect) < Real("1e-25"));
}

TEST_CASE("rejections at the formula boundaries") {
    CHECK_THROWS_AS(trace_main_term(RootOfUnity::reduced(0, 1), p20()), std::domain_error);
    // within 1e-9 of the branch crossing
    CHECK_THROWS_AS(trace_main_term(RootOfUnity::reduced(475851563, 1000000000), p20()),
                    std::domain_error);
}

TEST_CASE("reflection: conjugate inputs give conjugate estimates") {
    auto e1 = trace_main_term(RootOfUnity::reduced(1, 5), p20());
    auto e2 = trace_main_term(RootOfUnity::reduced(4, 5), p20());
    for (long n : {10L, 25L}) {
        CHECK(abs(e2.evaluate(n) - conj(e1.evaluate(n))) < Real("1e-25") * abs(e1.evaluate(n)));
    }
    auto o1 = over_main_term(RootOfUnity::reduced(2, 7), p20());
    auto o2 = over_main_term(RootOfUnity::reduced(5, 7), p20());
    CHECK(abs(o2.evaluate(12) - conj(o1.evaluate(12))) < Real("1e-25") * abs(o1.evaluate(12)));
}

TEST_CASE("case selection matches the dominance argmax, b <= 50") {
    for (long b = 2; b <= 50; ++b)
        for (long a = 1; 2 * a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            auto est = trace_main_term(RootOfUnity::reduced(a, b), p20());
            auto dom = dominance(Rotation(Real(a) / b), 20);
            CHECK(dom.argmax_k == (est.parity_sign ? 2 : 1));
        }
}

TEST_CASE("classical count estimate") {
    auto est = wright_pp_main_term(p20());
    CHECK_FALSE(est.parity_sign);
    CHECK(est.n_power_num == -25);
    CHECK(est.n_power_den == 36);
    CHECK(est.exp_coeff.im == 0);
    // 3 zeta(3)^{1/3} / 2^{2/3} = 2.009446...
    CHECK(fabs(est.exp_coeff.re - Real("2.009446")) < Real("1e-5"));
}

TEST_CASE("overpartition estimate reduces to the -1 corollary") {
    auto est = over_main_term(RootOfUnity::reduced(1, 2), p30());
    using std::exp;
    using std::pow;
    using std::sqrt;
    Real z3 = zeta_value(3);
    CHECK(fabs(est.exp_coeff.re - 3 / pow(Real(2), Real(4) / 3) * pow(7 * z3, Real(1) / 3)) <
          Real("1e-25"));
    CHECK(fabs(est.exp_coeff.im) < Real("1e-25"));
    Real pref = exp(zeta_prime_minus1()) * pow(7 * z3, Real(7) / 36) /
                (pow(Real(2), Real(7) / 9) * sqrt(3 * pi_value()));
    CHECK(fabs(est.prefactor.re - pref) < Real("1e-25"));
    CHECK(fabs(est.prefactor.im) < Real("1e-25"));
    CHECK(est.n_power_num == -25);
    CHECK_THROWS_AS(over_main_term(RootOfUnity::reduced(0, 1), p20()), std::domain_error);
}

TEST_CASE("overpartition growth rate has positive real part, b <= 50") {
    for (long b = 2; b <= 50; ++b)
        for (long a = 1; 2 * a <= b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            auto est = over_main_term(RootOfUnity::reduced(a, b), p20());
            CHECK(est.exp_coeff.re > 0);
        }
}

TEST_CASE("oscillation model constants for classes 1 and 4 mod 5") {
    auto m = oscillation_model(1, 4, 5, p30());
    CHECK(fabs(m.B - Real("0.19971")) < paper_tol());
    CHECK(fabs(m.lambda1 - Real("0.89873")) < paper_tol());
    CHECK(fabs(m.lambda2 - Real("0.44610")) < paper_tol());
    Real alpha_ref = Real("-1.41897") + 2 * pi_value();
    CHECK(fabs(m.alpha - alpha_ref) < paper_tol());
    CHECK(m.alpha >= 0);
    CHECK(m.alpha < 2 * pi_value());

    // defining identity, recomputed directly
    RootOfUnity z5 = RootOfUnity::reduced(1, 5);
    Cx lambda = cbrt(li3_circle(z5.rotation(), p30()));
    CHECK(fabs(lambda.re - m.lambda1) < Real("1e-25"));
    CHECK(fabs(lambda.im - m.lambda2) < Real("1e-25"));
    Cx prod = (RootOfUnity::reduced(-1, 5).value() - RootOfUnity::reduced(-4, 5).value()) *
              pow(Cx(Real(1)) - z5.value(), Real(1) / 12) * sqrt(lambda) *
              (pow(Real(2), Real(2) / 3) / (5 * sqrt(3 * pi_value())));
    Cx model = Cx(m.B) * exp(Cx(Real(0), m.alpha));
    CHECK(abs(model - prod) < Real("1e-20"));
}

TEST_CASE("swapping the classes flips the phase by pi") {
    auto m1 = oscillation_model(1, 4, 5, p20());
    auto m2 = oscillation_model(4, 1, 5, p20());
    CHECK(fabs(m1.B - m2.B) < Real("1e-25"));
    using std::fmod;
    Real shift = fabs(m1.alpha - m2.alpha);
    CHECK(fabs(shift - pi_value()) < Real("1e-25"));

    auto m3 = oscillation_model(1, 2, 4, p20());
    CHECK(m3.B > 0);
    CHECK_THROWS_AS(oscillation_model(0, 1, 2, p20()), std::domain_error);
    CHECK_THROWS_AS(oscillation_model(2, 7, 5, p20()), std::domain_error);
}

TEST_CASE("predicted difference carries the cosine sign") {
    auto m = oscillation_model(1, 4, 5, p20());
    using std::cos;
    using std::pow;
    for (long n : {10L, 37L, 120L, 333L}) {
        Real phase = m.alpha + 3 / pow(Real(2), Real(2) / 3) * m.lambda2 * pow(Real(n), Real(2) / 3);
        Real c = cos(phase);
        Real v = predicted_difference(m, n);
        if (c > 0)
            CHECK(v > 0);
        else
            CHECK(v < 0);
    }
}

TEST_CASE("exact differences follow the predicted sign pattern") {
    auto t = build_trace_table(120);
    auto m = oscillation_model(1, 4, 5, p20());
    auto diffs = difference_series(t, 1, 4, 5, 60, 120);
    using std::cos;
    using std::pow;
    Real rate = 3 / pow(Real(2), Real(2) / 3);
    for (long n = 60; n <= 120; ++n) {
        Real c = cos(m.alpha + rate * m.lambda2 * pow(Real(n), Real(2) / 3));
        if (fabs(c) < Real("0.3")) continue; // skip near the zero crossings
        const BigInt& d = diffs[static_cast<std::size_t>(n - 60)];
        Real pred = predicted_difference(m, n);
        CHECK((d > 0) == (pred > 0));
    }
}

TEST_CASE("ratio report on the alternating values") {
    auto t = build_trace_table(60);
    auto est = trace_main_term(RootOfUnity::reduced(1, 2), p20());
    std::vector<long> grid{20, 40, 60};
    auto rows = ratio_report(
        [&](long n) { return eval_at_root(t, n, RootOfUnity::reduced(1, 2), p20()); }, est,
        grid);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) CHECK(fabs(r.ratio.im) < Real("1e-12"));

    auto empty = ratio_report([&](long n) { return Cx(Real(n)); }, est, {});
    CHECK(empty.empty());
}
