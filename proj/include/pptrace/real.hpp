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

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pptrace/bigint.hpp"

namespace pptrace {

/// Arbitrary-precision real. The working precision is the MPFR default
/// precision at construction time (decimal digits, see set_precision_*).
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

inline unsigned digits_for_bits(unsigned bits) {
    return std::max(20u, static_cast<unsigned>(bits * 0.30103) + 4u);
}

inline void set_precision_digits(unsigned digits10) { Real::default_precision(digits10); }
inline void set_precision_bits(unsigned bits) { set_precision_digits(digits_for_bits(bits)); }

/// RAII bump of the default precision; restores on scope exit.
class ScopedPrecision {
  public:
    explicit ScopedPrecision(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(std::max(digits10, saved_));
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  private:
    unsigned saved_;
};

/// Target absolute error for a truncated computation.
struct PrecisionSpec {
    Real abs_err;
    explicit PrecisionSpec(Real e) : abs_err(std::move(e)) {
        if (!(abs_err > 0)) throw std::domain_error("PrecisionSpec: abs_err must be > 0");
    }
};

inline Real pi_value() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real zeta_value(unsigned long s) {
    Real r;
    mpfr_zeta_ui(r.backend().data(), s, MPFR_RNDN);
    return r;
}

/// zeta'(-1) = 1/12 - log(Glaisher), frozen at 50 digits from an
/// independent high-precision computation.
inline Real zeta_prime_minus1() {
    return Real("-0.16542114370045092921391966024278064276403638033520");
}

/// The scalar constants used throughout the asymptotic formulas.
struct Constants {
    Real zeta3;
    Real zeta2;
    Real zeta_prime_minus1;

    static Constants make() {
        return Constants{zeta_value(3), zeta_value(2), pptrace::zeta_prime_minus1()};
    }
};

inline Real to_real(const BigInt& v) { return Real(v); }

} // namespace pptrace
