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
#include <stdexcept>

#include "pptrace/complex.hpp"
#include "pptrace/real.hpp"

namespace pptrace {

/// A point on the unit circle, theta in rotations: z = e^{2 pi i theta},
/// 0 <= theta < 1. Construction wraps into [0, 1).
struct Rotation {
    Real theta;

    explicit Rotation(Real t) : theta(std::move(t)) {
        using std::floor;
        theta -= floor(theta);
    }

    Cx value() const { return unit_circle(theta); }
};

/// Reduced fraction a/b encoding the root of unity e^{2 pi i a/b},
/// with 0 <= a < b and gcd(a, b) = 1 (a = 0 forces b = 1).
struct RootOfUnity {
    long long a = 0;
    long long b = 1;

    static RootOfUnity reduced(long long a, long long b) {
        if (b < 1) throw std::domain_error("RootOfUnity: denominator must be >= 1");
        a %= b;
        if (a < 0) a += b;
        long long g = std::gcd(a, b);
        return RootOfUnity{a / g, b / g};
    }

    bool is_one() const { return a == 0; }

    /// The conjugate root e^{-2 pi i a/b}.
    RootOfUnity conjugate() const { return reduced(b - a, b); }

    /// The root raised to the m-th power, reduced.
    RootOfUnity power(long long m) const {
        long long r = static_cast<long long>((static_cast<__int128>(a) * m) % b);
        return reduced(r, b);
    }

    Rotation rotation() const { return Rotation(Real(a) / b); }

    Cx value() const { return unit_circle(Real(a) / Real(b)); }

    friend bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
        return x.a == y.a && x.b == y.b;
    }
};

} // namespace pptrace
