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

#include <ostream>

#include "pptrace/real.hpp"

namespace pptrace {

/// Complex number over an arbitrary real type. std::complex is only
/// specified for built-in floating types, so multiprecision reals get
/// this small value type instead. All multivalued functions (log, pow,
/// sqrt, cbrt) take the principal branch, Arg in (-pi, pi].
template <class R>
struct Complex {
    R re{};
    R im{};

    Complex() = default;
    Complex(R r) : re(std::move(r)) {}
    Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        R r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator*=(const R& s) {
        re *= s;
        im *= s;
        return *this;
    }
    Complex& operator/=(const R& s) {
        re /= s;
        im /= s;
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const R& s) { return a *= s; }
    friend Complex operator*(const R& s, Complex a) { return a *= s; }
    friend Complex operator/(Complex a, const R& s) { return a /= s; }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }

    friend Complex operator/(const Complex& a, const Complex& b) {
        R d = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
        return os << "(" << z.re << (z.im < 0 ? " - " : " + ")
                  << (z.im < 0 ? -z.im : z.im) << "i)";
    }
};

template <class R>
Complex<R> conj(const Complex<R>& z) {
    return {z.re, -z.im};
}

template <class R>
R norm(const Complex<R>& z) {
    return z.re * z.re + z.im * z.im;
}

template <class R>
R abs(const Complex<R>& z) {
    using std::hypot;
    return hypot(z.re, z.im);
}

/// Principal argument in (-pi, pi]; arg(0) = 0 by convention of atan2.
template <class R>
R arg(const Complex<R>& z) {
    using std::atan2;
    return atan2(z.im, z.re);
}

template <class R>
Complex<R> exp(const Complex<R>& z) {
    using std::cos;
    using std::exp;
    using std::sin;
    R m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

/// Principal logarithm: log|z| + i Arg(z).
template <class R>
Complex<R> log(const Complex<R>& z) {
    using std::log;
    return {log(abs(z)), arg(z)};
}

/// Principal power z^p for real exponent p.
template <class R>
Complex<R> pow(const Complex<R>& z, const R& p) {
    if (z.im == 0 && z.re > 0) {
        using std::pow;
        return Complex<R>(pow(z.re, p));
    }
    return exp(log(z) * p);
}

template <class R>
Complex<R> sqrt(const Complex<R>& z) {
    return pow(z, R(1) / 2);
}

/// Principal cube root (Arg of the result in (-pi/3, pi/3]).
template <class R>
Complex<R> cbrt(const Complex<R>& z) {
    return pow(z, R(1) / 3);
}

/// e^{2 pi i theta} for theta in rotations.
template <class R>
Complex<R> unit_circle(const R& theta) {
    using std::cos;
    using std::sin;
    R x = 2 * pi_value() * theta;
    return {cos(x), sin(x)};
}

using Cx = Complex<Real>;

} // namespace pptrace
