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

#include <numeric>

#include "pptrace/farey.hpp"

using namespace pptrace;

TEST_CASE("small orders") {
    auto f1 = farey(1);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].h == 0);
    CHECK(f1[0].k == 1);
    CHECK(f1[1].h == 1);
    CHECK(f1[1].k == 1);

    auto f2 = farey(2);
    REQUIRE(f2.size() == 3);
    CHECK(f2[1].h == 1);
    CHECK(f2[1].k == 2);

    auto f5 = farey(5);
    CHECK(f5.size() == 11);

    CHECK_THROWS_AS(farey(0), std::domain_error);
}

TEST_CASE("ordering, coprimality, and the wrap convention") {
    for (long N : {1L, 2L, 5L, 17L}) {
        auto fs = farey(N);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            CHECK(std::gcd(fs[i].h, fs[i].k) == 1);
            CHECK(fs[i].k <= N);
            if (i + 1 < fs.size())
                CHECK(static_cast<__int128>(fs[i].h) * fs[i + 1].k <
                      static_cast<__int128>(fs[i + 1].h) * fs[i].k);
        }
        // 0/1 and 1/1 are the same circle point: mirrored gaps
        CHECK(fs.front().theta_lo == fs.back().theta_lo);
        CHECK(fs.front().theta_hi == fs.back().theta_hi);
        CHECK(fs.front().theta_lo == Frac{1, N + 1});
    }
}

TEST_CASE("arcs tile one period exactly, N <= 200") {
    for (long N : {2L, 5L, 31L, 200L}) {
        auto fs = farey(N);
        // consecutive mediants agree: h/k + theta_hi == h'/k' - theta_lo'
        for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
            BigRat right = BigRat(fs[i].h, fs[i].k) +
                           BigRat(fs[i].theta_hi.num, fs[i].theta_hi.den);
            BigRat left = BigRat(fs[i + 1].h, fs[i + 1].k) -
                          BigRat(fs[i + 1].theta_lo.num, fs[i + 1].theta_lo.den);
            CHECK(right == left);
        }
        // total arc length over the proper fractions is exactly 1
        BigRat total(0);
        for (std::size_t i = 0; i + 1 < fs.size(); ++i)
            total += BigRat(fs[i].theta_lo.num, fs[i].theta_lo.den) +
                     BigRat(fs[i].theta_hi.num, fs[i].theta_hi.den);
        CHECK(total == 1);
    }
}

TEST_CASE("mediant gap bounds") {
    for (long N : {2L, 5L, 31L, 200L}) {
        for (const auto& arc : farey(N)) {
            for (const Frac* g : {&arc.theta_lo, &arc.theta_hi}) {
                BigRat v(g->num, g->den);
                CHECK(v <= BigRat(1, arc.k * N));
                CHECK(v >= BigRat(1, 2 * arc.k * N));
                if (N >= 2) CHECK(v > BigRat(1, 2 * arc.k * N));
            }
        }
    }
}
