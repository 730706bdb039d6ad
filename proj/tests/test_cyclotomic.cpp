// Copyright 2026 The amecodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ame/cyclotomic.hpp"

using namespace ame;

namespace {
CyclotomicInt from_coeffs(int q, std::vector<std::int64_t> c) {
    CyclotomicInt z(q);
    for (int k = 0; k < q; ++k) z.add_root(k, c[k]);
    return z;
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
    using P = std::vector<std::int64_t>;
    CHECK(cyclotomic_polynomial(1) == P{-1, 1});
    CHECK(cyclotomic_polynomial(2) == P{1, 1});
    CHECK(cyclotomic_polynomial(3) == P{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == P{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == P{1, -1, 1});
    CHECK(cyclotomic_polynomial(8) == P{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(9) == P{1, 0, 0, 1, 0, 0, 1});
}

TEST_CASE("zero test for prime order: zero iff all coefficients equal") {
    CHECK(from_coeffs(5, {2, 2, 2, 2, 2}).is_zero());
    CHECK(from_coeffs(5, {0, 0, 0, 0, 0}).is_zero());
    CHECK_FALSE(from_coeffs(5, {1, 0, 0, 0, 0}).is_zero());
    CHECK_FALSE(from_coeffs(5, {2, 2, 2, 2, 1}).is_zero());
    CHECK(from_coeffs(2, {3, 3}).is_zero());
}

TEST_CASE("zero test for composite order") {
    // w = i for q = 4.
    CHECK(from_coeffs(4, {1, 0, 1, 0}).is_zero());   // 1 + w^2
    CHECK(from_coeffs(4, {0, 1, 0, 1}).is_zero());   // w + w^3
    CHECK(from_coeffs(4, {2, 1, 2, 1}).is_zero());
    CHECK_FALSE(from_coeffs(4, {1, 1, 1, 0}).is_zero());
    CHECK_FALSE(from_coeffs(4, {1, 1, 0, 0}).is_zero());

    // q = 8: 1 + w^4 = 0 but 1 + w + ... + w^7 = 0 as well.
    CHECK(from_coeffs(8, {1, 0, 0, 0, 1, 0, 0, 0}).is_zero());
    CHECK(from_coeffs(8, {1, 1, 1, 1, 1, 1, 1, 1}).is_zero());
    CHECK_FALSE(from_coeffs(8, {1, 1, 0, 0, 1, 0, 0, 0}).is_zero());

    // q = 9: w^0 + w^3 + w^6 = 0 (the cyclotomic polynomial itself).
    CHECK(from_coeffs(9, {1, 0, 0, 1, 0, 0, 1, 0, 0}).is_zero());
    CHECK_FALSE(from_coeffs(9, {1, 0, 0, 1, 0, 0, 0, 0, 0}).is_zero());
}

TEST_CASE("equals_integer") {
    CyclotomicInt z(5);
    for (int k = 0; k < 5; ++k) z.add_root(k);  // the full root sum vanishes
    z.add_root(0, 124);
    CHECK(z.equals_integer(124));
    CHECK_FALSE(z.equals_integer(125));
    CHECK_FALSE(z.is_zero());
}

TEST_CASE("exact zero test agrees with floating point evaluation") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        std::mt19937_64 rng(1000 + q);
        std::uniform_int_distribution<int> coeff(-5, 5);
        for (int trial = 0; trial < 10000; ++trial) {
            CyclotomicInt z(q);
            for (int k = 0; k < q; ++k) z.add_root(k, coeff(rng));
            // Plant exact zeros in a third of the trials: a constant vector
            // shifted by a random rotation of Phi_q.
            if (trial % 3 == 0) {
                CyclotomicInt planted(q);
                int c = coeff(rng);
                for (int k = 0; k < q; ++k) planted.add_root(k, c);
                if (trial % 6 == 0) {
                    // Phi_q(w) = 0, and add_root wraps k + shift modulo q,
                    // which multiplies the planted value by w^shift.
                    auto phi = cyclotomic_polynomial(q);
                    int shift = int(rng() % q);
                    int scale = coeff(rng);
                    for (std::size_t k = 0; k < phi.size(); ++k)
                        planted.add_root(int(k) + shift, scale * phi[k]);
                }
                z = planted;
            }
            bool exact = z.is_zero();
            bool approx = std::abs(z.to_complex()) < 1e-9;
            REQUIRE(exact == approx);
        }
    }
}
