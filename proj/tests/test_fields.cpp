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

#include "ame/fields.hpp"

using namespace ame;

namespace {
const int kSupported[] = {2, 3, 4, 5, 7, 8, 9, 11, 13};
}

TEST_CASE("prime power factorization") {
    int p = 0, m = 0;
    CHECK(prime_power(2, p, m));
    CHECK(p == 2);
    CHECK(m == 1);
    CHECK(prime_power(27, p, m));
    CHECK(p == 3);
    CHECK(m == 3);
    CHECK(prime_power(32, p, m));
    CHECK(p == 2);
    CHECK(m == 5);
    CHECK_FALSE(prime_power(6, p, m));
    CHECK_FALSE(prime_power(12, p, m));
    CHECK_FALSE(prime_power(1, p, m));
    CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(33), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(64), std::invalid_argument);
    for (int q : {16, 25, 27, 32}) CHECK(Field::of_order(q).q() == q);
}

TEST_CASE("field axioms hold exhaustively for q <= 13") {
    for (int q : kSupported) {
        Field f = Field::of_order(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(Felem(a), 0) == Felem(a));
            CHECK(f.mul(Felem(a), 1) == Felem(a));
            CHECK(f.add(Felem(a), f.neg(Felem(a))) == 0);
            if (a != 0) CHECK(f.mul(Felem(a), f.inv(Felem(a))) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(Felem(a), Felem(b)) == f.add(Felem(b), Felem(a)));
                CHECK(f.mul(Felem(a), Felem(b)) == f.mul(Felem(b), Felem(a)));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(Felem(a), Felem(b)), Felem(c)) ==
                          f.add(Felem(a), f.add(Felem(b), Felem(c))));
                    CHECK(f.mul(f.mul(Felem(a), Felem(b)), Felem(c)) ==
                          f.mul(Felem(a), f.mul(Felem(b), Felem(c))));
                    CHECK(f.mul(Felem(a), f.add(Felem(b), Felem(c))) ==
                          f.add(f.mul(Felem(a), Felem(b)), f.mul(Felem(a), Felem(c))));
                }
            }
        }
    }
}

TEST_CASE("primitive element powers enumerate the nonzero labels once") {
    for (int q : kSupported) {
        for (FieldConvention conv : {FieldConvention::paper, FieldConvention::canonical}) {
            Field f = Field::of_order(q, conv);
            std::vector<bool> hit(q, false);
            Felem x = 1;
            for (int e = 0; e < q - 1; ++e) {
                CHECK_FALSE(hit[x]);
                hit[x] = true;
                x = f.mul(x, f.primitive());
            }
            CHECK(x == 1);  // full cycle
            for (int a = 1; a < q; ++a) CHECK(hit[a]);
        }
    }
}

TEST_CASE("published modulus and primitive-element choices") {
    CHECK(find_irreducible(2, 2, FieldConvention::paper) == std::vector<int>{1, 1, 1});
    CHECK(find_irreducible(2, 3, FieldConvention::paper) == std::vector<int>{1, 0, 1, 1});
    CHECK(find_irreducible(3, 2, FieldConvention::paper) == std::vector<int>{2, 1, 1});

    // Pinned gamma per order: 1, 2, x, 3, 3, x, x, 2 for q = 2,3,4,5,7,8,9,11.
    CHECK(Field::of_order(2).primitive() == 1);
    CHECK(Field::of_order(3).primitive() == 2);
    CHECK(Field::of_order(4).primitive() == 2);
    CHECK(Field::of_order(5).primitive() == 3);
    CHECK(Field::of_order(7).primitive() == 3);
    CHECK(Field::of_order(8).primitive() == 2);
    CHECK(Field::of_order(9).primitive() == 3);
    CHECK(Field::of_order(11).primitive() == 2);
}

TEST_CASE("canonical mode differs from the published choices where those are not minimal") {
    // 2 generates GF(5)*: 2, 4, 3, 1.
    Field f5 = Field::of_order(5, FieldConvention::canonical);
    CHECK(f5.primitive() == 2);
    CHECK(f5.element_order(2) == 4);

    // Smallest irreducibles: x^3+x+1 over GF(2), x^2+1 over GF(3).
    CHECK(find_irreducible(2, 3, FieldConvention::canonical) == std::vector<int>{1, 1, 0, 1});
    CHECK(find_irreducible(3, 2, FieldConvention::canonical) == std::vector<int>{1, 0, 1});

    // Unpinned orders agree between the modes.
    CHECK(Field::of_order(13).primitive() == 2);
    CHECK(Field::of_order(13, FieldConvention::canonical).primitive() == 2);
}

TEST_CASE("arithmetic examples") {
    Field f5 = Field::of_order(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.inv(3) == 2);

    Field f4 = Field::of_order(4);
    CHECK(f4.add(2, 3) == 1);  // x + (x+1) = 1 in characteristic 2
    CHECK(f4.mul(2, 2) == 3);  // x * x = x + 1
    for (int a = 0; a < 4; ++a) CHECK(f4.add(Felem(a), 0) == Felem(a));

    Field f8 = Field::of_order(8);
    CHECK(f8.inv(3) == 4);  // 1/(1+x) = x^2 modulo 1+x^2+x^3

    CHECK_THROWS_AS(f5.inv(0), std::domain_error);
    CHECK(f5.pow(3, -1) == 2);
    CHECK(f5.pow(2, 0) == 1);
}

TEST_CASE("label / polynomial / tuple bijection for GF(4)") {
    Field f4 = Field::of_order(4);
    CHECK(f4.coeffs(0) == std::vector<int>{0, 0});
    CHECK(f4.coeffs(1) == std::vector<int>{1, 0});
    CHECK(f4.coeffs(2) == std::vector<int>{0, 1});
    CHECK(f4.coeffs(3) == std::vector<int>{1, 1});
    CHECK(f4.poly_string(0) == "0");
    CHECK(f4.poly_string(1) == "1");
    CHECK(f4.poly_string(2) == "x");
    CHECK(f4.poly_string(3) == "1+x");
    CHECK(f4.tuple_string(2) == "01");
    for (int a = 0; a < 4; ++a) CHECK(f4.label_from_coeffs(f4.coeffs(Felem(a))) == Felem(a));
}

TEST_CASE("GF(8) and GF(9) element renderings used by the published tables") {
    Field f8 = Field::of_order(8);
    CHECK(f8.poly_string(4) == "x^2");
    CHECK(f8.poly_string(7) == "1+x+x^2");
    CHECK(f8.poly_string(6) == "x+x^2");
    Field f9 = Field::of_order(9);
    CHECK(f9.poly_string(5) == "2+x");
    CHECK(f9.poly_string(7) == "1+2x");
    CHECK(f9.poly_string(8) == "2+2x");
}

TEST_CASE("from_parts validates its inputs") {
    Field f = Field::from_parts(2, 2, {1, 1, 1}, 2);
    CHECK(f.q() == 4);
    CHECK(f.mul(2, 2) == 3);
    // x^2 + 1 = (x+1)^2 is reducible over GF(2).
    CHECK_THROWS_AS(Field::from_parts(2, 2, {1, 0, 1}, 2), std::invalid_argument);
    // 4 has multiplicative order 2 in GF(5), not 4.
    CHECK_THROWS_AS(Field::from_parts(5, 1, {0, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(Field::from_parts(4, 1, {0, 1}, 2), std::invalid_argument);
}
