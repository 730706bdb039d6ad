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

#include "ame/qecc.hpp"
#include "oracles.hpp"

using namespace ame;

namespace {

QeccCode make_code(int n, int q, const std::string& m_text,
                   FieldConvention conv = FieldConvention::canonical) {
    Budget b;
    StabilizerSet s = state_stabilizers(mds_generator(n, Field::of_order(q, conv)), b);
    return build_code(s, parse_pauli(m_text, n, q), b);
}

}  // namespace

TEST_CASE("build_code assembles an orthogonal AME basis") {
    QeccCode code = make_code(6, 5, "I.I.X.Z.I.Z");
    CHECK(code.min_weight == 3);
    REQUIRE(code.basis.size() == 5);
    for (const SparseState& b : code.basis) CHECK(b.terms.size() == 125);
    for (int a = 0; a < 5; ++a) {
        CHECK(inner_product(code.basis[a], code.basis[a]).equals_integer(125));
        for (int b2 = a + 1; b2 < 5; ++b2)
            CHECK(inner_product(code.basis[a], code.basis[b2]).is_zero());
    }
    // Every basis state stays AME.
    Budget bud;
    for (const SparseState& b : code.basis) CHECK(verify_ame(b, bud).uniform);
}

TEST_CASE("build_code refuses stabilizer-class logical operators") {
    Budget b;
    StabilizerSet s = state_stabilizers(mds_generator(6, Field::of_order(5)), b);
    // The first stabilizer generator has class weight 0.
    CHECK_THROWS_WITH_AS(build_code(s, s.generators[0], b),
                         doctest::Contains("minimal weight 0"), std::invalid_argument);
}

TEST_CASE("code stabilizer generators fix every basis state") {
    QeccCode code = make_code(6, 5, "I.I.X.Z.I.Z");
    REQUIRE(code.code_stabilizers.size() == 5);  // n - 1
    CHECK_FALSE(code.logical_commutes_with_all);
    for (const PauliString& gen : code.code_stabilizers) {
        for (const SparseState& b : code.basis) REQUIRE(apply(gen, b) == b);
        // They commute with M when acting on the base state.
        for (int m = 0; m < 5; ++m) {
            SparseState lhs = apply(gen, code.basis[m]);
            SparseState rhs = apply(power(code.logical, m), apply(gen, code.stab.base));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("Knill-Laflamme certification on published codes") {
    Budget b;
    QeccCode c43 = make_code(4, 3, "I.I.X.Z");
    CHECK(verify_knill_laflamme(c43, 2, b).ok);
    CHECK(certify_distance(c43, b) == 2);

    QeccCode c65 = make_code(6, 5, "I.I.X.Z.I.Z");
    CHECK(verify_knill_laflamme(c65, 3, b).ok);
    KlResult fail = verify_knill_laflamme(c65, 4, b);
    CHECK_FALSE(fail.ok);
    CHECK(fail.witness.weight() == 3);
    CHECK(certify_distance(c65, b) == 3);

    QeccCode c32 = make_code(3, 2, "I.I.Z");
    CHECK(certify_distance(c32, b) == 1);

    QeccCode c55 = make_code(5, 5, "I.I.I.X.Z");
    CHECK(certify_distance(c55, b) == 2);
}

TEST_CASE("certified distance equals the minimal class weight for even n") {
    Budget b;
    for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}, {6, 5}}) {
        StabilizerSet s = state_stabilizers(mds_generator(n, Field::of_order(q)), b);
        std::mt19937_64 rng(n * 31 + q);
        int built = 0;
        while (built < 8) {
            PauliString m = testing::random_pauli(n, q, rng);
            Budget local;
            if (min_class_weight(m, s, local).weight == 0) continue;
            QeccCode code = build_code(s, m, local);
            REQUIRE(certify_distance(code, local) == code.min_weight);
            ++built;
        }
    }
}

TEST_CASE("distance witnesses are violations") {
    Budget b;
    // On the gamma = 3 code this operator's class compresses to weight 2,
    // which sits below the n = 6 Singleton cap, so certification surfaces an
    // explicit witness.
    QeccCode code = make_code(6, 5, "I.I.X.Z.I.Z", FieldConvention::paper);
    CHECK(code.min_weight == 2);
    DistanceCertification cert = certify_distance_detailed(code, b);
    REQUIRE(cert.limited);
    CHECK(cert.distance == 2);
    CHECK(cert.witness.weight() == 2);
    CHECK(cert.witness_m != 0);
    // The witness connects |psi_0> to |psi_m>: <psi_0| P |psi_m> != 0.
    SparseState moved = apply(cert.witness, code.basis[std::size_t(cert.witness_m)]);
    CHECK_FALSE(inner_product(code.basis[0], moved).is_zero());

    // A bound-saturating code has no witness below the cap.
    QeccCode qmds = make_code(6, 5, "I.I.X.Z.I.Z");
    DistanceCertification cert2 = certify_distance_detailed(qmds, b);
    CHECK_FALSE(cert2.limited);
    CHECK(cert2.distance == 3);
}

TEST_CASE("quantum Singleton bound holds for every built code") {
    for (auto [n, q, m] : std::vector<std::tuple<int, int, const char*>>{
             {3, 2, "I.I.Z"},
             {4, 3, "I.I.X.Z"},
             {5, 5, "I.I.I.X.Z"},
             {6, 5, "I.I.X.Z.I.Z"},
             {7, 7, "Z.I.Z.I.I.I.Z"},
             {8, 7, "I.I.I.Z.I.Z.Z.X"}}) {
        Budget b;
        QeccCode code = make_code(n, q, m);
        int cap = (n - 1) / 2 + 1;
        CHECK(code.min_weight <= cap);
        CHECK(certify_distance(code, b) <= cap);
    }
}

TEST_CASE("certification is thread independent") {
    QeccCode code = make_code(6, 5, "I.I.X.Z.I.Z");
    Budget b1, b2;
    DistanceCertification c1 = certify_distance_detailed(code, b1, 1);
    DistanceCertification c2 = certify_distance_detailed(code, b2, 4);
    CHECK(c1.distance == c2.distance);
    CHECK(c1.witness == c2.witness);
    CHECK(c1.witness_m == c2.witness_m);
}

TEST_CASE("knill-laflamme budget refusal") {
    QeccCode code = make_code(8, 7, "I.I.I.Z.I.Z.Z.X");
    Budget tiny(1000);
    CHECK_THROWS_AS(certify_distance(code, tiny), BudgetExceeded);
}

TEST_CASE("odd n codes certify by direct Knill-Laflamme only") {
    Budget b;
    QeccCode c77 = make_code(7, 7, "Z.I.Z.I.I.I.Z");
    CHECK(c77.min_weight == 3);
    CHECK(certify_distance(c77, b) == 3);
}
