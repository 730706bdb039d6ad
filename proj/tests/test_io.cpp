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

#include <nlohmann/json.hpp>

#include "ame/catalog.hpp"

using namespace ame;

TEST_CASE("field json round trip") {
    for (int q : {2, 4, 5, 8, 9, 13}) {
        Field f = Field::of_order(q);
        json j = field_to_json(f);
        CHECK(j["q"] == q);
        Field g = field_from_json(j);
        CHECK(f == g);
        CHECK(g.add_table() == f.add_table());
        CHECK(g.mul_table() == f.mul_table());
    }
}

TEST_CASE("state json round trip preserves the verification verdict") {
    Budget b;
    SparseState s = build_ame(mds_generator(6, Field::of_order(5)), b);
    SparseState back = state_from_json(state_to_json(s));
    CHECK(back == s);
    CHECK(verify_ame(back, b).uniform);

    // A perturbed state stays perturbed through the round trip.
    SparseState broken = s;
    broken.terms.pop_back();
    SparseState broken_back = state_from_json(state_to_json(broken));
    CHECK_FALSE(verify_ame(broken_back, b).uniform);
}

TEST_CASE("state json validation") {
    json j;
    j["n"] = 2;
    j["q"] = 3;
    j["terms"] = json::array({{{"word", {0, 5}}, {"phase", 0}}});
    CHECK_THROWS_AS(state_from_json(j), std::invalid_argument);
    j["terms"] = json::array({{{"word", {0, 1, 2}}, {"phase", 0}}});
    CHECK_THROWS_AS(state_from_json(j), std::invalid_argument);
    // Duplicate words are rejected.
    j["terms"] = json::array({{{"word", {0, 1}}, {"phase", 0}}, {{"word", {0, 1}}, {"phase", 1}}});
    CHECK_THROWS_AS(state_from_json(j), std::invalid_argument);
}

TEST_CASE("pauli json round trip") {
    PauliString p = parse_pauli("w^3.X2Z.I.Z4.X", 4, 5);
    PauliString back = pauli_from_json(pauli_to_json(p));
    CHECK(back == p);
}

TEST_CASE("mds json carries the schema fields") {
    Budget b;
    GeneratorMatrix g = mds_generator(6, Field::of_order(5));
    Mat h = parity_check(g);
    json j = mds_to_json(g, h, true, 4);
    for (const char* key : {"n", "k", "q", "G", "H", "is_mds", "d"}) CHECK(j.contains(key));
    CHECK(j["n"] == 6);
    CHECK(j["k"] == 3);
    CHECK(j["d"] == 4);
    CHECK(j["G"][1] == json::array({0, 1, 0, 1, 2, 3}));

    GeneratorMatrix back = generator_from_json(j);
    CHECK(back.g == g.g);
    CHECK(back.field == g.field);
}

TEST_CASE("code json round trips through generator and logical operator") {
    Budget b;
    StabilizerSet s = state_stabilizers(
        mds_generator(6, Field::of_order(5, FieldConvention::canonical)), b);
    PauliString m = parse_pauli("I.I.X.Z.I.Z", 6, 5);
    QeccCode code = build_code(s, m, b);
    int d = certify_distance(code, b);
    json j = code_to_json(code, d);
    CHECK(j["d"] == 3);
    CHECK(j["code"] == "[[6,1,3]]_5");
    CHECK(j["m_string"] == "I.I.X.Z.I.Z");
    CHECK(j["code_stabilizers"].size() == 5);

    // Rebuild from the exported pieces and re-certify.
    GeneratorMatrix g2 = generator_from_json(j["mds"]);
    PauliString m2 = pauli_from_json(j["M"]);
    StabilizerSet s2 = state_stabilizers(g2, b);
    QeccCode code2 = build_code(s2, m2, b);
    CHECK(certify_distance(code2, b) == j["d"].get<int>());
}

TEST_CASE("json dumps are deterministic") {
    Budget b;
    SparseState s = build_ame(mds_generator(4, Field::of_order(3)), b);
    CHECK(dump_json(state_to_json(s)) == dump_json(state_to_json(s)));
}

TEST_CASE("code catalog summaries") {
    std::vector<CatalogResult> fake(1);
    fake[0].n = 4;
    fake[0].q = 3;
    fake[0].expected_d = 2;
    fake[0].min_weight = 2;
    fake[0].certified_d = 2;
    fake[0].m_text = "I.I.X.Z";
    fake[0].ok = true;
    std::string text = render_code_catalog_text(fake);
    CHECK(text.find("[[4,1,2]]_3") != std::string::npos);
    CHECK(text.find("ok") != std::string::npos);
    json j = code_catalog_json(fake);
    CHECK(j[0]["certified_d"] == 2);
}
