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

#include "ame/json_io.hpp"

#include <nlohmann/json.hpp>

namespace ame {

namespace {

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(int(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    Mat m(int(j.size()), j.empty() ? 0 : int(j[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (int(j[i].size()) != m.cols) throw std::invalid_argument("matrix rows have mixed lengths");
        for (int c = 0; c < m.cols; ++c) m.at(i, c) = Felem(j[i][c].get<int>());
    }
    return m;
}

}  // namespace

json field_to_json(const Field& f) {
    json j;
    j["p"] = f.p();
    j["m"] = f.m();
    j["q"] = f.q();
    j["irreducible"] = f.irreducible();
    j["primitive"] = int(f.primitive());
    json add = json::array(), mul = json::array();
    for (int a = 0; a < f.q(); ++a) {
        json ra = json::array(), rm = json::array();
        for (int b = 0; b < f.q(); ++b) {
            ra.push_back(int(f.add(Felem(a), Felem(b))));
            rm.push_back(int(f.mul(Felem(a), Felem(b))));
        }
        add.push_back(ra);
        mul.push_back(rm);
    }
    j["add_table"] = add;
    j["mul_table"] = mul;
    return j;
}

Field field_from_json(const json& j) {
    return Field::from_parts(j.at("p").get<int>(), j.at("m").get<int>(),
                             j.at("irreducible").get<std::vector<int>>(),
                             j.at("primitive").get<int>());
}

json mds_to_json(const GeneratorMatrix& g, const Mat& h, bool mds, int d) {
    json j;
    j["n"] = g.n;
    j["k"] = g.k;
    j["q"] = g.field.q();
    j["field"] = field_to_json(g.field);
    j["G"] = mat_to_json(g.g);
    j["H"] = mat_to_json(h);
    j["is_mds"] = mds;
    j["d"] = d;
    return j;
}

GeneratorMatrix generator_from_json(const json& j) {
    GeneratorMatrix g;
    g.field = field_from_json(j.at("field"));
    g.g = mat_from_json(j.at("G"));
    g.k = g.g.rows;
    g.n = g.g.cols;
    if (j.contains("n") && j.at("n").get<int>() != g.n)
        throw std::invalid_argument("generator_from_json: n does not match G");
    if (j.contains("k") && j.at("k").get<int>() != g.k)
        throw std::invalid_argument("generator_from_json: k does not match G");
    for (Felem e : g.g.v)
        if (int(e) >= g.field.q())
            throw std::invalid_argument("generator_from_json: entry out of field range");
    return g;
}

json state_to_json(const SparseState& s) {
    json j;
    j["n"] = s.n;
    j["q"] = s.q;
    json terms = json::array();
    for (const auto& [w, ph] : s.terms) {
        json t;
        json word = json::array();
        for (Felem d : unpack_word(w, s.n)) word.push_back(int(d));
        t["word"] = word;
        t["phase"] = int(ph);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

SparseState state_from_json(const json& j) {
    SparseState s;
    s.n = j.at("n").get<int>();
    s.q = j.at("q").get<int>();
    if (s.n < 1 || s.n > kMaxSites || s.q < 2 || s.q > 32)
        throw std::invalid_argument("state_from_json: unsupported n or q");
    for (const auto& t : j.at("terms")) {
        std::vector<Felem> word;
        for (const auto& d : t.at("word")) {
            int v = d.get<int>();
            if (v < 0 || v >= s.q) throw std::invalid_argument("state_from_json: digit out of range");
            word.push_back(Felem(v));
        }
        if (int(word.size()) != s.n) throw std::invalid_argument("state_from_json: word length != n");
        int ph = t.at("phase").get<int>();
        s.terms.emplace_back(pack_word(word), std::uint8_t(((ph % s.q) + s.q) % s.q));
    }
    s.canonicalize();
    return s;
}

json pauli_to_json(const PauliString& p) {
    json j;
    j["n"] = p.n;
    j["q"] = p.q;
    j["phase"] = p.phase;
    j["x"] = p.x;
    j["z"] = p.z;
    return j;
}

PauliString pauli_from_json(const json& j) {
    PauliString p(j.at("n").get<int>(), j.at("q").get<int>());
    p.phase = ((j.at("phase").get<int>() % p.q) + p.q) % p.q;
    auto x = j.at("x").get<std::vector<int>>();
    auto z = j.at("z").get<std::vector<int>>();
    if (int(x.size()) != p.n || int(z.size()) != p.n)
        throw std::invalid_argument("pauli_from_json: exponent vector length != n");
    for (int i = 0; i < p.n; ++i) {
        p.x[i] = ((x[i] % p.q) + p.q) % p.q;
        p.z[i] = ((z[i] % p.q) + p.q) % p.q;
    }
    return p;
}

json code_to_json(const QeccCode& code, int certified_d) {
    json j;
    j["n"] = code.n();
    j["k"] = 1;
    j["q"] = code.q();
    j["d"] = certified_d;
    j["code"] = "[[" + std::to_string(code.n()) + ",1," + std::to_string(certified_d) + "]]_" +
                std::to_string(code.q());
    // The classical MDS code behind the state, as its own export.
    j["mds"] = mds_to_json(code.stab.g, code.stab.h, true, code.n() - code.stab.k() + 1);
    j["M"] = pauli_to_json(code.logical);
    j["m_string"] = format_pauli(code.logical);
    j["min_class_weight"] = code.min_weight;
    json state_stabs = json::array();
    for (const auto& g : code.stab.generators) state_stabs.push_back(format_pauli(g));
    j["state_stabilizers"] = state_stabs;
    json code_stabs = json::array();
    for (const auto& g : code.code_stabilizers) code_stabs.push_back(format_pauli(g));
    j["code_stabilizers"] = code_stabs;
    return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ame
