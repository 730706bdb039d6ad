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

#include "ame/catalog.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "ame/qecc.hpp"

namespace ame {

namespace {

std::string modulus_string(const Field& f) {
    if (f.is_prime_field()) return "(" + std::to_string(f.p()) + ")";
    return "(" + Field::poly_string(f.irreducible()) + ")";
}

std::string gamma_string(const Field& f) {
    std::string s = std::to_string(int(f.primitive()));
    if (!f.is_prime_field()) s += " (" + f.poly_string(f.primitive()) + ")";
    return s;
}

}  // namespace

std::string render_field_table(const Field& f) {
    std::string out = "GF(" + std::to_string(f.q()) + "), p = " + std::to_string(f.p()) +
                      ", m = " + std::to_string(f.m()) + ", modulo " + modulus_string(f) +
                      ", gamma = " + gamma_string(f) + "\n\n";
    std::size_t poly_w = std::string("polynomial").size();
    for (int a = 0; a < f.q(); ++a) poly_w = std::max(poly_w, f.poly_string(Felem(a)).size());
    std::size_t tuple_w = std::max<std::size_t>(std::string("tuple").size(), f.m());

    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(w, s.size()), ' ');
        return s;
    };
    out += pad("tuple", tuple_w) + "  " + pad("polynomial", poly_w) + "  spin\n";
    for (int a = 0; a < f.q(); ++a) {
        out += pad(f.tuple_string(Felem(a)), tuple_w) + "  " +
               pad(f.poly_string(Felem(a)), poly_w) + "  " + std::to_string(a) + "\n";
    }
    return out;
}

std::string render_singleton_array(const SingletonArray& sa) {
    const Field& f = sa.field;
    std::string name = sa.extended ? "S'_" + std::to_string(f.q()) + " (extended)"
                                   : "S_" + std::to_string(f.q());
    std::string out = "GF(" + std::to_string(f.q()) + "), modulo " + modulus_string(f) +
                      ", gamma = " + gamma_string(f) + "\n";
    if (!f.is_prime_field())
        for (std::size_t i = 0; i < sa.a.size(); ++i)
            out += "a_" + std::to_string(i + 1) + " = " + std::to_string(int(sa.a[i])) + " (" +
                   f.poly_string(sa.a[i]) + ")\n";
    out += name + ":\n";
    for (const auto& row : sa.rows) {
        std::string line;
        for (Felem e : row) line += (line.empty() ? "" : " ") + std::to_string(int(e));
        out += line + "\n";
    }
    return out;
}

std::string render_singleton_array_latex(const SingletonArray& sa) {
    const Field& f = sa.field;
    std::string name = sa.extended ? "S'_{" + std::to_string(f.q()) + "}"
                                   : "S_{" + std::to_string(f.q()) + "}";
    std::size_t width = sa.rows.front().size();
    std::string out = name + " = \\begin{array}{" + std::string(width, 'c') + "}\n";
    for (std::size_t r = 0; r < sa.rows.size(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < width; ++c) {
            if (c) line += " & ";
            if (c < sa.rows[r].size()) {
                Felem e = sa.rows[r][c];
                line += f.is_prime_field() ? std::to_string(int(e)) : f.poly_string(e);
            }
        }
        out += line + " \\\\\n";
    }
    out += "\\end{array}\n";
    return out;
}

std::string render_mds_text(const GeneratorMatrix& g, const Mat& h, bool mds, int d) {
    std::string out = "[" + std::to_string(g.n) + "," + std::to_string(g.k) + "," +
                      std::to_string(d) + "]_" + std::to_string(g.field.q()) + " code" +
                      (mds ? " (MDS)" : " (not MDS)") + "\n";
    auto render = [](const char* name, const Mat& m) {
        std::string s = std::string(name) + " =\n";
        for (int i = 0; i < m.rows; ++i) {
            std::string line;
            for (int j = 0; j < m.cols; ++j)
                line += (j ? " " : "") + std::to_string(int(m.at(i, j)));
            s += "  " + line + "\n";
        }
        return s;
    };
    out += render("G", g.g);
    out += render("H", h);
    return out;
}

std::string render_mds_latex(const GeneratorMatrix& g, const Mat& h) {
    auto render = [&](const std::string& name, const Mat& m, int split) {
        std::string cols;
        for (int j = 0; j < m.cols; ++j) {
            if (j == split) cols += "|";
            cols += "c";
        }
        std::string s = name + " = \\left[\\begin{array}{" + cols + "}\n";
        for (int i = 0; i < m.rows; ++i) {
            std::string line;
            for (int j = 0; j < m.cols; ++j) {
                if (j) line += " & ";
                Felem e = m.at(i, j);
                line += g.field.is_prime_field() ? std::to_string(int(e))
                                                 : g.field.poly_string(e);
            }
            s += line + " \\\\\n";
        }
        s += "\\end{array}\\right]\n";
        return s;
    };
    std::string out = render("G_{" + std::to_string(g.k) + " \\times " + std::to_string(g.n) + "}",
                             g.g, g.k);
    out += render("H_{" + std::to_string(g.n - g.k) + " \\times " + std::to_string(g.n) + "}", h,
                  g.k);
    return out;
}

std::string singleton_arrays_catalog(FieldConvention conv) {
    std::string out =
        "Singleton arrays over GF(q) for q = 2, 3, 4, 5, 7, 8, 9, 11\n"
        "Entries are element labels; label l encodes the polynomial sum_i c_i x^i\n"
        "through the base-p digits of l. The q = 4 array is the extended variant.\n";
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
        Field f = Field::of_order(q, conv);
        SingletonArray sa = q == 4 ? extended_singleton_array_4(f) : singleton_array(f);
        out += "\n" + render_singleton_array(sa);
    }
    return out;
}

const std::vector<CatalogRow>& code_catalog_rows() {
    static const std::vector<CatalogRow> rows = {
        {3, 1, "I.I.Z", {2, 3, 5}},
        {4, 2, "I.I.X.Z", {3, 5, 7}},
        {5, 2, "I.I.I.X.Z", {5, 7}},
        {6, 3, "I.I.X.Z.I.Z", {5, 7, 11, 13}},
        {7, 3, "Z.I.Z.I.I.I.Z", {7}},
        {8, 4, "I.I.I.Z.I.Z.Z.X", {7}},
    };
    return rows;
}

std::vector<CatalogResult> run_code_catalog(std::uint64_t per_entry_budget, unsigned threads) {
    std::vector<CatalogResult> results;
    for (const CatalogRow& row : code_catalog_rows()) {
        for (int q : row.q_list) {
            Budget budget(per_entry_budget);
            CatalogResult r;
            r.n = row.n;
            r.q = q;
            r.expected_d = row.expected_d;
            Field f = Field::of_order(q, FieldConvention::canonical);
            GeneratorMatrix g = mds_generator(row.n, f);
            StabilizerSet stab = state_stabilizers(g, budget);
            PauliString m = parse_pauli(row.m_text, row.n, q);
            r.listed_m_weight = min_class_weight(m, stab, budget).weight;
            if (r.listed_m_weight != row.expected_d) {
                SearchOptions opt;
                opt.threads = threads;
                auto found = search_incompressible(stab, row.expected_d, opt, budget);
                if (found.empty()) {
                    r.m_text = row.m_text;
                    r.min_weight = r.listed_m_weight;
                    results.push_back(r);
                    continue;
                }
                m = found.front();
                r.used_search = true;
            }
            r.m_text = format_pauli(m);
            r.min_weight = min_class_weight(m, stab, budget).weight;
            QeccCode code = build_code(stab, m, budget);
            r.certified_d = certify_distance(code, budget, threads);
            r.ok = (r.min_weight == row.expected_d) && (r.certified_d == row.expected_d);
            results.push_back(r);
        }
    }
    return results;
}

std::string render_code_catalog_text(const std::vector<CatalogResult>& results) {
    std::string out = "QECC          q   M                 min_w  certified_d  status\n";
    for (const auto& r : results) {
        std::string code = "[[" + std::to_string(r.n) + ",1," + std::to_string(r.expected_d) +
                           "]]_" + std::to_string(r.q);
        auto pad = [](std::string s, std::size_t w) {
            s.resize(std::max(w, s.size()), ' ');
            return s;
        };
        out += pad(code, 13) + " " + pad(std::to_string(r.q), 3) + " " + pad(r.m_text, 17) + " " +
               pad(std::to_string(r.min_weight), 6) + " " + pad(std::to_string(r.certified_d), 12) +
               " " + (r.ok ? "ok" : "MISMATCH") + (r.used_search ? " (searched)" : "") + "\n";
    }
    return out;
}

json code_catalog_json(const std::vector<CatalogResult>& results) {
    json arr = json::array();
    for (const auto& r : results) {
        json j;
        j["n"] = r.n;
        j["k"] = 1;
        j["q"] = r.q;
        j["expected_d"] = r.expected_d;
        j["min_class_weight"] = r.min_weight;
        j["certified_d"] = r.certified_d;
        j["M"] = r.m_text;
        j["listed_m_weight"] = r.listed_m_weight;
        j["searched"] = r.used_search;
        j["ok"] = r.ok;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace ame
