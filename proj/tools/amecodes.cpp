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

// amecodes: exact construction and certification of minimal-support AME
// states, the MDS codes behind them, and the [[n,1,d]]_q stabilizer codes
// they span. Everything is integer arithmetic; verification verdicts are
// certificates, not tolerances.
//
// Exit codes: 0 success / verified, 1 verification failure (witness printed),
// 2 usage error, 3 enumeration budget exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ame/catalog.hpp"
#include "ame/qecc.hpp"

namespace {

using namespace ame;

struct RunConfig {
    bool paper_compat = true;
    std::uint64_t budget = Budget::kDefaultLimit;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    std::string format = "text";  // text | json | latex
    std::string out_path;

    FieldConvention conv() const {
        return paper_compat ? FieldConvention::paper : FieldConvention::canonical;
    }
    Budget make_budget() const { return Budget(budget); }
};

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::filesystem::path p(cfg.out_path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("AMECODES_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    std::ofstream f(p);
    if (!f) throw std::invalid_argument("cannot open output file " + p.string());
    f << payload;
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file " + path);
    json j;
    f >> j;
    return j;
}

GeneratorMatrix make_generator(const RunConfig& cfg, int n, int q) {
    Field f = Field::of_order(q, cfg.conv());
    return mds_generator(n, f);
}

int cmd_field_table(const RunConfig& cfg, int q) {
    Field f = Field::of_order(q, cfg.conv());
    if (cfg.format == "json") {
        emit(cfg, dump_json(field_to_json(f)));
    } else {
        emit(cfg, render_field_table(f));
    }
    return 0;
}

int cmd_singleton_array(const RunConfig& cfg, int q) {
    Field f = Field::of_order(q, cfg.conv());
    SingletonArray sa = q == 4 ? extended_singleton_array_4(f) : singleton_array(f);
    if (cfg.format == "latex") {
        emit(cfg, render_singleton_array_latex(sa));
    } else if (cfg.format == "json") {
        json j;
        j["q"] = q;
        j["gamma"] = int(f.primitive());
        j["extended"] = sa.extended;
        j["a"] = json::array();
        for (Felem e : sa.a) j["a"].push_back(int(e));
        j["rows"] = json::array();
        for (const auto& row : sa.rows) {
            json r = json::array();
            for (Felem e : row) r.push_back(int(e));
            j["rows"].push_back(r);
        }
        emit(cfg, dump_json(j));
    } else {
        emit(cfg, render_singleton_array(sa));
    }
    return 0;
}

int cmd_mds(const RunConfig& cfg, int n, int q) {
    Budget budget = cfg.make_budget();
    GeneratorMatrix g = make_generator(cfg, n, q);
    Mat h = parity_check(g);
    bool mds = is_mds(g, budget).mds;
    int d = min_distance(g, budget);
    if (cfg.format == "json") {
        emit(cfg, dump_json(mds_to_json(g, h, mds, d)));
    } else if (cfg.format == "latex") {
        emit(cfg, render_mds_latex(g, h));
    } else {
        emit(cfg, render_mds_text(g, h, mds, d));
    }
    return 0;
}

int cmd_make_ame(const RunConfig& cfg, int n, int q, bool words, bool closed_only) {
    Budget budget = cfg.make_budget();
    GeneratorMatrix g = make_generator(cfg, n, q);
    SparseState s = build_ame(g, budget);
    ClosedForm cf = closed_form(g);
    if (cfg.format == "json") {
        emit(cfg, dump_json(state_to_json(s)));
        return 0;
    }
    if (cfg.format == "latex") {
        emit(cfg, cf.latex + "\n");
        return 0;
    }
    std::ostringstream out;
    if (closed_only) {
        out << cf.text << "\n";
    } else {
        out << "AME(" << n << "," << q << "), minimal support, " << s.terms.size() << " terms\n";
        out << cf.text << "\n";
    }
    if (words) {
        for (const auto& [w, ph] : s.terms) {
            std::string line;
            for (Felem d : unpack_word(w, n)) line += (line.empty() ? "" : " ") + std::to_string(int(d));
            out << line << "  phase " << int(ph) << "\n";
        }
    }
    emit(cfg, out.str());
    return 0;
}

int cmd_verify_ame(const RunConfig& cfg, const std::string& in, int n, int q, int k) {
    Budget budget = cfg.make_budget();
    SparseState s;
    if (!in.empty()) {
        s = state_from_json(load_json(in));
    } else {
        s = build_ame(make_generator(cfg, n, q), budget);
    }
    int check_k = k >= 0 ? k : s.n / 2;
    KUniformResult res = is_k_uniform(s, check_k, budget, cfg.threads);
    std::ostringstream out;
    if (res.uniform) {
        out << "PASS: state is " << check_k << "-uniform (" << s.terms.size() << " terms, all "
            << "size-" << check_k << " marginals exactly maximally mixed)\n";
    } else {
        out << "FAIL: marginal on sites {";
        for (std::size_t i = 0; i < res.failing_subset.size(); ++i)
            out << (i ? "," : "") << res.failing_subset[i] + 1;
        out << "} is not maximally mixed\n";
    }
    emit(cfg, out.str());
    return res.uniform ? 0 : 1;
}

int cmd_basis_check(const RunConfig& cfg, int n, int q, std::uint64_t sample) {
    Budget budget = cfg.make_budget();
    SparseState s = build_ame(make_generator(cfg, n, q), budget);
    BasisCheckResult res = basis_check(s, sample, cfg.seed, budget, cfg.threads);
    std::ostringstream out;
    if (res.ok) {
        out << "PASS: " << res.pairs_checked << (sample ? " sampled" : "")
            << " basis pairs orthonormal (squared norm " << s.terms.size()
            << ", exact cyclotomic zeros)\n";
    } else {
        out << "FAIL: " << res.counterexample << "\n";
    }
    emit(cfg, out.str());
    return res.ok ? 0 : 1;
}

int cmd_min_weight(const RunConfig& cfg, int n, int q, const std::string& m_text) {
    Budget budget = cfg.make_budget();
    GeneratorMatrix g = make_generator(cfg, n, q);
    StabilizerSet stab = state_stabilizers(g, budget);
    PauliString m = parse_pauli(m_text, n, q);
    MinWeight mw = min_class_weight(m, stab, budget);
    std::ostringstream out;
    out << "min class weight of " << format_pauli(m) << " = " << mw.weight << "\n";
    out << "minimal realization: " << format_pauli(mw.realization) << "\n";
    bool agrees = true;
    try {
        int via_cosets = min_class_weight_via_cosets(m, stab, budget, cfg.threads);
        agrees = via_cosets == mw.weight;
        out << "coset cross-check: n - i_max = " << n << " - " << (n - via_cosets) << " = "
            << via_cosets << (agrees ? " (agrees)" : " (MISMATCH)") << "\n";
    } catch (const BudgetExceeded&) {
        out << "coset cross-check skipped: enumeration budget exceeded, subset-solve result "
               "stands\n";
    }
    emit(cfg, out.str());
    return agrees ? 0 : 1;
}

int cmd_search_m(const RunConfig& cfg, int n, int q, int target_w, bool all) {
    Budget budget = cfg.make_budget();
    GeneratorMatrix g = make_generator(cfg, n, q);
    StabilizerSet stab = state_stabilizers(g, budget);
    SearchOptions opt;
    opt.first_only = !all;
    opt.threads = cfg.threads;
    std::vector<PauliString> found = search_incompressible(stab, target_w, opt, budget);
    std::ostringstream out;
    if (found.empty()) {
        out << "no equivalence class of minimal weight " << target_w << " found for (n=" << n
            << ", q=" << q << ")\n";
    } else {
        for (const auto& p : found) out << format_pauli(p) << "\n";
    }
    emit(cfg, out.str());
    return 0;
}

int cmd_build_code(const RunConfig& cfg, int n, int q, const std::string& m_text) {
    Budget budget = cfg.make_budget();
    GeneratorMatrix g = make_generator(cfg, n, q);
    StabilizerSet stab = state_stabilizers(g, budget);
    PauliString m = parse_pauli(m_text, n, q);
    QeccCode code = build_code(stab, m, budget);
    int d = certify_distance(code, budget, cfg.threads);
    if (cfg.format == "json") {
        emit(cfg, dump_json(code_to_json(code, d)));
        return 0;
    }
    std::ostringstream out;
    out << "[[" << n << ",1," << d << "]]_" << q << " from M = " << format_pauli(m) << "\n";
    out << "min class weight " << code.min_weight << ", certified distance " << d << "\n";
    out << "state stabilizers:\n";
    for (const auto& p : code.stab.generators) out << "  " << format_pauli(p) << "\n";
    out << "code stabilizers (" << code.code_stabilizers.size() << "):\n";
    for (const auto& p : code.code_stabilizers) out << "  " << format_pauli(p) << "\n";
    emit(cfg, out.str());
    return 0;
}

int cmd_verify_code(const RunConfig& cfg, const std::string& in, int n, int q,
                    const std::string& m_text, int d_claim) {
    Budget budget = cfg.make_budget();
    GeneratorMatrix g;
    PauliString m;
    int expected_d = d_claim;
    if (!in.empty()) {
        json j = load_json(in);
        g = generator_from_json(j.contains("mds") ? j.at("mds") : j);
        m = pauli_from_json(j.at("M"));
        if (expected_d < 0 && j.contains("d")) expected_d = j.at("d").get<int>();
    } else {
        g = make_generator(cfg, n, q);
        m = parse_pauli(m_text, n, q);
    }
    if (expected_d < 0)
        throw std::invalid_argument("verify-code: no distance claim given (use --d or a code file)");
    StabilizerSet stab = state_stabilizers(g, budget);
    QeccCode code = build_code(stab, m, budget);

    DistanceCertification cert = certify_distance_detailed(code, budget, cfg.threads);
    std::ostringstream out;
    bool ok = cert.distance == expected_d;
    if (ok) {
        out << "PASS: [[" << code.n() << ",1," << expected_d << "]]_" << code.q()
            << " verified (Knill-Laflamme holds below weight " << expected_d
            << ", certified distance " << cert.distance << ")\n";
    } else if (cert.distance < expected_d) {
        out << "FAIL: certified distance " << cert.distance << " < claimed " << expected_d
            << "; weight-" << cert.witness.weight() << " error " << format_pauli(cert.witness)
            << " connects logical shift " << cert.witness_m << "\n";
    } else {
        out << "FAIL: certified distance " << cert.distance << " != claimed " << expected_d
            << "\n";
    }
    emit(cfg, out.str());
    return ok ? 0 : 1;
}

int cmd_catalog(const RunConfig& cfg, bool singleton_arrays, bool table1) {
    if (singleton_arrays == table1)
        throw std::invalid_argument("catalog: pick exactly one of --singleton-arrays, --table1");
    if (singleton_arrays) {
        emit(cfg, singleton_arrays_catalog(cfg.conv()));
        return 0;
    }
    std::vector<CatalogResult> results = run_code_catalog(cfg.budget, cfg.threads);
    if (cfg.format == "json") {
        emit(cfg, dump_json(code_catalog_json(results)));
    } else {
        emit(cfg, render_code_catalog_text(results));
    }
    for (const auto& r : results)
        if (!r.ok) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "amecodes: minimal-support AME states from MDS codes, their stabilizers,\n"
        "and [[n,1,d]]_q quantum codes with exact certification"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_flag("--paper-compat,!--no-paper-compat", cfg.paper_compat,
                 "pin the published modulus/primitive-element choices (default on)");
    app.add_option("--budget", cfg.budget, "enumeration budget in field operations");
    app.add_option("--threads", cfg.threads, "worker threads (output is independent of this)");
    app.add_option("--seed", cfg.seed, "seed for sampled checks");
    app.add_option("--format", cfg.format, "output format: text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--out", cfg.out_path,
                   "output file (relative paths resolve under $AMECODES_OUTPUT_DIR)");

    int q = 0, n = 0, k = -1, target_w = 0, d_claim = -1;
    std::uint64_t sample = 0;
    std::string m_text, in_path;
    bool words = false, closed = false, all = false, first = false, cat_sa = false, cat_t1 = false;
    bool json_flag = false, latex_flag = false;

    auto add_json_latex = [&](CLI::App* c, bool with_latex) {
        c->add_flag("--json", json_flag, "shorthand for --format json");
        if (with_latex) c->add_flag("--latex", latex_flag, "shorthand for --format latex");
    };

    CLI::App* c_ft = app.add_subcommand("field-table", "GF(q) element representations");
    c_ft->add_option("--q", q)->required();
    add_json_latex(c_ft, false);

    CLI::App* c_sa = app.add_subcommand("singleton-array", "Singleton array of GF(q)");
    c_sa->add_option("--q", q)->required();
    add_json_latex(c_sa, true);

    CLI::App* c_mds = app.add_subcommand("mds", "MDS generator/parity-check for [n, floor(n/2)]_q");
    c_mds->add_option("--n", n)->required();
    c_mds->add_option("--q", q)->required();
    add_json_latex(c_mds, true);

    CLI::App* c_mk = app.add_subcommand("make-ame", "construct the minimal-support AME(n,q) state");
    c_mk->add_option("--n", n)->required();
    c_mk->add_option("--q", q)->required();
    c_mk->add_flag("--words", words, "list the basis words");
    c_mk->add_flag("--closed-form", closed, "print only the closed form");
    add_json_latex(c_mk, true);

    CLI::App* c_va = app.add_subcommand("verify-ame", "certify maximally mixed marginals");
    c_va->add_option("--in", in_path, "state JSON file");
    c_va->add_option("--n", n);
    c_va->add_option("--q", q);
    c_va->add_option("--k", k, "check k-uniformity instead of full AME");

    CLI::App* c_bc = app.add_subcommand("basis-check", "orthonormality of the AME basis M(a)|psi>");
    c_bc->add_option("--n", n)->required();
    c_bc->add_option("--q", q)->required();
    c_bc->add_option("--sample", sample, "random pairs to check (0 = all)");

    CLI::App* c_mw = app.add_subcommand("min-weight", "minimal weight of a Pauli equivalence class");
    c_mw->add_option("--n", n)->required();
    c_mw->add_option("--q", q)->required();
    c_mw->add_option("--m", m_text, "Pauli string, e.g. I.I.X.Z.I.Z")->required();

    CLI::App* c_sm = app.add_subcommand("search-m", "search incompressible Pauli classes");
    c_sm->add_option("--n", n)->required();
    c_sm->add_option("--q", q)->required();
    c_sm->add_option("--target-w", target_w)->required();
    c_sm->add_flag("--all", all, "list all classes (default: stop at the first)");
    c_sm->add_flag("--first", first, "stop at the first hit (default)");

    CLI::App* c_bld = app.add_subcommand("build-code", "build and certify an [[n,1,w]]_q code");
    c_bld->add_option("--n", n)->required();
    c_bld->add_option("--q", q)->required();
    c_bld->add_option("--m", m_text)->required();
    add_json_latex(c_bld, false);

    CLI::App* c_vc = app.add_subcommand("verify-code", "re-certify a code against a distance claim");
    c_vc->add_option("--in", in_path, "code JSON file");
    c_vc->add_option("--n", n);
    c_vc->add_option("--q", q);
    c_vc->add_option("--m", m_text);
    c_vc->add_option("--d", d_claim, "claimed distance");

    CLI::App* c_cat = app.add_subcommand("catalog", "regenerate the published tables");
    c_cat->add_flag("--singleton-arrays", cat_sa, "Singleton arrays for q = 2..11");
    c_cat->add_flag("--table1", cat_t1, "the [[n,1,d]]_q code family with certification");
    add_json_latex(c_cat, false);

    // Global options may appear after the subcommand name.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (json_flag) cfg.format = "json";
    if (latex_flag) cfg.format = "latex";

    try {
        if (c_ft->parsed()) return cmd_field_table(cfg, q);
        if (c_sa->parsed()) return cmd_singleton_array(cfg, q);
        if (c_mds->parsed()) return cmd_mds(cfg, n, q);
        if (c_mk->parsed()) return cmd_make_ame(cfg, n, q, words, closed);
        if (c_va->parsed()) {
            if (in_path.empty() && (n == 0 || q == 0))
                throw std::invalid_argument("verify-ame: need --in or both --n and --q");
            return cmd_verify_ame(cfg, in_path, n, q, k);
        }
        if (c_bc->parsed()) return cmd_basis_check(cfg, n, q, sample);
        if (c_mw->parsed()) return cmd_min_weight(cfg, n, q, m_text);
        if (c_sm->parsed()) return cmd_search_m(cfg, n, q, target_w, all);
        if (c_bld->parsed()) return cmd_build_code(cfg, n, q, m_text);
        if (c_vc->parsed()) {
            if (in_path.empty() && (n == 0 || q == 0 || m_text.empty()))
                throw std::invalid_argument("verify-code: need --in or --n/--q/--m");
            return cmd_verify_code(cfg, in_path, n, q, m_text, d_claim);
        }
        if (c_cat->parsed()) return cmd_catalog(cfg, cat_sa, cat_t1);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
