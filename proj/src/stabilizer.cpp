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

#include "ame/stabilizer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "ame/parallel.hpp"

namespace ame {

StabilizerSet state_stabilizers(const GeneratorMatrix& g, Budget& budget) {
    const Field& f = g.field;
    if (!f.is_prime_field())
        throw std::invalid_argument(
            "state_stabilizers: requires prime q; the shift/phase operators do not follow the "
            "extension-field structure for q = " +
            std::to_string(f.q()));
    if (!g.standard_form()) throw std::invalid_argument("state_stabilizers: G not in standard form");

    StabilizerSet s;
    s.g = g;
    s.h = parity_check(g);
    s.base = build_ame(g, budget);

    const int n = g.n, k = g.k, q = f.q();
    for (int l = 0; l < k; ++l) {
        PauliString p(n, q);
        for (int m = 0; m < n; ++m) p.x[m] = g.g.at(l, m);
        s.generators.push_back(p);
    }
    for (int l = 0; l < n - k; ++l) {
        PauliString p(n, q);
        for (int m = 0; m < n; ++m) p.z[m] = s.h.at(l, m);
        s.generators.push_back(p);
    }

    budget.charge(std::uint64_t(n) * s.base.terms.size() * n, "state_stabilizers");
    for (const PauliString& p : s.generators)
        if (!(apply(p, s.base) == s.base))
            throw std::logic_error("state_stabilizers: generator does not fix the base state");
    for (std::size_t i = 0; i < s.generators.size(); ++i)
        for (std::size_t j = i + 1; j < s.generators.size(); ++j)
            if (symplectic(s.generators[i], s.generators[j]) != 0)
                throw std::logic_error("state_stabilizers: generators do not commute");
    return s;
}

PauliString stabilizer_product(const StabilizerSet& s, const std::vector<int>& alpha) {
    if (int(alpha.size()) != s.n()) throw std::invalid_argument("stabilizer_product: |alpha| != n");
    const Field& f = s.g.field;
    PauliString p(s.n(), s.q());
    std::vector<Felem> ax(alpha.begin(), alpha.begin() + s.k());
    std::vector<Felem> az(alpha.begin() + s.k(), alpha.end());
    std::vector<Felem> xs = vec_mat(f, ax, s.g.g);
    std::vector<Felem> zs = vec_mat(f, az, s.h);
    for (int i = 0; i < s.n(); ++i) {
        p.x[i] = xs[i];
        p.z[i] = zs[i];
    }
    return p;
}

std::vector<Felem> class_syndrome(const StabilizerSet& s, const PauliString& m) {
    const Field& f = s.g.field;
    std::vector<Felem> mx(m.x.begin(), m.x.end()), mz(m.z.begin(), m.z.end());
    std::vector<Felem> sx = mat_vec(f, s.h, mx);      // length n-k
    std::vector<Felem> sz = mat_vec(f, s.g.g, mz);    // length k
    sx.insert(sx.end(), sz.begin(), sz.end());
    return sx;
}

namespace {

// Solves alpha . B|_off = -target|_off for a row combination of B.
std::optional<std::vector<Felem>> solve_outside(const Field& f, const Mat& b,
                                                const std::vector<int>& off,
                                                const std::vector<int>& target) {
    Mat sys(int(off.size()), b.rows);
    std::vector<Felem> rhs(off.size());
    for (std::size_t r = 0; r < off.size(); ++r) {
        for (int c = 0; c < b.rows; ++c) sys.at(int(r), c) = b.at(c, off[r]);
        rhs[r] = f.neg(Felem(target[off[r]] % f.q()));
    }
    return solve_linear(f, sys, rhs);
}

bool next_combination(std::vector<int>& c, int n) {
    int s = int(c.size());
    for (int i = s - 1; i >= 0; --i) {
        if (c[i] < n - (s - i)) {
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<PauliString> push(const PauliString& m, const std::vector<int>& sites,
                                const StabilizerSet& s) {
    if (m.n != s.n() || m.q != s.q()) throw std::invalid_argument("push: dimension mismatch");
    std::vector<bool> in_target(s.n(), false);
    for (int site : sites) {
        if (site < 0 || site >= s.n()) throw std::invalid_argument("push: site out of range");
        in_target[site] = true;
    }
    std::vector<int> off;
    for (int i = 0; i < s.n(); ++i)
        if (!in_target[i]) off.push_back(i);

    const Field& f = s.g.field;
    auto alpha = solve_outside(f, s.g.g, off, m.x);
    if (!alpha) return std::nullopt;
    auto beta = solve_outside(f, s.h, off, m.z);
    if (!beta) return std::nullopt;

    std::vector<int> coeff(s.n());
    for (int i = 0; i < s.k(); ++i) coeff[i] = (*alpha)[i];
    for (int i = 0; i < s.n() - s.k(); ++i) coeff[s.k() + i] = (*beta)[i];
    return multiply(m, stabilizer_product(s, coeff));
}

MinWeight min_class_weight(const PauliString& m, const StabilizerSet& s, Budget& budget) {
    const int n = s.n();
    if (n > 10) throw std::invalid_argument("min_class_weight: n > 10 out of search budget");
    for (int w = 0; w <= n; ++w) {
        std::vector<int> sites(w);
        for (int i = 0; i < w; ++i) sites[i] = i;
        do {
            budget.charge(std::uint64_t(n) * n, "min_class_weight");
            if (auto realization = push(m, sites, s)) return MinWeight{w, *realization};
        } while (next_combination(sites, n));
    }
    throw std::logic_error("min_class_weight: no realization on the full site set");
}

int min_class_weight_via_cosets(const PauliString& m, const StabilizerSet& s, Budget& budget,
                                unsigned threads) {
    AffineCoset a{s.g.field, s.g.g, std::vector<Felem>(m.x.begin(), m.x.end())};
    AffineCoset b{s.g.field, s.h, std::vector<Felem>(m.z.begin(), m.z.end())};
    return s.n() - max_joint_zeros(a, b, budget, threads);
}

namespace {

// Candidate enumeration for the incompressibility search. Candidates of a
// fixed support are ordered by their per-site (x, z) exponent pairs; the
// first support site only takes pairs whose first nonzero exponent is 1,
// which picks one representative per nonzero scalar multiple.
struct CandidateEnum {
    int q;
    std::vector<std::pair<int, int>> first_site_pairs, other_site_pairs;

    explicit CandidateEnum(int q_) : q(q_) {
        first_site_pairs.emplace_back(0, 1);
        for (int z = 0; z < q; ++z) first_site_pairs.emplace_back(1, z);
        for (int x = 0; x < q; ++x)
            for (int z = 0; z < q; ++z)
                if (x || z) other_site_pairs.emplace_back(x, z);
    }
};

std::uint64_t pack_syndrome(const std::vector<Felem>& synd, int q) {
    std::uint64_t key = 0;
    for (Felem d : synd) key = key * std::uint64_t(q) + d;
    return key;
}

}  // namespace

std::vector<PauliString> search_incompressible(const StabilizerSet& s, int target_w,
                                               const SearchOptions& opt, Budget& budget) {
    const int n = s.n(), q = s.q();
    const int max_w = (n + 1) / 2;
    if (target_w < 1 || target_w > max_w)
        throw std::invalid_argument("search_incompressible: target weight must be in [1, ceil(n/2)]");

    // Every class of minimal weight target_w contains a member of exactly
    // that weight, so enumerating candidates of weight >= target_w (and
    // deduplicating by class syndrome) covers all of them.
    CandidateEnum en(q);
    std::unordered_set<std::uint64_t> seen;
    std::vector<PauliString> candidates;
    bool stop = false;

    auto classify = [&](const PauliString& m) -> std::optional<PauliString> {
        Budget sub(std::numeric_limits<std::uint64_t>::max());
        MinWeight mw = min_class_weight(m, s, sub);
        if (mw.weight == target_w) return mw.realization;
        return std::nullopt;
    };

    std::vector<PauliString> out;
    for (int w = target_w; w <= max_w && !stop; ++w) {
        std::vector<int> sites(w);
        for (int i = 0; i < w; ++i) sites[i] = i;
        do {
            std::vector<std::size_t> pick(w, 0);
            while (!stop) {
                // One unit per raw candidate plus the subset-solve cost of
                // classifying each new class.
                budget.charge(1, "search_incompressible");
                PauliString m(n, q);
                for (int i = 0; i < w; ++i) {
                    const auto& pairs = i == 0 ? en.first_site_pairs : en.other_site_pairs;
                    m.x[sites[i]] = pairs[pick[i]].first;
                    m.z[sites[i]] = pairs[pick[i]].second;
                }
                if (seen.insert(pack_syndrome(class_syndrome(s, m), q)).second) {
                    budget.charge((std::uint64_t(1) << n) / 4 + 1, "search_incompressible");
                    if (opt.first_only) {
                        if (auto hit = classify(m)) {
                            out.push_back(*hit);
                            stop = true;
                        }
                    } else {
                        candidates.push_back(std::move(m));
                    }
                }
                int i = w - 1;
                for (; i >= 0; --i) {
                    const auto& pairs = i == 0 ? en.first_site_pairs : en.other_site_pairs;
                    if (++pick[i] < pairs.size()) break;
                    pick[i] = 0;
                }
                if (i < 0) break;
            }
        } while (!stop && next_combination(sites, n));
    }
    if (opt.first_only) return out;

    // Classification of the collected classes is the heavy part; spread it
    // over workers, keep enumeration order.
    std::vector<std::optional<PauliString>> hits(candidates.size());
    chunked_reduce<int>(
        candidates.size(), opt.threads, 0,
        [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) hits[i] = classify(candidates[i]);
            return 0;
        },
        [](int&, int&&) {});
    for (auto& h : hits)
        if (h) out.push_back(std::move(*h));
    return out;
}

bool lemma3_holds(const PauliString& m, const StabilizerSet& s, Budget& budget) {
    bool x_only = true, z_only = true;
    for (int i = 0; i < m.n; ++i) {
        if (m.x[i] != 0) z_only = false;
        if (m.z[i] != 0) x_only = false;
    }
    if (!x_only && !z_only)
        throw std::invalid_argument("lemma3_holds: string must be X-only or Z-only");
    const int expected = ((s.n() / 2) + 1) / 2;
    if (m.weight() != expected)
        throw std::invalid_argument("lemma3_holds: weight must be floor((floor(n/2)+1)/2) = " +
                                    std::to_string(expected));
    return min_class_weight(m, s, budget).weight == m.weight();
}

}  // namespace ame
