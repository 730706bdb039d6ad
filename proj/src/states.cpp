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

#include "ame/states.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "ame/parallel.hpp"

namespace ame {

Word pack_word(const std::vector<Felem>& digits) {
    if (int(digits.size()) > kMaxSites) throw std::invalid_argument("pack_word: too many sites");
    Word w = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) w |= Word(digits[i] & 31) << (5 * i);
    return w;
}

std::vector<Felem> unpack_word(Word w, int n) {
    std::vector<Felem> d(n);
    for (int i = 0; i < n; ++i) d[i] = Felem((w >> (5 * i)) & 31);
    return d;
}

void SparseState::canonicalize() {
    std::sort(terms.begin(), terms.end());
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i].first == terms[i - 1].first)
            throw std::invalid_argument("SparseState: duplicate basis word");
}

std::optional<int> SparseState::phase_of(Word w) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), std::make_pair(w, std::uint8_t(0)),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == terms.end() || it->first != w) return std::nullopt;
    return int(it->second);
}

SparseState build_ame(const GeneratorMatrix& g, Budget& budget) {
    if (g.n > kMaxSites) throw std::invalid_argument("build_ame: n too large");
    MdsCheck chk = is_mds(g, budget);
    if (!chk.mds) {
        std::string w = "build_ame: generator is not MDS; singular A submatrix at rows {";
        for (std::size_t i = 0; i < chk.witness_rows.size(); ++i)
            w += (i ? "," : "") + std::to_string(chk.witness_rows[i] + 1);
        w += "} cols {";
        for (std::size_t i = 0; i < chk.witness_cols.size(); ++i)
            w += (i ? "," : "") + std::to_string(chk.witness_cols[i] + 1);
        w += "}";
        throw std::invalid_argument(w);
    }
    SparseState s;
    s.n = g.n;
    s.q = g.field.q();
    std::uint64_t count = 1;
    for (int i = 0; i < g.k; ++i) count *= std::uint64_t(s.q);
    budget.charge(count * std::uint64_t(g.n), "build_ame");
    s.terms.reserve(count);
    for_each_message(g.k, s.q, [&](const std::vector<Felem>& v) {
        s.terms.emplace_back(pack_word(encode(g, v)), 0);
    });
    s.canonicalize();
    return s;
}

namespace {

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

std::vector<std::vector<int>> all_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    do {
        out.push_back(c);
    } while (next_combination(c, n));
    return out;
}

Word restrict_word(Word w, const std::vector<int>& sites) {
    Word r = 0;
    for (std::size_t i = 0; i < sites.size(); ++i)
        r |= Word(word_digit(w, sites[i])) << (5 * i);
    return r;
}

// Maximally-mixed test for the reduction onto `sites`: group terms by the
// complement restriction, then check diagonal counts and off-diagonal
// cyclotomic sums of the resulting q^k x q^k density block.
bool subset_maximally_mixed(const SparseState& s, const std::vector<int>& sites,
                            const std::vector<int>& complement) {
    const std::uint64_t n_terms = s.terms.size();
    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < sites.size(); ++i) qk *= std::uint64_t(s.q);
    if (n_terms % qk != 0) return false;
    const std::uint64_t expected_count = n_terms / qk;

    std::unordered_map<Word, std::vector<std::pair<Word, int>>> groups;
    groups.reserve(n_terms);
    for (const auto& [w, ph] : s.terms)
        groups[restrict_word(w, complement)].emplace_back(restrict_word(w, sites), int(ph));

    std::unordered_map<Word, std::uint64_t> diag;
    std::map<std::pair<Word, Word>, CyclotomicInt> cross;
    for (const auto& [y, members] : groups) {
        for (const auto& [u, ph] : members) diag[u] += 1;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (i == j) continue;
                auto key = std::make_pair(members[i].first, members[j].first);
                auto it = cross.find(key);
                if (it == cross.end()) it = cross.emplace(key, CyclotomicInt(s.q)).first;
                it->second.add_root(members[i].second - members[j].second);
            }
    }
    if (diag.size() != qk) return false;
    for (const auto& [u, count] : diag)
        if (count != expected_count) return false;
    for (const auto& [key, sum] : cross)
        if (!sum.is_zero()) return false;
    return true;
}

}  // namespace

KUniformResult is_k_uniform(const SparseState& s, int k, Budget& budget, unsigned threads) {
    if (k < 0 || k > s.n / 2)
        throw std::invalid_argument("is_k_uniform: need 0 <= k <= floor(n/2)");
    KUniformResult res;
    if (k == 0) return res;
    std::vector<std::vector<int>> subsets = all_subsets(s.n, k);
    // Worst case each group pairs every term with every other.
    budget.charge(std::uint64_t(subsets.size()) * s.terms.size() * (std::uint64_t(s.q) + 1),
                  "is_k_uniform");

    long long first_bad = chunked_reduce<long long>(
        subsets.size(), threads, -1,
        [&](std::size_t lo, std::size_t hi) -> long long {
            for (std::size_t i = lo; i < hi; ++i) {
                std::vector<int> complement;
                for (int site = 0; site < s.n; ++site)
                    if (!std::binary_search(subsets[i].begin(), subsets[i].end(), site))
                        complement.push_back(site);
                if (!subset_maximally_mixed(s, subsets[i], complement)) return (long long)(i);
            }
            return -1;
        },
        [](long long& acc, long long&& part) {
            if (part >= 0 && (acc < 0 || part < acc)) acc = part;
        });

    if (first_bad >= 0) {
        res.uniform = false;
        res.failing_subset = subsets[std::size_t(first_bad)];
    }
    return res;
}

KUniformResult verify_ame(const SparseState& s, Budget& budget, unsigned threads) {
    return is_k_uniform(s, s.n / 2, budget, threads);
}

CyclotomicInt inner_product(const SparseState& s1, const SparseState& s2) {
    if (s1.n != s2.n || s1.q != s2.q)
        throw std::invalid_argument("inner_product: dimension mismatch");
    CyclotomicInt acc(s1.q);
    // Both term lists are sorted; walk them together.
    std::size_t i = 0, j = 0;
    while (i < s1.terms.size() && j < s2.terms.size()) {
        if (s1.terms[i].first < s2.terms[j].first) {
            ++i;
        } else if (s2.terms[j].first < s1.terms[i].first) {
            ++j;
        } else {
            acc.add_root(int(s2.terms[j].second) - int(s1.terms[i].second));
            ++i;
            ++j;
        }
    }
    return acc;
}

SparseState ame_basis_element(const SparseState& s, const std::vector<int>& a) {
    if (int(a.size()) != s.n) throw std::invalid_argument("ame_basis_element: |a| != n");
    const int k = s.n / 2;       // number of Z factors
    const int half = s.n - k;    // first X site
    SparseState out;
    out.n = s.n;
    out.q = s.q;
    out.terms.reserve(s.terms.size());
    for (const auto& [w, ph] : s.terms) {
        // X part shifts the last ceil(n/2) sites...
        Word shifted = 0;
        for (int site = 0; site < s.n; ++site) {
            int d = word_digit(w, site);
            if (site >= k) d = (d + a[site]) % s.q;
            shifted |= Word(d) << (5 * site);
        }
        // ...then the Z part phases by the shifted digits of the last floor(n/2) sites.
        int phase = ph;
        for (int j = 0; j < k; ++j)
            phase = (phase + a[j] * word_digit(shifted, half + j)) % s.q;
        out.terms.emplace_back(shifted, std::uint8_t(phase));
    }
    out.canonicalize();
    return out;
}

namespace {

std::string index_name(int i, int k) {
    static const char* names = "ijlmr";
    if (k <= 5) return std::string(1, names[i]);
    return "v" + std::to_string(i + 1);
}

std::string column_formula(const GeneratorMatrix& g, int col, bool latex) {
    const Field& f = g.field;
    std::string s;
    for (int r = 0; r < g.k; ++r) {
        Felem c = g.g.at(r, col);
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (c != 1) {
            if (f.is_prime_field()) {
                s += std::to_string(int(c));
            } else {
                std::string poly = f.poly_string(c);
                bool multi = poly.find('+') != std::string::npos;
                s += multi ? "(" + poly + ")" : poly;
            }
            if (latex) s += "\\,";
        }
        s += index_name(r, g.k);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

ClosedForm closed_form(const GeneratorMatrix& g) {
    const Field& f = g.field;
    std::string indices;
    for (int r = 0; r < g.k; ++r) indices += (r ? "," : "") + index_name(r, g.k);

    std::string body, body_latex;
    for (int c = 0; c < g.n; ++c) {
        if (c) {
            body += ",";
            body_latex += ",";
        }
        body += column_formula(g, c, false);
        body_latex += column_formula(g, c, true);
    }

    ClosedForm cf;
    if (f.is_prime_field()) {
        cf.text = "sum_{" + indices + "=0}^{" + std::to_string(f.q() - 1) + "} |" + body + ">";
        cf.latex = "\\sum_{" + indices + "=0}^{" + std::to_string(f.q() - 1) + "} |" + body_latex +
                   "\\rangle";
    } else {
        std::string elems;
        for (int e = 0; e < f.q(); ++e) elems += (e ? "," : "") + f.poly_string(Felem(e));
        cf.text = "sum_{" + indices + " in {" + elems + "}} |" + body + ">";
        cf.latex = "\\sum_{" + indices + " \\in \\{" + elems + "\\}} |" + body_latex + "\\rangle";
    }
    return cf;
}

BasisCheckResult basis_check(const SparseState& s, std::uint64_t sample_pairs, std::uint64_t seed,
                             Budget& budget, unsigned threads) {
    const int n = s.n, q = s.q;
    std::uint64_t qn = 1;
    for (int i = 0; i < n; ++i) {
        qn *= std::uint64_t(q);
        if (qn > (std::uint64_t(1) << 40)) throw std::invalid_argument("basis_check: q^n too large");
    }
    const std::uint64_t norm = s.terms.size();

    auto nth_vector = [&](std::uint64_t idx) {
        std::vector<int> a(n);
        for (int i = 0; i < n; ++i) {
            a[i] = int(idx % q);
            idx /= q;
        }
        return a;
    };

    auto check_pair = [&](std::uint64_t ia, std::uint64_t ib, std::string& err) {
        SparseState sa = ame_basis_element(s, nth_vector(ia));
        if (ia == ib) {
            if (!inner_product(sa, sa).equals_integer(std::int64_t(norm))) {
                err = "basis state " + std::to_string(ia) + " has squared norm != " +
                      std::to_string(norm);
                return false;
            }
            return true;
        }
        SparseState sb = ame_basis_element(s, nth_vector(ib));
        if (!inner_product(sa, sb).is_zero()) {
            err = "basis states " + std::to_string(ia) + " and " + std::to_string(ib) +
                  " are not orthogonal";
            return false;
        }
        return true;
    };

    BasisCheckResult res;
    if (sample_pairs == 0) {
        // Full check: all norms plus all unordered pairs.
        std::uint64_t total = qn + qn * (qn - 1) / 2;
        budget.charge(total * norm, "basis_check");
        res.pairs_checked = total;
        struct Partial {
            bool ok = true;
            std::string err;
        };
        // Pair t of the triangular enumeration: (a, b) with a <= b.
        Partial out = chunked_reduce<Partial>(
            total, threads, Partial{},
            [&](std::uint64_t lo, std::uint64_t hi) {
                Partial part;
                // Walk (a, b) pairs; derive the starting pair from lo.
                std::uint64_t t = 0, a = 0;
                std::uint64_t row_len = qn;  // pairs (a, a..qn-1)
                while (t + row_len <= lo) {
                    t += row_len;
                    ++a;
                    --row_len;
                }
                std::uint64_t b = a + (lo - t);
                for (std::uint64_t i = lo; i < hi && part.ok; ++i) {
                    part.ok = check_pair(a, b, part.err);
                    if (++b == qn) {
                        ++a;
                        b = a;
                    }
                }
                return part;
            },
            [](Partial& acc, Partial&& p) {
                if (acc.ok && !p.ok) acc = std::move(p);
            });
        res.ok = out.ok;
        res.counterexample = out.err;
    } else {
        budget.charge(sample_pairs * 3 * norm, "basis_check");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> dist(0, qn - 1);
        res.pairs_checked = sample_pairs;
        for (std::uint64_t i = 0; i < sample_pairs; ++i) {
            std::uint64_t a = dist(rng), b = dist(rng);
            while (b == a) b = dist(rng);
            std::string err;
            if (!check_pair(a, a, err) || !check_pair(a, b, err)) {
                res.ok = false;
                res.counterexample = err;
                break;
            }
        }
    }
    return res;
}

}  // namespace ame
