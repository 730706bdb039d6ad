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

#include "ame/qecc.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ame/parallel.hpp"

namespace ame {

namespace {

int singleton_cap(int n) { return (n - 1) / 2 + 1; }

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

std::vector<PauliString> code_stabilizer_generators(const StabilizerSet& s, const PauliString& m,
                                                    const std::vector<SparseState>& basis,
                                                    bool& full_kernel) {
    const Field& f = s.g.field;
    const int n = s.n(), k = s.k();

    // The commutation constraint s_r (.) m = 0 is one linear functional of
    // alpha: contribution -g_l . m_z from the X-type picks and h_r . m_x
    // from the Z-type picks.
    std::vector<Felem> mx(m.x.begin(), m.x.end()), mz(m.z.begin(), m.z.end());
    std::vector<Felem> c(n, 0);
    for (int l = 0; l < k; ++l) {
        Felem dot = 0;
        for (int j = 0; j < n; ++j) dot = f.add(dot, f.mul(s.g.g.at(l, j), mz[j]));
        c[l] = f.neg(dot);
    }
    for (int r = 0; r < n - k; ++r) {
        Felem dot = 0;
        for (int j = 0; j < n; ++j) dot = f.add(dot, f.mul(s.h.at(r, j), mx[j]));
        c[k + r] = dot;
    }

    int pivot = -1;
    for (int i = 0; i < n; ++i)
        if (c[i] != 0) {
            pivot = i;
            break;
        }
    std::vector<std::vector<int>> alphas;
    if (pivot < 0) {
        full_kernel = true;
        for (int i = 0; i < n; ++i) {
            std::vector<int> a(n, 0);
            a[i] = 1;
            alphas.push_back(a);
        }
    } else {
        full_kernel = false;
        Felem inv_piv = f.inv(c[pivot]);
        for (int i = 0; i < n; ++i) {
            if (i == pivot) continue;
            std::vector<int> a(n, 0);
            a[i] = 1;
            a[pivot] = f.neg(f.mul(c[i], inv_piv));
            alphas.push_back(a);
        }
    }

    std::vector<PauliString> gens;
    for (const auto& a : alphas) {
        PauliString gen = stabilizer_product(s, a);
        for (const SparseState& b : basis)
            if (!(apply(gen, b) == b))
                throw std::logic_error(
                    "code_stabilizer_generators: generator does not fix a code basis state");
        gens.push_back(std::move(gen));
    }
    return gens;
}

QeccCode build_code(const StabilizerSet& s, const PauliString& m, Budget& budget) {
    if (m.n != s.n() || m.q != s.q()) throw std::invalid_argument("build_code: dimension mismatch");
    QeccCode code;
    code.stab = s;
    code.logical = m;

    MinWeight mw = min_class_weight(m, s, budget);
    if (mw.weight == 0)
        throw std::invalid_argument(
            "build_code: M is in the stabilizer class (minimal weight 0); the powers M^m all fix "
            "the base state and span no code");
    code.min_weight = mw.weight;
    if (code.min_weight > singleton_cap(s.n()))
        throw std::logic_error("build_code: quantum Singleton bound violated");

    const int q = s.q();
    budget.charge(std::uint64_t(q) * s.base.terms.size() * s.n(), "build_code");
    PauliString mp = PauliString::identity(m.n, q);
    for (int e = 0; e < q; ++e) {
        code.basis.push_back(apply(mp, s.base));
        mp = multiply(mp, m);
    }
    budget.charge(std::uint64_t(q) * q * s.base.terms.size() / 2, "build_code");
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (!inner_product(code.basis[a], code.basis[b]).is_zero())
                throw std::logic_error("build_code: code basis states are not orthogonal");

    code.code_stabilizers =
        code_stabilizer_generators(s, m, code.basis, code.logical_commutes_with_all);
    return code;
}

namespace {

// Internal Knill-Laflamme scan over all Pauli errors of weight 1..max_weight
// in (weight, support, exponents) order. Returns the first violation.
struct KlViolation {
    std::uint64_t order_index;  // for deterministic merge across chunks
    PauliString p;
    int m;
};

std::optional<KlViolation> kl_scan(const QeccCode& code, int max_weight, Budget& budget,
                                   unsigned threads) {
    const StabilizerSet& s = code.stab;
    const Field& f = s.g.field;
    const int n = s.n(), k = s.k(), q = s.q();
    const PauliString& logical = code.logical;

    // Syndromes of m * logical for every m: the overlap for logical shift m is
    // nonzero iff  H p_x^T == -m (H Mx^T)  and  G p_z^T == -m (G Mz^T).
    std::vector<Felem> lx(logical.x.begin(), logical.x.end());
    std::vector<Felem> lz(logical.z.begin(), logical.z.end());
    std::vector<Felem> u = mat_vec(f, s.h, lx);
    std::vector<Felem> v = mat_vec(f, s.g.g, lz);
    std::vector<std::vector<Felem>> tx(q), tz(q);
    for (int m = 0; m < q; ++m) {
        tx[m].resize(n - k);
        tz[m].resize(k);
        for (int i = 0; i < n - k; ++i) tx[m][i] = f.neg(f.mul(Felem(m % q), u[i]));
        for (int i = 0; i < k; ++i) tz[m][i] = f.neg(f.mul(Felem(m % q), v[i]));
    }

    // Identity error: a hit at m != 0 would mean M^m stabilizes the state.
    for (int m = 1; m < q; ++m) {
        bool hit = std::all_of(tx[m].begin(), tx[m].end(), [](Felem e) { return e == 0; }) &&
                   std::all_of(tz[m].begin(), tz[m].end(), [](Felem e) { return e == 0; });
        if (hit) return KlViolation{0, PauliString::identity(n, q), m};
    }

    std::vector<PauliString> logical_powers;
    for (int e = 0; e < q; ++e) logical_powers.push_back(power(logical, e));

    auto phases_consistent = [&](const PauliString& p) {
        int ph0 = multiply(multiply(dagger(logical_powers[0]), p), logical_powers[0]).phase;
        for (int mp = 1; mp < q; ++mp) {
            if (multiply(multiply(dagger(logical_powers[mp]), p), logical_powers[mp]).phase != ph0)
                return false;
        }
        return true;
    };

    const std::uint64_t combos_per_site = std::uint64_t(q) * q - 1;
    for (int w = 1; w <= std::min(max_weight, n); ++w) {
        std::vector<std::vector<int>> supports;
        {
            std::vector<int> c(w);
            for (int i = 0; i < w; ++i) c[i] = i;
            do {
                supports.push_back(c);
            } while (next_combination(c, n));
        }
        std::uint64_t combos = 1;
        for (int i = 0; i < w; ++i) combos *= combos_per_site;
        budget.charge(std::uint64_t(supports.size()) * combos * (std::uint64_t(w) + q),
                      "knill_laflamme");

        using Partial = std::optional<KlViolation>;
        Partial found = chunked_reduce<Partial>(
            supports.size(), threads, std::nullopt,
            [&](std::size_t lo, std::size_t hi) -> Partial {
                std::vector<Felem> sx(n - k), sz(k);
                for (std::size_t si = lo; si < hi; ++si) {
                    const std::vector<int>& supp = supports[si];
                    // Mixed-radix counter over per-site exponent pairs
                    // (x, z) != (0, 0), encoded 1..q^2-1 as x*q+z.
                    std::vector<std::uint32_t> digits(w, 1);
                    std::uint64_t combo_index = 0;
                    while (true) {
                        std::fill(sx.begin(), sx.end(), 0);
                        std::fill(sz.begin(), sz.end(), 0);
                        for (int i = 0; i < w; ++i) {
                            Felem px = Felem(digits[i] / q), pz = Felem(digits[i] % q);
                            int site = supp[i];
                            if (px != 0)
                                for (int r = 0; r < n - k; ++r)
                                    sx[r] = f.add(sx[r], f.mul(s.h.at(r, site), px));
                            if (pz != 0)
                                for (int r = 0; r < k; ++r)
                                    sz[r] = f.add(sz[r], f.mul(s.g.g.at(r, site), pz));
                        }
                        for (int m = 0; m < q; ++m) {
                            if (sx != tx[m] || sz != tz[m]) continue;
                            PauliString p(n, q);
                            for (int i = 0; i < w; ++i) {
                                p.x[supp[i]] = int(digits[i] / q);
                                p.z[supp[i]] = int(digits[i] % q);
                            }
                            if (m != 0 || !phases_consistent(p))
                                return KlViolation{si * combos + combo_index, p,
                                                   m};
                        }
                        int i = w - 1;
                        for (; i >= 0; --i) {
                            if (++digits[i] < std::uint32_t(q) * q) break;
                            digits[i] = 1;
                        }
                        if (i < 0) break;
                        ++combo_index;
                    }
                }
                return std::nullopt;
            },
            [](Partial& acc, Partial&& part) {
                if (part && (!acc || part->order_index < acc->order_index)) acc = std::move(part);
            });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace

KlResult verify_knill_laflamme(const QeccCode& code, int d_claim, Budget& budget,
                               unsigned threads) {
    if (d_claim < 1) throw std::invalid_argument("verify_knill_laflamme: need d_claim >= 1");
    KlResult res;
    auto violation = kl_scan(code, d_claim - 1, budget, threads);
    if (violation) {
        res.ok = false;
        res.witness = violation->p;
        res.witness_m = violation->m;
    }
    return res;
}

DistanceCertification certify_distance_detailed(const QeccCode& code, Budget& budget,
                                                unsigned threads) {
    const int cap = singleton_cap(code.n());
    DistanceCertification cert;
    auto violation = kl_scan(code, cap - 1, budget, threads);
    if (violation) {
        cert.distance = violation->p.weight();
        cert.limited = true;
        cert.witness = violation->p;
        cert.witness_m = violation->m;
    } else {
        cert.distance = cap;
    }
    return cert;
}

int certify_distance(const QeccCode& code, Budget& budget, unsigned threads) {
    return certify_distance_detailed(code, budget, threads).distance;
}

}  // namespace ame
