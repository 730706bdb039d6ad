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

#include "ame/codes.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "ame/parallel.hpp"

namespace ame {

SingletonArray singleton_array(const Field& field) {
    const int q = field.q();
    SingletonArray sa{field, {}, {}, false};
    for (int i = 1; i <= q - 2; ++i) {
        Felem gi = field.pow(field.primitive(), i);
        sa.a.push_back(field.inv(field.sub(1, gi)));
    }
    sa.rows.assign(q, {});
    for (int i = 1; i <= q; ++i) {
        sa.rows[i - 1].push_back(1);
        for (int j = 2; j <= q + 1 - i; ++j)
            sa.rows[i - 1].push_back(i == 1 ? Felem(1) : sa.a[i + j - 4]);
    }
    return sa;
}

SingletonArray extended_singleton_array_4(const Field& field) {
    if (field.q() != 4)
        throw std::invalid_argument("extended_singleton_array_4: only supported for q = 4");
    SingletonArray sa = singleton_array(field);
    sa.rows[2].push_back(sa.a[0]);  // append a_1 to the third row
    sa.extended = true;
    return sa;
}

bool GeneratorMatrix::standard_form() const {
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (g.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Mat GeneratorMatrix::a_block() const {
    Mat a(k, n - k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n - k; ++j) a.at(i, j) = g.at(i, k + j);
    return a;
}

GeneratorMatrix generator_from_a_block(const Field& field, const Mat& a) {
    GeneratorMatrix g;
    g.field = field;
    g.k = a.rows;
    g.n = a.rows + a.cols;
    g.g = Mat(g.k, g.n);
    for (int i = 0; i < g.k; ++i) {
        g.g.at(i, i) = 1;
        for (int j = 0; j < a.cols; ++j) g.g.at(i, g.k + j) = a.at(i, j);
    }
    return g;
}

GeneratorMatrix mds_generator(int n, const Field& field) {
    if (n < 2) throw std::invalid_argument("mds_generator: need n >= 2");
    const int q = field.q();
    const int k = n / 2;
    SingletonArray sa;
    if (q == 4 && n <= 6) {
        sa = extended_singleton_array_4(field);
    } else if (q >= n - 1) {
        sa = singleton_array(field);
    } else {
        throw std::invalid_argument("mds_generator: construction needs q >= n-1 (or q=4 with n<=6); got n=" +
                                    std::to_string(n) + ", q=" + std::to_string(q));
    }
    Mat a(k, n - k);
    for (int i = 0; i < k; ++i) {
        if (int(sa.rows[i].size()) < n - k)
            throw std::invalid_argument("mds_generator: Singleton array has no block of size " +
                                        std::to_string(k) + "x" + std::to_string(n - k));
        for (int j = 0; j < n - k; ++j) a.at(i, j) = sa.rows[i][j];
    }
    return generator_from_a_block(field, a);
}

Mat parity_check(const GeneratorMatrix& g) {
    const Field& f = g.field;
    Mat h;
    if (g.standard_form()) {
        // H = [-A^T | I_{n-k}]
        Mat a = g.a_block();
        h = Mat(g.n - g.k, g.n);
        for (int i = 0; i < g.n - g.k; ++i) {
            for (int j = 0; j < g.k; ++j) h.at(i, j) = f.neg(a.at(j, i));
            h.at(i, g.k + i) = 1;
        }
    } else {
        Mat red = g.g;
        if (int(rref_in_place(f, red).size()) < g.k)
            throw std::invalid_argument("parity_check: generator rows are linearly dependent");
        h = kernel_basis(f, g.g);
    }
    // G H^T = 0 must hold by construction.
    Mat z = mat_mul(f, g.g, transpose(h));
    for (Felem e : z.v)
        if (e != 0) throw std::logic_error("parity_check: G H^T != 0");
    return h;
}

namespace {

// Enumerates index subsets of {0..n-1} of the given size in lexicographic
// order; returns false when exhausted.
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

std::vector<int> first_combination(int size) {
    std::vector<int> c(size);
    for (int i = 0; i < size; ++i) c[i] = i;
    return c;
}

}  // namespace

MdsCheck is_mds(const GeneratorMatrix& g, Budget& budget) {
    if (!g.standard_form()) throw std::invalid_argument("is_mds: generator not in standard form");
    const Field& f = g.field;
    Mat a = g.a_block();
    const int r = a.rows, c = a.cols;
    if (std::min(r, c) > 4) {
        // Submatrix count explodes; equivalent test via the distance.
        int d = min_distance(g, budget);
        MdsCheck res;
        res.mds = (d == g.n - g.k + 1);
        return res;
    }
    for (int s = 1; s <= std::min(r, c); ++s) {
        std::vector<int> ri = first_combination(s);
        do {
            std::vector<int> ci = first_combination(s);
            do {
                budget.charge(std::uint64_t(s) * s * s, "is_mds");
                Mat sub(s, s);
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j) sub.at(i, j) = a.at(ri[i], ci[j]);
                if (determinant(f, sub) == 0) {
                    MdsCheck res;
                    res.mds = false;
                    res.witness_rows = ri;
                    res.witness_cols = ci;
                    return res;
                }
            } while (next_combination(ci, c));
        } while (next_combination(ri, r));
    }
    return MdsCheck{};
}

void for_each_message(int k, int q, const std::function<void(const std::vector<Felem>&)>& fn) {
    std::vector<Felem> v(k, 0);
    while (true) {
        fn(v);
        int i = 0;
        while (i < k && ++v[i] == q) v[i++] = 0;
        if (i == k) break;
    }
}

std::vector<Felem> encode(const GeneratorMatrix& g, const std::vector<Felem>& message) {
    if (int(message.size()) != g.k) throw std::invalid_argument("encode: message length != k");
    return vec_mat(g.field, message, g.g);
}

void for_each_codeword(const GeneratorMatrix& g,
                       const std::function<void(const std::vector<Felem>&)>& fn) {
    for_each_message(g.k, g.field.q(),
                     [&](const std::vector<Felem>& v) { fn(encode(g, v)); });
}

int min_distance(const GeneratorMatrix& g, Budget& budget) {
    std::uint64_t words = 1;
    for (int i = 0; i < g.k; ++i) words *= std::uint64_t(g.field.q());
    budget.charge(words * std::uint64_t(g.n), "min_distance");
    int best = g.n + 1;
    for_each_message(g.k, g.field.q(), [&](const std::vector<Felem>& v) {
        bool zero = std::all_of(v.begin(), v.end(), [](Felem x) { return x == 0; });
        if (zero) return;
        std::vector<Felem> w = encode(g, v);
        int wt = 0;
        for (Felem x : w) wt += (x != 0);
        best = std::min(best, wt);
    });
    if (best > g.n) throw std::invalid_argument("min_distance: trivial code with k = 0");
    return best;
}

int max_joint_zeros(const AffineCoset& a, const AffineCoset& b, Budget& budget, unsigned threads) {
    if (a.gens.cols != b.gens.cols || a.field.q() != b.field.q())
        throw std::invalid_argument("max_joint_zeros: cosets live on different spaces");
    const Field& f = a.field;
    const int n = a.gens.cols;
    const int q = f.q();
    if (n > 30) throw std::invalid_argument("max_joint_zeros: n too large for mask enumeration");

    auto coset_size = [&](const Mat& m) {
        std::uint64_t s = 1;
        for (int i = 0; i < m.rows; ++i) s *= std::uint64_t(q);
        return s;
    };
    std::uint64_t size_a = coset_size(a.gens), size_b = coset_size(b.gens);
    budget.charge((size_a + size_b) * std::uint64_t(n), "max_joint_zeros");

    // Distinct zero-position masks of the second coset (at most 2^n of them).
    std::vector<std::uint8_t> b_mask_present(std::size_t(1) << n, 0);
    for_each_message(b.gens.rows, q, [&](const std::vector<Felem>& v) {
        std::vector<Felem> w = vec_mat(f, v, b.gens);
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i)
            if (f.add(w[i], b.shift[i]) == 0) mask |= (1u << i);
        b_mask_present[mask] = 1;
    });
    std::vector<std::uint32_t> b_masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (b_mask_present[m]) b_masks.push_back(m);

    std::vector<std::uint32_t> a_masks;
    {
        std::vector<std::uint8_t> present(std::size_t(1) << n, 0);
        for_each_message(a.gens.rows, q, [&](const std::vector<Felem>& v) {
            std::vector<Felem> w = vec_mat(f, v, a.gens);
            std::uint32_t mask = 0;
            for (int i = 0; i < n; ++i)
                if (f.add(w[i], a.shift[i]) == 0) mask |= (1u << i);
            present[mask] = 1;
        });
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (present[m]) a_masks.push_back(m);
    }

    budget.charge(std::uint64_t(a_masks.size()) * b_masks.size(), "max_joint_zeros");
    return chunked_reduce<int>(
        a_masks.size(), threads, 0,
        [&](std::size_t lo, std::size_t hi) {
            int best = 0;
            for (std::size_t i = lo; i < hi; ++i)
                for (std::uint32_t mb : b_masks)
                    best = std::max(best, std::popcount(a_masks[i] & mb));
            return best;
        },
        [](int& acc, int&& part) { acc = std::max(acc, part); });
}

}  // namespace ame
