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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ame/budget.hpp"
#include "ame/codes.hpp"
#include "ame/cyclotomic.hpp"

namespace ame {

/// Basis words are packed 5 bits per site (local dimensions up to 32,
/// n up to 12), site 0 in the lowest bits.
using Word = std::uint64_t;

constexpr int kMaxSites = 12;

Word pack_word(const std::vector<Felem>& digits);
std::vector<Felem> unpack_word(Word w, int n);
inline int word_digit(Word w, int site) { return int((w >> (5 * site)) & 31); }

/// Phased uniform superposition over computational basis words: every stored
/// term has amplitude q^{-floor(n/2)/2} times the q-th root of unity to the
/// stored phase exponent. Terms are kept sorted by packed word, so equal
/// states compare equal term-for-term.
struct SparseState {
    int n = 0;
    int q = 0;
    std::vector<std::pair<Word, std::uint8_t>> terms;

    void canonicalize();
    std::optional<int> phase_of(Word w) const;  // binary search
    bool operator==(const SparseState& o) const {
        return n == o.n && q == o.q && terms == o.terms;
    }
};

/// Superposition of all codewords of an MDS code, phase 0 everywhere; the
/// q^k words pairwise differ in at least ceil(n/2)+1 positions, which makes
/// the state absolutely maximally entangled. Refuses non-MDS input.
SparseState build_ame(const GeneratorMatrix& g, Budget& budget);

struct KUniformResult {
    bool uniform = true;
    std::vector<int> failing_subset;  // 0-based sites, set when !uniform
};

/// Checks that the reduction to every size-k subset is exactly maximally
/// mixed: per subset, diagonal occupation counts must all equal
/// #terms / q^k and every off-diagonal entry must be a cyclotomic zero.
KUniformResult is_k_uniform(const SparseState& s, int k, Budget& budget, unsigned threads = 1);

/// AME check: k-uniformity at k = floor(n/2).
KUniformResult verify_ame(const SparseState& s, Budget& budget, unsigned threads = 1);

/// Unnormalized <s1|s2> = sum over common words of w^{phase2 - phase1},
/// as an exact cyclotomic integer.
CyclotomicInt inner_product(const SparseState& s1, const SparseState& s2);

/// Applies M(a) for a in [q]^n: X^{a_{floor(n/2)+j}} shifts on the last
/// ceil(n/2) sites followed by Z^{a_j} phases on the last floor(n/2) sites.
/// Works for any q >= 2; no Pauli group structure is needed.
SparseState ame_basis_element(const SparseState& s, const std::vector<int>& a);

struct ClosedForm {
    std::string text;
    std::string latex;
};

/// Summation formula of the state built from G, e.g. for the [6,3,4]_5 code
/// "sum_{i,j,l=0}^{4} |i,j,l,i+j+l,i+2j+3l,i+3j+4l>".
ClosedForm closed_form(const GeneratorMatrix& g);

struct BasisCheckResult {
    bool ok = true;
    std::uint64_t pairs_checked = 0;
    std::string counterexample;
};

/// Orthonormality of the AME basis {M(a)|s> : a in [q]^n}: every state must
/// have squared norm #terms and distinct states must be exactly orthogonal.
/// Checks all q^n (q^n + 1) / 2 pairs when sample_pairs == 0, otherwise that
/// many seeded random pairs.
BasisCheckResult basis_check(const SparseState& s, std::uint64_t sample_pairs,
                             std::uint64_t seed, Budget& budget, unsigned threads = 1);

}  // namespace ame
