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

#include <optional>
#include <vector>

#include "ame/pauli.hpp"

namespace ame {

/// The n stabilizer generators of an MDS-built AME state over prime q:
/// floor(n/2) X-type strings from the rows of G followed by ceil(n/2) Z-type
/// strings from the rows of H. They pairwise commute (G H^T = 0) and fix the
/// base state term-for-term.
struct StabilizerSet {
    GeneratorMatrix g;
    Mat h;
    SparseState base;  // the stabilized AME state
    std::vector<PauliString> generators;

    int n() const { return g.n; }
    int k() const { return g.k; }
    int q() const { return g.field.q(); }
};

/// Builds and verifies the stabilizer set for the state of an MDS generator.
/// Throws for non-prime q: the X/Z shift-and-phase algebra only matches the
/// field structure for prime local dimension.
StabilizerSet state_stabilizers(const GeneratorMatrix& g, Budget& budget);

/// Product prod_l s_l^{alpha_l} in standard form: X exponents alpha_x G,
/// Z exponents alpha_z H, phase 0. alpha has length n (first k entries pick
/// X-type generators).
PauliString stabilizer_product(const StabilizerSet& s, const std::vector<int>& alpha);

/// Syndrome pair (H m_x^T, G m_z^T) identifying the equivalence class
/// {M S(alpha)} of a Pauli string on the stabilized state.
std::vector<Felem> class_syndrome(const StabilizerSet& s, const PauliString& m);

/// Rewrites M, by multiplying with a stabilizer product, to act only on the
/// given sites (0-based). Solves one linear system for the X exponents and
/// one for the Z exponents; empty optional when no realization exists
/// (possible only for |sites| < ceil(n/2)).
std::optional<PauliString> push(const PauliString& m, const std::vector<int>& sites,
                                const StabilizerSet& s);

struct MinWeight {
    int weight = 0;
    PauliString realization;  // a witness of that weight
};

/// Minimal weight over the equivalence class of M: iterates site subsets by
/// increasing size and returns the first size admitting a realization.
MinWeight min_class_weight(const PauliString& m, const StabilizerSet& s, Budget& budget);

/// Coset cross-check: minimal class weight equals n minus the maximal number
/// of positions where words of (m_x + rowspace G) and (m_z + rowspace H)
/// vanish simultaneously.
int min_class_weight_via_cosets(const PauliString& m, const StabilizerSet& s, Budget& budget,
                                unsigned threads = 1);

struct SearchOptions {
    bool first_only = true;
    unsigned threads = 1;
};

/// Enumerates candidate Pauli strings of weight <= ceil(n/2) in increasing
/// weight (scalar multiples canonicalized to first nonzero exponent 1, one
/// representative per stabilizer-translate class) and keeps those whose
/// minimal class weight equals target_w. The returned realizations are the
/// minimal-weight witnesses, in enumeration order.
std::vector<PauliString> search_incompressible(const StabilizerSet& s, int target_w,
                                               const SearchOptions& opt, Budget& budget);

/// For an X-only or Z-only string of weight exactly
/// floor((floor(n/2)+1)/2), checks that it is incompressible, i.e. its
/// minimal class weight equals its own weight. Throws if M is not of the
/// stated shape.
bool lemma3_holds(const PauliString& m, const StabilizerSet& s, Budget& budget);

}  // namespace ame
