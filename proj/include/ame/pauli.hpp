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

#include <string>
#include <vector>

#include "ame/states.hpp"

namespace ame {

/// Generalized Pauli string on n qudits of prime dimension q, kept in the
/// standard form w^phase (X^{x_1} ... X^{x_n}) (Z^{z_1} ... Z^{z_n}) with
/// w = e^{i2pi/q}. X shifts |j> -> |j+1 mod q>, Z phases |j> -> w^j |j>.
/// Phases stay exact exponents in Z_q; no complex arithmetic anywhere.
struct PauliString {
    int n = 0;
    int q = 0;
    int phase = 0;
    std::vector<int> x, z;

    PauliString() = default;
    PauliString(int n_, int q_);
    static PauliString identity(int n, int q) { return PauliString(n, q); }

    int weight() const;
    bool is_identity() const;           // exponents and phase all zero
    bool is_identity_up_to_phase() const;

    bool operator==(const PauliString& o) const {
        return n == o.n && q == o.q && phase == o.phase && x == o.x && z == o.z;
    }
};

/// Product AB in standard form; moving the Z block of A past the X block of B
/// contributes w^{A.z . B.x}.
PauliString multiply(const PauliString& a, const PauliString& b);

PauliString dagger(const PauliString& a);

/// m-th power, m may be negative. Note (XZ)^2 = w^{z.x} X^2 Z^2, so powers are
/// not plain exponent scalings when q = 2.
PauliString power(const PauliString& a, long long m);

/// Symplectic form a.z . b.x - a.x . b.z mod q; AB = w^{symplectic(a,b)} BA.
int symplectic(const PauliString& a, const PauliString& b);

/// A|w> = w^{phase + z.w} |w + x>, term by term.
SparseState apply(const PauliString& a, const SparseState& s);

/// Text syntax: dot-separated site factors, each "I" or X/Z factors with
/// optional exponents ("X", "X2Z", "Z3"), with an optional leading global
/// phase token "w^k". Example: "w^2.I.X.Z2.I" on n = 4.
PauliString parse_pauli(const std::string& text, int n, int q);
std::string format_pauli(const PauliString& p);

}  // namespace ame
