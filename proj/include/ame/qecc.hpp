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

#include "ame/stabilizer.hpp"

namespace ame {

/// An [[n,1,d]]_q code spanned by the q AME basis states M^m |psi>.
struct QeccCode {
    StabilizerSet stab;
    PauliString logical;                // M
    int min_weight = 0;                 // minimal weight of M's class
    std::vector<SparseState> basis;     // M^m |psi> for m in [q]
    std::vector<PauliString> code_stabilizers;  // n-1 generators (n if flagged)
    bool logical_commutes_with_all = false;     // kernel was the full space

    int n() const { return stab.n(); }
    int q() const { return stab.q(); }
};

/// Builds the code spanned by {M^m |psi>}: requires the class of M to have
/// minimal weight >= 1 (otherwise M stabilizes the state and the "basis"
/// collapses), certifies pairwise orthogonality of the basis by exact
/// cyclotomic zero tests, constructs the n-1 code stabilizer generators, and
/// checks the quantum Singleton bound d <= (n-1)/2 + 1.
QeccCode build_code(const StabilizerSet& s, const PauliString& m, Budget& budget);

/// Kernel basis of alpha -> (blockdiag(G^T, H^T) alpha) symplectic m over
/// GF(q)^n, returned as stabilizer products. Each generator is verified to
/// fix every code basis state exactly. Normally n-1 generators; when M
/// commutes with every stabilizer product the kernel is all of GF(q)^n and
/// n generators are returned with the flag set.
std::vector<PauliString> code_stabilizer_generators(const StabilizerSet& s, const PauliString& m,
                                                    const std::vector<SparseState>& basis,
                                                    bool& full_kernel);

struct KlResult {
    bool ok = true;
    PauliString witness;  // violating error string, valid when !ok
    int witness_m = 0;    // the logical shift it connects
};

/// Knill-Laflamme check for distance d_claim: for every Pauli error P of
/// weight < d_claim and every m, <psi_{m'}|P|psi_{m'+m}> must be
/// delta_{m,0} f(P). The overlap is nonzero exactly when the X exponents of
/// M^{-m'} P M^{m'+m} lie in rowspace(G) and its Z exponents in rowspace(H),
/// so the scan reduces to syndrome comparisons; only the rare surviving m=0
/// candidates need explicit phase-consistency checks across m'.
KlResult verify_knill_laflamme(const QeccCode& code, int d_claim, Budget& budget,
                               unsigned threads = 1);

struct DistanceCertification {
    int distance = 0;
    bool limited = false;  // a violating error of weight == distance exists
    PauliString witness;   // that error, when limited
    int witness_m = 0;
};

/// Largest d for which the Knill-Laflamme conditions hold. The quantum
/// Singleton bound caps d at floor((n-1)/2) + 1 for one logical qudit, so the
/// scan enumerates error weights below the cap and returns the first
/// violating weight (or the cap itself when none violates).
DistanceCertification certify_distance_detailed(const QeccCode& code, Budget& budget,
                                                unsigned threads = 1);
int certify_distance(const QeccCode& code, Budget& budget, unsigned threads = 1);

}  // namespace ame
