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

// Test-only oracles, kept independent of the search code they validate.

#pragma once

#include <random>

#include "ame/stabilizer.hpp"

namespace ame::testing {

/// Minimal class weight by enumerating all q^n stabilizer products: for every
/// exponent pick (alpha, beta) form m + (alpha G, beta H) and take the
/// lightest. Exponential; only for q^n around 10^6 or below.
inline int brute_force_class_weight(const PauliString& m, const StabilizerSet& s) {
    const Field& f = s.g.field;
    const int n = s.n(), k = s.k();
    int best = n + 1;
    std::vector<Felem> mx(m.x.begin(), m.x.end()), mz(m.z.begin(), m.z.end());
    for_each_message(k, s.q(), [&](const std::vector<Felem>& alpha) {
        std::vector<Felem> xr = vec_mat(f, alpha, s.g.g);
        for (int i = 0; i < n; ++i) xr[i] = f.add(xr[i], mx[i]);
        for_each_message(n - k, s.q(), [&](const std::vector<Felem>& beta) {
            std::vector<Felem> zr = vec_mat(f, beta, s.h);
            int w = 0;
            for (int i = 0; i < n; ++i) w += (xr[i] != 0 || f.add(zr[i], mz[i]) != 0);
            if (w < best) best = w;
        });
    });
    return best;
}

inline PauliString random_pauli(int n, int q, std::mt19937_64& rng) {
    PauliString p(n, q);
    for (int i = 0; i < n; ++i) {
        p.x[i] = int(rng() % q);
        p.z[i] = int(rng() % q);
    }
    return p;
}

}  // namespace ame::testing
