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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ame/budget.hpp"
#include "ame/matrix.hpp"

namespace ame {

/// Triangular Singleton array over GF(q). Row i (1-indexed) has q+1-i
/// entries; the first row and column are all ones and entry (i,j) for
/// i,j >= 2 is a_{i+j-2} with a_i = 1/(1 - gamma^i). The q = 4 variant with
/// a_1 appended to the third row is marked `extended`.
struct SingletonArray {
    Field field;
    std::vector<std::vector<Felem>> rows;
    std::vector<Felem> a;  // a_1 .. a_{q-2}
    bool extended = false;
};

SingletonArray singleton_array(const Field& field);
SingletonArray extended_singleton_array_4(const Field& field);

/// Generator matrix of a linear [n,k]_q code in standard form [I_k | A].
struct GeneratorMatrix {
    Field field;
    int k = 0;
    int n = 0;
    Mat g;

    bool standard_form() const;
    Mat a_block() const;  // the k x (n-k) right block
};

/// MDS generator [n, floor(n/2), ceil(n/2)+1]_q built from the top-left block
/// of the Singleton array; requires q >= n-1 except for the (q=4, n=6) case
/// which uses the extended array.
GeneratorMatrix mds_generator(int n, const Field& field);

/// Generator matrix with an arbitrary standard-form A block (k x (n-k)).
GeneratorMatrix generator_from_a_block(const Field& field, const Mat& a);

/// Parity check H with G H^T = 0; [-A^T | I] when G is in standard form,
/// otherwise a kernel basis of the row-reduced G (throws if rank < k).
Mat parity_check(const GeneratorMatrix& g);

struct MdsCheck {
    bool mds = true;
    // Witness rows/columns (indices into A) of a singular square submatrix.
    std::vector<int> witness_rows, witness_cols;
};

/// A standard-form code is MDS iff every square submatrix of A is
/// nonsingular. Enumerates submatrices for min(k, n-k) <= 4 and falls back to
/// a distance computation beyond that.
MdsCheck is_mds(const GeneratorMatrix& g, Budget& budget);

/// Minimum Hamming weight over the q^k - 1 nonzero codewords.
int min_distance(const GeneratorMatrix& g, Budget& budget);

std::vector<Felem> encode(const GeneratorMatrix& g, const std::vector<Felem>& message);

/// Calls fn with every message vector of [q]^k in ascending base-q order
/// (first coordinate least significant).
void for_each_message(int k, int q, const std::function<void(const std::vector<Felem>&)>& fn);

/// Streams all q^k codewords in message order.
void for_each_codeword(const GeneratorMatrix& g,
                       const std::function<void(const std::vector<Felem>&)>& fn);

/// Affine coset {v M + shift : v in [q]^rows(M)} of a linear code.
struct AffineCoset {
    Field field;
    Mat gens;
    std::vector<Felem> shift;
};

/// Largest number of positions where some word of A and some word of B are
/// simultaneously zero. Enumerates zero-position masks of both cosets and
/// maximizes the intersection popcount over distinct mask pairs.
int max_joint_zeros(const AffineCoset& a, const AffineCoset& b, Budget& budget,
                    unsigned threads = 1);

}  // namespace ame
