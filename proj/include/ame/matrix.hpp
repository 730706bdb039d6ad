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

#include "ame/fields.hpp"

namespace ame {

/// Dense row-major matrix of field-element labels. Shapes in this codebase
/// stay tiny (n <= 12), so there is no sparsity or blocking anywhere.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Felem> v;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), v(std::size_t(r) * c, 0) {}

    Felem& at(int r, int c) { return v[std::size_t(r) * cols + c]; }
    Felem at(int r, int c) const { return v[std::size_t(r) * cols + c]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::vector<Felem> row(int r) const {
        return std::vector<Felem>(v.begin() + std::size_t(r) * cols,
                                  v.begin() + std::size_t(r + 1) * cols);
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && v == o.v; }
};

Mat mat_mul(const Field& f, const Mat& a, const Mat& b);
Mat transpose(const Mat& a);

/// Row vector times matrix.
std::vector<Felem> vec_mat(const Field& f, const std::vector<Felem>& v, const Mat& a);
/// Matrix times column vector.
std::vector<Felem> mat_vec(const Field& f, const Mat& a, const std::vector<Felem>& v);

/// In-place reduced row echelon form; returns the pivot column per pivot row.
std::vector<int> rref_in_place(const Field& f, Mat& a);

int rank(const Field& f, Mat a);
Felem determinant(const Field& f, Mat a);

/// Solves A x = b over the field; empty optional when inconsistent.
std::optional<std::vector<Felem>> solve_linear(const Field& f, Mat a, std::vector<Felem> b);

/// Basis of the right null space {x : A x = 0} as rows of the result.
Mat kernel_basis(const Field& f, Mat a);

/// Row space of a matrix in reduced form, for O(rank * n) membership tests.
class RowSpace {
   public:
    RowSpace(const Field& f, Mat a);
    bool contains(const Field& f, const std::vector<Felem>& v) const;
    int rank() const { return int(pivots_.size()); }

   private:
    Mat red_;
    std::vector<int> pivots_;
};

}  // namespace ame
