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

#include "ame/matrix.hpp"

#include <stdexcept>

namespace ame {

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            Felem aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return c;
}

Mat transpose(const Mat& a) {
    Mat t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

std::vector<Felem> vec_mat(const Field& f, const std::vector<Felem>& v, const Mat& a) {
    if (int(v.size()) != a.rows) throw std::invalid_argument("vec_mat: shape mismatch");
    std::vector<Felem> r(a.cols, 0);
    for (int i = 0; i < a.rows; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < a.cols; ++j) r[j] = f.add(r[j], f.mul(v[i], a.at(i, j)));
    }
    return r;
}

std::vector<Felem> mat_vec(const Field& f, const Mat& a, const std::vector<Felem>& v) {
    if (int(v.size()) != a.cols) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<Felem> r(a.rows, 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (v[j] != 0) r[i] = f.add(r[i], f.mul(a.at(i, j), v[j]));
    return r;
}

std::vector<int> rref_in_place(const Field& f, Mat& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int pr = -1;
        for (int i = r; i < a.rows; ++i)
            if (a.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        for (int j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(pr, j));
        Felem s = f.inv(a.at(r, c));
        for (int j = 0; j < a.cols; ++j) a.at(r, j) = f.mul(s, a.at(r, j));
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Felem t = a.at(i, c);
            for (int j = 0; j < a.cols; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(t, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const Field& f, Mat a) { return int(rref_in_place(f, a).size()); }

Felem determinant(const Field& f, Mat a) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant: matrix not square");
    Felem det = 1;
    for (int c = 0; c < a.cols; ++c) {
        int pr = -1;
        for (int i = c; i < a.rows; ++i)
            if (a.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return 0;
        if (pr != c) {
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(c, j), a.at(pr, j));
            det = f.neg(det);
        }
        det = f.mul(det, a.at(c, c));
        Felem s = f.inv(a.at(c, c));
        for (int i = c + 1; i < a.rows; ++i) {
            if (a.at(i, c) == 0) continue;
            Felem t = f.mul(s, a.at(i, c));
            for (int j = c; j < a.cols; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(t, a.at(c, j)));
        }
    }
    return det;
}

std::optional<std::vector<Felem>> solve_linear(const Field& f, Mat a, std::vector<Felem> b) {
    if (int(b.size()) != a.rows) throw std::invalid_argument("solve_linear: shape mismatch");
    Mat aug(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    std::vector<int> pivots = rref_in_place(f, aug);
    for (int pc : pivots)
        if (pc == a.cols) return std::nullopt;  // pivot in the augmented column
    std::vector<Felem> x(a.cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(int(i), a.cols);
    return x;
}

Mat kernel_basis(const Field& f, Mat a) {
    int n = a.cols;
    std::vector<int> pivots = rref_in_place(f, a);
    std::vector<bool> is_pivot(n, false);
    for (int pc : pivots) is_pivot[pc] = true;
    Mat basis(n - int(pivots.size()), n);
    int row = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        basis.at(row, free) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis.at(row, pivots[i]) = f.neg(a.at(int(i), free));
        ++row;
    }
    return basis;
}

RowSpace::RowSpace(const Field& f, Mat a) : red_(a) { pivots_ = rref_in_place(f, red_); }

bool RowSpace::contains(const Field& f, const std::vector<Felem>& v) const {
    if (int(v.size()) != red_.cols) throw std::invalid_argument("RowSpace::contains: length mismatch");
    std::vector<Felem> w = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Felem c = w[pivots_[i]];
        if (c == 0) continue;
        for (int j = 0; j < red_.cols; ++j) w[j] = f.sub(w[j], f.mul(c, red_.at(int(i), j)));
    }
    for (Felem x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace ame
