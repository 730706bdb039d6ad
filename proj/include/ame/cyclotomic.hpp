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

#include <complex>
#include <cstdint>
#include <vector>

namespace ame {

/// q-th cyclotomic polynomial Phi_q, ascending integer coefficients.
/// Computed by dividing x^q - 1 by the product of all lower Phi_d, d | q.
std::vector<std::int64_t> cyclotomic_polynomial(int q);

/// Integer combination sum_k c_k w^k of q-th roots of unity w = e^{i2pi/q}.
/// Zero tests are exact: for prime q the value vanishes iff all coefficients
/// are equal (1 + w + ... + w^{q-1} = 0 is the only relation); in general the
/// coefficient polynomial must reduce to zero modulo Phi_q. Orthogonality
/// certificates in this library are these exact tests, never float
/// comparisons.
class CyclotomicInt {
   public:
    explicit CyclotomicInt(int q) : q_(q), c_(q, 0) {}

    int order() const { return q_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    /// Adds weight * w^k.
    void add_root(int k, std::int64_t weight = 1) { c_[((k % q_) + q_) % q_] += weight; }

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    bool is_zero() const;
    /// True when the value equals the rational integer v.
    bool equals_integer(std::int64_t v) const;

    std::complex<double> to_complex() const;

   private:
    int q_;
    std::vector<std::int64_t> c_;
};

}  // namespace ame
