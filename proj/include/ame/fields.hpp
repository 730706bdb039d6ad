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
#include <string>
#include <vector>

namespace ame {

/// Element labels are integers in [0, q). Label l encodes the polynomial
/// sum_i c_i x^i through the base-p digits of l (c_0 is the least significant
/// digit), so for prime fields the label is the residue itself and for
/// extension fields labels, coefficient tuples and spin levels coincide.
using Felem = std::uint8_t;

/// Which modulus polynomial and primitive element to pick when several are
/// valid. `paper` pins the published table choices (GF(4): 1+x+x^2 with
/// gamma=x, GF(8): 1+x^2+x^3, GF(9): 2+x+x^2, GF(5): gamma=3, ...);
/// `canonical` always takes the lexicographically smallest monic irreducible
/// and the smallest-label primitive element.
enum class FieldConvention { paper, canonical };

/// Exact arithmetic in GF(p^m) for prime-power orders q <= 32.
///
/// All state (modulus, primitive element, add/mul/inverse tables) is fixed at
/// construction; every operation is pure and safe to use concurrently.
class Field {
   public:
    /// Builds GF(q). Throws std::invalid_argument when q is not a prime power
    /// or exceeds the supported order 32.
    static Field of_order(int q, FieldConvention conv = FieldConvention::paper);

    /// Rebuilds a field from explicit parts (as found in JSON exports).
    /// Validates primality of p, irreducibility of the modulus and that the
    /// primitive element generates the multiplicative group.
    static Field from_parts(int p, int m, std::vector<int> irreducible, int primitive);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    bool is_prime_field() const { return m_ == 1; }

    /// Monic modulus polynomial, ascending coefficients, length m+1.
    /// For m = 1 this is the polynomial x, i.e. {0, 1}.
    const std::vector<int>& irreducible() const { return irreducible_; }
    Felem primitive() const { return primitive_; }

    Felem add(Felem a, Felem b) const { return add_[idx(a, b)]; }
    Felem sub(Felem a, Felem b) const { return add_[idx(a, neg_[b])]; }
    Felem neg(Felem a) const { return neg_[a]; }
    Felem mul(Felem a, Felem b) const { return mul_[idx(a, b)]; }
    Felem inv(Felem a) const;                       // throws std::domain_error on 0
    Felem div(Felem a, Felem b) const { return mul(a, inv(b)); }
    Felem pow(Felem a, long long e) const;

    /// Multiplicative order of a nonzero element.
    int element_order(Felem a) const;

    /// Base-p coefficient digits of a label, length m, c_0 first.
    std::vector<int> coeffs(Felem a) const;
    Felem label_from_coeffs(const std::vector<int>& c) const;

    /// Ascending-power polynomial rendering: "0", "1", "2x", "1+x", "x^2", ...
    std::string poly_string(Felem a) const;
    static std::string poly_string(const std::vector<int>& coeffs);
    /// Coefficient tuple rendering, c_0 first: label 2 in GF(4) -> "01".
    std::string tuple_string(Felem a) const;

    const std::vector<Felem>& add_table() const { return add_; }
    const std::vector<Felem>& mul_table() const { return mul_; }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && irreducible_ == o.irreducible_ &&
               primitive_ == o.primitive_;
    }

    /// Empty field placeholder; every factory fully initializes the tables.
    Field() = default;

   private:
    void build_tables();
    std::size_t idx(Felem a, Felem b) const { return std::size_t(a) * q_ + b; }

    int p_ = 0, m_ = 0, q_ = 0;
    std::vector<int> irreducible_;
    Felem primitive_ = 0;
    std::vector<Felem> add_, mul_, neg_, inv_;
};

/// Finds the modulus polynomial for GF(p^m): the pinned published choice for
/// (2,2), (2,3), (3,2) under the paper convention, otherwise the
/// lexicographically smallest monic irreducible of degree m.
std::vector<int> find_irreducible(int p, int m, FieldConvention conv);

/// Smallest-label primitive element, or the pinned published one under the
/// paper convention (differs from smallest only for GF(5): 3 instead of 2).
Felem find_primitive(const Field& field, FieldConvention conv);

bool is_prime(int n);

/// Factors a prime power q = p^m; returns false if q is not one.
bool prime_power(int q, int& p, int& m);

}  // namespace ame
