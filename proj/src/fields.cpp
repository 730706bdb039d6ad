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

#include "ame/fields.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ame {

namespace {

constexpr int kMaxOrder = 32;

// Dense polynomials over GF(p), ascending coefficients, no trailing zeros
// except for the zero polynomial (empty vector).
using Poly = std::vector<int>;

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int degree(const Poly& f) { return int(f.size()) - 1; }

Poly poly_mul(const Poly& f, const Poly& g, int p) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
    return trim(h);
}

// Remainder of f modulo a monic divisor.
Poly poly_mod(Poly f, const Poly& d, int p) {
    f = trim(f);
    while (degree(f) >= degree(d)) {
        int shift = degree(f) - degree(d);
        int c = f.back();
        for (std::size_t i = 0; i < d.size(); ++i) {
            int k = int(i) + shift;
            f[k] = ((f[k] - c * d[i]) % p + p) % p;
        }
        f = trim(f);
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const Poly& f, int p) {
    int d = degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly g(dd + 1, 0);
            long long c = code;
            for (int i = 0; i < dd; ++i) {
                g[i] = int(c % p);
                c /= p;
            }
            g[dd] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Published modulus polynomials, ascending coefficients.
const std::map<std::pair<int, int>, std::vector<int>> kPinnedModuli = {
    {{2, 2}, {1, 1, 1}},     // 1 + x + x^2
    {{2, 3}, {1, 0, 1, 1}},  // 1 + x^2 + x^3
    {{3, 2}, {2, 1, 1}},     // 2 + x + x^2
};

// Published primitive elements by field order.
const std::map<int, int> kPinnedPrimitive = {
    {2, 1}, {3, 2}, {4, 2}, {5, 3}, {7, 3}, {8, 2}, {9, 3}, {11, 2},
};

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(int q, int& p, int& m) {
    if (q < 2) return false;
    int base = q;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    int mm = 0, acc = 1;
    while (acc < q) {
        acc *= base;
        ++mm;
    }
    if (acc != q) return false;
    p = base;
    m = mm;
    return true;
}

std::vector<int> find_irreducible(int p, int m, FieldConvention conv) {
    if (!is_prime(p) || m < 1) throw std::invalid_argument("find_irreducible: need p prime, m >= 1");
    if (m == 1) return {0, 1};  // the polynomial x; GF(p)[x]/(x) = GF(p)
    if (conv == FieldConvention::paper) {
        auto it = kPinnedModuli.find({p, m});
        if (it != kPinnedModuli.end()) return it->second;
    }
    // Smallest monic irreducible, ordered by the base-p integer formed by the
    // non-leading coefficients (constant digit least significant).
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        Poly f(m + 1, 0);
        long long c = code;
        for (int i = 0; i < m; ++i) {
            f[i] = int(c % p);
            c /= p;
        }
        f[m] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

Felem find_primitive(const Field& field, FieldConvention conv) {
    if (conv == FieldConvention::paper) {
        auto it = kPinnedPrimitive.find(field.q());
        if (it != kPinnedPrimitive.end()) return Felem(it->second);
    }
    for (int a = 1; a < field.q(); ++a)
        if (field.element_order(Felem(a)) == field.q() - 1) return Felem(a);
    throw std::logic_error("find_primitive: no primitive element found");
}

Field Field::of_order(int q, FieldConvention conv) {
    int p = 0, m = 0;
    if (q > kMaxOrder || !prime_power(q, p, m))
        throw std::invalid_argument("Field::of_order: q = " + std::to_string(q) +
                                    " is not a supported prime power (prime powers <= 32)");
    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = q;
    f.irreducible_ = find_irreducible(p, m, conv);
    f.build_tables();
    f.primitive_ = find_primitive(f, conv);
    if (f.element_order(f.primitive_) != q - 1)
        throw std::logic_error("Field::of_order: chosen element is not primitive");
    return f;
}

Field Field::from_parts(int p, int m, std::vector<int> irreducible, int primitive) {
    if (!is_prime(p)) throw std::invalid_argument("Field::from_parts: p must be prime");
    if (m < 1) throw std::invalid_argument("Field::from_parts: m must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("Field::from_parts: order exceeds 32");
    for (int& c : irreducible) c = ((c % p) + p) % p;
    if (int(irreducible.size()) != m + 1 || irreducible.back() != 1)
        throw std::invalid_argument("Field::from_parts: modulus must be monic of degree m");
    if (m > 1 && !poly_irreducible(irreducible, p))
        throw std::invalid_argument("Field::from_parts: modulus polynomial is reducible");
    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = int(q);
    f.irreducible_ = std::move(irreducible);
    f.build_tables();
    if (primitive < 1 || primitive >= f.q_ || f.element_order(Felem(primitive)) != f.q_ - 1)
        throw std::invalid_argument("Field::from_parts: element is not primitive");
    f.primitive_ = Felem(primitive);
    return f;
}

void Field::build_tables() {
    add_.assign(std::size_t(q_) * q_, 0);
    mul_.assign(std::size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            // Addition is digit-wise mod p on the coefficient tuples.
            int sum = 0, pw = 1, aa = a, bb = b;
            for (int i = 0; i < m_; ++i) {
                sum += ((aa % p_) + (bb % p_)) % p_ * pw;
                aa /= p_;
                bb /= p_;
                pw *= p_;
            }
            add_[idx(Felem(a), Felem(b))] = Felem(sum);

            // Multiplication is the polynomial product reduced by the modulus.
            Poly fa, fb;
            aa = a;
            bb = b;
            for (int i = 0; i < m_; ++i) {
                fa.push_back(aa % p_);
                fb.push_back(bb % p_);
                aa /= p_;
                bb /= p_;
            }
            Poly prod = poly_mod(poly_mul(trim(fa), trim(fb), p_), irreducible_, p_);
            int lab = 0;
            pw = 1;
            for (std::size_t i = 0; i < prod.size(); ++i) {
                lab += prod[i] * pw;
                pw *= p_;
            }
            mul_[idx(Felem(a), Felem(b))] = Felem(lab);
        }
    }
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (add_[idx(Felem(a), Felem(b))] == 0) neg_[a] = Felem(b);
            if (a != 0 && mul_[idx(Felem(a), Felem(b))] == 1) inv_[a] = Felem(b);
        }
    }
}

Felem Field::inv(Felem a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero is not invertible");
    return inv_[a];
}

Felem Field::pow(Felem a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Felem r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int Field::element_order(Felem a) const {
    if (a == 0) throw std::domain_error("Field::element_order: zero has no order");
    int ord = 1;
    Felem x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
        if (ord > q_) throw std::logic_error("Field::element_order: tables are inconsistent");
    }
    return ord;
}

std::vector<int> Field::coeffs(Felem a) const {
    std::vector<int> c(m_);
    int v = a;
    for (int i = 0; i < m_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

Felem Field::label_from_coeffs(const std::vector<int>& c) const {
    int lab = 0, pw = 1;
    for (int i = 0; i < m_; ++i) {
        int d = i < int(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
        lab += d * pw;
        pw *= p_;
    }
    return Felem(lab);
}

std::string Field::poly_string(const std::vector<int>& coeffs) {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        int c = coeffs[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c);
            s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

std::string Field::poly_string(Felem a) const { return poly_string(coeffs(a)); }

std::string Field::tuple_string(Felem a) const {
    std::string s;
    for (int c : coeffs(a)) s += std::to_string(c);
    return s;
}

}  // namespace ame
