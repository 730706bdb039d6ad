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

#include "ame/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "ame/fields.hpp"

namespace ame {

namespace {

using IPoly = std::vector<std::int64_t>;

// Exact division of integer polynomials (divisor monic, remainder known zero).
IPoly ipoly_div(IPoly num, const IPoly& den) {
    IPoly quot(num.size() - den.size() + 1, 0);
    for (int i = int(quot.size()) - 1; i >= 0; --i) {
        std::int64_t c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (std::int64_t c : num)
        if (c != 0) throw std::logic_error("ipoly_div: division not exact");
    return quot;
}

std::map<int, IPoly>& phi_cache() {
    static std::map<int, IPoly> cache;
    return cache;
}
std::mutex phi_mutex;

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int q) {
    if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto& cache = phi_cache();
    auto compute = [&cache](auto&& self, int n) -> IPoly {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        IPoly xn_minus_1(n + 1, 0);
        xn_minus_1[0] = -1;
        xn_minus_1[n] = 1;
        IPoly result = xn_minus_1;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) result = ipoly_div(result, self(self, d));
        cache[n] = result;
        return result;
    };
    return compute(compute, q);
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    if (o.q_ != q_) throw std::invalid_argument("CyclotomicInt: mixed root orders");
    for (int i = 0; i < q_; ++i) c_[i] += o.c_[i];
    return *this;
}

bool CyclotomicInt::is_zero() const {
    if (is_prime(q_)) {
        for (int i = 1; i < q_; ++i)
            if (c_[i] != c_[0]) return false;
        return true;
    }
    // Reduce the coefficient polynomial modulo the monic Phi_q.
    IPoly rem = c_;
    IPoly phi = cyclotomic_polynomial(q_);
    for (int i = int(rem.size()) - 1; i >= int(phi.size()) - 1; --i) {
        std::int64_t c = rem[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < phi.size(); ++j) rem[i - phi.size() + 1 + j] -= c * phi[j];
    }
    for (std::int64_t c : rem)
        if (c != 0) return false;
    return true;
}

bool CyclotomicInt::equals_integer(std::int64_t v) const {
    CyclotomicInt d = *this;
    d.c_[0] -= v;
    return d.is_zero();
}

std::complex<double> CyclotomicInt::to_complex() const {
    std::complex<double> z = 0;
    for (int k = 0; k < q_; ++k) {
        double ang = 2.0 * std::numbers::pi * k / q_;
        z += double(c_[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

}  // namespace ame
