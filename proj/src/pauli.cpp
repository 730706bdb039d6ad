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

#include "ame/pauli.hpp"

#include <cctype>
#include <stdexcept>

namespace ame {

PauliString::PauliString(int n_, int q_) : n(n_), q(q_), phase(0), x(n_, 0), z(n_, 0) {
    if (!is_prime(q_))
        throw std::invalid_argument("PauliString: local dimension must be prime, got q = " +
                                    std::to_string(q_));
    if (n_ < 1) throw std::invalid_argument("PauliString: need n >= 1");
}

int PauliString::weight() const {
    int w = 0;
    for (int i = 0; i < n; ++i) w += (x[i] != 0 || z[i] != 0);
    return w;
}

bool PauliString::is_identity() const { return phase == 0 && is_identity_up_to_phase(); }

bool PauliString::is_identity_up_to_phase() const {
    for (int i = 0; i < n; ++i)
        if (x[i] != 0 || z[i] != 0) return false;
    return true;
}

namespace {
void check_compatible(const PauliString& a, const PauliString& b, const char* op) {
    if (a.n != b.n || a.q != b.q)
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}
}  // namespace

PauliString multiply(const PauliString& a, const PauliString& b) {
    check_compatible(a, b, "multiply");
    PauliString c(a.n, a.q);
    long long ph = a.phase + b.phase;
    for (int i = 0; i < a.n; ++i) {
        ph += (long long)(a.z[i]) * b.x[i];
        c.x[i] = (a.x[i] + b.x[i]) % a.q;
        c.z[i] = (a.z[i] + b.z[i]) % a.q;
    }
    c.phase = int(ph % a.q);
    return c;
}

PauliString dagger(const PauliString& a) {
    PauliString c(a.n, a.q);
    long long ph = -a.phase;
    for (int i = 0; i < a.n; ++i) {
        ph += (long long)(a.z[i]) * a.x[i];
        c.x[i] = (a.q - a.x[i]) % a.q;
        c.z[i] = (a.q - a.z[i]) % a.q;
    }
    c.phase = int(((ph % a.q) + a.q) % a.q);
    return c;
}

PauliString power(const PauliString& a, long long m) {
    PauliString base = m < 0 ? dagger(a) : a;
    long long reps = m < 0 ? -m : m;
    PauliString acc = PauliString::identity(a.n, a.q);
    for (long long i = 0; i < reps; ++i) acc = multiply(acc, base);
    return acc;
}

int symplectic(const PauliString& a, const PauliString& b) {
    check_compatible(a, b, "symplectic");
    long long s = 0;
    for (int i = 0; i < a.n; ++i)
        s += (long long)(a.z[i]) * b.x[i] - (long long)(a.x[i]) * b.z[i];
    return int(((s % a.q) + a.q) % a.q);
}

SparseState apply(const PauliString& a, const SparseState& s) {
    if (a.n != s.n || a.q != s.q) throw std::invalid_argument("apply: dimension mismatch");
    SparseState out;
    out.n = s.n;
    out.q = s.q;
    out.terms.reserve(s.terms.size());
    for (const auto& [w, ph] : s.terms) {
        long long phase = ph + a.phase;
        Word shifted = 0;
        for (int i = 0; i < s.n; ++i) {
            int d = word_digit(w, i);
            phase += (long long)(a.z[i]) * d;
            shifted |= Word((d + a.x[i]) % s.q) << (5 * i);
        }
        out.terms.emplace_back(shifted, std::uint8_t(phase % s.q));
    }
    out.canonicalize();
    return out;
}

namespace {

std::size_t parse_exponent(const std::string& t, std::size_t pos, int q, int& out) {
    if (pos >= t.size() || !std::isdigit((unsigned char)(t[pos]))) {
        out = 1;
        return pos;
    }
    int v = 0;
    while (pos < t.size() && std::isdigit((unsigned char)(t[pos]))) {
        v = v * 10 + (t[pos] - '0');
        if (v > 1000) throw std::invalid_argument("parse_pauli: exponent too large");
        ++pos;
    }
    out = v % q;
    return pos;
}

}  // namespace

PauliString parse_pauli(const std::string& text, int n, int q) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == '.') {
            tokens.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)ch)) {
            cur += ch;
        }
    }
    tokens.push_back(cur);

    PauliString p(n, q);
    std::size_t site_begin = 0;
    if (!tokens.empty() && !tokens[0].empty() && (tokens[0][0] == 'w' || tokens[0][0] == 'W')) {
        std::size_t pos = 1;
        if (pos < tokens[0].size() && tokens[0][pos] == '^') ++pos;
        int e = 0;
        std::size_t end = parse_exponent(tokens[0], pos, q, e);
        if (end != tokens[0].size() || pos == tokens[0].size())
            throw std::invalid_argument("parse_pauli: bad phase token '" + tokens[0] + "'");
        p.phase = e;
        site_begin = 1;
    }
    if (tokens.size() - site_begin != std::size_t(n))
        throw std::invalid_argument("parse_pauli: expected " + std::to_string(n) +
                                    " site factors, got " +
                                    std::to_string(tokens.size() - site_begin));

    for (int i = 0; i < n; ++i) {
        const std::string& t = tokens[site_begin + i];
        if (t.empty()) throw std::invalid_argument("parse_pauli: empty site factor");
        if (t == "I" || t == "1") continue;
        std::size_t pos = 0;
        while (pos < t.size()) {
            char op = t[pos];
            if (op != 'X' && op != 'Z')
                throw std::invalid_argument("parse_pauli: unexpected character '" +
                                            std::string(1, op) + "' in '" + t + "'");
            ++pos;
            int e = 0;
            pos = parse_exponent(t, pos, q, e);
            if (op == 'X')
                p.x[i] = (p.x[i] + e) % q;
            else
                p.z[i] = (p.z[i] + e) % q;
        }
    }
    return p;
}

std::string format_pauli(const PauliString& p) {
    std::string s;
    if (p.phase != 0) s = "w^" + std::to_string(p.phase) + ".";
    for (int i = 0; i < p.n; ++i) {
        if (i) s += ".";
        if (p.x[i] == 0 && p.z[i] == 0) {
            s += "I";
            continue;
        }
        if (p.x[i] != 0) {
            s += "X";
            if (p.x[i] != 1) s += std::to_string(p.x[i]);
        }
        if (p.z[i] != 0) {
            s += "Z";
            if (p.z[i] != 1) s += std::to_string(p.z[i]);
        }
    }
    return s;
}

}  // namespace ame
