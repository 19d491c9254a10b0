/**************************************************************************
 * gf.cpp
 *
 * Copyright 2026 The mincode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "mincode/gf.hpp"

#include "mincode/error.hpp"

#include <array>
#include <mutex>
#include <string>

namespace mincode {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod_p(unsigned a, unsigned p) {
    for (unsigned x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    return 0;
}

// Remainder of a modulo b over F_p; b nonzero.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const unsigned lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const unsigned factor = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + (p - factor) * b[i]) % p;
        trim(a);
    }
    return a;
}

Poly digits(unsigned value, unsigned p, unsigned m) {
    Poly out(m);
    for (unsigned i = 0; i < m; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

unsigned encode(const Poly& coeffs, unsigned p) {
    unsigned value = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) value = value * p + coeffs[i];
    return value;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    Poly out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

} // namespace

std::pair<unsigned, unsigned> prime_power_decompose(unsigned q) {
    if (q > kMaxFieldOrder)
        throw Error(ErrorCode::CapExceeded, "field order " + std::to_string(q) + " exceeds 256");
    if (q < 2) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    unsigned rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    return {p, m};
}

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // Every monic divisor candidate of degree d: d free coefficients.
        std::size_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::size_t idx = 0; idx < count; ++idx) {
            Poly g = digits(static_cast<unsigned>(idx), p, static_cast<unsigned>(d));
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field::Field(unsigned q) : q_(q) {
    std::tie(p_, m_) = prime_power_decompose(q);

    if (m_ == 1) {
        modulus_ = {0, 1};
    } else {
        // Enumerate (c_0, ..., c_{m-1}) with c_0 the most significant digit,
        // which is lexicographic order from the constant term upward.
        unsigned count = q_;
        for (unsigned idx = 0; idx < count; ++idx) {
            Poly cand(m_ + 1, 0);
            unsigned rest = idx;
            for (unsigned i = m_; i-- > 0;) {
                cand[i] = rest % p_;
                rest /= p_;
            }
            cand[m_] = 1;
            if (is_irreducible(cand, p_)) {
                modulus_ = cand;
                break;
            }
        }
    }

    add_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
        const Poly da = digits(a, p_, m_);
        Poly dn(m_);
        for (unsigned i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Element>(encode(dn, p_));
        for (unsigned b = 0; b < q_; ++b) {
            const Poly db = digits(b, p_, m_);
            Poly s(m_);
            for (unsigned i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[index(static_cast<Element>(a), static_cast<Element>(b))] = static_cast<Element>(encode(s, p_));
        }
    }

    if (m_ == 1) return;

    auto poly_product = [&](unsigned a, unsigned b) {
        Poly r = poly_mod(poly_mul(digits(a, p_, m_), digits(b, p_, m_), p_), modulus_, p_);
        r.resize(m_, 0);
        return encode(r, p_);
    };

    // Smallest encoding of multiplicative order q-1 generates the tables.
    for (unsigned g = 2; g < q_; ++g) {
        std::vector<Element> powers;
        powers.reserve(q_ - 1);
        unsigned x = 1;
        do {
            powers.push_back(static_cast<Element>(x));
            x = poly_product(x, g);
        } while (x != 1 && powers.size() < q_);
        if (powers.size() == q_ - 1) {
            exp_ = std::move(powers);
            break;
        }
    }
    log_.assign(q_, 0);
    for (unsigned i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
}

Element Field::mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<Element>((static_cast<unsigned>(a) * b) % p_);
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

Element Field::inv(Element a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (m_ == 1) {
        return static_cast<Element>(inv_mod_p(a, p_));
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Element Field::pow(Element a, std::uint64_t e) const {
    Element result = 1;
    Element base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Element Field::element(long long value) const {
    if (value < 0 || value >= static_cast<long long>(q_))
        throw Error(ErrorCode::InvalidElement,
                    std::to_string(value) + " is not an element of F_" + std::to_string(q_));
    return static_cast<Element>(value);
}

FieldPtr field_new(unsigned q) {
    static std::mutex mutex;
    static std::array<FieldPtr, kMaxFieldOrder + 1> cache;
    // Validate outside the lock so errors do not poison the cache.
    prime_power_decompose(q);
    std::lock_guard lock(mutex);
    if (!cache[q]) cache[q] = std::make_shared<const Field>(q);
    return cache[q];
}

} // namespace mincode
