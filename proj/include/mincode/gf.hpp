/**************************************************************************
 * gf.hpp
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

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace mincode {

/// Field elements are plain integer encodings in 0..q-1. An element with
/// polynomial-basis coordinates (c_0, ..., c_{m-1}) over F_p is encoded as
/// sum c_i p^i, so 0 and 1 are the additive and multiplicative identities.
using Element = std::uint8_t;

inline constexpr unsigned kMaxFieldOrder = 256;

/// The finite field F_q, q = p^m <= 256.
///
/// The modulus is the lexicographically least monic irreducible polynomial
/// of degree m, comparing coefficient lists from the constant term upward.
/// Its irreducibility is verified by trial division at construction.
/// Immutable once built; safe to share across threads.
class Field {
public:
    /// Throws NotPrimePower or CapExceeded.
    explicit Field(unsigned q);

    unsigned order() const noexcept { return q_; }
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }

    /// Coefficients c_0..c_m of the monic modulus (c_m == 1). For m == 1 this is x.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    /// Empty when m == 1.
    const std::vector<Element>& exp_table() const noexcept { return exp_; }
    const std::vector<unsigned>& log_table() const noexcept { return log_; }

    Element add(Element a, Element b) const { return add_[index(a, b)]; }
    Element sub(Element a, Element b) const { return add(a, neg_[b]); }
    Element neg(Element a) const { return neg_[a]; }
    Element mul(Element a, Element b) const;
    /// Throws DivisionByZero on 0.
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;

    bool contains(unsigned value) const noexcept { return value < q_; }
    /// Throws InvalidElement for values outside 0..q-1.
    Element element(long long value) const;

private:
    std::size_t index(Element a, Element b) const noexcept {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    unsigned q_;
    unsigned p_;
    unsigned m_;
    std::vector<unsigned> modulus_;
    std::vector<Element> exp_;
    std::vector<unsigned> log_;
    std::vector<Element> add_;
    std::vector<Element> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Fields are cached per order, so repeated lookups share tables.
FieldPtr field_new(unsigned q);

/// Returns (p, m) with q = p^m, or throws NotPrimePower / CapExceeded.
std::pair<unsigned, unsigned> prime_power_decompose(unsigned q);

/// Trial division of a monic polynomial over F_p by every monic polynomial
/// of degree 1..deg/2. Coefficients are constant-term first.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

} // namespace mincode
