/**************************************************************************
 * codes.hpp
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

#include "mincode/linalg.hpp"
#include "mincode/sets.hpp"
#include "mincode/support_mask.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace mincode {

/// A message (u, v) of C_f; its codeword is c(u, v) = (u f(x) + v . x) over x != 0.
struct Message {
    Element u = 0;
    Point v;

    friend bool operator==(const Message&, const Message&) = default;
};

struct Codeword {
    std::vector<Element> entries;
    SupportMask support;

    std::size_t weight() const noexcept { return support.count(); }
};

/// The code C_f for f the indicator of a point set S not containing the
/// origin. Coordinates are the nonzero points of F_q^n in canonical index
/// order: coordinate j is the point with index j + 1.
class CodeCf {
public:
    /// Throws OriginPresent. S may be empty (f == 0).
    explicit CodeCf(PointSet support_set);

    const Space& space() const noexcept { return set_.space(); }
    const Field& field() const noexcept { return set_.space().field(); }
    unsigned q() const noexcept { return set_.q(); }
    unsigned n() const noexcept { return set_.n(); }
    const PointSet& support_set() const noexcept { return set_; }

    /// q^n - 1.
    std::size_t length() const noexcept { return coords_.size(); }
    const std::vector<Point>& coordinates() const noexcept { return coords_; }
    /// f at each coordinate, 0 or 1.
    const std::vector<Element>& f_table() const noexcept { return f_; }

    /// Throws DimensionMismatch or InvalidElement.
    Codeword codeword(Element u, const Point& v) const;
    Codeword codeword(const Message& m) const { return codeword(m.u, m.v); }
    SupportMask support(Element u, const Point& v) const;

    /// Rows c(1, 0), c(0, e_1), ..., c(0, e_n).
    Matrix generator_matrix() const;
    /// Rank of the generator matrix; n + 1 under the usual hypotheses.
    std::size_t dimension() const { return dimension_; }

    /// Generator rows (0 = u, i = e_i) forming a basis, chosen greedily.
    const std::vector<std::size_t>& basis_rows() const noexcept { return basis_rows_; }

private:
    PointSet set_;
    std::vector<Point> coords_;
    std::vector<Element> f_;
    std::vector<std::size_t> basis_rows_;
    std::size_t dimension_ = 0;
};

/// True iff f(x) = w . x for some w, over all of F_q^n.
bool is_linear(const PointSet& set);
inline bool is_linear(const CodeCf& code) { return is_linear(code.support_set()); }

struct WeightProfile {
    std::size_t w_min = 0;  // over nonzero codewords; 0 for the zero code
    std::size_t w_max = 0;
    /// weight -> number of (u, v) pairs, q^{n+1} in total including zero.
    std::map<std::size_t, std::uint64_t> distribution;
    /// False when dimension < n + 1, i.e. (u, v) -> c(u, v) is not injective
    /// and distribution counts some codewords more than once.
    bool injective = true;
};

WeightProfile weight_profile(const CodeCf& code, unsigned workers = 1);

struct AbReport {
    bool holds = false;
    std::size_t w_min = 0;
    std::size_t w_max = 0;
    std::uint64_t lhs = 0;  // w_max (q - 1)
    std::uint64_t rhs = 0;  // w_min q
};

/// w_max / w_min < q / (q - 1) in cross-multiplied integers. Throws ZeroCode.
AbReport ab_condition(const WeightProfile& profile, unsigned q);
AbReport ab_condition_holds(const CodeCf& code, unsigned workers = 1);

struct MinimalityWitness {
    Message container;  // supp c(contained) is inside supp c(container)
    Message contained;
};

struct MinimalityReport {
    bool is_minimal = true;
    std::optional<MinimalityWitness> witness;
    std::uint64_t class_count = 0;
};

/// Compares the supports of one representative per scalar class, pairwise.
/// The witness is the least (container, contained) pair in class order,
/// independent of the worker count.
MinimalityReport is_minimal(const CodeCf& code, unsigned workers = 1);

/// Representatives of the scalar classes of nonzero codewords, in the order
/// is_minimal uses: normalized message vectors over basis_rows() whose first
/// nonzero entry is 1, by increasing canonical index.
std::vector<Message> class_representatives(const CodeCf& code);

/// Standard Walsh-Hadamard transform of the indicator of S over F_2^n:
/// W(x) = sum_v (-1)^{f(v) + v . x}, indexed by point index. Throws NotBinary.
std::vector<long long> walsh_transform(const PointSet& set);
inline std::vector<long long> walsh_transform(const CodeCf& code) { return walsh_transform(code.support_set()); }

/// Minimality of binary C_f from the spectrum: no distinct x, y with
/// W(x) + W(y) = 2^n or W(x) - W(y) = 2^n. Throws NotBinary, or
/// HypothesisViolated when f is linear or S is empty.
bool ding_minimality(const PointSet& set);
inline bool ding_minimality(const CodeCf& code) { return ding_minimality(code.support_set()); }

/// The pair test alone, for a precomputed spectrum of length 2^n.
bool ding_pair_test(const std::vector<long long>& spectrum, unsigned n);

/// |W(x)| == 2^{n/2} everywhere. Throws NotBinary, OddDimension.
bool is_bent(const PointSet& set);

struct DingAbInequality {
    std::uint64_t lhs = 0;          // 1 + 2 sum_{i=1..k} C(n, i)
    std::uint64_t rhs = 0;          // 2^{n-1} + C(n-1, k)
    std::uint64_t strict_rhs = 0;   // 2^{n-1}
    bool holds = false;             // lhs <= rhs: AB condition fails
    bool strict_holds = false;      // lhs <= strict_rhs: |S| < 2^{n-2}
};

/// Hamming-ball parameters: n >= 7, 2 <= k <= floor((n-3)/2), n <= 62.
DingAbInequality ding_ab_inequality(unsigned n, unsigned k);

std::uint64_t binomial(unsigned n, unsigned k);

} // namespace mincode
