/**************************************************************************
 * codes.cpp
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

#include "mincode/codes.hpp"

#include "mincode/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace mincode {

CodeCf::CodeCf(PointSet support_set) : set_(std::move(support_set)) {
    if (set_.contains(PointIndex{0})) throw Error(ErrorCode::OriginPresent, "C_f needs S without the origin");
    coords_ = enumerate_points(space(), false);
    f_.assign(coords_.size(), 0);
    for (PointIndex i : set_.indices()) f_[i - 1] = 1;

    // Greedy basis selection: keep a row when it raises the rank.
    const Matrix g = generator_matrix();
    Matrix kept(0, g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::vector<Element> row(g.cols());
        for (std::size_t c = 0; c < g.cols(); ++c) row[c] = g(r, c);
        Matrix trial = kept;
        trial.append_row(row);
        if (rank(field(), trial) == kept.rows() + 1) {
            kept = std::move(trial);
            basis_rows_.push_back(r);
        }
    }
    dimension_ = basis_rows_.size();
}

Codeword CodeCf::codeword(Element u, const Point& v) const {
    space().validate(v);
    if (!field().contains(u)) throw Error(ErrorCode::InvalidElement, "u is not a field element");
    const Field& F = field();
    Codeword w{std::vector<Element>(length()), SupportMask(length())};
    for (std::size_t j = 0; j < length(); ++j) {
        const Element value = F.add(F.mul(u, f_[j]), dot(F, v, coords_[j]));
        w.entries[j] = value;
        if (value != 0) w.support.set(j);
    }
    return w;
}

SupportMask CodeCf::support(Element u, const Point& v) const {
    const Field& F = field();
    SupportMask mask(length());
    for (std::size_t j = 0; j < length(); ++j)
        if (F.add(F.mul(u, f_[j]), dot(F, v, coords_[j])) != 0) mask.set(j);
    return mask;
}

Matrix CodeCf::generator_matrix() const {
    Matrix g(n() + 1, length());
    for (std::size_t j = 0; j < length(); ++j) {
        g(0, j) = f_[j];
        for (unsigned i = 0; i < n(); ++i) g(i + 1, j) = coords_[j].coords[i];
    }
    return g;
}

bool is_linear(const PointSet& set) {
    // A linear f is pinned down by its values on the basis: w_i = f(e_i).
    const Space& space = set.space();
    Point w;
    w.coords.resize(space.n());
    for (unsigned i = 0; i < space.n(); ++i) w.coords[i] = set.contains(space.basis_vector(i)) ? 1 : 0;
    for (std::uint64_t idx = 0; idx < space.point_count(); ++idx) {
        const Point x = space.point(static_cast<PointIndex>(idx));
        const Element fx = set.contains(static_cast<PointIndex>(idx)) ? 1 : 0;
        if (space.dot(w, x) != fx) return false;
    }
    return true;
}

namespace {

Message message_from_index(const Space& space, std::uint64_t t) {
    Message m;
    m.u = static_cast<Element>(t % space.q());
    m.v = space.point(static_cast<PointIndex>(t / space.q()));
    return m;
}

} // namespace

WeightProfile weight_profile(const CodeCf& code, unsigned workers) {
    const Space& space = code.space();
    const std::uint64_t total = space.point_count() * space.q();
    constexpr std::uint64_t kChunk = 256;
    const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
    std::vector<std::map<std::size_t, std::uint64_t>> partial(chunks);

    detail::parallel_for(chunks, workers, [&](std::size_t c) {
        const std::uint64_t end = std::min(total, (c + 1) * kChunk);
        for (std::uint64_t t = c * kChunk; t < end; ++t) {
            const Message m = message_from_index(space, t);
            ++partial[c][code.support(m.u, m.v).count()];
        }
    });

    WeightProfile profile;
    for (const auto& part : partial)
        for (auto [weight, count] : part) profile.distribution[weight] += count;
    profile.injective = code.dimension() == space.n() + 1;
    for (auto [weight, count] : profile.distribution) {
        if (weight == 0) continue;
        if (profile.w_min == 0) profile.w_min = weight;
        profile.w_max = weight;
    }
    return profile;
}

AbReport ab_condition(const WeightProfile& profile, unsigned q) {
    if (profile.w_max == 0) throw Error(ErrorCode::ZeroCode, "the code has no nonzero codeword");
    AbReport r;
    r.w_min = profile.w_min;
    r.w_max = profile.w_max;
    r.lhs = static_cast<std::uint64_t>(profile.w_max) * (q - 1);
    r.rhs = static_cast<std::uint64_t>(profile.w_min) * q;
    r.holds = r.lhs < r.rhs;
    return r;
}

AbReport ab_condition_holds(const CodeCf& code, unsigned workers) {
    return ab_condition(weight_profile(code, workers), code.q());
}

std::vector<Message> class_representatives(const CodeCf& code) {
    const Space& space = code.space();
    const auto& rows = code.basis_rows();
    const std::size_t k = rows.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= space.q();

    std::vector<Message> out;
    out.reserve(static_cast<std::size_t>((count - 1) / (space.q() - 1)));
    for (std::uint64_t t = 1; t < count; ++t) {
        std::uint64_t rest = t;
        std::vector<Element> digits(k);
        for (std::size_t i = 0; i < k; ++i) {
            digits[i] = static_cast<Element>(rest % space.q());
            rest /= space.q();
        }
        auto lead = std::find_if(digits.begin(), digits.end(), [](Element c) { return c != 0; });
        if (*lead != 1) continue;
        Message m;
        m.v.coords.assign(space.n(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (rows[i] == 0) m.u = digits[i];
            else m.v.coords[rows[i] - 1] = digits[i];
        }
        out.push_back(std::move(m));
    }
    return out;
}

MinimalityReport is_minimal(const CodeCf& code, unsigned workers) {
    const std::vector<Message> classes = class_representatives(code);
    std::vector<SupportMask> supports(classes.size());
    detail::parallel_for(classes.size(), workers,
                         [&](std::size_t i) { supports[i] = code.support(classes[i].u, classes[i].v); });

    // For each container class, the least contained class (if any).
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> contained(classes.size(), kNone);
    std::atomic<std::size_t> best{kNone};
    detail::parallel_for(classes.size(), workers, [&](std::size_t i) {
        if (i > best.load(std::memory_order_relaxed)) return;
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (j != i && supports[j].is_subset_of(supports[i])) {
                contained[i] = j;
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {}
                return;
            }
        }
    });

    MinimalityReport report;
    report.class_count = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (contained[i] == kNone) continue;
        report.is_minimal = false;
        report.witness = MinimalityWitness{classes[i], classes[contained[i]]};
        break;
    }
    return report;
}

std::vector<long long> walsh_transform(const PointSet& set) {
    if (set.q() != 2) throw Error(ErrorCode::NotBinary, "the Walsh-Hadamard transform needs q = 2");
    const std::size_t size = static_cast<std::size_t>(set.space().point_count());
    std::vector<long long> w(size, 1);
    for (PointIndex i : set.indices()) w[i] = -1;
    for (std::size_t len = 1; len < size; len <<= 1)
        for (std::size_t base = 0; base < size; base += len << 1)
            for (std::size_t j = base; j < base + len; ++j) {
                const long long a = w[j];
                const long long b = w[j + len];
                w[j] = a + b;
                w[j + len] = a - b;
            }
    return w;
}

bool ding_pair_test(const std::vector<long long>& spectrum, unsigned n) {
    const long long full = 1LL << n;
    std::vector<long long> sorted = spectrum;
    std::sort(sorted.begin(), sorted.end());
    auto occurrences = [&](long long value) {
        auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), value);
        return static_cast<std::size_t>(hi - lo);
    };
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i] == sorted[i - 1]) continue;
        const long long w = sorted[i];
        // x != y with W(x) + W(y) = 2^n.
        const long long partner = full - w;
        const std::size_t need = partner == w ? 2 : 1;
        if (occurrences(partner) >= need) return false;
        // W(x) - W(y) = 2^n: the values differ, so x != y automatically.
        if (occurrences(w - full) >= 1) return false;
    }
    return true;
}

bool ding_minimality(const PointSet& set) {
    if (set.q() != 2) throw Error(ErrorCode::NotBinary, "the Walsh criterion needs q = 2");
    if (set.empty() || (set.size() == 1 && set.contains(PointIndex{0})))
        throw Error(ErrorCode::HypothesisViolated, "f vanishes on every nonzero point");
    if (is_linear(set)) throw Error(ErrorCode::HypothesisViolated, "f is linear");
    return ding_pair_test(walsh_transform(set), set.n());
}

bool is_bent(const PointSet& set) {
    if (set.q() != 2) throw Error(ErrorCode::NotBinary, "bentness needs q = 2");
    if (set.n() % 2 != 0) throw Error(ErrorCode::OddDimension, "bent functions need even n");
    const long long target = 1LL << (set.n() / 2);
    const auto w = walsh_transform(set);
    return std::all_of(w.begin(), w.end(), [&](long long v) { return std::llabs(v) == target; });
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

DingAbInequality ding_ab_inequality(unsigned n, unsigned k) {
    if (n < 7 || n > 62) throw Error(ErrorCode::ParameterOutOfRange, "n must satisfy 7 <= n <= 62");
    if (k < 2 || k > (n - 3) / 2)
        throw Error(ErrorCode::ParameterOutOfRange, "k must satisfy 2 <= k <= floor((n-3)/2)");
    std::uint64_t ball = 0;
    for (unsigned i = 1; i <= k; ++i) ball += binomial(n, i);
    DingAbInequality r;
    r.lhs = 1 + 2 * ball;
    r.strict_rhs = std::uint64_t{1} << (n - 1);
    r.rhs = r.strict_rhs + binomial(n - 1, k);
    r.holds = r.lhs <= r.rhs;
    r.strict_holds = r.lhs <= r.strict_rhs;
    return r;
}

} // namespace mincode
