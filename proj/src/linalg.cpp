/**************************************************************************
 * linalg.cpp
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

#include "mincode/linalg.hpp"

#include "mincode/error.hpp"

#include <utility>

namespace mincode {

void Matrix::append_row(const std::vector<Element>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length differs from matrix width");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

Echelon row_reduce(const Field& field, Matrix m) {
    Echelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));

        const Element scale = field.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), scale);

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Element factor = field.neg(m(r, col));
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = field.add(m(r, c), field.mul(factor, m(row, c)));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Field& field, const Matrix& m) {
    return row_reduce(field, m).rank();
}

std::vector<std::vector<Element>> nullspace(const Field& field, const Matrix& m) {
    const Echelon e = row_reduce(field, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<Element>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Element> x(m.cols(), 0);
        x[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = field.neg(e.reduced(r, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace mincode
