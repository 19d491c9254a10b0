/**************************************************************************
 * linalg.hpp
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

#include "mincode/gf.hpp"

#include <cstddef>
#include <vector>

namespace mincode {

/// Dense row-major matrix over F_q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<Element>& row);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

struct Echelon {
    Matrix reduced;                    // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination over F_q.
Echelon row_reduce(const Field& field, Matrix m);

std::size_t rank(const Field& field, const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Element>> nullspace(const Field& field, const Matrix& m);

} // namespace mincode
