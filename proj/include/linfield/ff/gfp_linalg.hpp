/*
 * Copyright 2026 The linfield Authors
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
 */

// Dense linear algebra over a prime field GF(p). Used to view extension
// fields as GF(p)-vector spaces (kernels of linear maps, coordinate solves).

#pragma once

#include <optional>
#include <vector>

#include "arith.hpp"

namespace linfield::gfp {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    u32& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    u32 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void set_column(std::size_t c, const std::vector<u32>& v) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, c) = r < v.size() ? v[r] : 0;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<u32> a_;
};

inline u32 inv_mod(u32 a, u32 p) { return static_cast<u32>(arith::powmod(a, p - 2, p)); }

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(Matrix& m, u32 p) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        }
        u32 inv = inv_mod(m.at(row, col), p);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = static_cast<u32>(u64{m.at(row, c)} * inv % p);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            u32 f = m.at(r, col);
            if (f == 0) continue;
            u32 nf = p - f;
            for (std::size_t c = col; c < m.cols(); ++c) {
                u32 v = m.at(row, c);
                if (v) m.at(r, c) = static_cast<u32>((m.at(r, c) + u64{nf} * v) % p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Matrix m, u32 p) { return rref(m, p).size(); }

/// Basis of { v : m v = 0 }, one vector per free column, in increasing free-column order.
inline std::vector<std::vector<u32>> kernel(Matrix m, u32 p) {
    auto pivots = rref(m, p);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<u32>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<u32> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            u32 x = m.at(r, free);
            v[pivots[r]] = x ? p - x : 0;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of m v = b (free variables set to zero), or nullopt when inconsistent.
inline std::optional<std::vector<u32>> solve(const Matrix& m, const std::vector<u32>& b, u32 p) {
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = r < b.size() ? b[r] : 0;
    }
    auto pivots = rref(aug, p);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<u32> v(m.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = aug.at(r, m.cols());
    return v;
}

}  // namespace linfield::gfp
