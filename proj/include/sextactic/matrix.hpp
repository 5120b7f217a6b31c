/*
   Copyright 2026 The sextactic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <initializer_list>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sextactic/errors.hpp"
#include "sextactic/poly.hpp"

namespace sextactic {

/// Dense rectangular matrix of polynomials over one variable set.
class PolyMatrix {
   public:
    PolyMatrix(std::size_t rows, std::size_t cols, const VarSet& vars)
        : rows_(rows), cols_(cols), vars_(vars), entries_(rows * cols, MPoly(vars)) {
        if (rows == 0 || cols == 0) throw Error(errors::invalid_argument, "matrix dimensions must be positive");
    }

    PolyMatrix(std::initializer_list<std::initializer_list<MPoly>> rows) {
        if (rows.size() == 0 || rows.begin()->size() == 0)
            throw Error(errors::invalid_argument, "matrix dimensions must be positive");
        rows_ = rows.size();
        cols_ = rows.begin()->size();
        vars_ = rows.begin()->begin()->vars();
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(errors::invalid_argument, "ragged matrix rows");
            for (const auto& e : r) {
                if (e.vars() != vars_) throw Error(errors::variable_mismatch, "matrix entries use different variables");
                entries_.push_back(e);
            }
        }
    }

    static PolyMatrix identity(std::size_t n, const VarSet& vars) {
        PolyMatrix m(n, n, vars);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = MPoly::constant(vars, Rat(1));
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const VarSet& vars() const noexcept { return vars_; }

    MPoly& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const MPoly& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw Error(errors::invalid_argument, "matrix product: inner dimensions differ");
        PolyMatrix r(a.rows_, b.cols_, a.vars_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                for (std::size_t k = 0; k < a.cols_; ++k) r(i, j) += a(i, k) * b(k, j);
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

   private:
    std::size_t rows_ = 0, cols_ = 0;
    VarSet vars_;
    std::vector<MPoly> entries_;
};

inline void require_square(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(errors::non_square, "determinant of a " + std::to_string(m.rows()) + "x" +
                                            std::to_string(m.cols()) + " matrix");
}

/// Laplace expansion along successive rows, memoizing minors by the set of
/// columns still in play. Division free.
inline MPoly det_cofactor(const PolyMatrix& m) {
    require_square(m);
    const std::size_t n = m.rows();
    if (n > 20) throw Error(errors::invalid_argument, "cofactor expansion limited to 20x20");
    // minor(mask) = determinant of rows [n - popcount(mask), n) x columns in mask
    std::unordered_map<std::uint32_t, MPoly> memo;
    auto minor = [&](auto& self, std::uint32_t mask) -> MPoly {
        if (mask == 0) return MPoly::constant(m.vars(), Rat(1));
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
        MPoly acc(m.vars());
        int pos = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!m(row, c).is_zero()) {
                MPoly term = m(row, c) * self(self, mask & ~(1u << c));
                if (pos % 2)
                    acc -= term;
                else
                    acc += term;
            }
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return minor(minor, (n == 32 ? 0u : (1u << n)) - 1u);
}

/// Fraction-free Bareiss elimination with exact polynomial division and row
/// pivoting.
inline MPoly det_bareiss(const PolyMatrix& input) {
    require_square(input);
    const std::size_t n = input.rows();
    PolyMatrix a = input;
    MPoly prev = MPoly::constant(a.vars(), Rat(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return MPoly(a.vars());
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = divide_exact(num, prev);
            }
            a(i, k) = MPoly(a.vars());
        }
        prev = a(k, k);
    }
    MPoly d = a(n - 1, n - 1);
    return negate ? -d : d;
}

enum class DetStrategy { automatic, bareiss, cofactor };

/// Matrices up to 3x3 are expanded directly (no division); larger ones use
/// Bareiss.
inline MPoly det(const PolyMatrix& m, DetStrategy strategy = DetStrategy::automatic) {
    switch (strategy) {
        case DetStrategy::bareiss:
            return det_bareiss(m);
        case DetStrategy::cofactor:
            return det_cofactor(m);
        case DetStrategy::automatic:
            break;
    }
    require_square(m);
    return m.rows() <= 3 ? det_cofactor(m) : det_bareiss(m);
}

/// Computes both determinants and throws InternalError when they disagree.
inline MPoly det_checked(const PolyMatrix& m) {
    MPoly a = det_bareiss(m);
    MPoly b = det_cofactor(m);
    if (!(a == b)) throw Error(errors::internal, "Bareiss and cofactor determinants disagree");
    return a;
}

}  // namespace sextactic
