/*
   Copyright 2026 The fourcirc Authors

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

#ifndef FOURCIRC_MATRIX_HPP
#define FOURCIRC_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "galois.hpp"
#include "polyring.hpp"

namespace fourcirc {

/// Dense row-major matrix over a finite field. Only what the generator and
/// Gram-matrix checks need.
class Matrix {
   public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), d_(rows * cols) {}

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem{1};
        return m;
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElem& operator()(std::size_t r, std::size_t c) noexcept { return d_[r * cols_ + c]; }
    FieldElem operator()(std::size_t r, std::size_t c) const noexcept { return d_[r * cols_ + c]; }
    std::span<const FieldElem> row(std::size_t r) const noexcept { return {d_.data() + r * cols_, cols_}; }
    std::span<const FieldElem> data() const noexcept { return d_; }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
        for (std::size_t r = 0; r < block.rows_; ++r)
            for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const noexcept {
        return std::all_of(d_.begin(), d_.end(), [](FieldElem x) { return x.value == 0; });
    }

    friend Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
        lhs.check_shape(rhs.rows_, rhs.cols_);
        Matrix out(lhs.field_, lhs.rows_, lhs.cols_);
        for (std::size_t i = 0; i < lhs.d_.size(); ++i) out.d_[i] = lhs.field_->add(lhs.d_[i], rhs.d_[i]);
        return out;
    }

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
        if (lhs.cols_ != rhs.rows_) throw ValidationError("matrix shapes do not compose");
        const auto& F = *lhs.field_;
        Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
        for (std::size_t i = 0; i < lhs.rows_; ++i)
            for (std::size_t l = 0; l < lhs.cols_; ++l) {
                const FieldElem x = lhs(i, l);
                if (x.value == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = F.add(out(i, j), F.mul(x, rhs(l, j)));
            }
        return out;
    }

    friend bool operator==(const Matrix& lhs, const Matrix& rhs) noexcept {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.d_ == rhs.d_;
    }

    /// Reduced row echelon form together with the rank.
    std::pair<Matrix, std::size_t> rref() const {
        Matrix m = *this;
        const auto& F = *field_;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t pivot = rank;
            while (pivot < rows_ && m(pivot, c).value == 0) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(rank, j));
            const FieldElem inv = F.inv(m(rank, c));
            if (inv.value != 1)
                for (std::size_t j = 0; j < cols_; ++j) m(rank, j) = F.mul(m(rank, j), inv);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank || m(r, c).value == 0) continue;
                const FieldElem factor = m(r, c);
                for (std::size_t j = 0; j < cols_; ++j) m(r, j) = F.sub(m(r, j), F.mul(factor, m(rank, j)));
            }
            ++rank;
        }
        return {std::move(m), rank};
    }

    std::size_t rank() const { return rref().second; }

   private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElem> d_;

    void check_shape(std::size_t r, std::size_t c) const {
        if (r != rows_ || c != cols_) throw ValidationError("matrix shapes differ");
    }
};

}  // namespace fourcirc

#endif
