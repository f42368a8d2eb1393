// Copyright 2026 The QSL Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef _QSL_BIT_MATRIX_H
#define _QSL_BIT_MATRIX_H

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsl/bit_vec.h"

namespace qsl {

/// Row-major matrix over GF(2). Every row has exactly width() bits.
class BitMatrix {
   public:
    BitMatrix() = default;
    explicit BitMatrix(size_t width) : width_(width) {
    }

    /// Rows given in most-significant-first text form, e.g. {"101", "010"}.
    static BitMatrix from_strings(size_t width, std::initializer_list<std::string_view> rows) {
        BitMatrix m(width);
        for (auto r : rows) {
            m.add_row(BitVec::from_string(r));
        }
        return m;
    }

    static BitMatrix identity(size_t width) {
        BitMatrix m(width);
        for (size_t k = 0; k < width; k++) {
            m.add_row(BitVec::unit(width, k));
        }
        return m;
    }

    void add_row(BitVec row) {
        if (row.size() != width_) {
            throw std::invalid_argument(
                "BitMatrix::add_row: row has " + std::to_string(row.size()) + " bits but matrix width is " +
                std::to_string(width_));
        }
        rows_.push_back(std::move(row));
    }

    size_t width() const {
        return width_;
    }
    size_t num_rows() const {
        return rows_.size();
    }
    const BitVec &row(size_t k) const {
        return rows_.at(k);
    }
    const std::vector<BitVec> &rows() const {
        return rows_;
    }

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t width_ = 0;
    std::vector<BitVec> rows_;
};

/// Reduced row echelon form of a matrix, computed on a copy.
struct RowEchelon {
    /// Nonzero reduced rows; row k has its leading one in pivot_columns[k].
    std::vector<BitVec> rows;
    std::vector<size_t> pivot_columns;
    size_t width = 0;

    static RowEchelon of(const BitMatrix &m) {
        RowEchelon e;
        e.width = m.width();
        std::vector<BitVec> work = m.rows();
        size_t next = 0;
        for (size_t col = 0; col < e.width && next < work.size(); col++) {
            // Lowest row index with a set bit in this column becomes the pivot.
            size_t p = next;
            while (p < work.size() && !work[p][col]) {
                p++;
            }
            if (p == work.size()) {
                continue;
            }
            std::swap(work[next], work[p]);
            for (size_t k = 0; k < work.size(); k++) {
                if (k != next && work[k][col]) {
                    work[k] ^= work[next];
                }
            }
            e.pivot_columns.push_back(col);
            next++;
        }
        work.resize(next);
        e.rows = std::move(work);
        return e;
    }

    size_t rank() const {
        return rows.size();
    }

    BitMatrix nullspace_basis() const {
        std::vector<bool> is_pivot(width, false);
        for (auto c : pivot_columns) {
            is_pivot[c] = true;
        }
        BitMatrix basis(width);
        for (size_t free = 0; free < width; free++) {
            if (is_pivot[free]) {
                continue;
            }
            BitVec v = BitVec::unit(width, free);
            for (size_t k = 0; k < rows.size(); k++) {
                if (rows[k][free]) {
                    v.set(pivot_columns[k], true);
                }
            }
            basis.add_row(std::move(v));
        }
        return basis;
    }
};

inline size_t rank(const BitMatrix &m) {
    return RowEchelon::of(m).rank();
}

/// Basis of {v : m v = 0 (mod 2)}; it has width() - rank(m) rows.
inline BitMatrix nullspace_basis(const BitMatrix &m) {
    return RowEchelon::of(m).nullspace_basis();
}

/// Canonical basis of the vectors orthogonal to s.
///
/// With j the lowest set bit of s, the basis is e_i + s_i e_j for every
/// i != j, in ascending i. For s = 0 it is the standard basis.
inline BitMatrix orthogonal_complement_basis(const BitVec &s) {
    size_t n = s.size();
    BitMatrix basis(n);
    auto low = s.lowest_set_bit();
    for (size_t i = 0; i < n; i++) {
        if (low && i == *low) {
            continue;
        }
        BitVec v = BitVec::unit(n, i);
        if (low && s[i]) {
            v.set(*low, true);
        }
        basis.add_row(std::move(v));
    }
    return basis;
}

struct SecretSolution {
    enum class Status {
        /// Rank n-1: exactly one nonzero solution, held in `secret`.
        unique,
        /// Rank n: only the zero vector solves the system.
        trivial_only,
        /// Rank below n-1: more rows are needed.
        underdetermined,
    };
    Status status;
    BitVec secret;
    size_t rank;
};

inline SecretSolution solve_secret(const BitMatrix &ys) {
    size_t n = ys.width();
    auto e = RowEchelon::of(ys);
    size_t r = e.rank();
    if (r == n) {
        return {SecretSolution::Status::trivial_only, BitVec(n), r};
    }
    if (r + 1 == n) {
        auto null = e.nullspace_basis();
        return {SecretSolution::Status::unique, null.row(0), r};
    }
    return {SecretSolution::Status::underdetermined, BitVec(n), r};
}

/// Incrementally maintained row space. Each stored row has a distinct
/// leading (lowest) set bit, so insertion costs one pass over the rows.
class EchelonBasis {
   public:
    explicit EchelonBasis(size_t width) : width_(width) {
    }

    /// Returns true when v was independent of the rows seen so far.
    bool insert(BitVec v) {
        if (v.size() != width_) {
            throw std::invalid_argument("EchelonBasis::insert: width mismatch");
        }
        for (size_t k = 0; k < rows_.size(); k++) {
            if (v[leads_[k]]) {
                v ^= rows_[k];
            }
        }
        auto lead = v.lowest_set_bit();
        if (!lead) {
            return false;
        }
        leads_.push_back(*lead);
        rows_.push_back(std::move(v));
        return true;
    }

    size_t rank() const {
        return rows_.size();
    }
    size_t width() const {
        return width_;
    }

   private:
    size_t width_;
    std::vector<BitVec> rows_;
    std::vector<size_t> leads_;
};

}  // namespace qsl

#endif
