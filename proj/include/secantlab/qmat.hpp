/*
   Copyright 2026 The secantlab authors

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

#ifndef SECANTLAB_QMAT_HPP
#define SECANTLAB_QMAT_HPP

#include <utility>
#include <vector>

#include "secantlab/rational.hpp"

namespace secantlab {

/// Dense matrix over Rat. Row reduction is exact; no pivot thresholds exist
/// anywhere.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }
    static QMat from_rows(const std::vector<std::vector<Rat>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
        QMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const Rat& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    std::vector<Rat> row(int i) const {
        std::vector<Rat> r(static_cast<size_t>(cols_));
        for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
        return r;
    }

    /// Matrix-vector product.
    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        std::vector<Rat> out(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) {
            Rat acc(0);
            for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[static_cast<size_t>(j)];
            out[static_cast<size_t>(i)] = acc;
        }
        return out;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int lead = 0;
        for (int col = 0; col < cols_ && lead < rows_; ++col) {
            int piv = -1;
            for (int i = lead; i < rows_; ++i) {
                if (!at(i, col).is_zero()) {
                    piv = i;
                    break;
                }
            }
            if (piv < 0) continue;
            swap_rows_(piv, lead);
            Rat inv = at(lead, col).inverse();
            for (int j = col; j < cols_; ++j) at(lead, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == lead || at(i, col).is_zero()) continue;
                Rat f = at(i, col);
                for (int j = col; j < cols_; ++j) at(i, j) -= f * at(lead, j);
            }
            pivots.push_back(col);
            ++lead;
        }
        return pivots;
    }

    int rank() const {
        QMat tmp(*this);
        return static_cast<int>(tmp.rref().size());
    }

    /// Exact basis of the null space; dimension = cols - rank.
    std::vector<std::vector<Rat>> kernel() const {
        QMat tmp(*this);
        std::vector<int> pivots = tmp.rref();
        std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
        for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
        std::vector<std::vector<Rat>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[static_cast<size_t>(free)]) continue;
            std::vector<Rat> v(static_cast<size_t>(cols_));
            v[static_cast<size_t>(free)] = Rat(1);
            for (size_t r = 0; r < pivots.size(); ++r)
                v[static_cast<size_t>(pivots[r])] = -tmp.at(static_cast<int>(r), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void swap_rows_(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    int rows_, cols_;
    std::vector<Rat> a_;
};

}  // namespace secantlab

#endif
