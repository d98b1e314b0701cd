// Copyright 2026 The realhaar Authors
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

#include "realhaar/exact_linalg.h"

#include <utility>

#include "realhaar/errors.h"

namespace realhaar {

std::vector<std::size_t> rref(RatRows &m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    Rat tmp;
    for (std::size_t col = 0; col < m.cols && row < m.rows; col++) {
        std::size_t found = row;
        while (found < m.rows && sgn(m.at(found, col)) == 0) {
            found++;
        }
        if (found == m.rows) {
            continue;
        }
        if (found != row) {
            for (std::size_t c = 0; c < m.cols; c++) {
                std::swap(m.at(found, c), m.at(row, c));
            }
        }
        Rat inv = 1 / m.at(row, col);
        for (std::size_t c = col; c < m.cols; c++) {
            m.at(row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows; r++) {
            if (r == row || sgn(m.at(r, col)) == 0) {
                continue;
            }
            Rat factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols; c++) {
                if (sgn(m.at(row, c)) != 0) {
                    mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), m.at(row, c).get_mpq_t());
                    m.at(r, c) -= tmp;
                }
            }
        }
        pivots.push_back(col);
        row++;
    }
    return pivots;
}

std::size_t rank(RatRows m) {
    return rref(m).size();
}

std::size_t rank(const RatMatrix &m) {
    RatRows rows(m.size(), m.size());
    rows.data = m.entries();
    return rank(std::move(rows));
}

std::vector<RatVector> nullspace(RatRows m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<RatVector> out;
    for (std::size_t free = 0; free < m.cols; free++) {
        if (is_pivot[free]) {
            continue;
        }
        RatVector v(m.cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); r++) {
            v[pivots[r]] = -m.at(r, free);
        }
        out.push_back(std::move(v));
    }
    return out;
}

RatRows inverse(const RatRows &m) {
    if (m.rows != m.cols) {
        throw DomainError("inverse of a non-square matrix");
    }
    std::size_t n = m.rows;
    RatRows aug(n, 2 * n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            aug.at(r, c) = m.at(r, c);
        }
        aug.at(r, n + r) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        throw DomainError("matrix is singular");
    }
    RatRows out(n, n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            out.at(r, c) = aug.at(r, n + c);
        }
    }
    return out;
}

Rat dot(const RatVector &a, const RatVector &b) {
    if (a.size() != b.size()) {
        throw DomainError("dot product of vectors of different length");
    }
    Rat total = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) {
            total += a[i] * b[i];
        }
    }
    return total;
}

}  // namespace realhaar
