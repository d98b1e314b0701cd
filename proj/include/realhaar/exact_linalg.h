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

#ifndef REALHAAR_EXACT_LINALG_H
#define REALHAAR_EXACT_LINALG_H

#include <cstddef>
#include <vector>

#include "realhaar/moments.h"

namespace realhaar {

/// Row-major dense rational matrix of arbitrary shape.
struct RatRows {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> data;

    RatRows() = default;
    RatRows(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rat(0)) {
    }
    Rat &at(std::size_t r, std::size_t c) {
        return data[r * cols + c];
    }
    const Rat &at(std::size_t r, std::size_t c) const {
        return data[r * cols + c];
    }
};

/// Reduces `m` in place to reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(RatRows &m);

std::size_t rank(RatRows m);
std::size_t rank(const RatMatrix &m);

/// Basis of {v : m v = 0}, one vector per free column (that column's entry is 1).
std::vector<RatVector> nullspace(RatRows m);

/// Inverse of a nonsingular square matrix. Throws DomainError when singular.
RatRows inverse(const RatRows &m);

Rat dot(const RatVector &a, const RatVector &b);

}  // namespace realhaar

#endif
