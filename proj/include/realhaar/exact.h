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

#ifndef REALHAAR_EXACT_H
#define REALHAAR_EXACT_H

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace realhaar {

/// Arbitrary-precision integer. Naturals (factorials, multiplicities) use it too.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws DomainError on a zero denominator.
Rat make_rat(const BigInt &num, const BigInt &den);

BigInt factorial(std::size_t n);

/// n!! with (-1)!! = 0!! = 1. Throws DomainError for n < -1.
BigInt double_factorial(long n);

/// C(n, k), and 0 whenever n < 0 or k > n.
BigInt binomial(long n, std::size_t k);

/// Both sides of an exact identity evaluated independently.
struct IdentitySides {
    BigInt lhs;
    Rat rhs;

    bool holds() const {
        return Rat(lhs) == rhs;
    }
};

/// sum_k C(n,k) (2n-2k-1+q)!! (2k-1+p)!!  versus  (p-1)!!(q-1)!!(2n+p+q)!! / (p+q)!!.
IdentitySides eval_df_binomial_identity(std::size_t n, std::size_t p, std::size_t q);

/// The d-fold nested generalisation, summing over chains k_{d-1} <= ... <= k_1 <= k0:
///
///   sum prod_{j=0}^{d-2} C(k_j, k_{j+1}) (2k_j - 2k_{j+1} + q - 1)!!  *  (2k_{d-1} + p - 1)!!
///
/// against (2k0 + p + (d-1)(q+1) - 1)!! (p-1)!! [(q-1)!!]^{d-1} / (p + (d-1)(q+1) - 1)!!.
/// The left side is enumerated chain by chain, never through the right side.
IdentitySides eval_nested_df_identity(std::size_t d, std::size_t k0, std::size_t p, std::size_t q);

/// ln(n!!) through log-gamma: (2m)!! = 2^m m! and (2m-1)!! = (2m)! / (2^m m!).
double log_double_factorial(std::size_t n);

double log_factorial(std::size_t n);

/// ln C(n, k) for 0 <= k <= n.
double log_binomial(std::size_t n, std::size_t k);

/// Natural log of a positive big integer, accurate for values far beyond double range.
double log_of(const BigInt &value);

double to_double(const Rat &value);

std::string to_string(const BigInt &value);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rat &value);

}  // namespace realhaar

#endif
