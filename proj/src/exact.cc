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

#include "realhaar/exact.h"

#include <cmath>
#include <functional>

#include "realhaar/errors.h"

namespace realhaar {

Rat make_rat(const BigInt &num, const BigInt &den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

BigInt factorial(std::size_t n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt double_factorial(long n) {
    if (n < -1) {
        throw DomainError("double factorial is only defined for n >= -1, got " + std::to_string(n));
    }
    if (n <= 0) {
        return 1;
    }
    BigInt out;
    mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt binomial(long n, std::size_t k) {
    if (n < 0 || static_cast<std::size_t>(n) < k) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), k);
    return out;
}

IdentitySides eval_df_binomial_identity(std::size_t n, std::size_t p, std::size_t q) {
    IdentitySides out;
    out.lhs = 0;
    for (std::size_t k = 0; k <= n; k++) {
        long a = static_cast<long>(2 * n - 2 * k + q) - 1;
        long b = static_cast<long>(2 * k + p) - 1;
        out.lhs += binomial(static_cast<long>(n), k) * double_factorial(a) * double_factorial(b);
    }
    BigInt num = double_factorial(static_cast<long>(p) - 1) * double_factorial(static_cast<long>(q) - 1) *
                 double_factorial(static_cast<long>(2 * n + p + q));
    out.rhs = make_rat(num, double_factorial(static_cast<long>(p + q)));
    return out;
}

IdentitySides eval_nested_df_identity(std::size_t d, std::size_t k0, std::size_t p, std::size_t q) {
    if (d < 2) {
        throw DomainError("nested double-factorial identity needs d >= 2");
    }
    IdentitySides out;
    out.lhs = 0;

    // Walk every chain k0 >= k_1 >= ... >= k_{d-1} >= 0; `level` is the index of the next k to pick.
    std::function<void(std::size_t, std::size_t, const BigInt &)> walk =
        [&](std::size_t level, std::size_t previous, const BigInt &weight) {
            if (level == d) {
                out.lhs += weight * double_factorial(static_cast<long>(2 * previous + p) - 1);
                return;
            }
            for (std::size_t k = 0; k <= previous; k++) {
                long gap = static_cast<long>(2 * previous - 2 * k + q) - 1;
                walk(level + 1, k, weight * binomial(static_cast<long>(previous), k) * double_factorial(gap));
            }
        };
    walk(1, k0, BigInt(1));

    long spread = static_cast<long>((d - 1) * (q + 1));
    BigInt qq = double_factorial(static_cast<long>(q) - 1);
    BigInt qpow;
    mpz_pow_ui(qpow.get_mpz_t(), qq.get_mpz_t(), d - 1);
    BigInt num = double_factorial(static_cast<long>(2 * k0 + p) + spread - 1) *
                 double_factorial(static_cast<long>(p) - 1) * qpow;
    out.rhs = make_rat(num, double_factorial(static_cast<long>(p) + spread - 1));
    return out;
}

double log_factorial(std::size_t n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_double_factorial(std::size_t n) {
    if (n == 0) {
        return 0.0;
    }
    const double ln2 = std::log(2.0);
    if (n % 2 == 0) {
        double m = static_cast<double>(n / 2);
        return m * ln2 + std::lgamma(m + 1.0);
    }
    double m = static_cast<double>((n + 1) / 2);
    return std::lgamma(2.0 * m + 1.0) - m * ln2 - std::lgamma(m + 1.0);
}

double log_binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        throw DomainError("log_binomial needs k <= n");
    }
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double log_of(const BigInt &value) {
    if (value <= 0) {
        throw DomainError("log of a non-positive integer");
    }
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double to_double(const Rat &value) {
    return value.get_d();
}

std::string to_string(const BigInt &value) {
    return value.get_str();
}

std::string to_string(const Rat &value) {
    return value.get_str();
}

}  // namespace realhaar
