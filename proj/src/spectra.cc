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

#include "realhaar/spectra.h"

#include "realhaar/errors.h"

namespace realhaar {

namespace {

void check_dims(std::size_t d, std::size_t t) {
    if (d < 2) {
        throw DomainError("dimension d must be >= 2, got " + std::to_string(d));
    }
    if (t < 1) {
        throw DomainError("copy count t must be >= 1, got " + std::to_string(t));
    }
}

long as_long(std::size_t v) {
    return static_cast<long>(v);
}

// Coefficients c_m with the series read as sum c_m x^m / m!, truncated after degree `t`.
using EgfSeries = std::vector<BigInt>;

EgfSeries egf_product(const EgfSeries &a, const EgfSeries &b) {
    EgfSeries out(a.size(), 0);
    for (std::size_t m = 0; m < out.size(); m++) {
        for (std::size_t c = 0; c <= m; c++) {
            if (a[c] == 0 || b[m - c] == 0) {
                continue;
            }
            out[m] += binomial(as_long(m), c) * a[c] * b[m - c];
        }
    }
    return out;
}

EgfSeries egf_power(EgfSeries base, std::size_t exponent, std::size_t t) {
    EgfSeries out(t + 1, 0);
    out[0] = 1;
    while (exponent > 0) {
        if (exponent & 1) {
            out = egf_product(out, base);
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = egf_product(base, base);
        }
    }
    return out;
}

}  // namespace

Rat RealHaarSpectrum::trace() const {
    Rat total = 0;
    for (const auto &line : lines) {
        total += line.eigenvalue * line.multiplicity;
    }
    return total;
}

BigInt RealHaarSpectrum::rank() const {
    BigInt total = 0;
    for (const auto &line : lines) {
        total += line.multiplicity;
    }
    return total;
}

Rat EnsembleSpectrum::trace() const {
    Rat total = 0;
    for (const auto &e : entries) {
        total += e.eigenvalue * e.multiplicity;
    }
    return total;
}

BigInt EnsembleSpectrum::rank() const {
    BigInt total = 0;
    for (const auto &e : entries) {
        total += e.multiplicity;
    }
    return total;
}

BigInt symmetric_dimension(std::size_t d, std::size_t t) {
    return binomial(as_long(d + t - 1), t);
}

Rat real_haar_eigenvalue(std::size_t d, std::size_t t, std::size_t k) {
    check_dims(d, t);
    if (k > t / 2) {
        throw DomainError("level k must satisfy k <= floor(t/2)");
    }
    BigInt num = factorial(t) * double_factorial(as_long(d) - 2);
    BigInt den = double_factorial(as_long(2 * k)) * double_factorial(as_long(d + 2 * t - 2 * k) - 2);
    return make_rat(num, den);
}

BigInt harmonic_dimension(std::size_t d, std::size_t m) {
    if (d < 2) {
        throw DomainError("dimension d must be >= 2, got " + std::to_string(d));
    }
    return binomial(as_long(d + m) - 1, d - 1) - binomial(as_long(d + m) - 3, d - 1);
}

RealHaarSpectrum real_haar_spectrum(std::size_t d, std::size_t t) {
    check_dims(d, t);
    RealHaarSpectrum out{d, t, {}};
    // k runs over 0..floor(t/2) inclusive; dropping the top level would break unit trace.
    for (std::size_t k = 0; k <= t / 2; k++) {
        out.lines.push_back({k, real_haar_eigenvalue(d, t, k), harmonic_dimension(d, t - 2 * k)});
    }
    return out;
}

Rat complex_haar_eigenvalue(std::size_t d, std::size_t t) {
    check_dims(d, t);
    return make_rat(1, symmetric_dimension(d, t));
}

EnsembleSpectrum complex_haar_spectrum(std::size_t d, std::size_t t) {
    check_dims(d, t);
    BigInt dim = symmetric_dimension(d, t);
    return EnsembleSpectrum{d, t, {{make_rat(1, dim), dim}}, dim, 0};
}

BigInt binary_phase_class_size(std::size_t d, std::size_t t, std::size_t odd_symbols) {
    check_dims(d, t);
    if (odd_symbols > d) {
        throw DomainError("more odd symbols than alphabet letters");
    }
    EgfSeries odd(t + 1, 0);
    EgfSeries even(t + 1, 0);
    for (std::size_t m = 0; m <= t; m++) {
        (m % 2 ? odd : even)[m] = 1;
    }
    EgfSeries total = egf_product(egf_power(odd, odd_symbols, t), egf_power(even, d - odd_symbols, t));
    return total[t];
}

EnsembleSpectrum binary_phase_spectrum(std::size_t d, std::size_t t) {
    check_dims(d, t);
    if (t > d) {
        throw UnsupportedRegimeError("binary-phase spectrum is only derived for t <= d (got d=" + std::to_string(d) +
                                     ", t=" + std::to_string(t) + ")");
    }
    BigInt dt;
    mpz_ui_pow_ui(dt.get_mpz_t(), d, t);
    EnsembleSpectrum out{d, t, {}, symmetric_dimension(d, t), 0};
    for (std::size_t s = t % 2; s <= t; s += 2) {
        out.entries.push_back({make_rat(binary_phase_class_size(d, t, s), dt), binomial(as_long(d), s)});
    }
    out.zero_multiplicity = out.ambient_dim - out.rank();
    return out;
}

}  // namespace realhaar
