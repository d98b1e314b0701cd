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

#ifndef REALHAAR_SPECTRA_H
#define REALHAAR_SPECTRA_H

#include <cstddef>
#include <vector>

#include "realhaar/exact.h"

namespace realhaar {

/// One eigenspace of the real-Haar moment operator: the image of q^k H_d^{t-2k}.
struct SpectralLine {
    std::size_t k;
    Rat eigenvalue;
    BigInt multiplicity;
};

/// Spectrum of the t-copy real-Haar moment operator on the symmetric subspace.
/// Lines are ordered by k, which is also increasing eigenvalue order.
struct RealHaarSpectrum {
    std::size_t d;
    std::size_t t;
    std::vector<SpectralLine> lines;

    Rat trace() const;
    BigInt rank() const;
};

struct EigenEntry {
    Rat eigenvalue;
    BigInt multiplicity;
};

/// Nonzero eigenvalues of an ensemble moment operator, plus how many zero eigenvalues it has
/// on the symmetric subspace of dimension `ambient_dim`.
struct EnsembleSpectrum {
    std::size_t d;
    std::size_t t;
    std::vector<EigenEntry> entries;
    BigInt ambient_dim;
    BigInt zero_multiplicity;

    Rat trace() const;
    BigInt rank() const;
};

/// dim of the symmetric subspace of (K^d)^{\otimes t}: C(d+t-1, t).
BigInt symmetric_dimension(std::size_t d, std::size_t t);

/// lambda_k = t! (d-2)!! / ((2k)!! (d+2t-2k-2)!!).
Rat real_haar_eigenvalue(std::size_t d, std::size_t t, std::size_t k);

/// dim H_d^m = C(d+m-1, d-1) - C(d+m-3, d-1).
BigInt harmonic_dimension(std::size_t d, std::size_t m);

RealHaarSpectrum real_haar_spectrum(std::size_t d, std::size_t t);

/// The complex-Haar eigenvalue mu = 1 / C(d+t-1, t).
Rat complex_haar_eigenvalue(std::size_t d, std::size_t t);

EnsembleSpectrum complex_haar_spectrum(std::size_t d, std::size_t t);

/// Number of t-tuples over [d] in which a fixed set of `odd_symbols` symbols each occur an odd number
/// of times and every other symbol an even number of times. Computed as t! [x^t] sinh^s cosh^{d-s}
/// with an integer binomial convolution, so it is exact at any d.
BigInt binary_phase_class_size(std::size_t d, std::size_t t, std::size_t odd_symbols);

/// Spectrum of the binary-phase moment operator. One entry per odd-symbol set size s = t mod 2,
/// t mod 2 + 2, ..., t, in that order; eigenvalue |class(s)| / d^t with multiplicity C(d, s).
/// Requires t <= d.
EnsembleSpectrum binary_phase_spectrum(std::size_t d, std::size_t t);

}  // namespace realhaar

#endif
