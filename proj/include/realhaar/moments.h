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

#ifndef REALHAAR_MOMENTS_H
#define REALHAAR_MOMENTS_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "realhaar/exact.h"
#include "realhaar/rng.h"
#include "realhaar/spectra.h"

namespace realhaar {

inline constexpr std::size_t kDefaultMatrixCap = 4096;

using RatVector = std::vector<Rat>;

/// Dense exact square matrix.
///
/// Moment operators live on (R^d)^{\otimes t} in the lexicographic basis of [d]^t: tuple (x_1, ..., x_t)
/// has index sum_i x_i d^{t-i}, i.e. the leftmost tensor factor is the most significant digit. Every
/// matrix and vector in the library shares that ordering.
class RatMatrix {
   public:
    explicit RatMatrix(std::size_t n = 0) : n_(n), entries_(n * n, Rat(0)) {
    }

    static RatMatrix identity(std::size_t n);

    std::size_t size() const {
        return n_;
    }
    Rat &operator()(std::size_t row, std::size_t col) {
        return entries_[row * n_ + col];
    }
    const Rat &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * n_ + col];
    }
    const std::vector<Rat> &entries() const {
        return entries_;
    }

    RatMatrix operator*(const RatMatrix &other) const;
    RatMatrix operator+(const RatMatrix &other) const;
    RatMatrix operator-(const RatMatrix &other) const;
    RatMatrix operator*(const Rat &scalar) const;
    RatVector operator*(const RatVector &v) const;
    bool operator==(const RatMatrix &other) const = default;

    Rat trace() const;
    RatMatrix transpose() const;
    bool is_symmetric() const;
    Eigen::MatrixXd to_eigen() const;

   private:
    std::size_t n_;
    std::vector<Rat> entries_;
};

/// a \otimes b, with a's index as the more significant digit.
RatMatrix kron(const RatMatrix &a, const RatMatrix &b);
RatVector kron(const RatVector &a, const RatVector &b);

/// Monte Carlo moment estimate. `imag` is empty for real ensembles; for complex ones it holds the
/// (antisymmetric) imaginary plane of the Hermitian estimate, `real` the symmetric real plane.
struct FloatMatrix {
    std::size_t n = 0;
    std::vector<double> real;
    std::vector<double> imag;
    std::uint64_t sample_count = 0;

    double operator()(std::size_t row, std::size_t col) const {
        return real[row * n + col];
    }
    bool is_complex() const {
        return !imag.empty();
    }
    Eigen::MatrixXd real_part() const;
};

/// n_i(x, y): occurrences of symbol i in the concatenation of x and y.
struct OddCountProfile {
    std::vector<std::size_t> counts;

    bool all_even() const;
    std::size_t total() const;
};

/// d^t, or ResourceError if it exceeds `cap`.
std::size_t tensor_dimension(std::size_t d, std::size_t t, std::size_t cap = kDefaultMatrixCap);
std::vector<std::size_t> index_to_tuple(std::size_t index, std::size_t d, std::size_t t);
std::size_t tuple_to_index(std::span<const std::size_t> tuple, std::size_t d);

OddCountProfile odd_count_profile(std::span<const std::size_t> x, std::span<const std::size_t> y, std::size_t d);

/// x ~ y iff every symbol occurs an even number of times in x || y.
bool equivalent(std::span<const std::size_t> x, std::span<const std::size_t> y, std::size_t d);

/// E[prod_i (W_i/|W|)^{n_i}] for standard Gaussian W in R^d, i.e. a moment of a uniform unit vector:
/// (d-2)!!/(d+N-2)!! prod_i (n_i - 1)!! when every n_i is even, else 0.
Rat gaussian_direction_moment(std::span<const std::size_t> profile);

/// Exact t-copy real-Haar moment operator, entry (x, y) = gaussian_direction_moment(n(x, y)).
RatMatrix build_real_moment_matrix(std::size_t d, std::size_t t, std::size_t cap = kDefaultMatrixCap);

/// Symmetric-subspace projector (1/t!) sum_pi P_pi, built by enumerating all t! permutations.
RatMatrix build_sym_projector(std::size_t d, std::size_t t, std::size_t cap = kDefaultMatrixCap);

/// Binary-phase moment operator: 1/d^t on x ~ y, else 0.
RatMatrix build_binary_phase_matrix(std::size_t d, std::size_t t, std::size_t cap = kDefaultMatrixCap);

/// Binary-phase spectrum by brute force: tuples of [d]^t grouped by parity pattern, each group C
/// contributing eigenvalue |C|/d^t once; equal eigenvalues merged. Independent of the closed form.
EnsembleSpectrum binary_phase_spectrum_by_enumeration(std::size_t d, std::size_t t,
                                                      std::size_t cap = kDefaultMatrixCap);

/// tr(M^m), exactly.
Rat trace_power(const RatMatrix &m, std::size_t power);

/// Uniform real unit vector: a normalised standard Gaussian vector (same law as O|0> for Haar O).
std::vector<double> sample_real_haar_state(std::size_t d, Rng &rng);

/// Uniform complex unit vector (A + iB)/sqrt(|A|^2 + |B|^2) with A, B independent Gaussians.
std::vector<std::complex<double>> sample_complex_haar_state(std::size_t d, Rng &rng);

/// Binary phase state d^{-1/2} sum_x (-1)^{f(x)} |x> for a uniformly random f.
std::vector<double> sample_binary_phase_state(std::size_t d, Rng &rng);

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with R's diagonal signs folded into Q.
Eigen::MatrixXd sample_haar_orthogonal(std::size_t d, Rng &rng);

/// psi^{\otimes t} in the lexicographic basis.
std::vector<double> tensor_power(std::span<const double> psi, std::size_t t);
std::vector<std::complex<double>> tensor_power(std::span<const std::complex<double>> psi, std::size_t t);

/// O^{\otimes t} v, applied factor by factor without forming the d^t x d^t matrix.
std::vector<double> apply_tensor_power(const Eigen::MatrixXd &o, std::span<const double> v, std::size_t t);

enum class Ensemble { RealHaar, ComplexHaar, BinaryPhase };

const char *ensemble_name(Ensemble e);
Ensemble parse_ensemble(const std::string &name);

struct EstimateOptions {
    /// Independent RNG streams. The N samples are split into `streams` contiguous blocks, the first
    /// N % streams blocks taking one extra sample.
    std::size_t streams = 1;
    /// Threads used to execute the streams. Has no effect on the result.
    std::size_t threads = 1;
    std::size_t cap = kDefaultMatrixCap;
};

/// (1/N) sum of (|psi><psi|)^{\otimes t} over N samples of `ensemble`, symmetrised. Stream s draws from
/// Rng::for_stream(seed, s); per-stream sums are reduced in stream order, so the result depends only
/// on (seed, N, streams).
FloatMatrix estimate_moment_operator(std::size_t d, std::size_t t, std::uint64_t sample_count, std::uint64_t seed,
                                     Ensemble ensemble, const EstimateOptions &options = {});

}  // namespace realhaar

#endif
