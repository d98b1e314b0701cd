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

#ifndef REALHAAR_APPLICATIONS_H
#define REALHAAR_APPLICATIONS_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "realhaar/exact.h"

namespace realhaar {

/// Lower bound on epsilon for any real-valued epsilon-approximate t-design: (1/2)||rho_R - rho_C||_1.
Rat design_epsilon_floor(std::size_t d, std::size_t t);

/// Copies needed to tell real from complex Haar states with success probability p:
/// t = sqrt(2 ln(1/(2(1-p))) d). Throws DomainError unless 1/2 < p < 1 and UnsupportedRegimeError when
/// alpha = sqrt(2 ln(1/(2(1-p)))) exceeds sqrt(2).
double copies_to_distinguish(std::size_t d, double p);

/// 1 - |sum_i psi_i^2|^2. Throws DomainError unless |psi| = 1 within 1e-9.
double imaginarity(std::span<const std::complex<double>> state);

/// P[I(psi) <= delta] = delta^{(d-1)/2} under complex Haar.
double imaginarity_cdf(std::size_t d, double delta);

/// E[I(psi)] = 1 - 2/(d+1).
Rat imaginarity_mean(std::size_t d);

/// The Beta((d-1)/2, 1) law of the imaginarity of a complex-Haar state.
struct ImaginarityModel {
    std::size_t d;

    explicit ImaginarityModel(std::size_t dim);
    double shape() const;
    double cdf(double delta) const;
    double mean() const;
    double variance() const;
};

/// The largest delta accepted by tester_copy_lower_bound: 3^{-2/(d-1)}.
double tester_delta_limit(std::size_t d);

/// t = sqrt(2 ln(1/(2/3 + delta^{(d-1)/2})) d). Requires 0 <= delta < 3^{-2/(d-1)}, the condition the
/// proof needs; throws PreconditionError otherwise.
double tester_copy_lower_bound(std::size_t d, double delta);

/// One-sample Kolmogorov-Smirnov statistic sup |F_N - F|. `sorted` must be nonempty, ascending, and
/// inside [0, 1].
double ks_statistic(std::span<const double> sorted, const std::function<double(double)> &cdf);

/// c / sqrt(N); c = 1.628 is the asymptotic 1% critical constant.
double ks_critical_value(std::size_t n, double c = 1.628);

/// Imaginarity of N complex-Haar samples, drawn on `streams` RNG streams as in estimate_moment_operator.
std::vector<double> sample_imaginarity(std::size_t d, std::size_t n, std::uint64_t seed, std::size_t streams = 1,
                                       std::size_t threads = 1);

struct BoundReport {
    std::size_t d = 0;
    std::optional<std::size_t> t;
    /// "p" (success probability) or "delta" (imaginarity threshold); empty for an epsilon floor.
    std::string parameter_name;
    double parameter = 0;
    double copies = 0;
    std::optional<Rat> epsilon_floor;
    std::vector<std::string> notes;
};

BoundReport epsilon_floor_report(std::size_t d, std::size_t t);
BoundReport distinguishing_report(std::size_t d, double p);
BoundReport tester_report(std::size_t d, double delta);

/// (1/N) sum_j O_j^{\otimes t} M (O_j^T)^{\otimes t} over N Haar orthogonal O_j; M is d^t x d^t.
Eigen::MatrixXd orthogonal_twirl(const Eigen::MatrixXd &m, std::size_t d, std::size_t t, std::size_t samples,
                                 std::uint64_t seed);

}  // namespace realhaar

#endif
