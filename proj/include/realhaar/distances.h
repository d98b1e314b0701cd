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

#ifndef REALHAAR_DISTANCES_H
#define REALHAAR_DISTANCES_H

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "realhaar/exact.h"
#include "realhaar/spectra.h"

namespace realhaar {

enum class DistanceMethod { SpectralSum, ClosedForm, Asymptotic };
enum class Regime { Vanishing, Constant, Saturating };

const char *method_name(DistanceMethod m);
const char *regime_name(Regime r);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// ||rho_R - rho_C||_p. The trace distance is half the p = 1 value. `exact_value` is present whenever
/// the value is rational and was computed exactly.
struct DistanceReport {
    std::size_t d = 0;
    std::size_t t = 0;
    double p = 1;
    std::optional<Rat> exact_value;
    double float_value = 0;
    DistanceMethod method = DistanceMethod::SpectralSum;
    std::optional<Regime> regime;
    std::vector<std::string> notes;
};

/// ||rho_R - rho_C||_p from the two spectra. Exact for p = 1 and p = infinity.
/// Throws DomainError for p < 1 (or NaN).
DistanceReport schatten_distance_real_vs_complex(std::size_t d, std::size_t t, double p);

/// (d + t - 1)! / ((d - 1)!! (d + 2t - 2)!!), telescoped to prod_{j<t} (d + j) / (d + 2j).
Rat closed_form_ratio(std::size_t d, std::size_t t);

/// Whether t!(d-2)!!/(2(d+2t-4)!!) >= 1/C(d+t-1, t), i.e. lambda_1 >= mu. Decided exactly.
bool closed_form_condition(std::size_t d, std::size_t t);

/// (1 - t(t-1)/((d+t-1)(d+t-2))) (1 - (d+t-1)!/((d-1)!!(d+2t-2)!!)).
/// Throws PreconditionError when closed_form_condition fails.
Rat closed_form_trace_distance(std::size_t d, std::size_t t);

/// The same value in floating point through log-gamma double factorials. Usable at any d.
double closed_form_trace_distance_log_gamma(std::size_t d, std::size_t t);

/// The same value in floating point, summing log1p over the telescoped ratio; accurate to a few ulps.
double closed_form_trace_distance_float(std::size_t d, std::size_t t);

/// Largest t (exclusive) for which the leading-order expansion is valid: (5 + sqrt(9 + 8 d ln(d/2))) / 2.
double asymptotic_window(std::size_t d);

/// Reporting label: vanishing if t <= d^0.45, constant if t/sqrt(d) in [0.1, sqrt 2], else saturating.
Regime classify_regime(std::size_t d, std::size_t t);

struct AsymptoticEstimate {
    double trace_distance;
    Regime regime;
    std::vector<std::string> notes;
};

/// Leading term 1 - exp(-t(t-1)/(2d)) of the trace distance, with its regime label. Throws
/// UnsupportedRegimeError outside asymptotic_window(d). Adds a note when (d, t) sits within 1% of a
/// regime boundary.
AsymptoticEstimate asymptotic_trace_distance(std::size_t d, std::size_t t);

struct DistanceOptions {
    /// Forces one evaluation route; nullopt picks one automatically.
    std::optional<DistanceMethod> method;
    /// Largest d for which exact spectra are computed.
    std::size_t exact_max_d = 20000;
};

/// ||rho_R - rho_C||_p by the best available route. For p = 1 and d <= exact_max_d the spectral sum is
/// always computed, and when the closed-form condition holds the closed form is computed too, checked
/// equal (VerificationError otherwise) and reported as the method. Above exact_max_d the closed form
/// is evaluated in floating point, falling back to the asymptotic expansion. Values from the trace-
/// distance formulas are doubled into the p = 1 norm.
DistanceReport real_vs_complex_distance(std::size_t d, std::size_t t, double p, const DistanceOptions &options = {});

/// (1/2)||rho - rho_C||_1 for an operator supported on the symmetric subspace with the given spectrum:
/// half of sum |e - mu| over its eigenvalues, zeros included.
Rat trace_distance_to_complex(const EnsembleSpectrum &s);

/// 1 - sum_k C(d, t-2k) / C(d+t-1, t). Throws UnsupportedRegimeError for t > d.
Rat binary_phase_trace_distance(std::size_t d, std::size_t t);

}  // namespace realhaar

#endif
