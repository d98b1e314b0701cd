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

#include "realhaar/distances.h"

#include <algorithm>
#include <cmath>

#include "realhaar/errors.h"
#include "realhaar/spectra.h"

namespace realhaar {

const char *method_name(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::SpectralSum:
            return "spectral_sum";
        case DistanceMethod::ClosedForm:
            return "closed_form";
        case DistanceMethod::Asymptotic:
            return "asymptotic";
    }
    return "?";
}

const char *regime_name(Regime r) {
    switch (r) {
        case Regime::Vanishing:
            return "vanishing";
        case Regime::Constant:
            return "constant";
        case Regime::Saturating:
            return "saturating";
    }
    return "?";
}

namespace {

void check_dims(std::size_t d, std::size_t t) {
    if (d < 2) {
        throw DomainError("d must be >= 2 (got " + std::to_string(d) + ")");
    }
    if (t < 1) {
        throw DomainError("t must be >= 1");
    }
}

double log_abs(const Rat &r) {
    return log_of(abs(r.get_num())) - log_of(r.get_den());
}

}  // namespace

DistanceReport schatten_distance_real_vs_complex(std::size_t d, std::size_t t, double p) {
    check_dims(d, t);
    if (!(p >= 1)) {
        throw DomainError("Schatten order p must lie in [1, infinity]");
    }
    auto spectrum = real_haar_spectrum(d, t);
    Rat mu = complex_haar_eigenvalue(d, t);
    DistanceReport out;
    out.d = d;
    out.t = t;
    out.p = p;
    out.method = DistanceMethod::SpectralSum;
    if (p == 1) {
        Rat total = 0;
        for (const auto &line : spectrum.lines) {
            total += Rat(line.multiplicity) * abs(line.eigenvalue - mu);
        }
        out.exact_value = total;
        out.float_value = to_double(total);
    } else if (std::isinf(p)) {
        Rat best = 0;
        for (const auto &line : spectrum.lines) {
            best = std::max(best, Rat(abs(line.eigenvalue - mu)));
        }
        out.exact_value = best;
        out.float_value = to_double(best);
    } else {
        // Summed in log space: multiplicities and eigenvalue gaps both leave double range at large d.
        std::vector<double> logs;
        for (const auto &line : spectrum.lines) {
            Rat gap = line.eigenvalue - mu;
            if (sgn(gap) != 0) {
                logs.push_back(log_of(line.multiplicity) + p * log_abs(gap));
            }
        }
        if (!logs.empty()) {
            double top = *std::max_element(logs.begin(), logs.end());
            double acc = 0;
            for (double l : logs) {
                acc += std::exp(l - top);
            }
            out.float_value = std::exp((top + std::log(acc)) / p);
        }
    }
    return out;
}

Rat closed_form_ratio(std::size_t d, std::size_t t) {
    check_dims(d, t);
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t j = 0; j < t; j++) {
        num *= static_cast<unsigned long>(d + j);
        den *= static_cast<unsigned long>(d + 2 * j);
    }
    return make_rat(num, den);
}

bool closed_form_condition(std::size_t d, std::size_t t) {
    // lambda_1 = lambda_0 (d+2t-2)/2 and mu/lambda_0 = 1/closed_form_ratio, so lambda_1 >= mu
    // iff (d+2t-2) * ratio >= 2.
    Rat lhs = closed_form_ratio(d, t) * Rat(static_cast<unsigned long>(d + 2 * t - 2));
    return lhs >= 2;
}

Rat closed_form_trace_distance(std::size_t d, std::size_t t) {
    if (!closed_form_condition(d, t)) {
        throw PreconditionError("closed form needs t!(d-2)!!/(2(d+2t-4)!!) >= 1/C(d+t-1,t), which fails at d=" +
                                std::to_string(d) + ", t=" + std::to_string(t) + "; use the spectral sum instead");
    }
    Rat tt = static_cast<unsigned long>(t);
    Rat dd = static_cast<unsigned long>(d);
    Rat first = 1 - tt * (tt - 1) / ((dd + tt - 1) * (dd + tt - 2));
    return first * (1 - closed_form_ratio(d, t));
}

namespace {

double closed_form_prefactor(std::size_t d, std::size_t t) {
    double td = static_cast<double>(t);
    double dd = static_cast<double>(d);
    return 1 - td * (td - 1) / ((dd + td - 1) * (dd + td - 2));
}

}  // namespace

double closed_form_trace_distance_log_gamma(std::size_t d, std::size_t t) {
    if (!closed_form_condition(d, t)) {
        throw PreconditionError("closed form condition fails at d=" + std::to_string(d) + ", t=" + std::to_string(t));
    }
    double log_ratio = log_factorial(d + t - 1) - log_double_factorial(d - 1) - log_double_factorial(d + 2 * t - 2);
    return closed_form_prefactor(d, t) * -std::expm1(log_ratio);
}

double closed_form_trace_distance_float(std::size_t d, std::size_t t) {
    if (!closed_form_condition(d, t)) {
        throw PreconditionError("closed form condition fails at d=" + std::to_string(d) + ", t=" + std::to_string(t));
    }
    double log_ratio = 0;
    for (std::size_t j = 1; j < t; j++) {
        log_ratio += std::log1p(-static_cast<double>(j) / static_cast<double>(d + 2 * j));
    }
    return closed_form_prefactor(d, t) * -std::expm1(log_ratio);
}

double asymptotic_window(std::size_t d) {
    double dd = static_cast<double>(d);
    return (5 + std::sqrt(9 + 8 * dd * std::log(dd / 2))) / 2;
}

Regime classify_regime(std::size_t d, std::size_t t) {
    double dd = static_cast<double>(d);
    double td = static_cast<double>(t);
    if (td <= std::pow(dd, 0.45)) {
        return Regime::Vanishing;
    }
    double alpha = td / std::sqrt(dd);
    if (alpha >= 0.1 && alpha <= std::sqrt(2.0)) {
        return Regime::Constant;
    }
    return Regime::Saturating;
}

AsymptoticEstimate asymptotic_trace_distance(std::size_t d, std::size_t t) {
    check_dims(d, t);
    double window = asymptotic_window(d);
    double td = static_cast<double>(t);
    double dd = static_cast<double>(d);
    if (!(td < window)) {
        throw UnsupportedRegimeError("asymptotic expansion needs t < (5 + sqrt(9 + 8 d ln(d/2)))/2 = " +
                                     std::to_string(window) + " at d=" + std::to_string(d));
    }
    AsymptoticEstimate out{-std::expm1(-td * (td - 1) / (2 * dd)), classify_regime(d, t), {}};
    out.notes.push_back("asymptotic estimate: leading term only, corrections O(t^3/d^2) unquantified");

    auto near = [](double x, double edge) { return std::abs(x - edge) <= 0.01 * edge; };
    double alpha = td / std::sqrt(dd);
    if (near(alpha, std::sqrt(2.0))) {
        out.notes.push_back("boundary: t/sqrt(d) within 1% of sqrt(2), edge of the constant regime");
    }
    if (near(alpha, 0.1)) {
        out.notes.push_back("boundary: t/sqrt(d) within 1% of 0.1");
    }
    if (near(td, std::pow(dd, 0.45))) {
        out.notes.push_back("boundary: t within 1% of d^0.45");
    }
    if (td >= 0.99 * window) {
        out.notes.push_back("boundary: t within 1% of the validity window");
    }
    return out;
}

DistanceReport real_vs_complex_distance(std::size_t d, std::size_t t, double p, const DistanceOptions &options) {
    check_dims(d, t);
    if (!(p >= 1)) {
        throw DomainError("Schatten order p must lie in [1, infinity]");
    }
    auto forced = options.method;
    bool exact_ok = d <= options.exact_max_d;
    if (p != 1 && forced && *forced != DistanceMethod::SpectralSum) {
        throw DomainError(std::string("method ") + method_name(*forced) + " only gives the trace distance (p = 1)");
    }
    if ((p != 1 || forced == DistanceMethod::SpectralSum) && !exact_ok) {
        throw ResourceError("exact spectra are limited to d <= " + std::to_string(options.exact_max_d));
    }

    DistanceReport out;
    if (forced == DistanceMethod::Asymptotic) {
        auto est = asymptotic_trace_distance(d, t);
        out.d = d;
        out.t = t;
        out.p = 1;
        out.method = DistanceMethod::Asymptotic;
        out.float_value = 2 * est.trace_distance;
        out.regime = est.regime;
        out.notes = est.notes;
        return out;
    }
    if (p != 1 || forced == DistanceMethod::SpectralSum) {
        out = schatten_distance_real_vs_complex(d, t, p);
    } else if (exact_ok) {
        out = schatten_distance_real_vs_complex(d, t, 1);
        bool condition = closed_form_condition(d, t);
        if (forced == DistanceMethod::ClosedForm && !condition) {
            closed_form_trace_distance(d, t);  // throws the precondition error
        }
        if (condition) {
            Rat closed = closed_form_trace_distance(d, t) * 2;
            if (closed != *out.exact_value) {
                throw VerificationError("closed form " + to_string(closed) + " disagrees with spectral sum " +
                                        to_string(*out.exact_value) + " at d=" + std::to_string(d) +
                                        ", t=" + std::to_string(t));
            }
            out.method = DistanceMethod::ClosedForm;
        }
    } else {
        out.d = d;
        out.t = t;
        out.p = 1;
        if (closed_form_condition(d, t)) {
            out.method = DistanceMethod::ClosedForm;
            out.float_value = 2 * closed_form_trace_distance_float(d, t);
            out.notes.push_back("exact value omitted above d = " + std::to_string(options.exact_max_d));
        } else if (forced == DistanceMethod::ClosedForm) {
            closed_form_trace_distance(d, t);
        } else {
            auto est = asymptotic_trace_distance(d, t);
            out.method = DistanceMethod::Asymptotic;
            out.float_value = 2 * est.trace_distance;
            out.notes = est.notes;
        }
    }
    if (d >= 10000 && !out.regime) {
        out.regime = classify_regime(d, t);
    }
    return out;
}

Rat trace_distance_to_complex(const EnsembleSpectrum &s) {
    Rat mu = complex_haar_eigenvalue(s.d, s.t);
    Rat total = Rat(s.zero_multiplicity) * mu;
    for (const auto &e : s.entries) {
        total += Rat(e.multiplicity) * abs(e.eigenvalue - mu);
    }
    return total / 2;
}

Rat binary_phase_trace_distance(std::size_t d, std::size_t t) {
    check_dims(d, t);
    if (t > d) {
        throw UnsupportedRegimeError("the binary-phase formula only holds for t <= d (got d=" + std::to_string(d) +
                                     ", t=" + std::to_string(t) + ")");
    }
    BigInt total = 0;
    for (std::size_t k = 0; 2 * k <= t; k++) {
        total += binomial(static_cast<long>(d), t - 2 * k);
    }
    return 1 - make_rat(total, symmetric_dimension(d, t));
}

}  // namespace realhaar
