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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Eigenvalues>

#include "realhaar/applications.h"
#include "realhaar/distances.h"
#include "realhaar/exact.h"
#include "realhaar/exact_linalg.h"
#include "realhaar/harmonic.h"
#include "realhaar/moments.h"
#include "realhaar/rng.h"
#include "realhaar/spectra.h"
#include "test_util.test.h"

using namespace realhaar;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    std::string name;
    double time_limit_seconds;
    std::function<Outcome()> check;
};

Outcome fail(const std::string &why) {
    return {false, why};
}

Outcome spectrum_consistency() {
    for (std::size_t d = 2; d <= 6; d++) {
        for (std::size_t t = 1; t <= 8; t++) {
            auto s = real_haar_spectrum(d, t);
            Rat trace = 0;
            BigInt count = 0;
            for (const auto &line : s.lines) {
                trace += line.multiplicity * line.eigenvalue;
                count += line.multiplicity;
            }
            if (trace != 1 || count != binomial(static_cast<long>(d + t - 1), t)) {
                return fail("d=" + std::to_string(d) + " t=" + std::to_string(t));
            }
        }
    }
    return {true, "40 (d,t) pairs"};
}

Outcome oracle_eigen_equivalence() {
    const std::vector<std::pair<std::size_t, std::size_t>> cases = {{2, 2}, {2, 3}, {2, 4}, {3, 2},
                                                                    {3, 3}, {3, 4}, {4, 2}, {4, 3}};
    std::size_t vectors = 0;
    for (auto [d, t] : cases) {
        auto rho = build_real_moment_matrix(d, t);
        auto s = real_haar_spectrum(d, t);
        for (std::size_t m = 1; m <= 3; m++) {
            Rat want = 0;
            for (const auto &line : s.lines) {
                Rat power = 1;
                for (std::size_t i = 0; i < m; i++) {
                    power *= line.eigenvalue;
                }
                want += line.multiplicity * power;
            }
            if (trace_power(rho, m) != want) {
                return fail("tr(rho^" + std::to_string(m) + ") at d=" + std::to_string(d) + " t=" + std::to_string(t));
            }
        }
        for (const auto &line : s.lines) {
            for (const auto &v : eigenbasis_for_level(d, t, line.k)) {
                auto image = rho * v.coefficients;
                for (std::size_t i = 0; i < image.size(); i++) {
                    if (image[i] != line.eigenvalue * v.coefficients[i]) {
                        return fail("eigenvector at d=" + std::to_string(d) + " t=" + std::to_string(t) +
                                    " k=" + std::to_string(line.k));
                    }
                }
                vectors++;
            }
        }
    }
    return {true, std::to_string(vectors) + " eigenvectors exact"};
}

Outcome trace_distance_values() {
    auto half_norm = [](std::size_t d, std::size_t t) {
        return Rat(*schatten_distance_real_vs_complex(d, t, 1).exact_value / 2);
    };
    if (half_norm(2, 2) != make_rat(1, 6) || half_norm(2, 3) != make_rat(1, 4) || half_norm(3, 2) != make_rat(1, 6)) {
        return fail("small-case values");
    }
    std::size_t compared = 0;
    for (std::size_t d = 2; d <= 30; d++) {
        for (std::size_t t = 1; t <= 10; t++) {
            if (!closed_form_condition(d, t)) {
                continue;
            }
            if (closed_form_trace_distance(d, t) != half_norm(d, t)) {
                return fail("closed form at d=" + std::to_string(d) + " t=" + std::to_string(t));
            }
            compared++;
        }
    }
    return {true, std::to_string(compared) + " closed-form pairs exact"};
}

Outcome asymptotic_regime() {
    double value = closed_form_trace_distance_log_gamma(1000000, 1000);
    double target = 1 - std::exp(-0.5);
    std::ostringstream detail;
    detail.precision(8);
    detail << "value " << value << " vs " << target;
    return {std::abs(value - target) <= 5e-3, detail.str()};
}

Outcome monte_carlo_agreement() {
    const std::size_t d = 3, t = 3;
    EstimateOptions options;
    options.streams = 8;
    options.threads = std::max(1u, std::thread::hardware_concurrency());
    auto est = estimate_moment_operator(d, t, 200000, kTestSeed, Ensemble::RealHaar, options);
    auto exact = build_real_moment_matrix(d, t).to_eigen();
    Eigen::MatrixXd emp = est.real_part();
    double entry_err = (emp - exact).cwiseAbs().maxCoeff();

    std::vector<double> want;
    for (const auto &line : real_haar_spectrum(d, t).lines) {
        for (BigInt i = 0; i < line.multiplicity; i++) {
            want.push_back(to_double(line.eigenvalue));
        }
    }
    std::sort(want.begin(), want.end());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(emp, Eigen::EigenvaluesOnly);
    Eigen::VectorXd got = solver.eigenvalues();
    // The top rank-many eigenvalues are the nonzero ones; the rest sit on the complement of the
    // symmetric subspace and must be near zero.
    std::size_t offset = got.size() - want.size();
    double eig_err = 0;
    for (std::size_t i = 0; i < offset; i++) {
        eig_err = std::max(eig_err, std::abs(got[i]));
    }
    for (std::size_t i = 0; i < want.size(); i++) {
        eig_err = std::max(eig_err, std::abs(got[offset + i] - want[i]));
    }
    std::ostringstream detail;
    detail << "max entry error " << entry_err << ", max eigenvalue error " << eig_err;
    return {entry_err <= 0.01 && eig_err <= 0.01, detail.str()};
}

Outcome binary_phase() {
    std::size_t cases = 0;
    for (std::size_t d = 2; d <= 4; d++) {
        for (std::size_t t = 1; t <= std::min<std::size_t>(d, 3); t++) {
            BigInt want = 0;
            for (std::size_t k = 0; 2 * k <= t; k++) {
                want += binomial(static_cast<long>(d), t - 2 * k);
            }
            auto brute = binary_phase_spectrum_by_enumeration(d, t);
            BigInt matrix_rank = static_cast<unsigned long>(rank(build_binary_phase_matrix(d, t)));
            if (brute.rank() != want || matrix_rank != want) {
                return fail("rank at d=" + std::to_string(d) + " t=" + std::to_string(t));
            }
            if (binary_phase_trace_distance(d, t) != trace_distance_to_complex(brute)) {
                return fail("trace distance at d=" + std::to_string(d) + " t=" + std::to_string(t));
            }
            cases++;
        }
    }
    if (binary_phase_trace_distance(2, 2) != make_rat(1, 3)) {
        return fail("(2,2) value");
    }
    return {true, std::to_string(cases) + " (d,t) pairs"};
}

Outcome imaginarity_law() {
    const std::size_t n = 100000;
    std::ostringstream detail;
    detail.precision(4);
    bool pass = true;
    for (std::size_t d : {2, 3, 5}) {
        ImaginarityModel model(d);
        auto xs = sample_imaginarity(d, n, kTestSeed + d, 8, std::max(1u, std::thread::hardware_concurrency()));
        double mean = 0;
        for (double x : xs) {
            mean += x;
        }
        mean /= static_cast<double>(n);
        double z = (mean - model.mean()) / std::sqrt(model.variance() / static_cast<double>(n));
        std::sort(xs.begin(), xs.end());
        double ks = ks_statistic(xs, [&](double x) { return model.cdf(x); });
        pass = pass && std::abs(z) <= 4 && ks < 1.628 / std::sqrt(static_cast<double>(n));
        detail << "d=" << d << " z=" << z << " ks=" << ks << "; ";
    }
    detail << "critical " << 1.628 / std::sqrt(static_cast<double>(n));
    return {pass, detail.str()};
}

Outcome pi_plus_measurement() {
    const std::size_t d = 3, t = 4;
    auto pi = build_pi_plus(d, t).to_eigen();
    Rat want = 0;
    for (const auto &line : real_haar_spectrum(d, t).lines) {
        if (line.eigenvalue > complex_haar_eigenvalue(d, t)) {
            want += line.multiplicity * line.eigenvalue;
        }
    }
    double target = to_double(want);
    Rng rng(kTestSeed);
    double worst = 0;
    for (int i = 0; i < 100; i++) {
        auto psi = sample_real_haar_state(d, rng);
        auto v = tensor_power(std::span<const double>(psi), t);
        Eigen::Map<Eigen::VectorXd> x(v.data(), static_cast<Eigen::Index>(v.size()));
        worst = std::max(worst, std::abs(x.dot(pi * x) - target));
    }
    std::ostringstream detail;
    detail << "acceptance " << to_string(want) << ", max deviation " << worst;
    return {worst <= 1e-9, detail.str()};
}

Outcome combinatorial_identities() {
    Rng rng(kTestSeed);
    for (int i = 0; i < 1000; i++) {
        std::size_t n = rand_below(rng, 16), p = rand_below(rng, 16), q = rand_below(rng, 16);
        if (!eval_df_binomial_identity(n, p, q).holds()) {
            return fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
    }
    for (int i = 0; i < 500; i++) {
        std::size_t d = 2 + rand_below(rng, 4), k0 = rand_below(rng, 7), p = rand_below(rng, 7),
                    q = rand_below(rng, 7);
        if (!eval_nested_df_identity(d, k0, p, q).holds()) {
            return fail("nested d=" + std::to_string(d) + " k0=" + std::to_string(k0));
        }
    }
    return {true, "1000 + 500 instances exact"};
}

Outcome isomorphism_equivariance() {
    Rng rng(kTestSeed + 1);
    double worst = 0;
    for (int i = 0; i < 50; i++) {
        std::size_t d = 2 + rand_below(rng, 2);
        std::size_t t = 1 + rand_below(rng, 4);
        auto p = rand_poly(rng, d, t, 1 + rand_below(rng, 5));
        auto o = sample_haar_orthogonal(d, rng);
        auto lhs = poly_to_symvector(apply_orthogonal(p, o));
        auto rhs = apply_tensor_power(o, poly_to_symvector(to_float(p)), t);
        double err = 0;
        for (std::size_t j = 0; j < lhs.size(); j++) {
            err += (lhs[j] - rhs[j]) * (lhs[j] - rhs[j]);
        }
        worst = std::max(worst, std::sqrt(err));
    }
    if (worst > 1e-9) {
        return fail("equivariance error " + std::to_string(worst));
    }
    for (int i = 0; i < 200; i++) {
        std::size_t d = 1 + rand_below(rng, 3);
        std::size_t t = rand_below(rng, 5);
        auto p = rand_poly(rng, d, t, 1 + rand_below(rng, 5));
        auto q = rand_poly(rng, d, t, 1 + rand_below(rng, 5));
        if (bombieri_inner(p, q) != inner(poly_to_symvector(p), poly_to_symvector(q))) {
            return fail("inner product mismatch");
        }
    }
    std::ostringstream detail;
    detail << "max equivariance error " << worst << ", 200 inner products exact";
    return {true, detail.str()};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"spectrum consistency", 1, spectrum_consistency},
        {"oracle eigen-equivalence", 60, oracle_eigen_equivalence},
        {"trace-distance values", 0, trace_distance_values},
        {"asymptotic regime", 1, asymptotic_regime},
        {"monte carlo agreement", 60, monte_carlo_agreement},
        {"binary phase", 0, binary_phase},
        {"imaginarity law", 30, imaginarity_law},
        {"pi-plus measurement", 0, pi_plus_measurement},
        {"combinatorial identities", 5, combinatorial_identities},
        {"isomorphism equivariance", 0, isomorphism_equivariance},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        const auto &c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception &e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
            outcome.pass = false;
            outcome.detail += " (over the " + std::to_string(static_cast<int>(c.time_limit_seconds)) + " s limit)";
        }
        failures += !outcome.pass;
        std::printf("%s criterion %zu: %s [%.3f s] %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                    seconds, outcome.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
