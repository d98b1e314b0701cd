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

#include "realhaar/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <thread>
#include <vector>

#include "realhaar/applications.h"
#include "realhaar/distances.h"
#include "realhaar/errors.h"
#include "realhaar/exact_linalg.h"
#include "realhaar/harmonic.h"
#include "realhaar/serialize.h"
#include "realhaar/spectra.h"

namespace realhaar {

namespace {

struct CheckResult {
    std::string name;
    Json params;
    bool pass;
    std::string detail;
};

Json check_json(const CheckResult &c) {
    return {{"name", c.name}, {"params", c.params}, {"pass", c.pass}, {"detail", c.detail}};
}

Rat spectral_moment(const RealHaarSpectrum &s, std::size_t m) {
    Rat total = 0;
    for (const auto &line : s.lines) {
        Rat power = 1;
        for (std::size_t i = 0; i < m; i++) {
            power *= line.eigenvalue;
        }
        total += Rat(line.multiplicity) * power;
    }
    return total;
}

std::vector<CheckResult> exact_suite(std::size_t max_dim, std::size_t cap) {
    std::vector<CheckResult> out;
    for (std::size_t d = 2; d <= 6; d++) {
        for (std::size_t t = 1; t <= 8; t++) {
            std::size_t n = 1;
            bool fits = true;
            for (std::size_t i = 0; i < t && fits; i++) {
                n *= d;
                fits = n <= max_dim && n <= cap;
            }
            if (!fits) {
                continue;
            }
            Json params = {{"d", d}, {"t", t}};
            auto spectrum = real_haar_spectrum(d, t);
            RatMatrix rho = build_real_moment_matrix(d, t, cap);

            for (std::size_t m = 1; m <= 3; m++) {
                Rat lhs = trace_power(rho, m);
                Rat rhs = spectral_moment(spectrum, m);
                Json pm = params;
                pm["m"] = m;
                out.push_back({"trace_power", pm, lhs == rhs, "tr(rho^m) = " + to_string(lhs) + ", spectrum " +
                                                                   to_string(rhs)});
            }

            bool eig_ok = true;
            std::string eig_detail = "all eigen-relations exact";
            for (const auto &line : spectrum.lines) {
                auto vs = eigenbasis_for_level(d, t, line.k, cap);
                if (BigInt(static_cast<unsigned long>(vs.size())) != line.multiplicity) {
                    eig_ok = false;
                    eig_detail = "level " + std::to_string(line.k) + " has " + std::to_string(vs.size()) +
                                 " vectors, expected " + to_string(line.multiplicity);
                    break;
                }
                for (const auto &v : vs) {
                    auto image = rho * v.coefficients;
                    for (std::size_t i = 0; i < image.size() && eig_ok; i++) {
                        if (image[i] != line.eigenvalue * v.coefficients[i]) {
                            eig_ok = false;
                            eig_detail = "rho v != lambda v at level " + std::to_string(line.k);
                        }
                    }
                }
            }
            out.push_back({"eigenvectors", params, eig_ok, eig_detail});

            std::size_t r = rank(rho);
            BigInt expected = symmetric_dimension(d, t);
            out.push_back({"rank_real_haar", params, BigInt(static_cast<unsigned long>(r)) == expected,
                           "rank " + std::to_string(r) + ", expected " + to_string(expected)});

            if (d <= 4 && t <= std::min<std::size_t>(d, 3)) {
                std::size_t rb = rank(build_binary_phase_matrix(d, t, cap));
                BigInt want = 0;
                for (std::size_t k = 0; 2 * k <= t; k++) {
                    want += binomial(static_cast<long>(d), t - 2 * k);
                }
                out.push_back({"rank_binary_phase", params, BigInt(static_cast<unsigned long>(rb)) == want,
                               "rank " + std::to_string(rb) + ", expected " + to_string(want)});
                Rat brute = trace_distance_to_complex(binary_phase_spectrum_by_enumeration(d, t, cap));
                Rat formula = binary_phase_trace_distance(d, t);
                out.push_back({"binary_phase_distance", params, brute == formula,
                               "formula " + to_string(formula) + ", brute force " + to_string(brute)});
            }
        }
    }

    std::size_t lemma_ok = 0;
    std::size_t lemma_total = 0;
    for (std::size_t n = 0; n <= 8; n++) {
        for (std::size_t p = 0; p <= 8; p++) {
            for (std::size_t q = 0; q <= 8; q++) {
                lemma_total++;
                lemma_ok += eval_df_binomial_identity(n, p, q).holds();
            }
        }
    }
    out.push_back({"df_binomial_identity", {{"n_max", 8}, {"p_max", 8}, {"q_max", 8}}, lemma_ok == lemma_total,
                   std::to_string(lemma_ok) + "/" + std::to_string(lemma_total) + " exact"});

    std::size_t nested_ok = 0;
    std::size_t nested_total = 0;
    for (std::size_t d = 2; d <= 4; d++) {
        for (std::size_t k0 = 0; k0 <= 4; k0++) {
            for (std::size_t p = 0; p <= 4; p++) {
                for (std::size_t q = 0; q <= 4; q++) {
                    nested_total++;
                    nested_ok += eval_nested_df_identity(d, k0, p, q).holds();
                }
            }
        }
    }
    out.push_back({"nested_df_identity", {{"d_min", 2}, {"d_max", 4}, {"k0_max", 4}, {"p_max", 4}, {"q_max", 4}},
                   nested_ok == nested_total,
                   std::to_string(nested_ok) + "/" + std::to_string(nested_total) + " exact"});

    std::size_t cf_ok = 0;
    std::size_t cf_total = 0;
    std::string cf_detail;
    for (std::size_t d = 2; d <= 30; d++) {
        for (std::size_t t = 1; t <= 10; t++) {
            if (!closed_form_condition(d, t)) {
                continue;
            }
            cf_total++;
            Rat spectral = *schatten_distance_real_vs_complex(d, t, 1).exact_value / 2;
            if (spectral == closed_form_trace_distance(d, t)) {
                cf_ok++;
            } else if (cf_detail.empty()) {
                cf_detail = "first mismatch at d=" + std::to_string(d) + ", t=" + std::to_string(t) + "; ";
            }
        }
    }
    out.push_back({"closed_form_vs_spectral_sum", {{"d_max", 30}, {"t_max", 10}}, cf_ok == cf_total,
                   cf_detail + std::to_string(cf_ok) + "/" + std::to_string(cf_total) + " exact"});
    return out;
}

struct MonteCarloResult {
    Json json;
    bool pass;
    std::vector<std::string> csv_rows;
};

MonteCarloResult montecarlo(const RunConfig &c) {
    Ensemble ensemble = parse_ensemble(c.ensemble);
    EstimateOptions options{c.streams, c.threads, c.cap};
    FloatMatrix est = estimate_moment_operator(c.d, c.t, c.samples, c.seed, ensemble, options);

    RatMatrix exact;
    if (ensemble == Ensemble::RealHaar) {
        exact = build_real_moment_matrix(c.d, c.t, c.cap);
    } else if (ensemble == Ensemble::BinaryPhase) {
        exact = build_binary_phase_matrix(c.d, c.t, c.cap);
    } else {
        exact = build_sym_projector(c.d, c.t, c.cap) * complex_haar_eigenvalue(c.d, c.t);
    }
    double tol = c.tolerance.value_or(5 / std::sqrt(static_cast<double>(c.samples)));
    std::size_t n = est.n;
    double worst = 0;
    MonteCarloResult out;
    out.csv_rows.reserve(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            double want = to_double(exact(i, j));
            double got = est(i, j);
            double dev = std::abs(got - want);
            if (est.is_complex()) {
                dev = std::hypot(dev, est.imag[i * n + j]);
            }
            worst = std::max(worst, dev);
            out.csv_rows.push_back(std::to_string(i) + "," + std::to_string(j) + "," + format_double(want) + "," +
                                   format_double(got) + "," + format_double(dev));
        }
    }

    // Top eigenvalues of the real plane, against the exact nonzero spectrum.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(est.real_part());
    Eigen::VectorXd evals = solver.eigenvalues();
    std::vector<Rat> want_eigs;
    if (ensemble == Ensemble::RealHaar) {
        for (const auto &line : real_haar_spectrum(c.d, c.t).lines) {
            for (BigInt m = 0; m < line.multiplicity; m++) {
                want_eigs.push_back(line.eigenvalue);
            }
        }
    } else {
        auto s = ensemble == Ensemble::BinaryPhase ? binary_phase_spectrum_by_enumeration(c.d, c.t, c.cap)
                                                   : complex_haar_spectrum(c.d, c.t);
        for (const auto &e : s.entries) {
            for (BigInt m = 0; m < e.multiplicity; m++) {
                want_eigs.push_back(e.eigenvalue);
            }
        }
    }
    std::sort(want_eigs.begin(), want_eigs.end());
    std::size_t r = want_eigs.size();
    Json got_json = Json::array();
    Json want_json = Json::array();
    double eig_worst = 0;
    for (std::size_t i = 0; i < r; i++) {
        double got = evals(static_cast<Eigen::Index>(n - r + i));
        got_json.push_back(got);
        want_json.push_back(rat_json(want_eigs[i]));
        eig_worst = std::max(eig_worst, std::abs(got - to_double(want_eigs[i])));
    }
    out.pass = worst <= tol && eig_worst <= tol;
    out.json = {
        {"d", c.d},
        {"t", c.t},
        {"ensemble", ensemble_name(ensemble)},
        {"samples", c.samples},
        {"seed", c.seed},
        {"streams", c.streams},
        {"tolerance", tol},
        {"max_entry_deviation", worst},
        {"max_eigenvalue_deviation", eig_worst},
        {"eigenvalues_empirical", got_json},
        {"eigenvalues_exact", want_json},
        {"pass", out.pass},
    };
    return out;
}

int cmd_spectrum(const RunConfig &c, std::ostream &out) {
    Ensemble e = parse_ensemble(c.ensemble);
    if (c.output == "csv") {
        out << "k,eig_num,eig_den,eig_float,multiplicity\n";
        auto row = [&](const std::string &k, const Rat &eig, const BigInt &mult) {
            out << k << ',' << eig.get_num().get_str() << ',' << eig.get_den().get_str() << ','
                << format_double(to_double(eig)) << ',' << mult.get_str() << '\n';
        };
        if (e == Ensemble::RealHaar) {
            for (const auto &line : real_haar_spectrum(c.d, c.t).lines) {
                row(std::to_string(line.k), line.eigenvalue, line.multiplicity);
            }
        } else {
            auto s = e == Ensemble::ComplexHaar ? complex_haar_spectrum(c.d, c.t) : binary_phase_spectrum(c.d, c.t);
            for (const auto &entry : s.entries) {
                row("", entry.eigenvalue, entry.multiplicity);
            }
        }
        return 0;
    }
    Json j;
    if (e == Ensemble::RealHaar) {
        j = to_json(real_haar_spectrum(c.d, c.t));
    } else if (e == Ensemble::ComplexHaar) {
        j = to_json(complex_haar_spectrum(c.d, c.t), "complex_haar");
    } else {
        j = to_json(binary_phase_spectrum(c.d, c.t), "binary_phase");
    }
    out << j.dump(2) << '\n';
    return 0;
}

DistanceOptions distance_options(const RunConfig &c) {
    DistanceOptions options;
    options.exact_max_d = c.exact_max_d;
    if (c.method == "spectral_sum") {
        options.method = DistanceMethod::SpectralSum;
    } else if (c.method == "closed_form") {
        options.method = DistanceMethod::ClosedForm;
    } else if (c.method == "asymptotic") {
        options.method = DistanceMethod::Asymptotic;
    } else if (c.method != "auto") {
        throw DomainError("unknown method '" + c.method + "'");
    }
    return options;
}

DistanceReport distance_report(const RunConfig &c, std::size_t d, std::size_t t) {
    Ensemble e = parse_ensemble(c.ensemble);
    if (e == Ensemble::RealHaar) {
        return real_vs_complex_distance(d, t, c.p, distance_options(c));
    }
    if (e == Ensemble::ComplexHaar) {
        throw DomainError("distance compares an ensemble against complex Haar; pick real_haar or binary_phase");
    }
    if (c.p != 1) {
        throw DomainError("binary-phase distances are available for p = 1 only");
    }
    DistanceReport r;
    r.d = d;
    r.t = t;
    r.p = 1;
    r.exact_value = binary_phase_trace_distance(d, t) * 2;
    r.float_value = to_double(*r.exact_value);
    r.method = DistanceMethod::ClosedForm;
    r.notes.push_back("binary_phase ensemble");
    return r;
}

int cmd_distance(const RunConfig &c, std::ostream &out) {
    auto report = distance_report(c, c.d, c.t);
    if (c.output == "csv") {
        out << kScanCsvHeader << '\n' << scan_csv_row(report) << '\n';
    } else {
        out << to_json(report).dump(2) << '\n';
    }
    return 0;
}

int cmd_verify(const RunConfig &c, std::ostream &out) {
    if (c.suite != "exact" && c.suite != "all") {
        throw DomainError("unknown suite '" + c.suite + "' (expected exact or all)");
    }
    auto checks = exact_suite(c.max_dim, c.cap);
    if (c.suite == "all") {
        RunConfig mc = c;
        mc.d = 2;
        mc.t = 2;
        for (const char *ens : {"real_haar", "binary_phase", "complex_haar"}) {
            mc.ensemble = ens;
            auto r = montecarlo(mc);
            checks.push_back({"montecarlo", {{"ensemble", ens}, {"d", 2}, {"t", 2}, {"samples", mc.samples}}, r.pass,
                              "max entry deviation " + format_double(r.json["max_entry_deviation"].get<double>())});
        }
    }
    std::size_t passed = 0;
    Json list = Json::array();
    for (const auto &ch : checks) {
        passed += ch.pass;
        list.push_back(check_json(ch));
    }
    Json j = {{"suite", c.suite},
              {"max_dim", c.max_dim},
              {"checks", list},
              {"passed", passed},
              {"failed", checks.size() - passed}};
    out << j.dump(2) << '\n';
    return passed == checks.size() ? 0 : 4;
}

int cmd_montecarlo(const RunConfig &c, std::ostream &out) {
    auto r = montecarlo(c);
    if (c.output == "csv") {
        out << "row,col,exact,empirical,deviation\n";
        for (const auto &row : r.csv_rows) {
            out << row << '\n';
        }
    } else {
        out << r.json.dump(2) << '\n';
    }
    return r.pass ? 0 : 4;
}

int cmd_imaginarity(const RunConfig &c, std::ostream &out) {
    if (c.samples == 0) {
        throw DomainError("sample count must be >= 1");
    }
    ImaginarityModel model(c.d);
    auto samples = sample_imaginarity(c.d, c.samples, c.seed, c.streams, c.threads);
    if (!c.samples_out.empty()) {
        std::ofstream f(c.samples_out);
        if (!f) {
            throw DomainError("cannot open '" + c.samples_out + "' for writing");
        }
        f << "imaginarity\n";
        for (double x : samples) {
            f << format_double(x) << '\n';
        }
    }
    double mean = 0;
    for (double x : samples) {
        mean += x;
    }
    mean /= static_cast<double>(samples.size());
    double se = std::sqrt(model.variance() / static_cast<double>(samples.size()));
    std::sort(samples.begin(), samples.end());
    double ks = ks_statistic(samples, [&](double x) { return model.cdf(x); });
    double critical = ks_critical_value(samples.size(), c.ks_constant);
    Rat expected = imaginarity_mean(c.d);
    bool mean_ok = std::abs(mean - to_double(expected)) <= 4 * se;
    bool ks_ok = ks < critical;
    Json j = {
        {"d", c.d},
        {"samples", c.samples},
        {"seed", c.seed},
        {"streams", c.streams},
        {"mean", mean},
        {"expected_mean", rat_json(expected)},
        {"standard_error", se},
        {"mean_pass", mean_ok},
        {"ks_statistic", ks},
        {"ks_critical", critical},
        {"ks_pass", ks_ok},
    };
    out << j.dump(2) << '\n';
    return mean_ok && ks_ok ? 0 : 4;
}

int cmd_design_bound(const RunConfig &c, std::ostream &out) {
    int given = c.bound_t.has_value() + c.success_probability.has_value() + c.delta.has_value();
    if (given != 1) {
        throw DomainError("design-bound needs exactly one of --t, --success, --delta");
    }
    BoundReport r;
    if (c.bound_t) {
        r = epsilon_floor_report(c.d, *c.bound_t);
    } else if (c.success_probability) {
        r = distinguishing_report(c.d, *c.success_probability);
    } else {
        r = tester_report(c.d, *c.delta);
    }
    out << to_json(r).dump(2) << '\n';
    return 0;
}

int cmd_scan(const RunConfig &c, std::ostream &out) {
    if (c.d_min < 2 || c.d_min > c.d_max || c.t_min < 1 || c.t_min > c.t_max) {
        throw DomainError("scan needs 2 <= d_min <= d_max and 1 <= t_min <= t_max");
    }
    std::vector<std::pair<std::size_t, std::size_t>> grid;
    for (std::size_t d = c.d_min; d <= c.d_max; d++) {
        for (std::size_t t = c.t_min; t <= c.t_max; t++) {
            grid.emplace_back(d, t);
        }
    }
    std::vector<std::string> rows(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    auto work = [&](std::size_t i) {
        try {
            rows[i] = scan_csv_row(distance_report(c, grid[i].first, grid[i].second));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    std::size_t threads = std::clamp<std::size_t>(c.threads, 1, grid.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; w++) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < grid.size(); i += threads) {
                work(i);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    out << kScanCsvHeader << '\n';
    for (const auto &row : rows) {
        out << row << '\n';
    }
    return 0;
}

int exit_code(const Error &e) {
    if (dynamic_cast<const ResourceError *>(&e)) {
        return 3;
    }
    if (dynamic_cast<const VerificationError *>(&e)) {
        return 4;
    }
    return 2;
}

}  // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        if (config.d < 2) {
            throw DomainError("d must be >= 2 (got " + std::to_string(config.d) + ")");
        }
        if (config.output != "json" && config.output != "csv") {
            throw DomainError("output must be json or csv");
        }
        static const std::vector<std::pair<std::string, std::function<int(const RunConfig &, std::ostream &)>>>
            commands = {
                {"spectrum", cmd_spectrum},       {"distance", cmd_distance},
                {"verify", cmd_verify},           {"montecarlo", cmd_montecarlo},
                {"imaginarity", cmd_imaginarity}, {"design-bound", cmd_design_bound},
                {"scan", cmd_scan},
            };
        for (const auto &[name, fn] : commands) {
            if (name == config.command) {
                int code = fn(config, out);
                if (code == 4) {
                    throw VerificationError(config.command + ": one or more checks failed; see the report");
                }
                return code;
            }
        }
        throw DomainError("unknown command '" + config.command + "'");
    } catch (const Error &e) {
        Json j = {{"error", e.kind()}, {"message", e.what()}};
        err << j.dump() << '\n';
        return exit_code(e);
    }
}

}  // namespace realhaar
