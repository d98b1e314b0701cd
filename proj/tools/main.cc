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

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <thread>

#include "realhaar/cli.h"

namespace {

std::uint64_t default_seed() {
    if (const char *env = std::getenv("REALHAAR_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            std::cerr << "{\"error\":\"domain\",\"message\":\"REALHAAR_SEED is not an unsigned integer\"}\n";
            std::exit(2);
        }
    }
    return realhaar::kDefaultSeed;
}

}  // namespace

int main(int argc, char **argv) {
    realhaar::RunConfig config;
    config.seed = default_seed();
    config.threads = std::max(1u, std::thread::hardware_concurrency());
    std::string p_text = "1";

    CLI::App app{"Exact spectra and distances of real vs complex Haar moment operators."};
    app.require_subcommand(1);

    auto common = [&](CLI::App *sub, bool needs_t) {
        sub->add_option("--d", config.d, "Local dimension")->required();
        if (needs_t) {
            sub->add_option("--t", config.t, "Number of copies")->required();
        }
        sub->add_option("--output", config.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--cap", config.cap, "Largest d^t for dense matrices");
    };
    auto sampling = [&](CLI::App *sub) {
        sub->add_option("--N", config.samples, "Sample count");
        sub->add_option("--seed", config.seed, "Master seed (default: $REALHAAR_SEED)");
        sub->add_option("--streams", config.streams, "Independent RNG streams; fixes the result");
        sub->add_option("--threads", config.threads, "Worker threads; does not change the result");
    };

    auto *spectrum = app.add_subcommand("spectrum", "Eigenvalues and multiplicities of a moment operator");
    common(spectrum, true);
    spectrum->add_option("--ensemble", config.ensemble, "real_haar | complex_haar | binary_phase");

    auto *distance = app.add_subcommand("distance", "Schatten distance to the complex-Haar moment operator");
    common(distance, true);
    distance->add_option("--p", p_text, "Schatten order >= 1, or inf");
    distance->add_option("--ensemble", config.ensemble, "real_haar | binary_phase");
    distance->add_option("--method", config.method, "auto | spectral_sum | closed_form | asymptotic");
    distance->add_option("--exact-max-d", config.exact_max_d, "Largest d for exact spectra");

    auto *verify = app.add_subcommand("verify", "Run the exact oracle suite");
    verify->add_option("--suite", config.suite, "exact | all");
    verify->add_option("--max-dim", config.max_dim, "Largest d^t for brute-force matrices");
    verify->add_option("--cap", config.cap, "Largest d^t for dense matrices");
    sampling(verify);

    auto *mc = app.add_subcommand("montecarlo", "Empirical moment operator against the exact one");
    common(mc, true);
    sampling(mc);
    mc->add_option("--ensemble", config.ensemble, "real_haar | complex_haar | binary_phase");
    mc->add_option("--tolerance", config.tolerance, "Per-entry tolerance (default 5/sqrt(N))");

    auto *imag = app.add_subcommand("imaginarity", "Imaginarity of complex-Haar samples against its law");
    imag->add_option("--d", config.d, "Local dimension")->required();
    sampling(imag);
    imag->add_option("--ks-constant", config.ks_constant, "KS critical constant c in c/sqrt(N)");
    imag->add_option("--samples-out", config.samples_out, "Write the samples to this CSV file");

    auto *bound = app.add_subcommand("design-bound", "Epsilon floor or copy-count bounds");
    bound->add_option("--d", config.d, "Local dimension")->required();
    bound->add_option("--t", config.bound_t, "Copies: report the design epsilon floor");
    bound->add_option("--success", config.success_probability, "Success probability: copies to distinguish");
    bound->add_option("--delta", config.delta, "Imaginarity threshold: tester copy lower bound");

    auto *scan = app.add_subcommand("scan", "Distance over a (d, t) grid, as CSV");
    scan->add_option("--d-min", config.d_min, "Smallest d (inclusive)");
    scan->add_option("--d-max", config.d_max, "Largest d (inclusive)");
    scan->add_option("--t-min", config.t_min, "Smallest t (inclusive)");
    scan->add_option("--t-max", config.t_max, "Largest t (inclusive)");
    scan->add_option("--p", p_text, "Schatten order >= 1, or inf");
    scan->add_option("--ensemble", config.ensemble, "real_haar | binary_phase");
    scan->add_option("--method", config.method, "auto | spectral_sum | closed_form | asymptotic");
    scan->add_option("--exact-max-d", config.exact_max_d, "Largest d for exact spectra");
    scan->add_option("--threads", config.threads, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    if (config.command == "scan") {
        config.d = config.d_min;
    }
    if (p_text == "inf" || p_text == "infinity") {
        config.p = std::numeric_limits<double>::infinity();
    } else {
        try {
            config.p = std::stod(p_text);
        } catch (const std::exception &) {
            std::cerr << "{\"error\":\"domain\",\"message\":\"--p must be a number or inf\"}\n";
            return 2;
        }
    }
    if (config.command == "scan" || config.command == "verify") {
        config.output = config.command == "scan" ? "csv" : "json";
    }
    return realhaar::run(config, std::cout, std::cerr);
}
