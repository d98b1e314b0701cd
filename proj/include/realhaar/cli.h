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

#ifndef REALHAAR_CLI_H
#define REALHAAR_CLI_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "realhaar/moments.h"

namespace realhaar {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// One CLI invocation. Fields a command does not use are ignored.
struct RunConfig {
    /// spectrum | distance | verify | montecarlo | imaginarity | design-bound | scan
    std::string command;
    std::size_t d = 2;
    std::size_t t = 1;
    /// Schatten order; infinity allowed.
    double p = 1;
    std::uint64_t samples = 200000;
    std::uint64_t seed = kDefaultSeed;
    std::string ensemble = "real_haar";
    /// json | csv
    std::string output = "json";
    std::size_t cap = kDefaultMatrixCap;
    std::size_t streams = 8;
    std::size_t threads = 1;

    /// distance: auto | spectral_sum | closed_form | asymptotic
    std::string method = "auto";
    std::size_t exact_max_d = 20000;

    /// verify
    std::string suite = "exact";
    std::size_t max_dim = 256;

    /// montecarlo: per-entry tolerance; defaults to 5/sqrt(N).
    std::optional<double> tolerance;
    /// imaginarity: KS critical constant.
    double ks_constant = 1.628;
    /// imaginarity: optional CSV dump of the samples.
    std::string samples_out;

    /// design-bound: exactly one of t (epsilon floor), success probability, or delta.
    std::optional<std::size_t> bound_t;
    std::optional<double> success_probability;
    std::optional<double> delta;

    /// scan grid, inclusive.
    std::size_t d_min = 2;
    std::size_t d_max = 6;
    std::size_t t_min = 1;
    std::size_t t_max = 8;
};

/// Runs one command, writing the artifact to `out` and, on failure, a one-line JSON error object to
/// `err`. Returns the exit status: 0 success, 2 domain/precondition/regime error, 3 resource cap,
/// 4 verification failure.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace realhaar

#endif
