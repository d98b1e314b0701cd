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

#include "realhaar/applications.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "realhaar/distances.h"
#include "realhaar/errors.h"
#include "realhaar/moments.h"
#include "realhaar/rng.h"

namespace realhaar {

Rat design_epsilon_floor(std::size_t d, std::size_t t) {
    return *schatten_distance_real_vs_complex(d, t, 1).exact_value / 2;
}

double copies_to_distinguish(std::size_t d, double p) {
    if (d < 2) {
        throw DomainError("d must be >= 2");
    }
    if (!(p > 0.5 && p < 1)) {
        throw DomainError("success probability must lie in (1/2, 1)");
    }
    double alpha2 = 2 * std::log(1 / (2 * (1 - p)));
    if (alpha2 > 2 * (1 + 1e-12)) {
        std::ostringstream msg;
        msg << "p = " << p << " needs alpha = sqrt(2 ln(1/(2(1-p)))) = " << std::sqrt(alpha2)
            << " > sqrt(2), outside the window where the constant-regime expansion holds (p <= 1 - e^{-1}/2)";
        throw UnsupportedRegimeError(msg.str());
    }
    return std::sqrt(alpha2 * static_cast<double>(d));
}

double imaginarity(std::span<const std::complex<double>> state) {
    double norm2 = 0;
    std::complex<double> overlap = 0;
    for (auto z : state) {
        norm2 += std::norm(z);
        overlap += z * z;
    }
    if (state.empty() || std::abs(std::sqrt(norm2) - 1) > 1e-9) {
        throw DomainError("imaginarity needs a unit vector (norm " + std::to_string(std::sqrt(norm2)) + ")");
    }
    return std::clamp(1 - std::norm(overlap), 0.0, 1.0);
}

double imaginarity_cdf(std::size_t d, double delta) {
    return ImaginarityModel(d).cdf(delta);
}

Rat imaginarity_mean(std::size_t d) {
    if (d < 2) {
        throw DomainError("d must be >= 2");
    }
    return 1 - make_rat(2, static_cast<unsigned long>(d + 1));
}

ImaginarityModel::ImaginarityModel(std::size_t dim) : d(dim) {
    if (dim < 2) {
        throw DomainError("d must be >= 2");
    }
}

double ImaginarityModel::shape() const {
    return (static_cast<double>(d) - 1) / 2;
}

double ImaginarityModel::cdf(double delta) const {
    if (!(delta >= 0 && delta <= 1)) {
        throw DomainError("delta must lie in [0, 1]");
    }
    return std::pow(delta, shape());
}

double ImaginarityModel::mean() const {
    return shape() / (shape() + 1);
}

double ImaginarityModel::variance() const {
    double a = shape();
    return a / ((a + 1) * (a + 1) * (a + 2));
}

double tester_delta_limit(std::size_t d) {
    return std::pow(3.0, -2.0 / (static_cast<double>(d) - 1));
}

double tester_copy_lower_bound(std::size_t d, double delta) {
    if (d < 2) {
        throw DomainError("d must be >= 2");
    }
    double limit = tester_delta_limit(d);
    if (!(delta >= 0 && delta < limit)) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "delta = " << delta << " violates delta < 3^{-2/(d-1)} = " << limit
            << ", the condition the copy-bound proof needs (delta^{(d-1)/2} < 1/3)";
        double stated = std::pow(3.0, -2.0 / (static_cast<double>(d) + 1));
        if (delta >= limit && delta < stated) {
            msg << "; the proposition's stated threshold 3^{-2/(d+1)} = " << stated
                << " would admit it, but that threshold disagrees with the proof";
        }
        throw PreconditionError(msg.str());
    }
    double tail = std::pow(delta, (static_cast<double>(d) - 1) / 2);
    return std::sqrt(2 * std::log(1 / (2.0 / 3.0 + tail)) * static_cast<double>(d));
}

double ks_statistic(std::span<const double> sorted, const std::function<double(double)> &cdf) {
    if (sorted.empty()) {
        throw DomainError("KS statistic of an empty sample");
    }
    double n = static_cast<double>(sorted.size());
    double worst = 0;
    for (std::size_t i = 0; i < sorted.size(); i++) {
        double x = sorted[i];
        if (!(x >= 0 && x <= 1)) {
            throw DomainError("KS samples must lie in [0, 1]");
        }
        if (i > 0 && x < sorted[i - 1]) {
            throw DomainError("KS samples must be sorted ascending");
        }
        double f = cdf(x);
        worst = std::max({worst, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return worst;
}

double ks_critical_value(std::size_t n, double c) {
    return c / std::sqrt(static_cast<double>(n));
}

std::vector<double> sample_imaginarity(std::size_t d, std::size_t n, std::uint64_t seed, std::size_t streams,
                                       std::size_t threads) {
    if (d < 2) {
        throw DomainError("d must be >= 2");
    }
    streams = std::max<std::size_t>(1, streams);
    std::vector<std::size_t> offsets(streams + 1, 0);
    for (std::size_t s = 0; s < streams; s++) {
        offsets[s + 1] = offsets[s] + n / streams + (s < n % streams ? 1 : 0);
    }
    std::vector<double> out(n);
    auto run = [&](std::size_t s) {
        Rng rng = Rng::for_stream(seed, s);
        for (std::size_t i = offsets[s]; i < offsets[s + 1]; i++) {
            auto psi = sample_complex_haar_state(d, rng);
            out[i] = imaginarity(psi);
        }
    };
    threads = std::clamp<std::size_t>(threads, 1, streams);
    if (threads == 1) {
        for (std::size_t s = 0; s < streams; s++) {
            run(s);
        }
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < threads; w++) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < streams; s += threads) {
                    run(s);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    return out;
}

BoundReport epsilon_floor_report(std::size_t d, std::size_t t) {
    BoundReport out;
    out.d = d;
    out.t = t;
    out.epsilon_floor = design_epsilon_floor(d, t);
    out.notes.push_back("every real-valued epsilon-approximate t-design has epsilon >= epsilon_floor");
    return out;
}

BoundReport distinguishing_report(std::size_t d, double p) {
    BoundReport out;
    out.d = d;
    out.parameter_name = "p";
    out.parameter = p;
    out.copies = copies_to_distinguish(d, p);
    out.notes.push_back("asymptotic estimate: t ~ sqrt(2 ln(1/(2(1-p))) d), lower-order terms unquantified");
    return out;
}

BoundReport tester_report(std::size_t d, double delta) {
    BoundReport out;
    out.d = d;
    out.parameter_name = "delta";
    out.parameter = delta;
    out.copies = tester_copy_lower_bound(d, delta);
    out.notes.push_back("asymptotic estimate: lower bound on copies for any imaginarity tester");
    out.notes.push_back("validity condition enforced: delta < 3^{-2/(d-1)}");
    return out;
}

Eigen::MatrixXd orthogonal_twirl(const Eigen::MatrixXd &m, std::size_t d, std::size_t t, std::size_t samples,
                                 std::uint64_t seed) {
    std::size_t n = tensor_dimension(d, t, static_cast<std::size_t>(-1));
    if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n) {
        throw DomainError("twirled operator must be d^t x d^t");
    }
    if (samples == 0) {
        throw DomainError("twirl needs at least one sample");
    }
    Rng rng(seed);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd half(n, n);
    std::vector<double> col(n);
    for (std::size_t s = 0; s < samples; s++) {
        Eigen::MatrixXd o = sample_haar_orthogonal(d, rng);
        // O^t M, column by column, then O^t (O^t M)^T = (O^t M O^tT)^T.
        for (std::size_t pass = 0; pass < 2; pass++) {
            const Eigen::MatrixXd &src = pass == 0 ? m : half;
            Eigen::MatrixXd dst(n, n);
            for (std::size_t j = 0; j < n; j++) {
                for (std::size_t i = 0; i < n; i++) {
                    col[i] = pass == 0 ? src(i, j) : src(j, i);
                }
                auto v = apply_tensor_power(o, col, t);
                for (std::size_t i = 0; i < n; i++) {
                    dst(i, j) = v[i];
                }
            }
            if (pass == 0) {
                half = dst;
            } else {
                acc += dst.transpose();
            }
        }
    }
    return acc / static_cast<double>(samples);
}

}  // namespace realhaar
