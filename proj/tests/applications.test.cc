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

#include "gtest/gtest.h"

#include "realhaar/distances.h"
#include "realhaar/errors.h"
#include "realhaar/moments.h"
#include "test_util.test.h"

using namespace realhaar;

TEST(applications, design_epsilon_floor) {
    ASSERT_EQ(design_epsilon_floor(2, 2), make_rat(1, 6));
    ASSERT_EQ(design_epsilon_floor(3, 2), make_rat(1, 6));
    for (std::size_t d = 2; d <= 12; d++) {
        ASSERT_EQ(design_epsilon_floor(d, 1), 0);
    }
}

TEST(applications, real_haar_is_the_best_real_design) {
    for (std::size_t d = 2; d <= 4; d++) {
        for (std::size_t t = 1; t <= std::min<std::size_t>(d, 3); t++) {
            ASSERT_LE(design_epsilon_floor(d, t), binary_phase_trace_distance(d, t)) << d << "," << t;
        }
    }
}

TEST(applications, copies_to_distinguish) {
    ASSERT_LT(copies_to_distinguish(100, 0.5 + 1e-9), 1e-3);
    ASSERT_NEAR(copies_to_distinguish(100, 0.75), std::sqrt(2 * std::log(2.0) * 100), 1e-12);
    ASSERT_NEAR(copies_to_distinguish(100, 0.75), 11.77, 5e-3);
    double edge = 1 - std::exp(-1.0) / 2;
    ASSERT_NEAR(copies_to_distinguish(1000, edge), std::sqrt(2000.0), 1e-9);
    ASSERT_THROW(copies_to_distinguish(100, 1.0), DomainError);
    ASSERT_THROW(copies_to_distinguish(100, 0.5), DomainError);
    ASSERT_THROW(copies_to_distinguish(100, 0.9), UnsupportedRegimeError);
}

TEST(applications, copies_invert_the_asymptotic_distance) {
    for (std::size_t d : {100, 10000, 1000000}) {
        for (double p : {0.51, 0.6, 0.7, 0.75, 0.8, 0.815}) {
            double t = copies_to_distinguish(d, p);
            ASSERT_NEAR(1 - std::exp(-t * t / (2.0 * static_cast<double>(d))), 2 * p - 1, 1e-9);
        }
    }
}

TEST(applications, imaginarity) {
    std::vector<std::complex<double>> zero{1, 0};
    ASSERT_EQ(imaginarity(zero), 0);
    double h = 1 / std::sqrt(2.0);
    std::vector<std::complex<double>> plus_i{{h, 0}, {0, h}};
    ASSERT_NEAR(imaginarity(plus_i), 1, 1e-15);

    Rng rng(kTestSeed);
    for (int i = 0; i < 100; i++) {
        auto x = sample_real_haar_state(5, rng);
        std::vector<std::complex<double>> z(x.begin(), x.end());
        ASSERT_NEAR(imaginarity(z), 0, 1e-12);
        auto c = sample_complex_haar_state(5, rng);
        double v = imaginarity(c);
        ASSERT_GE(v, 0);
        ASSERT_LE(v, 1);
    }
    std::vector<std::complex<double>> long_vec{1, 1};
    ASSERT_THROW(imaginarity(long_vec), DomainError);
}

TEST(applications, imaginarity_law) {
    for (std::size_t d = 2; d <= 6; d++) {
        ASSERT_EQ(imaginarity_cdf(d, 0), 0);
        ASSERT_EQ(imaginarity_cdf(d, 1), 1);
    }
    ASSERT_NEAR(imaginarity_cdf(3, 0.25), 0.25, 1e-15);
    ASSERT_THROW(imaginarity_cdf(3, 1.5), DomainError);
    ASSERT_THROW(imaginarity_cdf(1, 0.5), DomainError);

    ASSERT_EQ(imaginarity_mean(3), make_rat(1, 2));
    ASSERT_EQ(imaginarity_mean(2), make_rat(1, 3));
    ASSERT_GT(imaginarity_mean(1000000), make_rat(999997, 1000000));
    for (std::size_t d = 2; d <= 9; d++) {
        ASSERT_NEAR(ImaginarityModel(d).mean(), to_double(imaginarity_mean(d)), 1e-15);
    }
}

TEST(applications, imaginarity_samples_follow_the_law) {
    const std::size_t n = 100000;
    for (std::size_t d : {2, 3, 5}) {
        ImaginarityModel model(d);
        auto xs = sample_imaginarity(d, n, kTestSeed + d, 8, 4);
        double mean = 0;
        for (double x : xs) {
            mean += x;
        }
        mean /= static_cast<double>(n);
        ASSERT_NEAR(mean, model.mean(), 4 * std::sqrt(model.variance() / static_cast<double>(n))) << d;
        std::sort(xs.begin(), xs.end());
        ASSERT_LT(ks_statistic(xs, [&](double x) { return model.cdf(x); }), ks_critical_value(n)) << d;
    }
}

TEST(applications, sample_imaginarity_is_independent_of_threads) {
    ASSERT_EQ(sample_imaginarity(3, 5001, 7, 6, 1), sample_imaginarity(3, 5001, 7, 6, 6));
}

TEST(applications, tester_copy_lower_bound) {
    ASSERT_NEAR(tester_copy_lower_bound(100, 0), std::sqrt(2 * std::log(1.5) * 100), 1e-12);
    ASSERT_NEAR(tester_copy_lower_bound(100, 0), 9.01, 5e-3);
    ASSERT_NEAR(tester_copy_lower_bound(1024, 0), 28.8, 0.05);
    double limit = tester_delta_limit(10);
    ASSERT_NEAR(limit, std::pow(3.0, -2.0 / 9), 1e-15);
    ASSERT_LT(tester_copy_lower_bound(10, limit * (1 - 1e-12)), 1e-4);
    ASSERT_THROW(tester_copy_lower_bound(10, limit), PreconditionError);
    ASSERT_THROW(tester_copy_lower_bound(10, -0.1), PreconditionError);

    // Between the proof's and the statement's thresholds: rejected, and the message says why.
    double stated = std::pow(3.0, -2.0 / 11);
    try {
        tester_copy_lower_bound(10, (limit + stated) / 2);
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError &e) {
        ASSERT_NE(std::string(e.what()).find("3^{-2/(d+1)}"), std::string::npos);
    }
}

TEST(applications, ks_statistic) {
    std::vector<double> one{0.5};
    ASSERT_NEAR(ks_statistic(one, [](double x) { return x; }), 0.5, 1e-15);

    Rng rng(kTestSeed);
    std::vector<double> xs(100000);
    for (auto &x : xs) {
        x = rng.uniform();
    }
    std::sort(xs.begin(), xs.end());
    ASSERT_LT(ks_statistic(xs, [](double x) { return x; }), 1.63 / std::sqrt(100000.0));
    // Against a wrong law the statistic is large.
    ASSERT_GT(ks_statistic(xs, [](double x) { return x * x; }), 0.2);

    std::vector<double> empty;
    ASSERT_THROW(ks_statistic(empty, [](double x) { return x; }), DomainError);
    std::vector<double> unsorted{0.7, 0.2};
    ASSERT_THROW(ks_statistic(unsorted, [](double x) { return x; }), DomainError);
    std::vector<double> outside{0.2, 1.5};
    ASSERT_THROW(ks_statistic(outside, [](double x) { return x; }), DomainError);
    ASSERT_NEAR(ks_critical_value(10000), 0.01628, 1e-15);
}

TEST(applications, twirl_of_a_real_state_is_the_real_moment) {
    Rng rng(kTestSeed);
    auto psi = sample_real_haar_state(2, rng);
    auto v = tensor_power(std::span<const double>(psi), 2);
    Eigen::Map<Eigen::VectorXd> x(v.data(), 4);
    Eigen::MatrixXd state = x * x.transpose();
    auto twirled = orthogonal_twirl(state, 2, 2, 20000, kTestSeed + 1);
    Eigen::MatrixXd rho = build_real_moment_matrix(2, 2).to_eigen();
    ASSERT_LT((twirled - rho).cwiseAbs().maxCoeff(), 0.02);
}

TEST(applications, twirl_fixes_the_complex_moment) {
    for (std::size_t d = 2; d <= 3; d++) {
        for (std::size_t t = 1; t <= 3; t++) {
            Eigen::MatrixXd rho_c = (build_sym_projector(d, t) * complex_haar_eigenvalue(d, t)).to_eigen();
            auto twirled = orthogonal_twirl(rho_c, d, t, 20, kTestSeed);
            ASSERT_LT((twirled - rho_c).cwiseAbs().maxCoeff(), 1e-9);
        }
    }
}

TEST(applications, bound_reports) {
    auto e = epsilon_floor_report(2, 2);
    ASSERT_EQ(*e.epsilon_floor, make_rat(1, 6));
    auto p = distinguishing_report(100, 0.75);
    ASSERT_EQ(p.parameter_name, "p");
    ASSERT_NEAR(p.copies, 11.774, 1e-3);
    auto t = tester_report(100, 0);
    ASSERT_EQ(t.parameter_name, "delta");
    ASSERT_GE(t.copies, 0);
}
