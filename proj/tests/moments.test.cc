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

#include "realhaar/moments.h"

#include <cmath>

#include "gtest/gtest.h"

#include "realhaar/errors.h"
#include "realhaar/exact_linalg.h"
#include "realhaar/spectra.h"
#include "test_util.test.h"

using namespace realhaar;

using Tuple = std::vector<std::size_t>;

static std::size_t idx(const Tuple &x, std::size_t d) {
    return tuple_to_index(x, d);
}

// O^{\otimes t} as a dense matrix, one column per basis vector.
static Eigen::MatrixXd dense_tensor_power(const Eigen::MatrixXd &o, std::size_t t) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
    for (std::size_t k = 0; k < t; k++) {
        Eigen::MatrixXd next(out.rows() * o.rows(), out.cols() * o.cols());
        for (Eigen::Index i = 0; i < out.rows(); i++) {
            for (Eigen::Index j = 0; j < out.cols(); j++) {
                next.block(i * o.rows(), j * o.cols(), o.rows(), o.cols()) = out(i, j) * o;
            }
        }
        out = next;
    }
    return out;
}

TEST(moments, basis_ordering) {
    ASSERT_EQ(index_to_tuple(1, 2, 2), (Tuple{0, 1}));
    ASSERT_EQ(index_to_tuple(2, 2, 2), (Tuple{1, 0}));
    ASSERT_EQ(index_to_tuple(5, 3, 2), (Tuple{1, 2}));
    for (std::size_t i = 0; i < 81; i++) {
        ASSERT_EQ(tuple_to_index(index_to_tuple(i, 3, 4), 3), i);
    }
    ASSERT_THROW(tuple_to_index(Tuple{0, 3}, 3), DomainError);
}

TEST(moments, tensor_dimension_cap) {
    ASSERT_EQ(tensor_dimension(3, 4), 81);
    ASSERT_EQ(tensor_dimension(4, 6), 4096);
    ASSERT_THROW(tensor_dimension(3, 8), ResourceError);
    ASSERT_THROW(tensor_dimension(2, 100), ResourceError);
    ASSERT_EQ(tensor_dimension(3, 8, 10000), 6561);
    ASSERT_THROW(build_real_moment_matrix(5, 6), ResourceError);
}

TEST(moments, odd_count_profile) {
    ASSERT_EQ(odd_count_profile(Tuple{0, 1}, Tuple{1, 0}, 2).counts, (Tuple{2, 2}));
    ASSERT_EQ(odd_count_profile(Tuple{0, 0}, Tuple{0, 0}, 2).counts, (Tuple{4, 0}));
    ASSERT_EQ(odd_count_profile(Tuple{2}, Tuple{2}, 3).counts, (Tuple{0, 0, 2}));
    ASSERT_EQ(odd_count_profile(Tuple{0, 1, 2}, Tuple{2, 2, 2}, 3).total(), 6);
    ASSERT_THROW(odd_count_profile(Tuple{0, 2}, Tuple{0, 0}, 2), DomainError);
}

TEST(moments, equivalent) {
    ASSERT_TRUE(equivalent(Tuple{0, 0}, Tuple{1, 1}, 2));
    ASSERT_FALSE(equivalent(Tuple{0}, Tuple{1}, 2));
    ASSERT_TRUE(equivalent(Tuple{0, 1}, Tuple{1, 0}, 2));
    ASSERT_FALSE(equivalent(Tuple{0, 1}, Tuple{0, 0}, 2));
}

TEST(moments, gaussian_direction_moment) {
    for (std::size_t d = 2; d <= 7; d++) {
        Tuple profile(d, 0);
        profile[0] = 2;
        ASSERT_EQ(gaussian_direction_moment(profile), make_rat(1, static_cast<unsigned long>(d)));
        profile[1] = 1;
        profile[0] = 1;
        ASSERT_EQ(gaussian_direction_moment(profile), 0);
    }
    ASSERT_EQ(gaussian_direction_moment(Tuple{2, 2, 0}), make_rat(1, 15));
    ASSERT_EQ(gaussian_direction_moment(Tuple{4, 0, 0}), make_rat(1, 5));
    ASSERT_THROW(gaussian_direction_moment(Tuple{2}), DomainError);
}

TEST(moments, gaussian_direction_moment_monte_carlo) {
    Rng rng(kTestSeed);
    const int n = 1000000;
    double sum = 0;
    double sum2 = 0;
    for (int i = 0; i < n; i++) {
        auto x = sample_real_haar_state(3, rng);
        double v = x[0] * x[0] * x[1] * x[1];
        sum += v;
        sum2 += v * v;
    }
    double mean = sum / n;
    double se = std::sqrt((sum2 / n - mean * mean) / n);
    ASSERT_NEAR(mean, 1.0 / 15, 3 * se);
}

TEST(moments, real_moment_matrix_examples) {
    auto rho = build_real_moment_matrix(2, 2);
    ASSERT_EQ(rho(idx({0, 0}, 2), idx({0, 0}, 2)), make_rat(3, 8));
    ASSERT_EQ(rho(idx({0, 0}, 2), idx({1, 1}, 2)), make_rat(1, 8));
    ASSERT_EQ(rho(idx({0, 0}, 2), idx({0, 1}, 2)), 0);
    ASSERT_EQ(rho(idx({0, 1}, 2), idx({1, 0}, 2)), make_rat(1, 8));
    ASSERT_EQ(rho.trace(), 1);
}

TEST(moments, real_moment_matrix_structure) {
    for (std::size_t d = 2; d <= 4; d++) {
        for (std::size_t t = 1; t <= 4 && tensor_dimension(d, t, 1 << 20) <= 81; t++) {
            auto rho = build_real_moment_matrix(d, t);
            ASSERT_EQ(rho.trace(), 1);
            ASSERT_TRUE(rho.is_symmetric());
            for (std::size_t x = 0; x < rho.size(); x++) {
                for (std::size_t y = 0; y < rho.size(); y++) {
                    if (!equivalent(index_to_tuple(x, d, t), index_to_tuple(y, d, t), d)) {
                        ASSERT_EQ(rho(x, y), 0);
                    }
                }
            }
            auto pi = build_sym_projector(d, t);
            ASSERT_EQ(rho * pi, pi * rho) << d << "," << t;
            ASSERT_EQ(pi * rho * pi, rho) << d << "," << t;
        }
    }
}

TEST(moments, trace_powers_match_spectrum) {
    for (std::size_t d = 2; d <= 6; d++) {
        for (std::size_t t = 1; t <= 8; t++) {
            if (tensor_dimension(d, t, 1 << 30) > 256) {
                continue;
            }
            auto rho = build_real_moment_matrix(d, t);
            auto s = real_haar_spectrum(d, t);
            for (std::size_t m = 1; m <= 3; m++) {
                Rat want = 0;
                for (const auto &line : s.lines) {
                    Rat power = 1;
                    for (std::size_t i = 0; i < m; i++) {
                        power *= line.eigenvalue;
                    }
                    want += power * line.multiplicity;
                }
                ASSERT_EQ(trace_power(rho, m), want) << d << "," << t << "," << m;
            }
        }
    }
}

TEST(moments, trace_power_examples) {
    auto rho = build_real_moment_matrix(2, 2);
    ASSERT_EQ(trace_power(rho, 1), 1);
    ASSERT_EQ(trace_power(rho, 2), make_rat(3, 8));
    auto pi = build_sym_projector(2, 2);
    for (std::size_t m = 1; m <= 4; m++) {
        ASSERT_EQ(trace_power(pi, m), 3);
    }
    ASSERT_EQ(trace_power(pi, 0), 4);
}

TEST(moments, sym_projector) {
    auto pi = build_sym_projector(2, 2);
    RatVector e01(4, Rat(0));
    e01[idx({0, 1}, 2)] = 1;
    RatVector want(4, Rat(0));
    want[idx({0, 1}, 2)] = make_rat(1, 2);
    want[idx({1, 0}, 2)] = make_rat(1, 2);
    ASSERT_EQ(pi * e01, want);
    ASSERT_EQ(pi.trace(), 3);
    for (std::size_t d = 2; d <= 3; d++) {
        for (std::size_t t = 1; t <= 4; t++) {
            auto p = build_sym_projector(d, t);
            ASSERT_EQ(p * p, p);
            ASSERT_TRUE(p.is_symmetric());
            ASSERT_EQ(p.trace(), Rat(symmetric_dimension(d, t)));
        }
    }
    ASSERT_THROW(build_sym_projector(2, 9, 1 << 12), ResourceError);
}

TEST(moments, binary_phase_matrix) {
    auto rho = build_binary_phase_matrix(2, 2);
    ASSERT_EQ(rho(idx({0, 0}, 2), idx({1, 1}, 2)), make_rat(1, 4));
    ASSERT_EQ(rho(idx({0, 1}, 2), idx({1, 0}, 2)), make_rat(1, 4));
    ASSERT_EQ(rho(idx({0, 0}, 2), idx({0, 1}, 2)), 0);
    ASSERT_EQ(rho.trace(), 1);
}

TEST(moments, binary_phase_matrix_is_average_over_functions) {
    for (std::size_t d = 2; d <= 3; d++) {
        for (std::size_t t = 1; t <= 3; t++) {
            std::size_t n = tensor_dimension(d, t);
            RatMatrix avg(n);
            for (std::size_t f = 0; f < (std::size_t{1} << d); f++) {
                // |psi_f><psi_f| has entries (-1)^{f(x)+f(y)} / d.
                RatMatrix one(d);
                for (std::size_t x = 0; x < d; x++) {
                    for (std::size_t y = 0; y < d; y++) {
                        int sign = (((f >> x) ^ (f >> y)) & 1) ? -1 : 1;
                        one(x, y) = make_rat(sign, static_cast<long>(d));
                    }
                }
                RatMatrix power = one;
                for (std::size_t k = 1; k < t; k++) {
                    power = kron(power, one);
                }
                avg = avg + power;
            }
            avg = avg * make_rat(1, static_cast<unsigned long>(1u << d));
            ASSERT_EQ(avg, build_binary_phase_matrix(d, t)) << d << "," << t;
        }
    }
}

TEST(moments, binary_phase_rank) {
    for (std::size_t d = 2; d <= 4; d++) {
        for (std::size_t t = 1; t <= std::min<std::size_t>(d, 3); t++) {
            std::size_t want = 0;
            for (std::size_t k = 0; 2 * k <= t; k++) {
                want += binomial(static_cast<long>(d), t - 2 * k).get_ui();
            }
            ASSERT_EQ(rank(build_binary_phase_matrix(d, t)), want) << d << "," << t;
        }
    }
}

TEST(moments, samplers_are_normalized) {
    Rng rng(kTestSeed);
    for (int i = 0; i < 1000; i++) {
        auto x = sample_real_haar_state(5, rng);
        double n2 = 0;
        for (double v : x) {
            n2 += v * v;
        }
        ASSERT_NEAR(std::sqrt(n2), 1, 1e-12);

        auto z = sample_complex_haar_state(5, rng);
        double m2 = 0;
        for (auto v : z) {
            m2 += std::norm(v);
        }
        ASSERT_NEAR(std::sqrt(m2), 1, 1e-12);

        auto b = sample_binary_phase_state(5, rng);
        for (double v : b) {
            ASSERT_NEAR(std::abs(v), 1 / std::sqrt(5.0), 1e-15);
        }
    }
}

TEST(moments, sampler_moments) {
    const std::size_t d = 4;
    const int n = 100000;
    Rng rng(kTestSeed + 7);
    std::vector<double> mean(d, 0);
    std::vector<double> second(d, 0);
    std::vector<double> second_c(d, 0);
    for (int i = 0; i < n; i++) {
        auto x = sample_real_haar_state(d, rng);
        auto z = sample_complex_haar_state(d, rng);
        for (std::size_t j = 0; j < d; j++) {
            mean[j] += x[j];
            second[j] += x[j] * x[j];
            second_c[j] += std::norm(z[j]);
        }
    }
    // Var(x_i) = 1/d; Var(x_i^2) = 3/(d(d+2)) - 1/d^2; Var|z_i|^2 = 2/(d(d+1)) - 1/d^2.
    double se_mean = std::sqrt(1.0 / d / n);
    double se_sq = std::sqrt((3.0 / (d * (d + 2)) - 1.0 / (d * d)) / n);
    double se_sq_c = std::sqrt((2.0 / (d * (d + 1)) - 1.0 / (d * d)) / n);
    for (std::size_t j = 0; j < d; j++) {
        EXPECT_NEAR(mean[j] / n, 0, 4 * se_mean);
        EXPECT_NEAR(second[j] / n, 1.0 / d, 4 * se_sq);
        EXPECT_NEAR(second_c[j] / n, 1.0 / d, 4 * se_sq_c);
    }
}

TEST(moments, haar_orthogonal) {
    Rng rng(kTestSeed);
    double sum00 = 0;
    const int n = 20000;
    for (int i = 0; i < n; i++) {
        auto o = sample_haar_orthogonal(3, rng);
        ASSERT_LT((o.transpose() * o - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
        sum00 += o(0, 0) * o(0, 0);
    }
    ASSERT_NEAR(sum00 / n, 1.0 / 3, 4 * std::sqrt((3.0 / 15 - 1.0 / 9) / n));
}

TEST(moments, apply_tensor_power_matches_dense) {
    Rng rng(kTestSeed);
    for (std::size_t d = 2; d <= 3; d++) {
        for (std::size_t t = 1; t <= 4; t++) {
            auto o = sample_haar_orthogonal(d, rng);
            auto dense = dense_tensor_power(o, t);
            std::size_t n = static_cast<std::size_t>(dense.rows());
            std::vector<double> v(n);
            for (auto &x : v) {
                x = rng.normal();
            }
            auto fast = apply_tensor_power(o, v, t);
            Eigen::VectorXd slow = dense * Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < n; i++) {
                ASSERT_NEAR(fast[i], slow(static_cast<Eigen::Index>(i)), 1e-12);
            }
        }
    }
}

TEST(moments, real_moment_commutes_with_orthogonal_powers) {
    Rng rng(kTestSeed + 3);
    for (std::size_t d = 2; d <= 3; d++) {
        for (std::size_t t = 1; t <= 4; t++) {
            Eigen::MatrixXd rho = build_real_moment_matrix(d, t).to_eigen();
            for (int rep = 0; rep < 3; rep++) {
                auto ot = dense_tensor_power(sample_haar_orthogonal(d, rng), t);
                ASSERT_LE((ot * rho - rho * ot).cwiseAbs().maxCoeff(), 1e-9);
            }
        }
    }
}

TEST(moments, tensor_power) {
    std::vector<double> psi{0.6, 0.8};
    auto v = tensor_power(std::span<const double>(psi), 2);
    ASSERT_EQ(v.size(), 4);
    ASSERT_NEAR(v[1], 0.48, 1e-15);
    ASSERT_NEAR(v[3], 0.64, 1e-15);
}

static double max_deviation(const FloatMatrix &est, const RatMatrix &exact) {
    double worst = 0;
    for (std::size_t i = 0; i < est.n; i++) {
        for (std::size_t j = 0; j < est.n; j++) {
            worst = std::max(worst, std::abs(est(i, j) - exact(i, j).get_d()));
        }
    }
    return worst;
}

TEST(moments, estimate_examples) {
    EstimateOptions options{8, 4};
    auto e21 = estimate_moment_operator(2, 1, 100000, kTestSeed, Ensemble::RealHaar, options);
    ASSERT_LT(max_deviation(e21, RatMatrix::identity(2) * make_rat(1, 2)), 0.02);

    auto e22 = estimate_moment_operator(2, 2, 200000, kTestSeed, Ensemble::RealHaar, options);
    ASSERT_LT(max_deviation(e22, build_real_moment_matrix(2, 2)), 0.01);

    auto b22 = estimate_moment_operator(2, 2, 200000, kTestSeed, Ensemble::BinaryPhase, options);
    ASSERT_LT(max_deviation(b22, build_binary_phase_matrix(2, 2)), 0.01);

    auto c22 = estimate_moment_operator(2, 2, 200000, kTestSeed, Ensemble::ComplexHaar, options);
    ASSERT_TRUE(c22.is_complex());
    ASSERT_LT(max_deviation(c22, build_sym_projector(2, 2) * make_rat(1, 3)), 0.01);
    for (std::size_t i = 0; i < c22.n * c22.n; i++) {
        ASSERT_LT(std::abs(c22.imag[i]), 0.01);
    }
}

TEST(moments, estimate_within_five_standard_errors) {
    // Every entry is an average of values in [-1, 1], so 5/sqrt(N) bounds 5 standard errors.
    const std::uint64_t n = 50000;
    auto est = estimate_moment_operator(3, 2, n, kTestSeed + 11, Ensemble::RealHaar, {4, 2});
    ASSERT_LT(max_deviation(est, build_real_moment_matrix(3, 2)), 5 / std::sqrt(static_cast<double>(n)));
}

TEST(moments, estimate_is_symmetric) {
    auto est = estimate_moment_operator(2, 3, 1000, kTestSeed, Ensemble::ComplexHaar, {3, 1});
    for (std::size_t i = 0; i < est.n; i++) {
        for (std::size_t j = 0; j < est.n; j++) {
            ASSERT_EQ(est.real[i * est.n + j], est.real[j * est.n + i]);
            ASSERT_EQ(est.imag[i * est.n + j], -est.imag[j * est.n + i]);
        }
    }
}

TEST(moments, estimate_is_independent_of_thread_count) {
    auto a = estimate_moment_operator(3, 2, 30001, 99, Ensemble::RealHaar, {8, 1});
    auto b = estimate_moment_operator(3, 2, 30001, 99, Ensemble::RealHaar, {8, 4});
    auto c = estimate_moment_operator(3, 2, 30001, 99, Ensemble::RealHaar, {8, 8});
    ASSERT_EQ(a.real, b.real);
    ASSERT_EQ(a.real, c.real);
    auto other = estimate_moment_operator(3, 2, 30001, 100, Ensemble::RealHaar, {8, 1});
    ASSERT_NE(a.real, other.real);
}

TEST(moments, estimate_errors) {
    ASSERT_THROW(estimate_moment_operator(2, 2, 0, 1, Ensemble::RealHaar), DomainError);
    ASSERT_THROW(estimate_moment_operator(9, 5, 10, 1, Ensemble::RealHaar), ResourceError);
    ASSERT_THROW(parse_ensemble("quaternion"), DomainError);
    ASSERT_EQ(parse_ensemble("binary_phase"), Ensemble::BinaryPhase);
}
