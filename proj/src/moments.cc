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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>

#include "realhaar/errors.h"

namespace realhaar {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix out(n);
    for (std::size_t i = 0; i < n; i++) {
        out(i, i) = 1;
    }
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix &other) const {
    if (other.n_ != n_) {
        throw DomainError("matrix size mismatch in product");
    }
    RatMatrix out(n_);
    Rat tmp;
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t k = 0; k < n_; k++) {
            const Rat &a = (*this)(i, k);
            if (sgn(a) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n_; j++) {
                const Rat &b = other(k, j);
                if (sgn(b) == 0) {
                    continue;
                }
                mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
                out(i, j) += tmp;
            }
        }
    }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix &other) const {
    if (other.n_ != n_) {
        throw DomainError("matrix size mismatch in sum");
    }
    RatMatrix out(n_);
    for (std::size_t i = 0; i < entries_.size(); i++) {
        out.entries_[i] = entries_[i] + other.entries_[i];
    }
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix &other) const {
    if (other.n_ != n_) {
        throw DomainError("matrix size mismatch in difference");
    }
    RatMatrix out(n_);
    for (std::size_t i = 0; i < entries_.size(); i++) {
        out.entries_[i] = entries_[i] - other.entries_[i];
    }
    return out;
}

RatMatrix RatMatrix::operator*(const Rat &scalar) const {
    RatMatrix out(n_);
    for (std::size_t i = 0; i < entries_.size(); i++) {
        out.entries_[i] = entries_[i] * scalar;
    }
    return out;
}

RatVector RatMatrix::operator*(const RatVector &v) const {
    if (v.size() != n_) {
        throw DomainError("vector size mismatch in matrix-vector product");
    }
    RatVector out(n_, Rat(0));
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = 0; j < n_; j++) {
            const Rat &a = (*this)(i, j);
            if (sgn(a) != 0 && sgn(v[j]) != 0) {
                out[i] += a * v[j];
            }
        }
    }
    return out;
}

Rat RatMatrix::trace() const {
    Rat total = 0;
    for (std::size_t i = 0; i < n_; i++) {
        total += (*this)(i, i);
    }
    return total;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(n_);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = 0; j < n_; j++) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

bool RatMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = i + 1; j < n_; j++) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

Eigen::MatrixXd RatMatrix::to_eigen() const {
    Eigen::MatrixXd out(n_, n_);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = 0; j < n_; j++) {
            out(i, j) = (*this)(i, j).get_d();
        }
    }
    return out;
}

RatMatrix kron(const RatMatrix &a, const RatMatrix &b) {
    std::size_t na = a.size();
    std::size_t nb = b.size();
    RatMatrix out(na * nb);
    for (std::size_t i = 0; i < na; i++) {
        for (std::size_t j = 0; j < na; j++) {
            if (sgn(a(i, j)) == 0) {
                continue;
            }
            for (std::size_t k = 0; k < nb; k++) {
                for (std::size_t l = 0; l < nb; l++) {
                    out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

RatVector kron(const RatVector &a, const RatVector &b) {
    RatVector out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

Eigen::MatrixXd FloatMatrix::real_part() const {
    Eigen::MatrixXd out(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            out(i, j) = real[i * n + j];
        }
    }
    return out;
}

bool OddCountProfile::all_even() const {
    return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c % 2 == 0; });
}

std::size_t OddCountProfile::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::size_t tensor_dimension(std::size_t d, std::size_t t, std::size_t cap) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < t; i++) {
        if (n > cap / d) {
            throw ResourceError("d^t = " + std::to_string(d) + "^" + std::to_string(t) + " exceeds the matrix cap " +
                                std::to_string(cap));
        }
        n *= d;
    }
    if (n > cap) {
        throw ResourceError("d^t exceeds the matrix cap " + std::to_string(cap));
    }
    return n;
}

std::vector<std::size_t> index_to_tuple(std::size_t index, std::size_t d, std::size_t t) {
    std::vector<std::size_t> out(t);
    for (std::size_t i = t; i-- > 0;) {
        out[i] = index % d;
        index /= d;
    }
    return out;
}

std::size_t tuple_to_index(std::span<const std::size_t> tuple, std::size_t d) {
    std::size_t index = 0;
    for (auto x : tuple) {
        if (x >= d) {
            throw DomainError("symbol out of range [0, d)");
        }
        index = index * d + x;
    }
    return index;
}

OddCountProfile odd_count_profile(std::span<const std::size_t> x, std::span<const std::size_t> y, std::size_t d) {
    OddCountProfile out{std::vector<std::size_t>(d, 0)};
    for (auto part : {x, y}) {
        for (auto symbol : part) {
            if (symbol >= d) {
                throw DomainError("symbol " + std::to_string(symbol) + " out of range [0, " + std::to_string(d) + ")");
            }
            out.counts[symbol]++;
        }
    }
    return out;
}

bool equivalent(std::span<const std::size_t> x, std::span<const std::size_t> y, std::size_t d) {
    return odd_count_profile(x, y, d).all_even();
}

Rat gaussian_direction_moment(std::span<const std::size_t> profile) {
    std::size_t d = profile.size();
    if (d < 2) {
        throw DomainError("direction moments need d >= 2");
    }
    BigInt num = 1;
    long total = 0;
    for (auto n : profile) {
        if (n % 2 != 0) {
            return 0;
        }
        num *= double_factorial(static_cast<long>(n) - 1);
        total += static_cast<long>(n);
    }
    num *= double_factorial(static_cast<long>(d) - 2);
    return make_rat(num, double_factorial(static_cast<long>(d) + total - 2));
}

namespace {

// Symbol counts of every basis tuple, indexed like the basis.
std::vector<std::vector<std::size_t>> basis_counts(std::size_t d, std::size_t t, std::size_t n) {
    std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(d, 0));
    for (std::size_t i = 0; i < n; i++) {
        for (auto s : index_to_tuple(i, d, t)) {
            out[i][s]++;
        }
    }
    return out;
}

bool same_parity(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
    for (std::size_t i = 0; i < a.size(); i++) {
        if ((a[i] + b[i]) % 2 != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

RatMatrix build_real_moment_matrix(std::size_t d, std::size_t t, std::size_t cap) {
    std::size_t n = tensor_dimension(d, t, cap);
    auto counts = basis_counts(d, t, n);
    // Entries depend only on the multiset of combined counts.
    std::map<std::vector<std::size_t>, Rat> cache;
    RatMatrix out(n);
    std::vector<std::size_t> profile(d);
    for (std::size_t x = 0; x < n; x++) {
        for (std::size_t y = x; y < n; y++) {
            if (!same_parity(counts[x], counts[y])) {
                continue;
            }
            for (std::size_t i = 0; i < d; i++) {
                profile[i] = counts[x][i] + counts[y][i];
            }
            auto key = profile;
            std::sort(key.begin(), key.end());
            auto it = cache.find(key);
            if (it == cache.end()) {
                it = cache.emplace(key, gaussian_direction_moment(key)).first;
            }
            out(x, y) = it->second;
            out(y, x) = it->second;
        }
    }
    return out;
}

RatMatrix build_sym_projector(std::size_t d, std::size_t t, std::size_t cap) {
    if (t > 8) {
        throw ResourceError("symmetric projector enumerates t! permutations; t <= 8 supported");
    }
    std::size_t n = tensor_dimension(d, t, cap);
    Rat weight = make_rat(1, factorial(t));
    RatMatrix out(n);
    std::vector<std::size_t> perm(t);
    std::vector<std::size_t> permuted(t);
    for (std::size_t x = 0; x < n; x++) {
        auto tuple = index_to_tuple(x, d, t);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (std::size_t i = 0; i < t; i++) {
                permuted[i] = tuple[perm[i]];
            }
            out(tuple_to_index(permuted, d), x) += weight;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

RatMatrix build_binary_phase_matrix(std::size_t d, std::size_t t, std::size_t cap) {
    std::size_t n = tensor_dimension(d, t, cap);
    auto counts = basis_counts(d, t, n);
    Rat weight = make_rat(1, BigInt(static_cast<unsigned long>(n)));
    RatMatrix out(n);
    for (std::size_t x = 0; x < n; x++) {
        for (std::size_t y = 0; y < n; y++) {
            if (same_parity(counts[x], counts[y])) {
                out(x, y) = weight;
            }
        }
    }
    return out;
}

EnsembleSpectrum binary_phase_spectrum_by_enumeration(std::size_t d, std::size_t t, std::size_t cap) {
    if (d < 2 || t < 1) {
        throw DomainError("binary-phase spectrum needs d >= 2 and t >= 1");
    }
    std::size_t n = tensor_dimension(d, t, cap);
    std::map<std::vector<bool>, std::size_t> class_sizes;
    for (std::size_t x = 0; x < n; x++) {
        std::vector<bool> parity(d, false);
        for (auto s : index_to_tuple(x, d, t)) {
            parity[s] = !parity[s];
        }
        class_sizes[parity]++;
    }
    std::map<Rat, BigInt> merged;
    for (const auto &[parity, size] : class_sizes) {
        merged[make_rat(static_cast<unsigned long>(size), static_cast<unsigned long>(n))] += 1;
    }
    EnsembleSpectrum out;
    out.d = d;
    out.t = t;
    out.ambient_dim = symmetric_dimension(d, t);
    BigInt rank = 0;
    for (const auto &[eigenvalue, mult] : merged) {
        out.entries.push_back({eigenvalue, mult});
        rank += mult;
    }
    out.zero_multiplicity = out.ambient_dim - rank;
    return out;
}

Rat trace_power(const RatMatrix &m, std::size_t power) {
    if (power == 0) {
        return Rat(static_cast<unsigned long>(m.size()));
    }
    if (power == 1) {
        return m.trace();
    }
    RatMatrix acc = m;
    for (std::size_t i = 2; i < power; i++) {
        acc = acc * m;
    }
    // tr(acc * m) without forming the last product.
    Rat total = 0;
    for (std::size_t i = 0; i < m.size(); i++) {
        for (std::size_t j = 0; j < m.size(); j++) {
            if (sgn(acc(i, j)) != 0 && sgn(m(j, i)) != 0) {
                total += acc(i, j) * m(j, i);
            }
        }
    }
    return total;
}

std::vector<double> sample_real_haar_state(std::size_t d, Rng &rng) {
    std::vector<double> out(d);
    double norm2 = 0;
    for (auto &x : out) {
        x = rng.normal();
        norm2 += x * x;
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto &x : out) {
        x *= inv;
    }
    return out;
}

std::vector<std::complex<double>> sample_complex_haar_state(std::size_t d, Rng &rng) {
    std::vector<double> a(d);
    std::vector<double> b(d);
    for (auto &x : a) {
        x = rng.normal();
    }
    for (auto &x : b) {
        x = rng.normal();
    }
    double norm2 = 0;
    for (std::size_t i = 0; i < d; i++) {
        norm2 += a[i] * a[i] + b[i] * b[i];
    }
    double inv = 1.0 / std::sqrt(norm2);
    std::vector<std::complex<double>> out(d);
    for (std::size_t i = 0; i < d; i++) {
        out[i] = {a[i] * inv, b[i] * inv};
    }
    return out;
}

std::vector<double> sample_binary_phase_state(std::size_t d, Rng &rng) {
    double amp = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<double> out(d);
    for (auto &x : out) {
        x = rng.bit() ? -amp : amp;
    }
    return out;
}

Eigen::MatrixXd sample_haar_orthogonal(std::size_t d, Rng &rng) {
    Eigen::MatrixXd g(d, d);
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t i = 0; i < d; i++) {
            g(i, j) = rng.normal();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd &r = qr.matrixQR();
    for (std::size_t j = 0; j < d; j++) {
        if (r(j, j) < 0) {
            q.col(j) *= -1.0;
        }
    }
    return q;
}

namespace {

template <typename T>
std::vector<T> tensor_power_impl(std::span<const T> psi, std::size_t t) {
    std::vector<T> out{T(1)};
    for (std::size_t k = 0; k < t; k++) {
        std::vector<T> next;
        next.reserve(out.size() * psi.size());
        for (const auto &a : out) {
            for (const auto &b : psi) {
                next.push_back(a * b);
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<double> tensor_power(std::span<const double> psi, std::size_t t) {
    return tensor_power_impl(psi, t);
}

std::vector<std::complex<double>> tensor_power(std::span<const std::complex<double>> psi, std::size_t t) {
    return tensor_power_impl(psi, t);
}

std::vector<double> apply_tensor_power(const Eigen::MatrixXd &o, std::span<const double> v, std::size_t t) {
    std::size_t d = static_cast<std::size_t>(o.rows());
    std::size_t n = v.size();
    std::vector<double> cur(v.begin(), v.end());
    std::vector<double> next(n);
    // Factor f is digit f of the index: stride d^{t-1-f}.
    std::size_t stride = n;
    for (std::size_t f = 0; f < t; f++) {
        stride /= d;
        std::size_t block = stride * d;
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t base = 0; base < n; base += block) {
            for (std::size_t low = 0; low < stride; low++) {
                for (std::size_t i = 0; i < d; i++) {
                    double acc = 0;
                    for (std::size_t j = 0; j < d; j++) {
                        acc += o(i, j) * cur[base + j * stride + low];
                    }
                    next[base + i * stride + low] = acc;
                }
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

const char *ensemble_name(Ensemble e) {
    switch (e) {
        case Ensemble::RealHaar:
            return "real_haar";
        case Ensemble::ComplexHaar:
            return "complex_haar";
        case Ensemble::BinaryPhase:
            return "binary_phase";
    }
    return "?";
}

Ensemble parse_ensemble(const std::string &name) {
    if (name == "real_haar" || name == "real") {
        return Ensemble::RealHaar;
    }
    if (name == "complex_haar" || name == "complex") {
        return Ensemble::ComplexHaar;
    }
    if (name == "binary_phase" || name == "binary") {
        return Ensemble::BinaryPhase;
    }
    throw DomainError("unknown ensemble '" + name + "'");
}

namespace {

struct StreamSums {
    std::vector<double> real;
    std::vector<double> imag;
};

// Upper-triangle accumulation of N_s samples from one stream.
StreamSums run_stream(std::size_t d, std::size_t t, std::size_t n, std::uint64_t count, Rng rng, Ensemble ensemble) {
    StreamSums sums;
    sums.real.assign(n * n, 0.0);
    if (ensemble == Ensemble::ComplexHaar) {
        sums.imag.assign(n * n, 0.0);
    }
    for (std::uint64_t s = 0; s < count; s++) {
        if (ensemble == Ensemble::ComplexHaar) {
            auto psi = sample_complex_haar_state(d, rng);
            auto v = tensor_power(std::span<const std::complex<double>>(psi), t);
            for (std::size_t i = 0; i < n; i++) {
                for (std::size_t j = i; j < n; j++) {
                    std::complex<double> z = v[i] * std::conj(v[j]);
                    sums.real[i * n + j] += z.real();
                    sums.imag[i * n + j] += z.imag();
                }
            }
        } else {
            auto psi = ensemble == Ensemble::RealHaar ? sample_real_haar_state(d, rng) : sample_binary_phase_state(d, rng);
            auto v = tensor_power(std::span<const double>(psi), t);
            for (std::size_t i = 0; i < n; i++) {
                double vi = v[i];
                for (std::size_t j = i; j < n; j++) {
                    sums.real[i * n + j] += vi * v[j];
                }
            }
        }
    }
    return sums;
}

}  // namespace

FloatMatrix estimate_moment_operator(std::size_t d, std::size_t t, std::uint64_t sample_count, std::uint64_t seed,
                                     Ensemble ensemble, const EstimateOptions &options) {
    if (d < 2 || t < 1) {
        throw DomainError("estimate_moment_operator needs d >= 2 and t >= 1");
    }
    if (sample_count == 0) {
        throw DomainError("sample count must be >= 1");
    }
    std::size_t n = tensor_dimension(d, t, options.cap);
    std::size_t streams = std::max<std::size_t>(1, options.streams);
    std::vector<std::uint64_t> counts(streams, sample_count / streams);
    for (std::size_t s = 0; s < sample_count % streams; s++) {
        counts[s]++;
    }

    std::vector<StreamSums> partial(streams);
    std::size_t threads = std::clamp<std::size_t>(options.threads, 1, streams);
    if (threads == 1) {
        for (std::size_t s = 0; s < streams; s++) {
            partial[s] = run_stream(d, t, n, counts[s], Rng::for_stream(seed, s), ensemble);
        }
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < threads; w++) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < streams; s += threads) {
                    partial[s] = run_stream(d, t, n, counts[s], Rng::for_stream(seed, s), ensemble);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    FloatMatrix out;
    out.n = n;
    out.sample_count = sample_count;
    out.real.assign(n * n, 0.0);
    bool is_complex = ensemble == Ensemble::ComplexHaar;
    if (is_complex) {
        out.imag.assign(n * n, 0.0);
    }
    for (const auto &p : partial) {
        for (std::size_t i = 0; i < n * n; i++) {
            out.real[i] += p.real[i];
        }
        if (is_complex) {
            for (std::size_t i = 0; i < n * n; i++) {
                out.imag[i] += p.imag[i];
            }
        }
    }
    double inv = 1.0 / static_cast<double>(sample_count);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            double re = out.real[i * n + j] * inv;
            out.real[i * n + j] = re;
            out.real[j * n + i] = re;
            if (is_complex) {
                double im = out.imag[i * n + j] * inv;
                out.imag[i * n + j] = im;
                out.imag[j * n + i] = -im;
            }
        }
    }
    return out;
}

}  // namespace realhaar
