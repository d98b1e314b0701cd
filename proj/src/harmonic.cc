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

#include "realhaar/harmonic.h"

#include <cmath>
#include <iostream>
#include <numeric>

#include "realhaar/errors.h"
#include "realhaar/exact_linalg.h"
#include "realhaar/spectra.h"

namespace realhaar {

std::size_t exponent_degree(const Exponents &a) {
    return std::accumulate(a.begin(), a.end(), std::size_t{0});
}

Poly::Poly(std::size_t num_vars, std::size_t degree) : num_vars_(num_vars), degree_(degree) {
    if (num_vars == 0) {
        throw DomainError("a polynomial needs at least one variable");
    }
}

Poly Poly::monomial(const Exponents &a, const Rat &coefficient) {
    Poly out(a.size(), exponent_degree(a));
    out.add_term(a, coefficient);
    return out;
}

Poly Poly::constant(std::size_t num_vars, const Rat &value) {
    return monomial(Exponents(num_vars, 0), value);
}

Poly Poly::q(std::size_t num_vars) {
    Poly out(num_vars, 2);
    for (std::size_t i = 0; i < num_vars; i++) {
        Exponents a(num_vars, 0);
        a[i] = 2;
        out.add_term(a, 1);
    }
    return out;
}

Rat Poly::coefficient(const Exponents &a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exponents &a, const Rat &coefficient) {
    if (a.size() != num_vars_) {
        throw DomainError("monomial has " + std::to_string(a.size()) + " exponents, polynomial has " +
                          std::to_string(num_vars_) + " variables");
    }
    if (exponent_degree(a) != degree_) {
        throw DomainError("monomial of degree " + std::to_string(exponent_degree(a)) +
                          " added to a homogeneous polynomial of degree " + std::to_string(degree_));
    }
    if (sgn(coefficient) == 0) {
        return;
    }
    auto [it, fresh] = terms_.emplace(a, coefficient);
    if (!fresh) {
        it->second += coefficient;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

Poly Poly::operator+(const Poly &other) const {
    if (other.num_vars_ != num_vars_ || other.degree_ != degree_) {
        throw DomainError("adding polynomials of different shape");
    }
    Poly out = *this;
    for (const auto &[a, c] : other.terms_) {
        out.add_term(a, c);
    }
    return out;
}

Poly Poly::operator-(const Poly &other) const {
    return *this + other * Rat(-1);
}

Poly Poly::operator*(const Rat &scalar) const {
    Poly out(num_vars_, degree_);
    if (sgn(scalar) == 0) {
        return out;
    }
    for (const auto &[a, c] : terms_) {
        out.terms_.emplace(a, c * scalar);
    }
    return out;
}

double FloatPoly::coefficient(const Exponents &a) const {
    auto it = terms.find(a);
    return it == terms.end() ? 0.0 : it->second;
}

std::vector<Exponents> monomials_of_degree(std::size_t d, std::size_t m, std::size_t cap) {
    if (d == 0) {
        throw DomainError("need at least one variable");
    }
    BigInt count = binomial(static_cast<long>(d + m - 1), m);
    if (count > cap) {
        throw ResourceError("C(d+m-1, m) = " + to_string(count) + " monomials exceeds the cap " + std::to_string(cap));
    }
    std::vector<Exponents> out;
    Exponents a(d, 0);
    // Lexicographically descending in a_0 first, which is ascending lexicographic order of the
    // sorted index tuples 0^{a_0} 1^{a_1} ...
    auto rec = [&](auto &&self, std::size_t var, std::size_t left) -> void {
        if (var + 1 == d) {
            a[var] = static_cast<std::uint32_t>(left);
            out.push_back(a);
            return;
        }
        for (std::size_t e = left + 1; e-- > 0;) {
            a[var] = static_cast<std::uint32_t>(e);
            self(self, var + 1, left - e);
        }
    };
    rec(rec, 0, m);
    return out;
}

namespace {

BigInt exponent_factorial_product(const Exponents &a) {
    BigInt out = 1;
    for (auto e : a) {
        out *= factorial(e);
    }
    return out;
}

}  // namespace

Rat bombieri_inner(const Poly &p, const Poly &q) {
    if (p.degree() != q.degree() || p.num_vars() != q.num_vars()) {
        throw DomainError("Bombieri inner product of polynomials with different degree or variable count");
    }
    Rat total = 0;
    for (const auto &[a, c] : p.terms()) {
        auto it = q.terms().find(a);
        if (it != q.terms().end()) {
            total += c * it->second * make_rat(exponent_factorial_product(a), 1);
        }
    }
    return total / Rat(factorial(p.degree()));
}

Poly laplacian(const Poly &p) {
    if (p.degree() < 2) {
        return Poly(p.num_vars(), 0);
    }
    Poly out(p.num_vars(), p.degree() - 2);
    for (const auto &[a, c] : p.terms()) {
        for (std::size_t i = 0; i < a.size(); i++) {
            if (a[i] >= 2) {
                Exponents b = a;
                b[i] -= 2;
                out.add_term(b, c * static_cast<unsigned long>(a[i]) * static_cast<unsigned long>(a[i] - 1));
            }
        }
    }
    return out;
}

Poly multiply(const Poly &p, const Poly &q) {
    if (p.num_vars() != q.num_vars()) {
        throw DomainError("multiplying polynomials in different variable counts");
    }
    Poly out(p.num_vars(), p.degree() + q.degree());
    for (const auto &[a, c] : p.terms()) {
        for (const auto &[b, e] : q.terms()) {
            Exponents s = a;
            for (std::size_t i = 0; i < s.size(); i++) {
                s[i] += b[i];
            }
            out.add_term(s, c * e);
        }
    }
    return out;
}

Poly q_power_multiply(const Poly &p, std::size_t k) {
    Poly out = p;
    Poly q = Poly::q(p.num_vars());
    for (std::size_t i = 0; i < k; i++) {
        out = multiply(out, q);
    }
    return out;
}

std::vector<Poly> harmonic_basis(std::size_t d, std::size_t m, std::size_t cap) {
    if (d < 2) {
        throw DomainError("harmonic polynomials need d >= 2");
    }
    auto cols = monomials_of_degree(d, m, cap);
    std::vector<Poly> out;
    if (m < 2) {
        for (const auto &a : cols) {
            out.push_back(Poly::monomial(a));
        }
        return out;
    }
    auto rows = monomials_of_degree(d, m - 2, cap);
    std::map<Exponents, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); r++) {
        row_index[rows[r]] = r;
    }
    RatRows lap(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); c++) {
        Poly image = laplacian(Poly::monomial(cols[c]));
        for (const auto &[b, coef] : image.terms()) {
            lap.at(row_index.at(b), c) = coef;
        }
    }
    for (const auto &v : nullspace(std::move(lap))) {
        Poly h(d, m);
        for (std::size_t c = 0; c < cols.size(); c++) {
            h.add_term(cols[c], v[c]);
        }
        out.push_back(std::move(h));
    }
    return out;
}

namespace {

// Exponent vector (symbol counts) of every basis tuple of [d]^t.
std::vector<Exponents> tuple_exponents(std::size_t d, std::size_t t, std::size_t cap) {
    std::size_t n = tensor_dimension(d, t, cap);
    std::vector<Exponents> out(n, Exponents(d, 0));
    for (std::size_t i = 0; i < n; i++) {
        std::size_t rest = i;
        for (std::size_t f = 0; f < t; f++) {
            out[i][rest % d]++;
            rest /= d;
        }
    }
    return out;
}

}  // namespace

SymVector poly_to_symvector(const Poly &p, std::size_t cap) {
    std::size_t d = p.num_vars();
    std::size_t t = p.degree();
    auto exps = tuple_exponents(d, t, cap);
    // |class(a)| = t! / prod a_i!.
    std::map<Exponents, Rat> weight;
    BigInt tf = factorial(t);
    for (const auto &[a, c] : p.terms()) {
        weight.emplace(a, c * make_rat(exponent_factorial_product(a), tf));
    }
    SymVector out{d, t, RatVector(exps.size(), Rat(0))};
    for (std::size_t i = 0; i < exps.size(); i++) {
        auto it = weight.find(exps[i]);
        if (it != weight.end()) {
            out.coefficients[i] = it->second;
        }
    }
    return out;
}

std::vector<double> poly_to_symvector(const FloatPoly &p, std::size_t cap) {
    auto exps = tuple_exponents(p.num_vars, p.degree, cap);
    std::map<Exponents, double> weight;
    double tf = std::tgamma(static_cast<double>(p.degree) + 1);
    for (const auto &[a, c] : p.terms) {
        double prod = 1;
        for (auto e : a) {
            prod *= std::tgamma(static_cast<double>(e) + 1);
        }
        weight.emplace(a, c * prod / tf);
    }
    std::vector<double> out(exps.size(), 0.0);
    for (std::size_t i = 0; i < exps.size(); i++) {
        auto it = weight.find(exps[i]);
        if (it != weight.end()) {
            out[i] = it->second;
        }
    }
    return out;
}

Rat inner(const SymVector &a, const SymVector &b) {
    if (a.d != b.d || a.t != b.t) {
        throw DomainError("inner product of vectors in different spaces");
    }
    return dot(a.coefficients, b.coefficients);
}

FloatPoly to_float(const Poly &p) {
    FloatPoly out{p.num_vars(), p.degree(), {}};
    for (const auto &[a, c] : p.terms()) {
        out.terms.emplace(a, c.get_d());
    }
    return out;
}

namespace {

FloatPoly multiply_linear(const FloatPoly &p, const std::vector<double> &form) {
    FloatPoly out{p.num_vars, p.degree + 1, {}};
    for (const auto &[a, c] : p.terms) {
        for (std::size_t i = 0; i < form.size(); i++) {
            if (form[i] == 0) {
                continue;
            }
            Exponents b = a;
            b[i]++;
            out.terms[b] += c * form[i];
        }
    }
    return out;
}

}  // namespace

FloatPoly apply_orthogonal(const Poly &p, const Eigen::MatrixXd &o) {
    std::size_t d = p.num_vars();
    if (static_cast<std::size_t>(o.rows()) != d || static_cast<std::size_t>(o.cols()) != d) {
        throw DomainError("orthogonal matrix must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    double defect = (o.transpose() * o - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (!(defect <= 1e-10)) {
        throw DomainError("matrix is not orthogonal (max |O^T O - I| = " + std::to_string(defect) + ")");
    }
    // Column j of O is the linear form replacing X_j.
    std::vector<std::vector<double>> forms(d, std::vector<double>(d));
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t i = 0; i < d; i++) {
            forms[j][i] = o(i, j);
        }
    }
    FloatPoly out{d, p.degree(), {}};
    for (const auto &[a, c] : p.terms()) {
        FloatPoly term{d, 0, {{Exponents(d, 0), c.get_d()}}};
        for (std::size_t j = 0; j < d; j++) {
            for (std::uint32_t e = 0; e < a[j]; e++) {
                term = multiply_linear(term, forms[j]);
            }
        }
        for (const auto &[b, v] : term.terms) {
            out.terms[b] += v;
        }
    }
    return out;
}

std::vector<SymVector> eigenbasis_for_level(std::size_t d, std::size_t t, std::size_t k, std::size_t cap) {
    if (2 * k > t) {
        throw DomainError("level k = " + std::to_string(k) + " out of range 0..floor(t/2) for t = " + std::to_string(t));
    }
    tensor_dimension(d, t, cap);
    std::vector<SymVector> out;
    for (const auto &h : harmonic_basis(d, t - 2 * k, cap)) {
        out.push_back(poly_to_symvector(q_power_multiply(h, k), cap));
    }
    return out;
}

PiPlusLevels pi_plus_levels(std::size_t d, std::size_t t) {
    auto spectrum = real_haar_spectrum(d, t);
    PiPlusLevels out;
    out.mu = complex_haar_eigenvalue(d, t);
    out.acceptance_on_real = 0;
    out.acceptance_on_complex = 0;
    for (const auto &line : spectrum.lines) {
        int c = cmp(line.eigenvalue, out.mu);
        if (c > 0) {
            out.included.push_back(line.k);
            out.acceptance_on_real += Rat(line.multiplicity) * line.eigenvalue;
            out.acceptance_on_complex += Rat(line.multiplicity) * out.mu;
        } else if (c == 0) {
            out.tied.push_back(line.k);
        } else {
            out.excluded.push_back(line.k);
        }
    }
    return out;
}

RatMatrix build_pi_plus(std::size_t d, std::size_t t, std::size_t cap) {
    std::size_t n = tensor_dimension(d, t, cap);
    auto levels = pi_plus_levels(d, t);
    for (auto k : levels.tied) {
        std::cerr << "realhaar: level k=" << k << " has eigenvalue exactly equal to mu at (d=" << d << ", t=" << t
                  << "); excluded from the accept projector\n";
    }
    std::vector<SymVector> vs;
    for (auto k : levels.included) {
        for (auto &v : eigenbasis_for_level(d, t, k, cap)) {
            vs.push_back(std::move(v));
        }
    }
    RatMatrix out(n);
    std::size_t r = vs.size();
    if (r == 0) {
        return out;
    }
    RatRows gram(r, r);
    for (std::size_t a = 0; a < r; a++) {
        for (std::size_t b = a; b < r; b++) {
            gram.at(a, b) = inner(vs[a], vs[b]);
            gram.at(b, a) = gram.at(a, b);
        }
    }
    RatRows ginv = inverse(gram);
    // W = V G^{-1}, then Pi = W V^T.
    std::vector<RatVector> w(r, RatVector(n, Rat(0)));
    for (std::size_t a = 0; a < r; a++) {
        for (std::size_t b = 0; b < r; b++) {
            if (sgn(ginv.at(b, a)) == 0) {
                continue;
            }
            for (std::size_t i = 0; i < n; i++) {
                if (sgn(vs[b].coefficients[i]) != 0) {
                    w[a][i] += vs[b].coefficients[i] * ginv.at(b, a);
                }
            }
        }
    }
    for (std::size_t a = 0; a < r; a++) {
        for (std::size_t i = 0; i < n; i++) {
            if (sgn(w[a][i]) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; j++) {
                if (sgn(vs[a].coefficients[j]) != 0) {
                    out(i, j) += w[a][i] * vs[a].coefficients[j];
                }
            }
        }
    }
    return out;
}

}  // namespace realhaar
