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

#ifndef REALHAAR_HARMONIC_H
#define REALHAAR_HARMONIC_H

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "realhaar/exact.h"
#include "realhaar/moments.h"

namespace realhaar {

/// Exponent vector (a_0, ..., a_{d-1}) of X_0^{a_0} ... X_{d-1}^{a_{d-1}}.
using Exponents = std::vector<std::uint32_t>;

std::size_t exponent_degree(const Exponents &a);

/// Homogeneous polynomial in d variables with exact coefficients.
///
/// Terms with a zero coefficient are never stored, so two polynomials are equal iff their term maps
/// are equal. The zero polynomial still carries a degree.
class Poly {
   public:
    Poly(std::size_t num_vars, std::size_t degree);

    static Poly monomial(const Exponents &a, const Rat &coefficient = 1);
    static Poly constant(std::size_t num_vars, const Rat &value);
    /// q = X_0^2 + ... + X_{d-1}^2.
    static Poly q(std::size_t num_vars);

    std::size_t num_vars() const {
        return num_vars_;
    }
    std::size_t degree() const {
        return degree_;
    }
    const std::map<Exponents, Rat> &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    Rat coefficient(const Exponents &a) const;

    /// Adds coefficient * X^a. Throws DomainError if a has the wrong length or degree.
    void add_term(const Exponents &a, const Rat &coefficient);

    Poly operator+(const Poly &other) const;
    Poly operator-(const Poly &other) const;
    Poly operator*(const Rat &scalar) const;
    bool operator==(const Poly &other) const = default;

   private:
    std::size_t num_vars_;
    std::size_t degree_;
    std::map<Exponents, Rat> terms_;
};

/// Floating-point counterpart of Poly, produced by orthogonal substitutions.
struct FloatPoly {
    std::size_t num_vars = 0;
    std::size_t degree = 0;
    std::map<Exponents, double> terms;

    double coefficient(const Exponents &a) const;
};

/// A vector of (R^d)^{\otimes t} in the lexicographic basis, expected to lie in the symmetric subspace.
struct SymVector {
    std::size_t d = 0;
    std::size_t t = 0;
    RatVector coefficients;
};

/// Every exponent vector of total degree m, in lexicographic order. Throws ResourceError when there
/// are more than `cap` of them.
std::vector<Exponents> monomials_of_degree(std::size_t d, std::size_t m, std::size_t cap = kDefaultMatrixCap);

/// Monomial-diagonal inner product with <X^a, X^a> = prod a_i! / t!.
Rat bombieri_inner(const Poly &p, const Poly &q);

/// sum_i d^2 P / dX_i^2. The result has degree deg P - 2, or is the zero polynomial of degree 0.
Poly laplacian(const Poly &p);

Poly multiply(const Poly &p, const Poly &q);

/// p * q^k.
Poly q_power_multiply(const Poly &p, std::size_t k);

/// A basis of the degree-m harmonic polynomials: the kernel of the Laplacian matrix in the monomial
/// basis, solved exactly. Not canonical; only its span is meaningful.
std::vector<Poly> harmonic_basis(std::size_t d, std::size_t m, std::size_t cap = kDefaultMatrixCap);

/// The isomorphism onto the symmetric subspace: X^a maps to the uniform average of the basis tuples
/// containing symbol i exactly a_i times (Pi|0^{a_0} 1^{a_1} ...>).
SymVector poly_to_symvector(const Poly &p, std::size_t cap = kDefaultMatrixCap);
std::vector<double> poly_to_symvector(const FloatPoly &p, std::size_t cap = kDefaultMatrixCap);

Rat inner(const SymVector &a, const SymVector &b);

FloatPoly to_float(const Poly &p);

/// Coefficients of P(O^T X), i.e. X_j replaced by sum_i O(i, j) X_i. Throws DomainError unless O is
/// square, of size num_vars, and orthogonal to within 1e-10.
FloatPoly apply_orthogonal(const Poly &p, const Eigen::MatrixXd &o);

/// Images of q^k h for h in harmonic_basis(d, t - 2k): an (unnormalised) eigenbasis of the real-Haar
/// moment operator for eigenvalue lambda_k.
std::vector<SymVector> eigenbasis_for_level(std::size_t d, std::size_t t, std::size_t k,
                                            std::size_t cap = kDefaultMatrixCap);

/// Which levels k enter the accept projector: those with lambda_k strictly above the complex-Haar
/// eigenvalue. Levels with lambda_k == mu exactly are reported in `tied` and left out.
struct PiPlusLevels {
    std::vector<std::size_t> included;
    std::vector<std::size_t> tied;
    std::vector<std::size_t> excluded;
    Rat mu;

    /// sum over included levels of alpha_k lambda_k: the acceptance probability on every real state.
    Rat acceptance_on_real;
    /// sum over included levels of alpha_k mu: the acceptance probability on complex-Haar states.
    Rat acceptance_on_complex;
};

PiPlusLevels pi_plus_levels(std::size_t d, std::size_t t);

/// Orthogonal projector onto the included levels, V (V^T V)^{-1} V^T over the stacked eigenbases.
/// Prints a diagnostic to stderr if some level ties with mu exactly.
RatMatrix build_pi_plus(std::size_t d, std::size_t t, std::size_t cap = kDefaultMatrixCap);

}  // namespace realhaar

#endif
