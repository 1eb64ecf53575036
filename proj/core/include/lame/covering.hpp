/*
   Copyright 2026 The lamekit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>
#include <vector>

#include "lame/ratfunc.hpp"
#include "lame/recurrence.hpp"

namespace lame {

// (B, nu) -> (x0, y0) together with kappa; y0 and kappa are stored divided by nu.
struct CoveringMap {
    int ell;
    RatFunc x0;
    RatFunc y0_over_nu;
    RatFunc kappa_over_nu;
};

// x0 written with an explicit branch point e before e-reduction.
RatFunc x0_branch_form(int ell);

// Throws std::logic_error if the branch-point terms fail to cancel.
void clear_covering_cache();

CoveringMap theorem_L(int ell);

int covering_degree(const CoveringMap& c);

struct ReductionPolynomial {
    int ell;
    Poly P;      // y0hat^{-1} dx0/dB
    Poly P_hat;  // monic, degree ell - 1
};

ReductionPolynomial reduction_polynomial(int ell);

// Values of J (other than the J = 0 and J = 1 rays) at which P_hat has a
// double root in B, found from disc_B(P_hat) with g3 = 1.
std::vector<Rational> branch_degeneracy(int ell);
// The J polynomial behind branch_degeneracy, primitive with positive lead.
Poly branch_degeneracy_polynomial(int ell);

// True when P_hat has a repeated root on the equianharmonic curve g2 = 0.
bool equianharmonic_double_critical(int ell);

// Elements a + b*sqrt(N) of a quadratic extension of Q. N is carried along
// and only has to agree when two irrational parts multiply.
struct QuadraticNumber {
    Rational a, b, N;
    bool has_N = false;

    QuadraticNumber() = default;
    QuadraticNumber(const Rational& r) : a(r) {}  // NOLINT(google-explicit-constructor)
    static QuadraticNumber sqrt_of(const Rational& n, int sign);

    bool is_zero() const { return a == 0 && b == 0; }
    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) { return x.a == y.a && x.b == y.b; }
};

template <>
struct ScalarTraits<QuadraticNumber> {
    static QuadraticNumber from_rational(const Rational& r) { return QuadraticNumber(r); }
};

template <class T>
struct HKSolution {
    std::vector<T> A;  // x^top .. x^0
    std::vector<T> Bc;
    T nu, x0, y0, kappa;
    T residual_a, residual_b;
    double relative_residual = 0;  // floating evaluations only
};

// Hermite-Krichever coefficients at a spectral point; nu = +/- sqrt(L(B))
// by nu_sign. Throws std::domain_error at a pole of the covering, and when
// the j = -1 residuals do not vanish (exactly, or to 1e-10 relative).
HKSolution<QuadraticNumber> hk_coefficients(int ell, const Rational& B, int nu_sign, const Rational& g2,
                                            const Rational& g3);
HKSolution<std::complex<double>> hk_coefficients(int ell, std::complex<double> B, int nu_sign,
                                                 std::complex<double> g2, std::complex<double> g3);

}  // namespace lame
