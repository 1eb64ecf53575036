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

#include "lame/poly.hpp"

namespace lame {

// Curve y^2 = 4x^3 - g2 x - g3 in the m-normalization, where the branch
// points are e1 = (2-m)/3, e2 = (2m-1)/3, e3 = -(m+1)/3 and e1 - e3 = 1.
template <class T>
struct EllipticParams {
    T m;
    T e1, e2, e3;
    T g2, g3;
    T J;
};

// Throws std::domain_error for m = 0 or m = 1.
EllipticParams<Rational> params_from_m(const Rational& m);
EllipticParams<std::complex<double>> params_from_m(std::complex<double> m);

Rational klein_j(const Rational& m);

enum class CohnKind { I, II };

struct CohnPolynomial {
    int ell;
    CohnKind kind;
    Poly poly;  // in J; integer, primitive, positive leading coefficient; 1 when undefined
};

CohnPolynomial cohn_polynomial(int ell, CohnKind kind);

// The same elimination in the g2 = 1 gauge. It cannot see the J = 0 ray,
// and cohn_polynomial's main gauge cannot see J = 1; factors J and J - 1 are
// stripped from both before comparing.
Poly cohn_polynomial_g2_gauge(int ell, CohnKind kind);
Poly strip_ray_factors(const Poly& p);

// True if p has a real root in [1, inf).
bool has_root_at_or_above_one(const Poly& p);

struct CohnDegreeRow {
    int ell;
    CohnKind kind;
    int degree;
    int conjectured;
    bool divisible_by_J;
};

std::vector<CohnDegreeRow> cohn_degree_report(int ell_max);
int conjectured_cohn_degree(int ell, CohnKind kind);

}  // namespace lame
