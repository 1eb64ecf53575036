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

#include <string>
#include <vector>

#include "lame/lame_poly.hpp"
#include "lame/recurrence.hpp"

namespace lame {

enum class SpectralKind { TypeI, TypeII, TwistedI, TwistedII, ThetaTwisted, Full, FullTwisted };

std::string kind_name(SpectralKind k);

struct SpectralPolynomial {
    SpectralKind kind;
    int ell;
    Poly poly;  // monic in B
};

struct RecurrenceCoefficients {
    Family family;
    int ell;
    int top;
    std::vector<LamePoly> coeffs;  // x^top down to x^0
    LamePoly residual;             // coefficient at j = -1
};

// Closed-form degrees in B.
int degree_type_I(int ell);
int degree_type_II(int ell);

// Species used for each type: D or C for Type I, E or F for Type II.
Family type_I_family(int ell);
Family type_II_family(int ell);

// Runs an ordinary recurrence with B and e symbolic, or substituted.
RecurrenceCoefficients run_recurrence(Family f, int ell);
RecurrenceCoefficients run_recurrence(Family f, int ell, const LamePoly& B, const LamePoly& e);

// Content removal followed by normalization to a monic polynomial in B.
Poly normalize_in_B(const Poly& p);

// Results are memoized per ell; benchmarks clear the cache between runs.
void clear_spectral_cache();

SpectralPolynomial spectral_poly_I(int ell);
SpectralPolynomial spectral_poly_II(int ell);
SpectralPolynomial full_spectral(int ell);

enum class LameType { I, II };

// Lame polynomial C, D, E or F of the given type; the residual vanishes
// exactly when B is a spectral root.
RecurrenceCoefficients lame_polynomial(int ell, LameType type, const LamePoly& B,
                                       const LamePoly& e = LamePoly::variable(Var::e));

// Hermite-Halphen polynomial normalized monic in x (variables x, B, g2, g3).
Poly hermite_halphen(int ell);

// Evaluates -F D^2 F / 2 + (D F / 2)^2 + (l(l+1) x + B) F^2 with F the
// Hermite-Halphen polynomial normalized monic in B, D = y d/dx. Throws
// std::logic_error if the result still depends on x or y.
SpectralPolynomial nu_squared_check(int ell);

}  // namespace lame
