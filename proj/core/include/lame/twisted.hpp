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

#include <vector>

#include "lame/spectral.hpp"

namespace lame {

enum class TwistedType { I, II };

int degree_twisted_I(int ell);
int degree_twisted_II(int ell);
int degree_theta_twisted(int ell);

// The two compatibility conditions (j = -1 coefficients) of a coupled
// recurrence, with the parity factor (kappa or y0) already divided out.
struct TwistedSystem {
    int ell;
    SpectralKind kind;
    std::vector<LamePoly> first_coeffs;   // sequence 0, x^top .. x^0
    std::vector<LamePoly> second_coeffs;  // sequence 1
    Poly first;                           // eliminand from sequence 0
    Poly second;                          // eliminand from sequence 1
    int divided_sequence;                 // which eliminand carried the parity factor
};

TwistedSystem twisted_recurrence(int ell, TwistedType type);
TwistedSystem theta_twisted_system(int ell);

// Raw elimination result before content removal and degree matching.
Poly twisted_resultant(const TwistedSystem& sys);
Poly theta_twisted_resultant(const TwistedSystem& sys);

// Keeps the factors of the square-free decomposition of p needed to reach
// the target degree in B. Candidate factors that divide one of `excluded`
// are dropped first; a remaining ambiguity throws std::domain_error.
Poly match_degree(const Poly& p, int target, const std::vector<Poly>& excluded, const char* what);

void clear_twisted_cache();

SpectralPolynomial twisted_spectral(int ell, TwistedType type);
SpectralPolynomial theta_twisted_spectral(int ell);
// Lt^I times the norm over e of Lt^II.
SpectralPolynomial full_twisted(int ell);

}  // namespace lame
