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

#include <gtest/gtest.h>

#include "golden_tables.hpp"
#include "lame/elimination.hpp"
#include "lame/spectral.hpp"

using namespace lame;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

Poly as_x_poly(const std::vector<LamePoly>& coeffs) {
    Poly out;
    for (const auto& c : coeffs) out = out * Poly::variable(Var::x) + c.poly();
    return out;
}

}  // namespace

TEST(Recurrence, SpeciesOneEllTwo) {
    auto r = run_recurrence(Family::C, 2);
    EXPECT_EQ(as_x_poly(r.coeffs), P("x - B/6"));
    EXPECT_EQ(normalize_in_B(r.residual.poly()), P("B^2 - 3*g2"));
}

TEST(Recurrence, SpeciesTwoEllOne) {
    auto r = run_recurrence(Family::E, 1);
    EXPECT_EQ(as_x_poly(r.coeffs), Poly(1));
    EXPECT_EQ(normalize_in_B(r.residual.poly()), P("B - e"));
}

TEST(Recurrence, SpeciesFourEllThree) {
    auto r = run_recurrence(Family::D, 3);
    EXPECT_EQ(as_x_poly(r.coeffs), Poly(1));
    EXPECT_EQ(normalize_in_B(r.residual.poly()), P("B"));
}

TEST(Recurrence, ParityMismatchIsRejected) {
    EXPECT_THROW(run_recurrence(Family::C, 3), std::invalid_argument);
    EXPECT_THROW(run_recurrence(Family::D, 1), std::invalid_argument);
    EXPECT_THROW(run_recurrence(Family::F, 5), std::invalid_argument);
}

TEST(Spectral, TypeIMatchesReference) {
    for (const auto& [ell, text] : golden::kSpectralI) EXPECT_EQ(spectral_poly_I(ell).poly, P(text)) << "ell=" << ell;
}

TEST(Spectral, TypeIIMatchesReference) {
    for (const auto& [ell, text] : golden::kSpectralII) EXPECT_EQ(spectral_poly_II(ell).poly, P(text)) << "ell=" << ell;
}

TEST(Spectral, LamePolynomialsMatchReference) {
    LamePoly B = LamePoly::variable(Var::B);
    for (const auto& [ell, text] : golden::kLameTypeI)
        EXPECT_EQ(as_x_poly(lame_polynomial(ell, LameType::I, B).coeffs), P(text)) << "ell=" << ell;
    for (const auto& [ell, text] : golden::kLameTypeII)
        EXPECT_EQ(as_x_poly(lame_polynomial(ell, LameType::II, B).coeffs), P(text)) << "ell=" << ell;
}

TEST(Spectral, ResidualVanishesAtSpectralRoot) {
    // B^2 = 3 g2 with g2 = 3 gives B = 3.
    LamePoly B = LamePoly(Rational(3));
    auto r = lame_polynomial(2, LameType::I, B);
    EXPECT_TRUE(r.residual.poly().substitute(Var::g2, Rational(3)).is_zero());
}

TEST(Spectral, DegreeLawsAndWeights) {
    for (int ell = 1; ell <= 12; ++ell) {
        Poly LI = spectral_poly_I(ell).poly, LII = spectral_poly_II(ell).poly;
        EXPECT_EQ(static_cast<int>(LI.degree(Var::B)), degree_type_I(ell)) << ell;
        EXPECT_EQ(static_cast<int>(LII.degree(Var::B)), degree_type_II(ell)) << ell;
        EXPECT_EQ(LI.isobaric_weight(), Rational(degree_type_I(ell)));
        EXPECT_EQ(LII.isobaric_weight(), Rational(degree_type_II(ell)));
        EXPECT_LE(LII.degree(Var::e), 2u);
    }
    EXPECT_EQ(degree_type_I(1), 0);
    EXPECT_EQ(degree_type_I(8), 5);
    EXPECT_EQ(degree_type_II(7), 4);
}

TEST(Spectral, FullSpectral) {
    EXPECT_EQ(full_spectral(1).poly, P("B^3 - g2*B/4 - g3/4"));
    EXPECT_EQ(full_spectral(3).poly,
              P("B*(B^6 - (63/2)g2 B^4 + (297/2)g3 B^3 + (4185/16)g2^2 B^2 - (18225/8)g2 g3 B - (3375/16)g2^3 + "
                "(91125/16)g3^2)"));
    for (int ell = 1; ell <= 12; ++ell) {
        Poly L = full_spectral(ell).poly;
        EXPECT_FALSE(L.contains(Var::e));
        EXPECT_EQ(static_cast<int>(L.degree(Var::B)), 2 * ell + 1);
        EXPECT_EQ(L.lead(Var::B), Poly(1));
        EXPECT_EQ(L.isobaric_weight(), Rational(2 * ell + 1));
    }
}

TEST(Spectral, FullSpectralAgreesWithSymmetrization) {
    for (int ell = 1; ell <= 5; ++ell) {
        Poly LII = spectral_poly_II(ell).poly;
        Poly prod = LII.rename(Var::e, Var::e1) * LII.rename(Var::e, Var::e2) * LII.rename(Var::e, Var::e3);
        EXPECT_EQ(spectral_poly_I(ell).poly * symmetrize_over_e(prod), full_spectral(ell).poly);
    }
}

TEST(Spectral, LemniscaticSpecialization) {
    EXPECT_EQ(spectral_poly_I(8).poly.substitute(Var::g3, Rational(0)), P("B^5 - 1044*g2*B^3 + 112320*g2^2*B"));
}

TEST(Spectral, ZeroRootWhenBranchValueVanishes) {
    // g3 = 0 with e = 0 as one of the branch values.
    for (int ell = 1; ell <= 12; ++ell) {
        int r = ell % 4;
        if (r == 0 || r == 3) {
            Poly p = spectral_poly_I(ell).poly.substitute(Var::g3, Rational(0));
            EXPECT_TRUE(p.substitute(Var::B, Rational(0)).is_zero()) << ell;
        } else {
            Poly p = spectral_poly_II(ell).poly.substitute(Var::g3, Rational(0)).substitute(Var::e, Rational(0));
            EXPECT_TRUE(p.substitute(Var::B, Rational(0)).is_zero()) << ell;
        }
    }
}

TEST(HermiteHalphen, MatchesReference) {
    for (const auto& [ell, text] : golden::kHermiteHalphen) EXPECT_EQ(hermite_halphen(ell), P(text)) << ell;
}

TEST(HermiteHalphen, NuSquaredEqualsFullSpectral) {
    EXPECT_EQ(nu_squared_check(1).poly, P("B^3 - g2*B/4 - g3/4"));
    for (int ell = 1; ell <= 5; ++ell) EXPECT_EQ(nu_squared_check(ell).poly, full_spectral(ell).poly) << ell;
}
