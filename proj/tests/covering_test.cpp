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

#include <random>

#include "golden_tables.hpp"
#include "lame/covering.hpp"
#include "lame/elimination.hpp"
#include "lame/spectral.hpp"

using namespace lame;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

RatFunc R(const std::string& num, const std::string& den) { return RatFunc(P(num), P(den)); }

// m = 1/2: g2 = 1, g3 = 0 with branch points 1/2, 0, -1/2.
const Rational kG2 = 1, kG3 = 0;
const Rational kBranch[3] = {make_rational(1, 2), Rational(0), make_rational(-1, 2)};

std::function<Rational(Var)> point(const Rational& B, const Rational& g2, const Rational& g3, const Rational& e = 0) {
    return [=](Var v) -> Rational {
        switch (v) {
            case Var::B: return B;
            case Var::g2: return g2;
            case Var::g3: return g3;
            case Var::e: return e;
            default: throw std::invalid_argument("unexpected variable");
        }
    };
}

}  // namespace

TEST(TheoremL, SmallEll) {
    auto one = theorem_L(1);
    EXPECT_EQ(one.x0, RatFunc(P("B")));
    EXPECT_EQ(one.y0_over_nu, RatFunc(P("2")));
    EXPECT_EQ(one.kappa_over_nu, RatFunc(P("0")));

    auto two = theorem_L(2);
    EXPECT_EQ(two.x0, R("B^3 + 27*g3", "9*(B^2 - 3*g2)"));
    EXPECT_EQ(two.y0_over_nu, R("2*(B^3 - 9*g2*B - 54*g3)", "27*(B^2 - 3*g2)^2"));
    EXPECT_EQ(two.kappa_over_nu, R("-2", "3*(B^2 - 3*g2)"));

    auto three = theorem_L(3);
    EXPECT_EQ(three.x0, R("16*B^6 + 360*g2*B^4 + 27000*g3*B^3 - 3375*g2^2*B^2 - 303750*g2*g3*B - 84375*g2^3 + 2278125*g3^2",
                          "36*B*(4*B^2 - 75*g2)^2"));
    EXPECT_EQ(three.y0_over_nu, R("16*B^6 - 1800*g2*B^4 - 54000*g3*B^3 - 16875*g2^2*B^2 + 421875*g2^3 - 11390625*g3^2",
                                  "27*B^2*(4*B^2 - 75*g2)^3"));
    EXPECT_EQ(three.kappa_over_nu, R("-10", "3*B*(4*B^2 - 75*g2)"));
}

TEST(TheoremL, BranchPointsAgree) {
    const Rational samples[] = {make_rational(3, 7), make_rational(-11, 4), make_rational(29, 3)};
    for (int ell = 1; ell <= 8; ++ell) {
        RatFunc branch = x0_branch_form(ell);
        RatFunc x0 = theorem_L(ell).x0;
        EXPECT_FALSE(x0.contains(Var::e));
        for (const auto& B : samples) {
            Rational want = x0.evaluate(point(B, kG2, kG3));
            for (const auto& e : kBranch) EXPECT_EQ(branch.evaluate(point(B, kG2, kG3, e)), want) << ell;
        }
    }
}

TEST(TheoremL, CurveIdentitySymbolic) {
    // With x0 = n/d and y0hat = Yn/Yd, cross-multiplied.
    for (int ell = 1; ell <= 4; ++ell) {
        auto c = theorem_L(ell);
        const Poly &n = c.x0.num(), &d = c.x0.den();
        const Poly &Yn = c.y0_over_nu.num(), &Yd = c.y0_over_nu.den();
        Poly lhs = Yn * Yn * full_spectral(ell).poly * pow(d, 3);
        Poly rhs = (Poly(4) * pow(n, 3) - P("g2") * n * d * d - P("g3") * pow(d, 3)) * Yd * Yd;
        EXPECT_EQ(lhs, rhs) << ell;
    }
}

TEST(TheoremL, CurveIdentityAtRandomPoints) {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
    for (int ell = 5; ell <= 8; ++ell) {
        auto c = theorem_L(ell);
        Poly L = full_spectral(ell).poly;
        int checked = 0;
        while (checked < 20) {
            auto at = point(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
            if (c.x0.den().evaluate(at) == 0 || c.y0_over_nu.den().evaluate(at) == 0) continue;
            Rational x = c.x0.evaluate(at), y = c.y0_over_nu.evaluate(at);
            Rational g2 = at(Var::g2), g3 = at(Var::g3);
            EXPECT_EQ(y * y * L.evaluate(at), 4 * x * x * x - g2 * x - g3) << ell;
            ++checked;
        }
    }
}

TEST(TheoremL, CoveringDegree) {
    for (int ell = 1; ell <= 8; ++ell) EXPECT_EQ(covering_degree(theorem_L(ell)), ell * (ell + 1) / 2) << ell;
}

TEST(TheoremL, BandEdgesMapToBranchPoints) {
    // x0 - e and y0hat * L vanish on the roots of L^II(.; e).
    for (int ell = 1; ell <= 8; ++ell) {
        auto c = theorem_L(ell);
        Poly edge = to_e_coordinates(spectral_poly_II(ell).poly);
        Poly shifted = to_e_coordinates(c.x0.num() - Poly::variable(Var::e) * c.x0.den());
        EXPECT_TRUE(try_divide(shifted, edge).has_value()) << ell;
        Poly y_times_nu2 = to_e_coordinates(c.y0_over_nu.num() * full_spectral(ell).poly);
        EXPECT_TRUE(try_divide(y_times_nu2, edge).has_value()) << ell;
    }
}

TEST(Reduction, MatchesReference) {
    for (const auto& [ell, text] : golden::kReductionHat) {
        auto r = reduction_polynomial(ell);
        EXPECT_EQ(r.P_hat, P(text)) << ell;
        EXPECT_EQ(r.P, r.P_hat * make_rational(ell * (ell + 1), 4)) << ell;
        EXPECT_EQ(static_cast<int>(r.P_hat.degree(Var::B)), ell - 1) << ell;
        EXPECT_EQ(r.P_hat.lead(Var::B), Poly(1)) << ell;
    }
    EXPECT_EQ(reduction_polynomial(2).P, P("3/2*B"));
}

TEST(Reduction, BranchDegeneracy) {
    EXPECT_TRUE(branch_degeneracy(2).empty());
    EXPECT_EQ(discriminant(reduction_polynomial(3).P_hat, Var::B), P("15*g2"));
    EXPECT_TRUE(branch_degeneracy(3).empty());
    auto four = branch_degeneracy(4);
    ASSERT_EQ(four.size(), 1u);
    EXPECT_EQ(four[0], make_rational(-2500, 12879));
}

TEST(Reduction, EquianharmonicDoubleCriticalPoint) {
    EXPECT_TRUE(equianharmonic_double_critical(3));
    EXPECT_TRUE(equianharmonic_double_critical(6));
    EXPECT_FALSE(equianharmonic_double_critical(4));
    EXPECT_FALSE(equianharmonic_double_critical(5));
}

TEST(HermiteKrichever, EllOneDegenerates) {
    auto s = hk_coefficients(1, make_rational(5, 3), 1, Rational(2), make_rational(1, 3));
    ASSERT_EQ(s.A.size(), 1u);
    EXPECT_EQ(s.A[0], QuadraticNumber(1));
    EXPECT_TRUE(s.Bc.empty());
    EXPECT_TRUE(s.kappa.is_zero());
}

TEST(HermiteKrichever, EllTwoAtOrigin) {
    auto s = hk_coefficients(2, Rational(0), 1, kG2, kG3);
    EXPECT_EQ(s.x0, QuadraticNumber(0));
    EXPECT_TRUE(s.residual_a.is_zero());
    EXPECT_TRUE(s.residual_b.is_zero());
}

TEST(HermiteKrichever, EllTwoAtTypeIIBandEdges) {
    for (const auto& e : kBranch) {
        auto s = hk_coefficients(2, -3 * e, 1, kG2, kG3);
        EXPECT_EQ(s.x0, QuadraticNumber(e));
        EXPECT_TRUE(s.y0.is_zero());
        EXPECT_TRUE(s.kappa.is_zero());
    }
}

TEST(HermiteKrichever, ExactResidualsVanishAtIrrationalNu) {
    for (int ell = 2; ell <= 6; ++ell)
        for (int sign : {1, -1}) {
            auto s = hk_coefficients(ell, make_rational(7, 3), sign, make_rational(5, 2), make_rational(-1, 7));
            EXPECT_TRUE(s.residual_a.is_zero() && s.residual_b.is_zero()) << ell;
            EXPECT_TRUE(s.nu.has_N) << ell;
        }
}

TEST(HermiteKrichever, FloatingResiduals) {
    for (int ell = 1; ell <= 8; ++ell) {
        auto s = hk_coefficients(ell, std::complex<double>(1.3, -0.4), 1, std::complex<double>(1.0, 0.0), std::complex<double>(0.2, 0.1));
        EXPECT_LT(s.relative_residual, 1e-10) << ell;
    }
}

TEST(HermiteKrichever, PoleIsRejected) {
    EXPECT_THROW(hk_coefficients(2, Rational(3), 1, Rational(3), Rational(0)), std::domain_error);
}
