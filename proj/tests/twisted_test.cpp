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
#include "lame/twisted.hpp"

using namespace lame;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

Poly as_x_poly(const std::vector<LamePoly>& coeffs) {
    Poly out;
    for (const auto& c : coeffs) out = out * Poly::variable(Var::x) + c.poly();
    return out;
}

Poly at(const Poly& p, Var v, const Poly& value) { return curve_reduce(p.substitute(v, value)); }

}  // namespace

TEST(Twisted, SmallEllIsRejected) {
    EXPECT_THROW(twisted_recurrence(2, TwistedType::I), std::invalid_argument);
    EXPECT_THROW(twisted_recurrence(1, TwistedType::II), std::invalid_argument);
    EXPECT_THROW(theta_twisted_system(3), std::invalid_argument);
}

TEST(Twisted, EllThreeTypeIResultant) {
    auto sys = twisted_recurrence(3, TwistedType::I);
    EXPECT_TRUE(sys.first.contains(Var::kappa) || sys.second.contains(Var::kappa));
    EXPECT_EQ(normalize_in_B(twisted_resultant(sys)), P("B^2 - 75/4*g2"));
}

TEST(Twisted, ZeroKappaReducesToOrdinaryRecurrences) {
    for (int ell = 3; ell <= 8; ++ell) {
        auto one = twisted_recurrence(ell, TwistedType::I);
        auto two = twisted_recurrence(ell, TwistedType::II);
        // the normalized sequence of each pair is the ordinary one
        const bool odd = ell % 2;
        Poly i_seq = as_x_poly(odd ? one.second_coeffs : one.first_coeffs);
        Poly ii_seq = as_x_poly(odd ? two.first_coeffs : two.second_coeffs);
        EXPECT_EQ(at(i_seq, Var::kappa, Poly(0)), as_x_poly(run_recurrence(odd ? Family::D : Family::C, ell).coeffs)) << ell;
        EXPECT_EQ(at(ii_seq, Var::kappa, Poly(0)), as_x_poly(run_recurrence(odd ? Family::E : Family::F, ell).coeffs)) << ell;
    }
}

TEST(Twisted, TypeIMatchesReference) {
    for (const auto& [ell, text] : golden::kTwistedI)
        EXPECT_EQ(twisted_spectral(ell, TwistedType::I).poly, P(text)) << "ell=" << ell;
}

TEST(Twisted, TypeIIMatchesReference) {
    for (const auto& [ell, text] : golden::kTwistedII)
        EXPECT_EQ(twisted_spectral(ell, TwistedType::II).poly, P(text)) << "ell=" << ell;
}

TEST(Twisted, DegreeLawsAndWeights) {
    for (int ell = 1; ell <= 12; ++ell) {
        for (auto type : {TwistedType::I, TwistedType::II}) {
            Poly p = twisted_spectral(ell, type).poly;
            int want = type == TwistedType::I ? degree_twisted_I(ell) : degree_twisted_II(ell);
            EXPECT_EQ(static_cast<int>(p.degree(Var::B)), want) << ell;
            EXPECT_EQ(p.lead(Var::B), Poly(1)) << ell;
            EXPECT_TRUE(p.isobaric_weight().has_value()) << ell;
        }
        Poly t = theta_twisted_spectral(ell).poly;
        EXPECT_EQ(static_cast<int>(t.degree(Var::B)), degree_theta_twisted(ell)) << ell;
        EXPECT_TRUE(t.isobaric_weight().has_value()) << ell;
    }
}

TEST(Twisted, FullTwistedIsEFreeOfDegreeEllSquaredMinusOne) {
    for (int ell = 1; ell <= 8; ++ell) {
        Poly p = full_twisted(ell).poly;
        EXPECT_FALSE(p.contains(Var::e)) << ell;
        EXPECT_EQ(static_cast<int>(p.degree(Var::B)), ell * ell - 1) << ell;
    }
}

TEST(Twisted, EquianharmonicCommonZeroRoot) {
    for (int ell : {3, 6, 9, 12}) {
        auto zero = [](const Poly& p) { return p.substitute(Var::g2, Poly(0)).substitute(Var::B, Poly(0)).is_zero(); };
        EXPECT_TRUE(zero(twisted_spectral(ell, TwistedType::I).poly)) << ell;
        EXPECT_TRUE(zero(spectral_poly_I(ell).poly)) << ell;
    }
}

TEST(ThetaTwisted, CoefficientDegrees) {
    auto four = theta_twisted_system(4);
    EXPECT_EQ(four.first_coeffs.size(), 1u);
    EXPECT_EQ(four.second_coeffs.size(), 2u);
    auto five = theta_twisted_system(5);
    EXPECT_EQ(five.first_coeffs.size(), 3u);
    EXPECT_EQ(five.second_coeffs.size(), 1u);
}

TEST(ThetaTwisted, BranchPointReducesToOrdinaryRecurrences) {
    for (int ell = 5; ell <= 8; ++ell) {
        auto sys = theta_twisted_system(ell);
        const bool odd = ell % 2;
        Poly seq = as_x_poly(odd ? sys.first_coeffs : sys.second_coeffs);
        Poly spec = at(at(seq, Var::y0, Poly(0)), Var::x0, Poly::variable(Var::e));
        EXPECT_EQ(spec, as_x_poly(run_recurrence(odd ? Family::E : Family::F, ell).coeffs)) << ell;
    }
}

// The printed ell=6 row places the 1/4 on the g3^2 term instead of g2^3.
TEST(ThetaTwisted, MatchesReference) {
    for (const auto& [ell, text] : golden::kThetaTwisted) {
        if (ell == 6) continue;
        EXPECT_EQ(theta_twisted_spectral(ell).poly, P(text)) << "ell=" << ell;
    }
    Poly six = theta_twisted_spectral(6).poly;
    EXPECT_EQ(six - P(golden::kThetaTwisted.at(6)), P("(96850215/4 - 96850215)*g2^3 + (576357606/4 - 576357606)*g3^2"));
    EXPECT_EQ(six.coeff(Var::B, 0), P("96850215/4*g2^3 - 576357606*g3^2"));
}
