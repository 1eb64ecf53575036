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

#include "lame/elimination.hpp"
#include "lame/lame_poly.hpp"
#include "lame/poly.hpp"

using namespace lame;

namespace {

Poly P(const char* s) { return parse_poly(s); }

// Determinant by cofactor expansion; only for the tiny oracle matrices here.
Poly det(const std::vector<std::vector<Poly>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly out;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Poly t = m[0][c] * det(minor);
        if (c % 2) out -= t; else out += t;
    }
    return out;
}

Poly sylvester(const Poly& a, const Poly& b, Var v) {
    auto ca = a.coefficients(v), cb = b.coefficients(v);
    std::size_t da = ca.size() - 1, db = cb.size() - 1, n = da + db;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t k = 0; k <= da; ++k) m[r][r + k] = ca[da - k];
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t k = 0; k <= db; ++k) m[db + r][r + k] = cb[db - k];
    return det(m);
}

Poly random_poly(std::mt19937& rng, const std::vector<Var>& vars, int terms, int maxdeg) {
    std::uniform_int_distribution<int> coef(-5, 5), dg(0, maxdeg);
    Poly out;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (Var v : vars) m.set(v, static_cast<unsigned>(dg(rng)));
        out += Poly::monomial(m, coef(rng));
    }
    return out;
}

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
    EXPECT_EQ(parse_rational("6/8"), make_rational(3, 4));
    EXPECT_EQ(parse_rational("0.5"), make_rational(1, 2));
    EXPECT_EQ(parse_rational("-1.25e-1"), make_rational(-1, 8));
    EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
    EXPECT_THROW(parse_rational("1/0"), std::domain_error);
}

TEST(Poly, ParserAndPrinterRoundTrip) {
    Poly p = P("B^3 - 52*g2*B + 560*g3");
    EXPECT_EQ(P(p.to_string().c_str()), p);
    EXPECT_EQ(p.degree(Var::B), 3u);
    EXPECT_EQ(p.isobaric_weight(), Rational(3));
}

TEST(Poly, CubicReductionOfE) {
    LamePoly e = LamePoly::variable(Var::e);
    EXPECT_EQ((e * e * e).poly(), P("(g2*e + g3)/4"));
}

TEST(Poly, AddZeroIsIdentity) {
    LamePoly a = P("B^2 + 3*e*B - g2");
    EXPECT_EQ(a + LamePoly(0), a);
}

TEST(Poly, ProductWithoutReduction) {
    LamePoly a = P("B - e"), b = P("B + 3*e");
    LamePoly c = a * b;
    EXPECT_EQ(c.poly(), P("B^2 + 2*e*B - 3*e^2"));
    EXPECT_EQ(c.isobaric_weight(), Rational(2));
}

TEST(Poly, RingLawsOnRandomTriples) {
    std::mt19937 rng(7);
    std::vector<Var> vars{Var::B, Var::g2, Var::e};
    for (int i = 0; i < 30; ++i) {
        LamePoly a = random_poly(rng, vars, 5, 4), b = random_poly(rng, vars, 5, 4), c = random_poly(rng, vars, 5, 4);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(Poly, ExactDivision) {
    Poly a = P("B^2 - 3*g2"), b = P("B^3 + 27*g3 - e*B");
    EXPECT_EQ(divide_exact(a * b, b), a);
    EXPECT_FALSE(try_divide(a * b + 1, b).has_value());
}

TEST(Resultant, SpecExamples) {
    // Sylvester sign gives -B; the spec value B is quoted up to sign.
    EXPECT_EQ(resultant(P("kappa"), P("kappa^2 - B"), Var::kappa), P("-B"));
    EXPECT_EQ(resultant(P("kappa"), P("kappa^2 - B"), Var::kappa), sylvester(P("kappa"), P("kappa^2 - B"), Var::kappa));
    EXPECT_EQ(resultant(P("x0 - B"), P("y0^2 - 4*x0^3 + g2*x0 + g3"), Var::x0),
              P("y0^2 - 4*B^3 + g2*B + g3"));
    Poly r = resultant(P("B^2 - 3*g2"), P("2*B"), Var::B);
    EXPECT_EQ(r, sylvester(P("B^2 - 3*g2"), P("2*B"), Var::B));
    EXPECT_EQ(r, P("-12*g2"));
}

TEST(Resultant, AgreesWithSylvesterDeterminant) {
    std::mt19937 rng(11);
    for (int i = 0; i < 25; ++i) {
        Poly a = random_poly(rng, {Var::B, Var::g2}, 4, 3) + P("B^3");
        Poly b = random_poly(rng, {Var::B, Var::g3}, 4, 2) + P("g2*B^2");
        if (a.degree(Var::B) == 0 || b.degree(Var::B) == 0) continue;
        EXPECT_EQ(resultant(a, b, Var::B), sylvester(a, b, Var::B)) << a.to_string() << " | " << b.to_string();
        EXPECT_EQ(resultant(b, a, Var::B), sylvester(b, a, Var::B));
    }
}

TEST(Resultant, VanishesOnSharedRoot) {
    Poly common = P("B - g2*e + 1");
    Poly a = common * P("B^2 + g3"), b = common * P("B - 7");
    EXPECT_TRUE(resultant(a, b, Var::B).is_zero());
    EXPECT_FALSE(resultant(P("B^2 + g3"), P("B - 7"), Var::B).is_zero());
    EXPECT_THROW(resultant(Poly{}, b, Var::B), std::invalid_argument);
}

TEST(Discriminant, SpecExamples) {
    EXPECT_EQ(discriminant(P("B^2 - 3*g2"), Var::B), P("12*g2"));
    EXPECT_EQ(discriminant(P("B^3 - 52*g2*B + 560*g3"), Var::B), P("-4*(-52*g2)^3 - 27*(560*g3)^2"));
    EXPECT_THROW(discriminant(P("B + g2"), Var::B), std::invalid_argument);
}

TEST(Gcd, MultivariateCommonFactor) {
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
        Poly g = random_poly(rng, {Var::B, Var::g2, Var::g3}, 3, 2) + P("B^3");
        Poly a = g * (random_poly(rng, {Var::B, Var::g2}, 3, 2) + P("B^2"));
        Poly b = g * (random_poly(rng, {Var::B, Var::g3}, 3, 2) + P("B^3 + 1"));
        Poly d = gcd(a, b);
        EXPECT_TRUE(try_divide(d, g.monic()).has_value());
        EXPECT_TRUE(try_divide(a, d).has_value());
        EXPECT_TRUE(try_divide(b, d).has_value());
    }
    EXPECT_EQ(gcd(P("B^2 - g2"), P("B - 1")), Poly(1));
}

TEST(Gcd, SquarefreeDecomposition) {
    Poly f = P("B - g2"), g = P("B^2 + g3"), h = P("B + 1");
    auto parts = squarefree_decomposition(f * pow(g, 2) * pow(h, 3), Var::B);
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0].first, f.monic());
    EXPECT_EQ(parts[1].first, g.monic());
    EXPECT_EQ(parts[2].second, 3u);
}

TEST(Symmetrize, SpecExamples) {
    EXPECT_EQ(symmetrize_over_e(P("e1*e2*e3")), P("g3/4"));
    EXPECT_EQ(symmetrize_over_e(P("e1^2*e2^2 + e2^2*e3^2 + e3^2*e1^2")), P("g2^2/16"));
    EXPECT_TRUE(symmetrize_over_e(P("e1 + e2 + e3")).is_zero());
    EXPECT_THROW(symmetrize_over_e(P("e1 + e2")), std::domain_error);
}

TEST(Symmetrize, AgreesWithExactRootsOfRationalCubics) {
    // Choose the roots first, then g2, g3 follow from them.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    Poly e1 = P("e1"), e2 = P("e2"), e3 = P("e3");
    Poly sym = pow(e1 - e2, 2) * pow(e2 - e3, 2) * pow(e3 - e1, 2) + e1 * e2 * e3 * (e1 * e1 + e2 * e2 + e3 * e3) * P("B");
    Poly reduced = symmetrize_over_e(sym);
    EXPECT_EQ(symmetrize_over_e(reduced), reduced);
    for (int i = 0; i < 20; ++i) {
        Rational r1 = make_rational(d(rng), 3), r2 = make_rational(d(rng), 5);
        Rational r3 = -r1 - r2;
        Rational g2 = -4 * (r1 * r2 + r2 * r3 + r3 * r1), g3 = 4 * r1 * r2 * r3;
        Rational B = make_rational(d(rng), 7);
        auto at = [&](Var v) -> Rational {
            switch (v) {
                case Var::e1: return r1;
                case Var::e2: return r2;
                case Var::e3: return r3;
                case Var::g2: return g2;
                case Var::g3: return g3;
                default: return B;
            }
        };
        EXPECT_EQ(sym.evaluate(at), reduced.evaluate(at));
    }
}

TEST(Symmetrize, NormOverEAgreesWithSymmetrization) {
    Poly p = P("B^2 - 6*e*B + 45*e^2 - 15*g2");
    Poly prod = p.rename(Var::e, Var::e1) * p.rename(Var::e, Var::e2) * p.rename(Var::e, Var::e3);
    EXPECT_EQ(norm_over_e(p), symmetrize_over_e(prod));
}

TEST(Sturm, CountsRealRoots) {
    UPoly p = to_upoly(P("(J - 1)*(J - 2)*(J^2 + 1)*(J + 5)"), Var::J);
    EXPECT_EQ(sturm_count_all(p), 3);
    EXPECT_EQ(sturm_count_above(p, 1), 1);
    EXPECT_EQ(sturm_count(p, 0, 1), 1);
}
