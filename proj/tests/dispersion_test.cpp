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

#include <cmath>
#include <numbers>

#include "lame/dispersion.hpp"
#include "lame/elimination.hpp"
#include "lame/moduli.hpp"
#include "lame/spectral.hpp"

using namespace lame;

namespace {

constexpr double kPi = std::numbers::pi;

Poly E_() { return Poly::variable(Var::E); }
Poly m_() { return Poly::variable(Var::m); }

// Distance between folded momenta on the circle of circumference pi/K.
double folded_distance(double a, double b, double K) {
    double d = std::fmod(std::abs(a - b), kPi / K);
    return std::min(d, kPi / K - d);
}

std::vector<double> expected_edges(int ell) {
    const double s3 = std::sqrt(3.0), s6 = std::sqrt(6.0), s15 = std::sqrt(15.0);
    if (ell == 1) return {0.5, 1.0, 1.5};
    if (ell == 2) return {3 - s3, 1.5, 3.0, 4.5, 3 + s3};
    return {4.5 - s6, 6 - s15, 7.5 - s6, 6.0, 4.5 + s6, 6 + s15, 7.5 + s6};
}

}  // namespace

TEST(JacobiSpectral, LowOrderFactorizations) {
    const Poly E = E_(), m = m_(), one(1);
    EXPECT_EQ(jacobi_spectral_symbolic(1), (E - one) * (E - m) * (E - m - one));
    Poly q2 = E * E - Poly(4) * (m + one) * E + Poly(12) * m;
    EXPECT_EQ(jacobi_spectral_symbolic(2),
              q2 * (E - m - one) * (E - Poly(4) * m - one) * (E - m - Poly(4)));
    Poly a = E * E - Poly(2) * (Poly(2) * m + Poly(5)) * E + Poly(3) * (Poly(8) * m + Poly(3));
    Poly b = E * E - Poly(2) * (Poly(5) * m + Poly(2)) * E + Poly(3) * (Poly(3) * m * m + Poly(8) * m);
    Poly c = E * E - Poly(10) * (m + one) * E + Poly(3) * (Poly(3) * m * m + Poly(26) * m + Poly(3));
    EXPECT_EQ(jacobi_spectral_symbolic(3), (E - Poly(4) * m - Poly(4)) * a * b * c);
}

TEST(JacobiSpectral, MonicOfFullDegree) {
    for (int ell = 1; ell <= 6; ++ell) {
        auto js = jacobi_spectral(ell, make_rational(1, 3));
        ASSERT_EQ(js.Ltilde.size(), std::size_t(2 * ell + 2));
        EXPECT_EQ(js.Ltilde.back(), 1);
    }
    EXPECT_THROW(jacobi_spectral(2, Rational(0)), std::domain_error);
    EXPECT_THROW(jacobi_spectral(2, Rational(1)), std::domain_error);
}

TEST(JacobiSpectral, LemniscaticIntegerRoot) {
    for (int ell = 1; ell <= 12; ++ell) {
        auto js = jacobi_spectral(ell, make_rational(1, 2));
        EXPECT_EQ(upoly_eval(js.Ltilde, make_rational(ell * (ell + 1), 2)), 0) << ell;
    }
}

TEST(BandEdges, LemniscaticClosedForms) {
    for (int ell = 1; ell <= 3; ++ell) {
        auto got = band_edges(ell, 0.5);
        auto want = expected_edges(ell);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12) << ell << " " << i;
    }
}

TEST(BandEdges, CountAndOracleTraceForSeveralModuli) {
    for (double m : {0.1, 0.5, 0.9})
        for (int ell = 1; ell <= 8; ++ell) EXPECT_EQ(band_edges(ell, m).size(), std::size_t(2 * ell + 1));
    for (int ell = 1; ell <= 3; ++ell)
        for (double E : band_edges(ell, 0.5))
            EXPECT_NEAR(std::abs(hill_monodromy_oracle(ell, E, 0.5).trace), 2.0, 1e-8) << ell << " " << E;
}

TEST(K1, EdgeValues) {
    ThetaContext ctx(0.5);
    const double K = ctx.K();
    EXPECT_LT(folded_distance(fold_k(k1(0.5, 0.0, ctx), K), 0.0, K), 1e-12);
    EXPECT_LT(folded_distance(fold_k(k1(1.0, 0.0, ctx), K), kPi / (2 * K), K), 1e-12);
    EXPECT_LT(folded_distance(fold_k(k1(1.5, 0.0, ctx), K), kPi / (2 * K), K), 1e-12);
}

TEST(ReducedEnergy, QuadraticDisplaysExact) {
    // Exact comparison of the l = 2 reduced data against closed forms.
    CoveringMap c = theorem_L(2);
    for (auto m : {make_rational(1, 2), make_rational(1, 3), make_rational(5, 7)})
        for (auto E : {make_rational(7, 3), make_rational(-2, 5), make_rational(11, 1)}) {
            auto p = params_from_m(m);
            Rational B = -E + 2 * (m + 1);
            auto at = [&](Var v) -> Rational {
                if (v == Var::B) return B;
                if (v == Var::g2) return p.g2;
                return p.g3;
            };
            Rational q = E * E - 4 * (m + 1) * E + 12 * m;
            Rational E2 = -c.x0.evaluate(at) + Rational(2) * (m + 1) / 3;
            EXPECT_EQ(E2, (E * E * E - 12 * (m + 1) * (m + 1) * E - 4 * (m + 1) * (4 * m * m - 19 * m + 4)) / (9 * q));
            Rational nu_ratio = c.y0_over_nu.evaluate(at) / 2;
            EXPECT_EQ(nu_ratio, -(E + 2 * m - 4) * (E - 4 * m + 2) * (E - 4 * m - 4) / (27 * q * q));
            EXPECT_EQ(c.kappa_over_nu.evaluate(at), Rational(-2) / (3 * q));
        }
}

TEST(ReducedEnergy, EdgesMapToFirstOrderEdges) {
    for (int ell = 2; ell <= 3; ++ell) {
        DispersionRelation rel(ell, 0.5);
        int poles = 0;
        for (double E : rel.edges()) {
            // Type I edges are poles of the covering (they map to infinity).
            Poly LI = spectral_poly_I(ell).poly.substitute(Var::g2, Rational(1)).substitute(Var::g3, Rational(0));
            double B = -E + ell * (ell + 1) * 0.5;
            if (std::abs(LI.evaluate_complex([&](Var) { return cplx(B); })) < 1e-9) {
                EXPECT_THROW(rel.reduce(E, 0.0), std::domain_error);
                ++poles;
                continue;
            }
            auto r = rel.reduce(E, 0.0);
            double best = INFINITY;
            for (double e : {0.5, 1.0, 1.5}) best = std::min(best, std::abs(r.E1 - e));
            EXPECT_LT(best, 1e-9) << ell << " " << E;
            EXPECT_EQ(r.nu1, 0.0);
        }
        EXPECT_EQ(poles, degree_type_I(ell));
    }
}

TEST(Dispersion, AgreesWithOracleInEveryBand) {
    const double m = 0.5;
    for (int ell = 1; ell <= 3; ++ell) {
        DispersionRelation rel(ell, m);
        const auto& ed = rel.edges();
        const double K = rel.theta().K();
        double worst = 0;
        for (int j = 0; 2 * j < int(ed.size()); ++j) {
            double lo = ed[2 * j], hi = 2 * j + 1 < int(ed.size()) ? ed[2 * j + 1] : ed[2 * j] + 6.0;
            for (int i = 1; i <= 50; ++i) {
                double E = lo + (hi - lo) * i / 51.0;
                cplx k;
                try {
                    k = rel.k(E, nu_tilde_branch(ed, E));
                } catch (const std::domain_error&) {
                    continue;
                }
                EXPECT_LT(std::abs(k.imag()), 1e-8);
                double o = hill_monodromy_oracle(ell, E, m).k.real();
                worst = std::max(worst, folded_distance(fold_k(k, K), o, K));
            }
        }
        EXPECT_LT(worst, 1e-6) << ell;
    }
}

TEST(Dispersion, EdgesAreZeroOrHalfPeriod) {
    DispersionRelation rel(2, 0.5);
    const double K = rel.theta().K();
    const auto& ed = rel.edges();
    for (std::size_t i = 0; i < ed.size(); ++i) {
        double E = ed[i];
        double o = hill_monodromy_oracle(2, E, 0.5).trace > 0 ? 0.0 : kPi / (2 * K);
        try {
            EXPECT_LT(folded_distance(fold_k(rel.k(E, 0.0), K), o, K), 1e-6) << E;
        } catch (const std::domain_error&) {
            // Pole of the covering: approach from inside the band, where k ~ sqrt(E - edge).
            double inside = E + (i % 2 == 0 ? 1e-4 : -1e-4);
            double kf = fold_k(rel.k(inside, nu_tilde_branch(ed, inside)), K);
            EXPECT_LT(folded_distance(kf, o, K), 0.05) << E;
        }
    }
}

TEST(Dispersion, GapsHaveComplexMomentum) {
    for (int ell = 1; ell <= 3; ++ell) {
        DispersionRelation rel(ell, 0.5);
        const auto& ed = rel.edges();
        for (std::size_t j = 1; j + 1 < ed.size(); j += 2) {
            double E = 0.5 * (ed[j] + ed[j + 1]);
            EXPECT_EQ(band_index(ed, E), -1);
            EXPECT_GT(std::abs(rel.k(E, nu_tilde_branch(ed, E)).imag()), 1e-6) << ell << " " << E;
        }
        double below = ed[0] - 1.0;
        EXPECT_GT(std::abs(rel.k(below, nu_tilde_branch(ed, below)).imag()), 1e-6);
    }
}

TEST(Dispersion, LargeEnergyAsymptotics) {
    // On the sheet with sign(nu_tilde) = (-1)^(l-1), k grows like +sqrt(E).
    const double E = 1e4;
    for (int ell = 1; ell <= 3; ++ell) {
        DispersionRelation rel(ell, 0.5);
        cplx nu = nu_tilde_branch(rel.edges(), E) * (ell % 2 ? 1.0 : -1.0);
        cplx k = rel.k(E, nu);
        EXPECT_NEAR(k.real() / std::sqrt(E), 1.0, 0.01) << ell;
        cplx k_other = rel.k(E, -nu);
        EXPECT_NEAR(k_other.real() / std::sqrt(E), -1.0, 0.01) << ell;
    }
}

TEST(Dispersion, ScanBookkeeping) {
    auto s = dispersion_scan(1, 0.5, 0.5, 4.0, 57);
    ASSERT_EQ(s.size(), 57u);
    const double K = complete_K(0.5);
    double prev = -1;
    for (const auto& x : s) {
        EXPECT_LT(std::abs(x.nu_tilde * x.nu_tilde - cplx((x.E - 1) * (x.E - 0.5) * (x.E - 1.5))),
                  1e-10 * std::max(1.0, std::norm(x.nu_tilde)));
        if (x.band_index == 0) {
            // Lowest band: folded k increases from 0 to pi/2K.
            EXPECT_GE(x.k_folded, prev - 1e-12);
            prev = x.k_folded;
        }
        if (x.band_index < 0) EXPECT_GT(std::abs(x.k.imag()), 0.0);
        EXPECT_LE(x.k_folded, kPi / (2 * K) + 1e-12);
    }
    auto t = dispersion_scan(1, 0.5, 0.5, 4.0, 57, 3);
    EXPECT_EQ(dispersion_csv(s), dispersion_csv(t));
    EXPECT_THROW(dispersion_scan(1, 0.99, 0.5, 4.0, 5), std::domain_error);
}

TEST(Dispersion, MiddleBandMonotone) {
    auto s = dispersion_scan(2, 0.5, 3.0, 4.5, 41);
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s[i].k_folded, s[i - 1].k_folded + 1e-12);
    EXPECT_NEAR(s.front().k_folded, kPi / (2 * complete_K(0.5)), 1e-6);
    EXPECT_NEAR(s.back().k_folded, 0.0, 1e-6);
}

TEST(Dispersion, CsvLayout) {
    auto s = dispersion_scan(1, 0.5, 1.0, 1.5, 3);
    std::string csv = dispersion_csv(s);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "E,nu_re,nu_im,k_re,k_im,k_folded,band_index,flags");
    EXPECT_NE(csv.find("1.000000000000e+00,"), std::string::npos);
    EXPECT_NE(csv.find("band|edge"), std::string::npos);
}

TEST(Reduction, IntegralIdentity) {
    const Rational m = make_rational(1, 2);
    auto r2 = reduction_integral_check(2, m, 5.0, 6.0);
    EXPECT_NEAR(r2.lhs, r2.rhs, 1e-8);
    EXPECT_GT(std::abs(r2.lhs), 1e-3);
    auto r3 = reduction_integral_check(3, m, 8.0, 9.0);
    EXPECT_NEAR(r3.lhs, r3.rhs, 1e-8);
    EXPECT_GT(std::abs(r3.lhs), 1e-3);
    EXPECT_THROW(reduction_integral_check(2, m, -0.5, 0.5), std::domain_error);
}
