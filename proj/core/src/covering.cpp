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

#include "lame/covering.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "lame/elimination.hpp"
#include "lame/spectral.hpp"
#include "lame/twisted.hpp"

namespace lame {

namespace {

struct Pieces {
    Poly LI, LII, LtI, LtII, Ltheta;
};

Pieces pieces(int ell) {
    return {spectral_poly_I(ell).poly, spectral_poly_II(ell).poly, twisted_spectral(ell, TwistedType::I).poly,
            twisted_spectral(ell, TwistedType::II).poly, theta_twisted_spectral(ell).poly};
}

Rational ell_factor(int ell) { return Rational(ell * (ell + 1)); }

std::mutex covering_mutex;
std::map<int, CoveringMap> covering_cache;

}  // namespace

void clear_covering_cache() {
    std::lock_guard<std::mutex> lock(covering_mutex);
    covering_cache.clear();
}

RatFunc x0_branch_form(int ell) {
    if (ell < 1) throw std::invalid_argument("x0_branch_form: ell must be positive");
    Pieces p = pieces(ell);
    Rational c = 4 / pow(ell_factor(ell), 2);
    Poly den = p.LI * p.LtI * p.LtI;
    Poly num = Poly::variable(Var::e) * den + p.LII * p.LtII * p.LtII * c;
    return RatFunc(num, den, false);
}

CoveringMap theorem_L(int ell) {
    {
        std::lock_guard<std::mutex> lock(covering_mutex);
        auto it = covering_cache.find(ell);
        if (it != covering_cache.end()) return it->second;
    }
    RatFunc branch = x0_branch_form(ell);
    Poly num = curve_reduce(branch.num());
    if (num.contains(Var::e)) throw std::logic_error("theorem_L: x0 depends on the branch point");
    Pieces p = pieces(ell);
    const Rational f = ell_factor(ell);
    CoveringMap c{ell, RatFunc(num, branch.den()),
                  RatFunc(norm_over_e(p.LtII) * (16 / pow(f, 3)), p.LI * p.LI * pow(p.LtI, 3)),
                  RatFunc(p.Ltheta * (Rational(-(ell - 1) * (ell + 2)) / f), p.LI * p.LtI)};
    std::lock_guard<std::mutex> lock(covering_mutex);
    covering_cache.emplace(ell, c);
    return c;
}

int covering_degree(const CoveringMap& c) {
    return static_cast<int>(std::max(c.x0.num().degree(Var::B), c.x0.den().degree(Var::B)));
}

ReductionPolynomial reduction_polynomial(int ell) {
    CoveringMap c = theorem_L(ell);
    // P = (n' d - n d') * Yd / (d^2 * Yn) for x0 = n/d, y0hat = Yn/Yd.
    const Poly& n = c.x0.num();
    const Poly& d = c.x0.den();
    Poly top = (n.derivative(Var::B) * d - n * d.derivative(Var::B)) * c.y0_over_nu.den();
    auto poly = try_divide(top, d * d * c.y0_over_nu.num());
    if (!poly) throw std::domain_error("reduction_polynomial: quotient is not a polynomial");
    return {ell, *poly, *poly * (4 / ell_factor(ell))};
}

Poly branch_degeneracy_polynomial(int ell) {
    Poly Phat = reduction_polynomial(ell).P_hat;
    if (Phat.degree(Var::B) < 2) return Poly(0);
    Poly d = discriminant(Phat, Var::B).substitute(Var::g3, Poly(1));
    if (!d.contains(Var::g2)) return Poly(1);
    Poly g2 = Poly::variable(Var::g2), J = Poly::variable(Var::J);
    Poly r = resultant(d, J * (pow(g2, 3) - Poly(27)) - pow(g2, 3), Var::g2);
    r = squarefree_part(r, Var::J);
    r = r.primitive_integer();
    if (r.leading_coefficient() < 0) r = Poly(0) - r;
    return r;
}

std::vector<Rational> branch_degeneracy(int ell) {
    Poly r = branch_degeneracy_polynomial(ell);
    std::vector<Rational> out;
    if (r.is_zero() || r.is_constant()) return out;
    for (const auto& j : rational_roots(to_upoly(r, Var::J)))
        if (j != 0 && j != 1) out.push_back(j);
    return out;
}

bool equianharmonic_double_critical(int ell) {
    Poly Phat = reduction_polynomial(ell).P_hat;
    if (Phat.degree(Var::B) < 2) return false;
    return discriminant(Phat, Var::B).substitute(Var::g2, Poly(0)).is_zero();
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& n, int sign) {
    if (n < 0 || !mpz_perfect_square_p(n.get_num_mpz_t()) || !mpz_perfect_square_p(n.get_den_mpz_t())) {
        QuadraticNumber q;
        q.b = sign;
        q.N = n;
        q.has_N = true;
        return q;
    }
    Integer p, d;
    mpz_sqrt(p.get_mpz_t(), n.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), n.get_den_mpz_t());
    return QuadraticNumber(Rational(p, d) * sign);
}

namespace {

QuadraticNumber with_radicand(QuadraticNumber q, const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.has_N) {
        q.N = x.N;
        q.has_N = true;
    } else if (y.has_N) {
        q.N = y.N;
        q.has_N = true;
    }
    return q;
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    QuadraticNumber q(x.a + y.a);
    q.b = x.b + y.b;
    return with_radicand(q, x, y);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    QuadraticNumber q(x.a - y.a);
    q.b = x.b - y.b;
    return with_radicand(q, x, y);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    Rational bb = 0;
    if (x.b != 0 && y.b != 0) {
        if (x.N != y.N) throw std::logic_error("QuadraticNumber: mismatched radicands");
        bb = x.b * y.b * x.N;
    }
    QuadraticNumber q(x.a * y.a + bb);
    q.b = x.a * y.b + x.b * y.a;
    return with_radicand(q, x, y);
}

namespace {

template <class T>
HKSolution<T> run_hk(int ell, const T& B, const T& nu, const T& x0, const T& y0, const T& kappa, const T& g2,
                     const T& g3) {
    Symbols<T> s;
    s.B = B;
    s.g2 = g2;
    s.g3 = g3;
    s.x0 = x0;
    s.y0 = y0;
    s.kappa = kappa;
    s.e = T(ScalarTraits<T>::from_rational(0));
    RecurrenceSolver<T> solver(Family::HermiteKrichever, ell, s);
    HKSolution<T> out;
    out.A = solver.polynomial(0);
    out.Bc = solver.polynomial(1);
    out.nu = nu;
    out.x0 = x0;
    out.y0 = y0;
    out.kappa = kappa;
    out.residual_a = solver.residual(0);
    out.residual_b = solver.residual(1);
    if constexpr (std::is_same_v<T, std::complex<double>>) {
        // Scale each residual by the size of the terms that produced it.
        double worst = 0;
        for (int seq = 0; seq < 2; ++seq) {
            Equation<T> eq = family_equation(Family::HermiteKrichever, ell, seq, -1, s);
            double scale = 0;
            for (const auto& d : eq.deps)
                if (d.index <= solver.layout().top[d.seq]) scale += std::abs(d.coeff * solver.value(d.seq, d.index));
            double r = std::abs(seq == 0 ? out.residual_a : out.residual_b);
            worst = std::max(worst, scale > 0 ? r / scale : r);
        }
        out.relative_residual = worst;
    }
    return out;
}

}  // namespace

HKSolution<QuadraticNumber> hk_coefficients(int ell, const Rational& B, int nu_sign, const Rational& g2,
                                            const Rational& g3) {
    CoveringMap c = theorem_L(ell);
    auto value = [&](Var v) -> Rational {
        switch (v) {
            case Var::B: return B;
            case Var::g2: return g2;
            case Var::g3: return g3;
            default: throw std::invalid_argument("hk_coefficients: unexpected variable");
        }
    };
    for (const RatFunc* f : {&c.x0, &c.y0_over_nu, &c.kappa_over_nu})
        if (f->den().evaluate(value) == 0) throw std::domain_error("hk_coefficients: pole of the covering");
    QuadraticNumber nu = QuadraticNumber::sqrt_of(full_spectral(ell).poly.evaluate(value), nu_sign < 0 ? -1 : 1);
    QuadraticNumber x0(c.x0.evaluate(value));
    QuadraticNumber y0 = QuadraticNumber(c.y0_over_nu.evaluate(value)) * nu;
    QuadraticNumber kappa = QuadraticNumber(c.kappa_over_nu.evaluate(value)) * nu;
    auto out = run_hk<QuadraticNumber>(ell, B, nu, x0, y0, kappa, g2, g3);
    if (!out.residual_a.is_zero() || !out.residual_b.is_zero())
        throw std::domain_error("hk_coefficients: compatibility conditions do not vanish");
    return out;
}

HKSolution<std::complex<double>> hk_coefficients(int ell, std::complex<double> B, int nu_sign,
                                                 std::complex<double> g2, std::complex<double> g3) {
    using C = std::complex<double>;
    CoveringMap c = theorem_L(ell);
    auto value = [&](Var v) -> C {
        switch (v) {
            case Var::B: return B;
            case Var::g2: return g2;
            case Var::g3: return g3;
            default: throw std::invalid_argument("hk_coefficients: unexpected variable");
        }
    };
    for (const RatFunc* f : {&c.x0, &c.y0_over_nu, &c.kappa_over_nu}) {
        C d = f->den().evaluate_complex(value);
        if (std::abs(d) <= 1e-300 || !std::isfinite(std::abs(d)))
            throw std::domain_error("hk_coefficients: pole of the covering");
    }
    C nu = std::sqrt(full_spectral(ell).poly.evaluate_complex(value)) * double(nu_sign < 0 ? -1 : 1);
    C x0 = c.x0.evaluate_complex(value);
    C y0 = c.y0_over_nu.evaluate_complex(value) * nu;
    C kappa = c.kappa_over_nu.evaluate_complex(value) * nu;
    auto out = run_hk<C>(ell, B, nu, x0, y0, kappa, g2, g3);
    if (!(out.relative_residual <= 1e-10))
        throw std::domain_error("hk_coefficients: compatibility conditions do not vanish");
    return out;
}

}  // namespace lame
