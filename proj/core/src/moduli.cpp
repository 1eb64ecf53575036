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

#include "lame/moduli.hpp"

#include <stdexcept>

#include "lame/elimination.hpp"
#include "lame/spectral.hpp"

namespace lame {

namespace {

template <class T>
EllipticParams<T> params_impl(const T& m) {
    const T one(1), two(2), three(3);
    EllipticParams<T> p;
    p.m = m;
    p.e1 = (two - m) / three;
    p.e2 = (two * m - one) / three;
    p.e3 = -(m + one) / three;
    T q = m * m - m + one;
    p.g2 = T(4) * q / three;
    p.g3 = T(4) * (m - two) * (two * m - one) * (m + one) / T(27);
    p.J = T(4) * q * q * q / (T(27) * m * m * (one - m) * (one - m));
    return p;
}

Poly cohn_discriminant(int ell, CohnKind kind) {
    Poly p = kind == CohnKind::I ? spectral_poly_I(ell).poly : norm_over_e(spectral_poly_II(ell).poly);
    if (p.degree(Var::B) < 2) return Poly(0);
    return discriminant(p, Var::B);
}

Poly normalize_integer(Poly r) {
    if (r.is_zero()) return r;
    r = squarefree_part(r, Var::J).primitive_integer();
    if (r.leading_coefficient() < 0) r = Poly(0) - r;
    return r;
}

}  // namespace

EllipticParams<Rational> params_from_m(const Rational& m) {
    if (m == 0 || m == 1) throw std::domain_error("params_from_m: degenerate modulus");
    return params_impl<Rational>(m);
}

EllipticParams<std::complex<double>> params_from_m(std::complex<double> m) {
    if (m == std::complex<double>(0) || m == std::complex<double>(1))
        throw std::domain_error("params_from_m: degenerate modulus");
    return params_impl<std::complex<double>>(m);
}

Rational klein_j(const Rational& m) { return params_from_m(m).J; }

CohnPolynomial cohn_polynomial(int ell, CohnKind kind) {
    Poly d = cohn_discriminant(ell, kind);
    if (d.is_zero()) return {ell, kind, Poly(1)};
    const Poly g2 = Poly::variable(Var::g2), J = Poly::variable(Var::J);
    Poly r = resultant(d.substitute(Var::g3, Poly(1)), J * (pow(g2, 3) - Poly(27)) - pow(g2, 3), Var::g2);
    // g3 = 0 is the J = 1 ray, invisible in this gauge.
    if (d.substitute(Var::g3, Poly(0)).substitute(Var::g2, Poly(1)).is_zero()) r = r * (J - Poly(1));
    return {ell, kind, normalize_integer(r)};
}

Poly cohn_polynomial_g2_gauge(int ell, CohnKind kind) {
    Poly d = cohn_discriminant(ell, kind);
    if (d.is_zero()) return Poly(1);
    const Poly g3 = Poly::variable(Var::g3), J = Poly::variable(Var::J);
    Poly r = resultant(d.substitute(Var::g2, Poly(1)), J * (Poly(1) - Poly(27) * g3 * g3) - Poly(1), Var::g3);
    return strip_ray_factors(normalize_integer(r));
}

Poly strip_ray_factors(const Poly& p) {
    Poly out = p;
    for (const Poly& f : {Poly::variable(Var::J), Poly::variable(Var::J) - Poly(1)})
        while (out.degree(Var::J) > 0)
            if (auto q = try_divide(out, f)) out = *q;
            else break;
    return out.is_zero() ? out : normalize_integer(out);
}

bool has_root_at_or_above_one(const Poly& p) {
    if (!p.contains(Var::J)) return false;
    UPoly u = to_upoly(squarefree_part(p, Var::J), Var::J);
    return upoly_eval(u, 1) == 0 || sturm_count_above(u, 1) > 0;
}

int conjectured_cohn_degree(int ell, CohnKind kind) {
    if (kind == CohnKind::I) {
        int n = degree_type_I(ell);
        return (n * n - n + 4) / 6;
    }
    int n = degree_type_II(ell);
    return n * (n - 1) / 2;
}

std::vector<CohnDegreeRow> cohn_degree_report(int ell_max) {
    std::vector<CohnDegreeRow> rows;
    for (int ell = 1; ell <= ell_max; ++ell)
        for (CohnKind kind : {CohnKind::I, CohnKind::II}) {
            Poly c = cohn_polynomial(ell, kind).poly;
            bool byJ = c.contains(Var::J) && try_divide(c, Poly::variable(Var::J)).has_value();
            rows.push_back({ell, kind, static_cast<int>(c.degree(Var::J)), conjectured_cohn_degree(ell, kind), byJ});
        }
    return rows;
}

}  // namespace lame
