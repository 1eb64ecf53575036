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

#include "lame/lame_poly.hpp"

namespace lame {

Poly reduce_power(const Poly& p, Var v, unsigned d, const Poly& tail) {
    if (p.degree(v) < d) return p;
    auto cs = p.coefficients(v);
    for (std::size_t k = cs.size(); k-- > d;) {
        if (cs[k].is_zero()) continue;
        Poly moved = cs[k] * tail;
        cs[k] = Poly{};
        // tail has degree < d in v; spread its v-powers over lower slots.
        auto parts = moved.coefficients(v);
        for (std::size_t i = 0; i < parts.size(); ++i) cs[k - d + i] += parts[i];
    }
    cs.resize(d);
    return Poly::from_coefficients(v, cs);
}

Poly weierstrass_cubic(Var t) {
    Poly x = Poly::variable(t);
    return Rational(4) * pow(x, 3) - Poly::variable(Var::g2) * x - Poly::variable(Var::g3);
}

Poly curve_reduce(const Poly& p) {
    Poly out = p;
    if (out.degree(Var::e) >= 3) {
        static const Poly e_tail =
            (Poly::variable(Var::g2) * Poly::variable(Var::e) + Poly::variable(Var::g3)) / Rational(4);
        out = reduce_power(out, Var::e, 3, e_tail);
    }
    if (out.degree(Var::y) >= 2) {
        static const Poly y_tail = weierstrass_cubic(Var::x);
        out = reduce_power(out, Var::y, 2, y_tail);
    }
    if (out.degree(Var::y0) >= 2) {
        static const Poly y0_tail = weierstrass_cubic(Var::x0);
        out = reduce_power(out, Var::y0, 2, y0_tail);
    }
    return out;
}

Poly to_e_coordinates(const Poly& p) {
    if (!p.contains(Var::g3)) return p;
    Poly e = Poly::variable(Var::e);
    Poly g3 = Rational(4) * pow(e, 3) - Poly::variable(Var::g2) * e;
    return p.substitute(Var::g3, g3);
}

LamePoly curve_derivative(const LamePoly& p, Var x, Var y) {
    Poly yy = Poly::variable(y);
    Poly dy = Rational(6) * Poly::variable(x, 2) - Poly::variable(Var::g2) / Rational(2);
    return LamePoly(yy * p.poly().derivative(x) + dy * p.poly().derivative(y));
}

}  // namespace lame
