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

#include <optional>
#include <string>

#include "lame/poly.hpp"

namespace lame {

// Rewrites v^d -> tail repeatedly until deg_v(p) < d.
Poly reduce_power(const Poly& p, Var v, unsigned d, const Poly& tail);

// The cubic f(t) = 4t^3 - g2 t - g3.
Poly weierstrass_cubic(Var t);

// Normal form modulo the curve relations
//   e^3 = (g2 e + g3)/4,  y^2 = f(x),  y0^2 = f(x0).
Poly curve_reduce(const Poly& p);

// Polynomial in B, g2, g3, e (and the other symbols) kept in curve normal
// form after every multiplication.
class LamePoly {
  public:
    LamePoly() = default;
    LamePoly(const Poly& p) : p_(curve_reduce(p)) {}  // NOLINT(google-explicit-constructor)
    LamePoly(const Rational& c) : p_(c) {}            // NOLINT(google-explicit-constructor)
    LamePoly(long c) : p_(c) {}                       // NOLINT(google-explicit-constructor)
    LamePoly(int c) : p_(static_cast<long>(c)) {}     // NOLINT(google-explicit-constructor)

    static LamePoly variable(Var v, unsigned power = 1) { return LamePoly(Poly::variable(v, power)); }

    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    std::optional<Rational> isobaric_weight() const { return p_.isobaric_weight(); }
    std::string to_string() const { return p_.to_string(); }

    LamePoly operator-() const { return from_reduced(-p_); }
    LamePoly& operator+=(const LamePoly& o) { p_ += o.p_; return *this; }
    LamePoly& operator-=(const LamePoly& o) { p_ -= o.p_; return *this; }
    LamePoly& operator*=(const LamePoly& o) { p_ = curve_reduce(p_ * o.p_); return *this; }
    LamePoly& operator*=(const Rational& c) { p_ *= c; return *this; }
    LamePoly& operator/=(const Rational& c) { p_ /= c; return *this; }
    friend LamePoly operator+(LamePoly a, const LamePoly& b) { return a += b; }
    friend LamePoly operator-(LamePoly a, const LamePoly& b) { return a -= b; }
    friend LamePoly operator*(LamePoly a, const LamePoly& b) { return a *= b; }
    friend LamePoly operator*(LamePoly a, const Rational& c) { return a *= c; }
    friend LamePoly operator*(const Rational& c, LamePoly a) { return a *= c; }
    friend LamePoly operator/(LamePoly a, const Rational& c) { return a /= c; }
    bool operator==(const LamePoly& o) const { return p_ == o.p_; }
    bool operator!=(const LamePoly& o) const { return !(p_ == o.p_); }

    static LamePoly from_reduced(Poly p) {
        LamePoly out;
        out.p_ = std::move(p);
        return out;
    }

  private:
    Poly p_;
};

// Writes p(B, g2, g3, e) with g3 replaced by 4e^3 - g2 e. Together with
// curve_reduce this identifies Q[B,g2,g3,e]/(cubic) with the free ring
// Q[B,g2,e], where exact division and resultants are available.
Poly to_e_coordinates(const Poly& p);

// Derivation y d/dx on the curve: D x = y, D y = 6x^2 - g2/2.
LamePoly curve_derivative(const LamePoly& p, Var x = Var::x, Var y = Var::y);

}  // namespace lame
