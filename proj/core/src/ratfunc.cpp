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

#include "lame/ratfunc.hpp"

#include <stdexcept>

#include "lame/elimination.hpp"

namespace lame {

namespace {

// A common factor of num and den has positive B-degree when den has a
// constant leading coefficient in B, so it survives specialization of the
// other variables. A trivial univariate gcd at one point proves coprimality.
bool coprime_by_specialization(const Poly& num, const Poly& den) {
    if (!den.contains(Var::B) || !den.lead(Var::B).is_constant()) return false;
    auto value = [](Var v) -> Poly { return Poly(Rational(7 + 3 * static_cast<int>(v), 5 + static_cast<int>(v))); };
    Poly n = num, d = den;
    for (Var v : num.variables())
        if (v != Var::B) n = n.substitute(v, value(v));
    for (Var v : den.variables())
        if (v != Var::B) d = d.substitute(v, value(v));
    if (n.is_zero()) return false;
    return upoly_gcd(to_upoly(n, Var::B), to_upoly(d, Var::B)).size() <= 1;
}

}  // namespace

RatFunc::RatFunc(const Poly& num, const Poly& den, bool cancel) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize(cancel);
}

void RatFunc::normalize(bool cancel) {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (cancel && !den_.is_constant() && !coprime_by_specialization(num_, den_)) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    Poly lc = den_.contains(Var::B) ? den_.lead(Var::B) : Poly(den_.leading_coefficient());
    Rational unit = lc.is_constant() ? lc.constant_value() : den_.leading_coefficient();
    if (unit != 1) {
        Rational inv = 1 / unit;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::derivative(Var v) const {
    return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

Rational RatFunc::evaluate(const std::function<Rational(Var)>& value) const {
    Rational d = den_.evaluate(value);
    if (d == 0) throw std::domain_error("RatFunc::evaluate: pole");
    return num_.evaluate(value) / d;
}

std::complex<double> RatFunc::evaluate_complex(const std::function<std::complex<double>(Var)>& value) const {
    return num_.evaluate_complex(value) / den_.evaluate_complex(value);
}

std::string RatFunc::to_string() const {
    if (den_ == Poly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + RatFunc(Poly(0) - b.num_, b.den_, false); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace lame
