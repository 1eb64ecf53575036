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

#include <complex>
#include <functional>
#include <ostream>
#include <string>

#include "lame/poly.hpp"

namespace lame {

// Quotient of two polynomials, kept with gcd cancelled and the denominator
// monic in B (or with unit leading term when B is absent).
class RatFunc {
  public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& num, const Poly& den, bool cancel = true);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_polynomial() const { return den_.is_constant(); }
    bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }

    RatFunc derivative(Var v) const;
    Rational evaluate(const std::function<Rational(Var)>& value) const;
    std::complex<double> evaluate_complex(const std::function<std::complex<double>(Var)>& value) const;
    std::string to_string() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  private:
    void normalize(bool cancel);
    Poly num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace lame
