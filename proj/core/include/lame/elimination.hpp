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

#include <utility>
#include <vector>

#include "lame/poly.hpp"

namespace lame {

// Pseudo-remainder of a by b in v: lc(b)^(deg a - deg b + 1) a = q b + r.
Poly pseudo_remainder(const Poly& a, const Poly& b, Var v);

// Resultant in v by the subresultant PRS, with the sign of the Sylvester
// determinant. Throws std::invalid_argument if either input is zero.
Poly resultant(const Poly& a, const Poly& b, Var v);

// (-1)^(n(n-1)/2) res(a, a') / lc(a); throws if deg_v(a) < 2.
Poly discriminant(const Poly& a, Var v);

// Greatest common divisor in Q[vars], normalized with graded-lex leading
// coefficient 1 (the gcd of two constants is 1).
Poly gcd(const Poly& a, const Poly& b);

// gcd of the coefficients of a with respect to v.
Poly content(const Poly& a, Var v);
Poly primitive_part(const Poly& a, Var v);

// Square-free decomposition in v of a polynomial primitive in v:
// a = c * prod f_i^i. Returns the pairs (f_i, i) with nonconstant f_i.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& a, Var v);
Poly squarefree_part(const Poly& a, Var v);

// Product of p(e) over the three roots of 4e^3 - g2 e - g3.
Poly norm_over_e(const Poly& p);

// Rewrites a polynomial symmetric in e1, e2, e3 through sigma1 = 0,
// sigma2 = -g2/4, sigma3 = g3/4. Throws std::domain_error if not symmetric.
Poly symmetrize_over_e(const Poly& p);

// Swaps two variables.
Poly swap_vars(const Poly& p, Var a, Var b);

// Univariate helpers over Q.
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_rem(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
Rational upoly_eval(const UPoly& p, const Rational& x);

// Number of distinct real roots of p in the half-open interval (a, b],
// from a Sturm sequence. p must be squarefree.
int sturm_count(const UPoly& p, const Rational& a, const Rational& b);
// Distinct real roots in (a, +inf).
int sturm_count_above(const UPoly& p, const Rational& a);
int sturm_count_all(const UPoly& p);

// Sturm sequence built once for repeated counts.
class SturmChain {
  public:
    explicit SturmChain(const UPoly& p);
    int count(const Rational& a, const Rational& b) const;  // roots in (a, b]
    int count_all() const;

  private:
    std::vector<UPoly> seq_;
};

// All rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace lame
