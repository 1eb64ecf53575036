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

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lame/rational.hpp"

namespace lame {

// Every symbol that can appear in a polynomial. The enumeration order is the
// lexicographic tie-break of the term order (B first).
enum class Var : std::uint8_t {
    B, g2, g3, e, kappa, s, x0, y0, x, y, e1, e2, e3, J, m, E,
};
inline constexpr std::size_t kNumVars = 16;

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

// Isobaric weight of a single variable: B, e, x, x0, E = 1; g2 = 2; g3 = 3;
// y, y0 = 3/2; kappa = 1/2; s = kappa^2 = 1; J and m weightless.
Rational var_weight(Var v);

class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::initializer_list<std::pair<Var, unsigned>> powers);

    unsigned operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
    void set(Var v, unsigned power);
    unsigned total_degree() const { return total_; }
    bool is_one() const { return total_ == 0; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    // Requires divides(other).
    Monomial quotient_of(const Monomial& other) const;

    // Graded lexicographic comparison: -1, 0, +1.
    int compare(const Monomial& other) const;
    bool operator==(const Monomial& other) const { return total_ == other.total_ && exps_ == other.exps_; }
    bool operator<(const Monomial& other) const { return compare(other) < 0; }

    Rational weight() const;
    std::size_t hash() const;

  private:
    std::array<std::uint16_t, kNumVars> exps_{};
    std::uint16_t total_ = 0;
};

struct Term {
    Monomial mono;
    Rational coeff;
};

// Sparse multivariate polynomial over Q in the free polynomial ring.
// Terms are kept sorted in decreasing graded-lex order with no zero
// coefficients, so the first term is the leading term.
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(long c);             // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(static_cast<long>(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly variable(Var v, unsigned power = 1);
    static Poly monomial(const Monomial& mono, const Rational& coeff);
    // Builds from arbitrary unsorted terms; merges duplicates and drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rational constant_value() const;  // requires is_constant()
    Rational constant_term() const;

    const Term& leading_term() const { return terms_.front(); }
    const Rational& leading_coefficient() const { return terms_.front().coeff; }

    bool contains(Var v) const;
    unsigned degree(Var v) const;
    unsigned total_degree() const;
    std::vector<Var> variables() const;

    // Coefficient of v^k, as a polynomial free of v.
    Poly coeff(Var v, unsigned k) const;
    // Coefficients of v^0 .. v^deg.
    std::vector<Poly> coefficients(Var v) const;
    static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);
    // Leading coefficient with respect to v.
    Poly lead(Var v) const { return coeff(v, degree(v)); }

    Poly derivative(Var v) const;
    Poly substitute(Var v, const Poly& value) const;
    Poly substitute(Var v, const Rational& value) const;
    // Renames variable `from` to `to` (to must be absent).
    Poly rename(Var from, Var to) const;
    // Replaces v^(k*d) by w^k; throws if some exponent of v is not a multiple of d.
    Poly deflate(Var v, unsigned d, Var w) const;
    // Inverse of deflate: w^k -> v^(k*d).
    Poly inflate(Var w, unsigned d, Var v) const;

    // Isobaric weight if every term has the same one.
    std::optional<Rational> isobaric_weight() const;

    template <class T, class VarFn, class CoeffFn>
    T evaluate(VarFn&& var_value, CoeffFn&& coeff_value) const;

    Rational evaluate(const std::function<Rational(Var)>& var_value) const;
    std::complex<double> evaluate_complex(const std::function<std::complex<double>(Var)>& var_value) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);
    Poly& operator/=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    // Multiplies by a single term.
    Poly times_term(const Monomial& mono, const Rational& coeff) const;

    // Makes the graded-lex leading coefficient 1.
    Poly monic() const;
    // Makes the leading coefficient in v equal to 1; the leading coefficient
    // must be a constant.
    Poly monic_in(Var v) const;
    // Multiplies by a positive rational so all coefficients are coprime integers.
    Poly primitive_integer() const;

    std::string to_string() const;

  private:
    std::vector<Term> terms_;
};

Poly pow(const Poly& base, unsigned exp);

// Exact quotient a/b in the free ring, or nullopt when b does not divide a.
inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::optional<Poly> try_divide(const Poly& a, const Poly& b);
// Throws std::domain_error when the division is not exact.
Poly divide_exact(const Poly& a, const Poly& b);

// Dense univariate view over Q, index = power.
using UPoly = std::vector<Rational>;
UPoly to_upoly(const Poly& p, Var v);  // p must involve only v
Poly from_upoly(const UPoly& p, Var v);

template <class T, class VarFn, class CoeffFn>
T Poly::evaluate(VarFn&& var_value, CoeffFn&& coeff_value) const {
    std::array<std::optional<T>, kNumVars> cache;
    T total{};
    for (const Term& t : terms_) {
        T value = coeff_value(t.coeff);
        for (std::size_t i = 0; i < kNumVars; ++i) {
            unsigned k = t.mono[static_cast<Var>(i)];
            if (k == 0) continue;
            if (!cache[i]) cache[i] = var_value(static_cast<Var>(i));
            T power = *cache[i];
            T base = *cache[i];
            for (unsigned j = 1; j < k; ++j) power = power * base;
            value = value * power;
        }
        total = total + value;
    }
    return total;
}

}  // namespace lame

namespace lame {

// Parses expressions such as "B^3 - 52*g2*B + 560*g3" or "(B - e)*(B + 3*e)".
// Supports + - * / ^, parentheses, integer and decimal literals, and the
// variable names of var_name(). Division is only by constants.
Poly parse_poly(std::string_view text);

}  // namespace lame
