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

#include "lame/elimination.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lame {

namespace {

// Coefficient vector in the main variable, index = power, no trailing zeros.
using Rec = std::vector<Poly>;

Rec split(const Poly& p, Var v) {
    if (p.is_zero()) return {};
    return p.coefficients(v);
}

void trim(Rec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const Rec& a) { return static_cast<int>(a.size()) - 1; }

Rec prem(Rec a, const Rec& b) {
    int db = deg(b);
    int steps = deg(a) - db + 1;
    const Poly& lb = b.back();
    while (deg(a) >= db && !a.empty()) {
        int k = deg(a) - db;
        Poly la = a.back();
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
        a.pop_back();
        trim(a);
        --steps;
    }
    if (steps > 0 && !a.empty()) {
        Poly f = pow(lb, static_cast<unsigned>(steps));
        for (auto& c : a) c = c * f;
    }
    return a;
}

Rec divide_all(const Rec& a, const Poly& d) {
    Rec out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(divide_exact(c, d));
    return out;
}

// One step of the subresultant PRS; updates (a, b, g, h). Returns false when
// the pseudo-remainder vanished (b unchanged in that case).
bool prs_step(Rec& a, Rec& b, Poly& g, Poly& h) {
    int delta = deg(a) - deg(b);
    Rec r = prem(a, b);
    if (r.empty()) return false;
    Poly div = g * pow(h, static_cast<unsigned>(delta));
    a = std::move(b);
    b = divide_all(r, div);
    g = a.back();
    if (delta == 1) {
        h = g;
    } else if (delta > 1) {
        h = divide_exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
    return true;
}

Poly normalize_unit(const Poly& p) { return p.is_zero() ? p : p.monic(); }

Var main_variable(const Poly& a, const Poly& b) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (a.contains(v) || b.contains(v)) return v;
    }
    return Var::B;
}

Poly univariate_gcd_poly(const Poly& a, const Poly& b, Var v) {
    return from_upoly(upoly_gcd(to_upoly(a, v), to_upoly(b, v)), v);
}

bool only_var(const Poly& p, Var v) {
    for (const auto& t : p.terms())
        if (t.mono.total_degree() != t.mono[v]) return false;
    return true;
}

}  // namespace

Poly pseudo_remainder(const Poly& a, const Poly& b, Var v) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
    Rec r = prem(split(a, v), split(b, v));
    return Poly::from_coefficients(v, r);
}

Poly resultant(const Poly& a, const Poly& b, Var v) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    Rec A = split(a, v), B = split(b, v);
    int da = deg(A), db = deg(B);
    if (da == 0) return pow(a, static_cast<unsigned>(db));
    if (db == 0) return pow(b, static_cast<unsigned>(da));
    Poly s = 1;
    if (da < db) {
        std::swap(A, B);
        if ((da & 1) && (db & 1)) s = -1;
    }
    Poly g = 1, h = 1;
    for (;;) {
        if ((deg(A) & 1) && (deg(B) & 1)) s = -s;
        if (!prs_step(A, B, g, h)) return Poly{};
        if (deg(B) == 0) {
            int d = deg(A);
            Poly out = pow(B[0], static_cast<unsigned>(d));
            if (d > 1) out = divide_exact(out, pow(h, static_cast<unsigned>(d - 1)));
            return s * out;
        }
    }
}

Poly discriminant(const Poly& a, Var v) {
    unsigned n = a.degree(v);
    if (n < 2) throw std::invalid_argument("discriminant: degree too low");
    Poly r = divide_exact(resultant(a, a.derivative(v), v), a.lead(v));
    return ((n * (n - 1) / 2) % 2) ? -r : r;
}

Poly content(const Poly& a, Var v) {
    if (a.is_zero()) return Poly{};
    Rec cs = split(a, v);
    Poly c;
    for (const auto& x : cs) {
        if (x.is_zero()) continue;
        c = c.is_zero() ? normalize_unit(x) : gcd(c, x);
        if (c.is_constant()) return Poly(1L);
    }
    return c;
}

Poly primitive_part(const Poly& a, Var v) {
    if (a.is_zero()) return a;
    return divide_exact(a, content(a, v));
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    if (a.is_constant() || b.is_constant()) return Poly(1L);
    Var v = main_variable(a, b);
    if (!a.contains(v)) return gcd(a, content(b, v));
    if (!b.contains(v)) return gcd(content(a, v), b);
    if (only_var(a, v) && only_var(b, v)) return normalize_unit(univariate_gcd_poly(a, b, v));
    Poly ca = content(a, v), cb = content(b, v);
    Poly c = gcd(ca, cb);
    Rec A = split(divide_exact(a, ca), v), B = split(divide_exact(b, cb), v);
    if (deg(A) < deg(B)) std::swap(A, B);
    Poly g = 1, h = 1;
    Poly result;
    for (;;) {
        if (deg(B) == 0) {
            result = 1;
            break;
        }
        Rec B0 = B;
        if (!prs_step(A, B, g, h)) {
            result = primitive_part(Poly::from_coefficients(v, B0), v);
            break;
        }
    }
    return normalize_unit(c * result);
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& a, Var v) {
    std::vector<std::pair<Poly, unsigned>> out;
    if (a.degree(v) == 0) return out;
    Poly f = primitive_part(a, v);
    Poly df = f.derivative(v);
    Poly a0 = gcd(f, df);
    Poly b = divide_exact(f, a0);
    Poly c = divide_exact(df, a0);
    Poly d = c - b.derivative(v);
    unsigned i = 1;
    while (b.degree(v) > 0) {
        Poly ai = gcd(b, d);
        b = divide_exact(b, ai);
        c = divide_exact(d, ai);
        d = c - b.derivative(v);
        if (ai.degree(v) > 0) out.emplace_back(ai, i);
        ++i;
    }
    return out;
}

Poly squarefree_part(const Poly& a, Var v) {
    Poly out = 1;
    for (auto& [f, k] : squarefree_decomposition(a, v)) out = out * f;
    return out;
}

Poly norm_over_e(const Poly& p) {
    if (p.is_zero()) return p;
    if (!p.contains(Var::e)) return pow(p, 3);
    Poly e = Poly::variable(Var::e);
    Poly cubic = pow(e, 3) - Poly::variable(Var::g2) * e / Rational(4) - Poly::variable(Var::g3) / Rational(4);
    return resultant(cubic, p, Var::e);
}

Poly swap_vars(const Poly& p, Var a, Var b) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        unsigned ka = m[a], kb = m[b];
        m.set(a, kb);
        m.set(b, ka);
        terms.push_back({m, t.coeff});
    }
    return Poly::from_terms(std::move(terms));
}

Poly symmetrize_over_e(const Poly& p) {
    if (swap_vars(p, Var::e1, Var::e2) != p || swap_vars(p, Var::e2, Var::e3) != p)
        throw std::domain_error("symmetrize_over_e: input is not symmetric in e1, e2, e3");
    Poly e1 = Poly::variable(Var::e1), e2 = Poly::variable(Var::e2), e3 = Poly::variable(Var::e3);
    const Poly s1 = e1 + e2 + e3;
    const Poly s2 = e1 * e2 + e2 * e3 + e3 * e1;
    const Poly s3 = e1 * e2 * e3;
    const Poly v2 = -Poly::variable(Var::g2) / Rational(4);
    const Poly v3 = Poly::variable(Var::g3) / Rational(4);
    Poly rest = p;
    Poly out;
    auto e_key = [](const Monomial& m) {
        Monomial k;
        k.set(Var::e1, m[Var::e1]);
        k.set(Var::e2, m[Var::e2]);
        k.set(Var::e3, m[Var::e3]);
        return k;
    };
    while (!rest.is_zero()) {
        Monomial best = e_key(rest.terms().front().mono);
        for (const auto& t : rest.terms()) {
            Monomial k = e_key(t.mono);
            if (best < k) best = k;
        }
        std::vector<Term> coeff_terms;
        for (const auto& t : rest.terms())
            if (e_key(t.mono) == best) {
                Monomial m = t.mono;
                m.set(Var::e1, 0);
                m.set(Var::e2, 0);
                m.set(Var::e3, 0);
                coeff_terms.push_back({m, t.coeff});
            }
        Poly c = Poly::from_terms(std::move(coeff_terms));
        unsigned a = best[Var::e1], b = best[Var::e2], d = best[Var::e3];
        if (a < b || b < d) throw std::domain_error("symmetrize_over_e: input is not symmetric in e1, e2, e3");
        rest -= c * pow(s1, a - b) * pow(s2, b - d) * pow(s3, d);
        if (a == b) out += c * pow(v2, b - d) * pow(v3, d);
    }
    return out;
}

// ---------------------------------------------------------------- univariate

namespace {

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

UPoly upoly_derivative(const UPoly& p) {
    UPoly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<unsigned long>(k));
    utrim(out);
    return out;
}

UPoly upoly_rem(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    utrim(r);
    UPoly d = b;
    utrim(d);
    if (d.empty()) throw std::domain_error("upoly_rem: division by zero");
    while (r.size() >= d.size()) {
        Rational f = r.back() / d.back();
        std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
        r.pop_back();
        utrim(r);
    }
    return r;
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    utrim(x);
    utrim(y);
    while (!y.empty()) {
        UPoly r = upoly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    Rational lc = x.back();
    for (auto& c : x) c /= lc;
    return x;
}

Rational upoly_eval(const UPoly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

namespace {

// Positive rescaling to coprime integer coefficients; keeps signs intact.
UPoly integer_primitive(UPoly p) {
    Integer den = 1, num = 0;
    for (const auto& c : p) den = lcm(den, Integer(c.get_den()));
    for (const auto& c : p) num = gcd(num, Integer(c.get_num()));
    if (num == 0) return p;
    for (auto& c : p) c = c * den / num;
    return p;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> seq;
    UPoly a = p;
    utrim(a);
    seq.push_back(integer_primitive(a));
    UPoly b = integer_primitive(upoly_derivative(seq[0]));
    while (!b.empty()) {
        seq.push_back(b);
        UPoly r = upoly_rem(seq[seq.size() - 2], b);
        for (auto& c : r) c = -c;
        b = integer_primitive(std::move(r));
    }
    return seq;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int changes_at(const std::vector<UPoly>& seq, const Rational& x) {
    std::vector<int> signs;
    for (const auto& q : seq) signs.push_back(sgn(upoly_eval(q, x)));
    return sign_changes(signs);
}

int changes_at_infinity(const std::vector<UPoly>& seq, bool negative) {
    std::vector<int> signs;
    for (const auto& q : seq) {
        int s = sgn(q.back());
        if (negative && (q.size() - 1) % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_changes(signs);
}

}  // namespace

SturmChain::SturmChain(const UPoly& p) : seq_(sturm_sequence(p)) {}

int SturmChain::count(const Rational& a, const Rational& b) const { return changes_at(seq_, a) - changes_at(seq_, b); }

int SturmChain::count_all() const { return changes_at_infinity(seq_, true) - changes_at_infinity(seq_, false); }

int sturm_count(const UPoly& p, const Rational& a, const Rational& b) {
    auto seq = sturm_sequence(p);
    return changes_at(seq, a) - changes_at(seq, b);
}

int sturm_count_above(const UPoly& p, const Rational& a) {
    auto seq = sturm_sequence(p);
    return changes_at(seq, a) - changes_at_infinity(seq, false);
}

int sturm_count_all(const UPoly& p) {
    auto seq = sturm_sequence(p);
    return changes_at_infinity(seq, true) - changes_at_infinity(seq, false);
}

namespace {

Rational floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(q);
}

UPoly upoly_quotient(UPoly a, const UPoly& b) {
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = a[k + b.size() - 1] / b.back();
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
    }
    return q;
}

UPoly upoly_sqfree(const UPoly& p) {
    UPoly g = upoly_gcd(p, upoly_derivative(p));
    return g.size() <= 1 ? p : upoly_quotient(p, g);
}

// Fraction with the smallest denominator in [a, b].
Rational simplest_between(const Rational& a, const Rational& b) {
    if (b < 0) return -simplest_between(-b, -a);
    if (a <= 0) return 0;
    Rational fl = floor_of(a);
    if (fl == a) return a;
    if (fl + 1 <= b) return fl + 1;
    return fl + 1 / simplest_between(1 / (b - fl), 1 / (a - fl));
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
    UPoly q = p;
    utrim(q);
    if (q.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    if (q.size() == 1) return roots;
    q = upoly_sqfree(q);
    // Integer coefficients give the denominator bound |lc|.
    Integer den = 1;
    for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer lc = abs(Integer(q.back() * den));
    Rational gap = Rational(1) / Rational(lc * lc * 4);
    Rational bound = 1;
    for (const auto& c : q) bound = std::max(bound, Rational(Rational(abs(c / q.back())) + 1));
    auto seq = sturm_sequence(q);
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int n = changes_at(seq, lo) - changes_at(seq, hi);
        if (n == 0) continue;
        if (n == 1 && hi - lo < gap) {
            Rational r = simplest_between(lo, hi);
            if (upoly_eval(q, r) == 0) roots.push_back(r);
            continue;
        }
        Rational mid = (lo + hi) / 2;
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace lame

