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

#include "lame/poly.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace lame {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "B", "g2", "g3", "e", "kappa", "s", "x0", "y0", "x", "y", "e1", "e2", "e3", "J", "m", "E",
};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string_view var_name(Var v) { return kVarNames[idx(v)]; }

std::optional<Var> parse_var(std::string_view name) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

Rational var_weight(Var v) {
    switch (v) {
        case Var::g2: return 2;
        case Var::g3: return 3;
        case Var::y:
        case Var::y0: return make_rational(3, 2);
        case Var::kappa: return make_rational(1, 2);
        case Var::J:
        case Var::m: return 0;
        default: return 1;
    }
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<std::pair<Var, unsigned>> powers) {
    for (auto [v, k] : powers) set(v, (*this)[v] + k);
}

void Monomial::set(Var v, unsigned power) {
    if (power > 0xffffu) throw std::overflow_error("Monomial: exponent overflow");
    total_ = static_cast<std::uint16_t>(total_ - exps_[idx(v)] + power);
    exps_[idx(v)] = static_cast<std::uint16_t>(power);
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    for (std::size_t i = 0; i < kNumVars; ++i) out.exps_[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
    out.total_ = static_cast<std::uint16_t>(total_ + other.total_);
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    if (total_ > other.total_) return false;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial out;
    for (std::size_t i = 0; i < kNumVars; ++i) out.exps_[i] = static_cast<std::uint16_t>(other.exps_[i] - exps_[i]);
    out.total_ = static_cast<std::uint16_t>(other.total_ - total_);
    return out;
}

int Monomial::compare(const Monomial& other) const {
    if (total_ != other.total_) return total_ < other.total_ ? -1 : 1;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (exps_[i] != other.exps_[i]) return exps_[i] < other.exps_[i] ? -1 : 1;
    return 0;
}

Rational Monomial::weight() const {
    Rational w = 0;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (exps_[i]) w += var_weight(static_cast<Var>(i)) * exps_[i];
    return w;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly Poly::variable(Var v, unsigned power) {
    Monomial m;
    m.set(v, power);
    return monomial(m, 1);
}

Poly Poly::monomial(const Monomial& mono, const Rational& coeff) {
    Poly p;
    if (coeff != 0) p.terms_.push_back({mono, coeff});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return b.mono < a.mono; });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw std::domain_error("Poly::constant_value: not a constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

bool Poly::contains(Var v) const {
    for (const auto& t : terms_)
        if (t.mono[v]) return true;
    return false;
}

unsigned Poly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[v]);
    return d;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.total_degree(); }

std::vector<Var> Poly::variables() const {
    std::vector<Var> out;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (contains(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
    return out;
}

Poly Poly::coeff(Var v, unsigned k) const {
    Poly p;
    for (const auto& t : terms_) {
        if (t.mono[v] != k) continue;
        Monomial m = t.mono;
        m.set(v, 0);
        p.terms_.push_back({m, t.coeff});
    }
    // Removing a variable can break the order only between terms of
    // different original degree in v; a fixed k keeps it intact.
    return p;
}

std::vector<Poly> Poly::coefficients(Var v) const {
    std::vector<Poly> out(degree(v) + 1);
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        unsigned k = m[v];
        m.set(v, 0);
        out[k].terms_.push_back({m, t.coeff});
    }
    return out;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (const auto& t : coeffs[k].terms_) {
            Monomial m = t.mono;
            m.set(v, m[v] + static_cast<unsigned>(k));
            terms.push_back({m, t.coeff});
        }
    return from_terms(std::move(terms));
}

Poly Poly::derivative(Var v) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        unsigned k = t.mono[v];
        if (k == 0) continue;
        Monomial m = t.mono;
        m.set(v, k - 1);
        terms.push_back({m, t.coeff * k});
    }
    return from_terms(std::move(terms));
}

Poly Poly::substitute(Var v, const Poly& value) const {
    auto cs = coefficients(v);
    Poly out;
    for (std::size_t k = cs.size(); k-- > 0;) out = out * value + cs[k];
    return out;
}

Poly Poly::substitute(Var v, const Rational& value) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        unsigned k = t.mono[v];
        Monomial m = t.mono;
        m.set(v, 0);
        terms.push_back({m, k ? t.coeff * lame::pow(value, k) : t.coeff});
    }
    return from_terms(std::move(terms));
}

Poly Poly::rename(Var from, Var to) const {
    if (from == to) return *this;
    if (contains(to)) throw std::invalid_argument("Poly::rename: target variable present");
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        unsigned k = m[from];
        m.set(from, 0);
        m.set(to, k);
        terms.push_back({m, t.coeff});
    }
    return from_terms(std::move(terms));
}

Poly Poly::deflate(Var v, unsigned d, Var w) const {
    if (v != w && contains(w)) throw std::invalid_argument("Poly::deflate: target variable present");
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        unsigned k = m[v];
        if (k % d) throw std::domain_error("Poly::deflate: exponent not divisible");
        m.set(v, 0);
        m.set(w, k / d);
        terms.push_back({m, t.coeff});
    }
    return from_terms(std::move(terms));
}

Poly Poly::inflate(Var w, unsigned d, Var v) const {
    if (v != w && contains(v)) throw std::invalid_argument("Poly::inflate: target variable present");
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        unsigned k = m[w];
        m.set(w, 0);
        m.set(v, k * d);
        terms.push_back({m, t.coeff});
    }
    return from_terms(std::move(terms));
}

std::optional<Rational> Poly::isobaric_weight() const {
    if (terms_.empty()) return std::nullopt;
    Rational w = terms_.front().mono.weight();
    for (const auto& t : terms_)
        if (t.mono.weight() != w) return std::nullopt;
    return w;
}

Rational Poly::evaluate(const std::function<Rational(Var)>& var_value) const {
    return evaluate<Rational>(var_value, [](const Rational& c) { return c; });
}

std::complex<double> Poly::evaluate_complex(const std::function<std::complex<double>(Var)>& var_value) const {
    return evaluate<std::complex<double>>(var_value, [](const Rational& c) { return std::complex<double>(c.get_d()); });
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

namespace {

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = -1;
        else if (j == b.size()) c = 1;
        else c = a[i].mono.compare(b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (s != 0) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) return *this = other;
    terms_ = merge_add(terms_, other.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.terms_.empty()) return *this;
    terms_ = merge_add(terms_, other.terms_, true);
    return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly& Poly::operator/=(const Rational& c) {
    if (c == 0) throw std::domain_error("Poly: division by zero");
    for (auto& t : terms_) t.coeff /= c;
    return *this;
}

Poly Poly::times_term(const Monomial& mono, const Rational& coeff) const {
    Poly p;
    if (coeff == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * mono, t.coeff * coeff});
    return p;
}

// Heap-based product: each row a_i * b is already sorted because graded lex
// is a monomial order, so the rows are merged with a priority queue.
Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    if (a.size() < b.size()) return b * a;
    if (b.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
    struct Entry {
        Monomial mono;
        std::size_t i, j;
    };
    auto cmp = [](const Entry& x, const Entry& y) { return x.mono < y.mono; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    // Rows indexed by the shorter operand b; columns walk a.
    for (std::size_t j = 0; j < b.size(); ++j) heap.push({a.terms_[0].mono * b.terms_[j].mono, 0, j});
    Poly out;
    Rational prod;
    while (!heap.empty()) {
        Entry top = heap.top();
        heap.pop();
        mpq_mul(prod.get_mpq_t(), a.terms_[top.i].coeff.get_mpq_t(), b.terms_[top.j].coeff.get_mpq_t());
        if (!out.terms_.empty() && out.terms_.back().mono == top.mono) {
            out.terms_.back().coeff += prod;
        } else {
            if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
            out.terms_.push_back({top.mono, prod});
        }
        if (top.i + 1 < a.size()) heap.push({a.terms_[top.i + 1].mono * b.terms_[top.j].mono, top.i + 1, top.j});
    }
    if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
    return out;
}

bool Poly::operator==(const Poly& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) return false;
    return true;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this / leading_coefficient();
}

Poly Poly::monic_in(Var v) const {
    if (is_zero()) return *this;
    Poly lc = lead(v);
    if (!lc.is_constant()) throw std::domain_error("Poly::monic_in: leading coefficient is not constant");
    return *this / lc.constant_value();
}

Poly Poly::primitive_integer() const {
    if (is_zero()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    return *this * scale;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        bool unit = (c == 1);
        if (!unit || t.mono.is_one()) {
            os << c.get_str();
            if (!t.mono.is_one()) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            unsigned k = t.mono[static_cast<Var>(i)];
            if (!k) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << kVarNames[i];
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly pow(const Poly& base, unsigned exp) {
    Poly result(1L);
    Poly b = base;
    while (exp) {
        if (exp & 1u) result = result * b;
        exp >>= 1u;
        if (exp) b = b * b;
    }
    return result;
}

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("try_divide: division by zero polynomial");
    if (a.is_zero()) return Poly{};
    if (b.is_constant()) return a / b.constant_value();
    const Term& lb = b.leading_term();
    std::vector<Term> quotient;
    Poly rem = a;
    Rational qc;
    while (!rem.is_zero()) {
        const Term& lr = rem.leading_term();
        if (!lb.mono.divides(lr.mono)) return std::nullopt;
        Monomial qm = lb.mono.quotient_of(lr.mono);
        qc = lr.coeff / lb.coeff;
        rem -= b.times_term(qm, qc);
        quotient.push_back({qm, qc});
    }
    return Poly::from_terms(std::move(quotient));
}

Poly divide_exact(const Poly& a, const Poly& b) {
    auto q = try_divide(a, b);
    if (!q) throw std::domain_error("divide_exact: division is not exact");
    return *q;
}

UPoly to_upoly(const Poly& p, Var v) {
    UPoly out(p.degree(v) + 1);
    for (const auto& t : p.terms()) {
        if (t.mono.total_degree() != t.mono[v]) throw std::invalid_argument("to_upoly: extra variables present");
        out[t.mono[v]] = t.coeff;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

Poly from_upoly(const UPoly& p, Var v) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0) {
            Monomial m;
            m.set(v, static_cast<unsigned>(k));
            terms.push_back({m, p[k]});
        }
    return Poly::from_terms(std::move(terms));
}

}  // namespace lame
