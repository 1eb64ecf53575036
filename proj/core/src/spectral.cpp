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

#include "lame/spectral.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "lame/elimination.hpp"

namespace lame {

std::string kind_name(SpectralKind k) {
    switch (k) {
        case SpectralKind::TypeI: return "type-I";
        case SpectralKind::TypeII: return "type-II";
        case SpectralKind::TwistedI: return "twisted-I";
        case SpectralKind::TwistedII: return "twisted-II";
        case SpectralKind::ThetaTwisted: return "theta-twisted";
        case SpectralKind::Full: return "full";
        case SpectralKind::FullTwisted: return "full-twisted";
    }
    return "?";
}

int degree_type_I(int ell) { return ell % 2 ? (ell - 1) / 2 : ell / 2 + 1; }
int degree_type_II(int ell) { return ell % 2 ? (ell + 1) / 2 : ell / 2; }

Family type_I_family(int ell) { return ell % 2 ? Family::D : Family::C; }
Family type_II_family(int ell) { return ell % 2 ? Family::E : Family::F; }

namespace {

Symbols<LamePoly> symbolic(const LamePoly& B, const LamePoly& e) {
    Symbols<LamePoly> s;
    s.B = B;
    s.g2 = LamePoly::variable(Var::g2);
    s.g3 = LamePoly::variable(Var::g3);
    s.e = e;
    return s;
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, Poly> cache;

template <class Fn>
Poly cached(int slot, int ell, Fn&& compute) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({slot, ell});
        if (it != cache.end()) return it->second;
    }
    Poly p = compute();
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(slot, ell), p);
    return p;
}

}  // namespace

void clear_spectral_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.clear();
}

RecurrenceCoefficients run_recurrence(Family f, int ell, const LamePoly& B, const LamePoly& e) {
    RecurrenceSolver<LamePoly> solver(f, ell, symbolic(B, e));
    RecurrenceCoefficients out{f, ell, solver.layout().top[0], solver.polynomial(0), solver.residual(0)};
    return out;
}

RecurrenceCoefficients run_recurrence(Family f, int ell) {
    return run_recurrence(f, ell, LamePoly::variable(Var::B), LamePoly::variable(Var::e));
}

Poly normalize_in_B(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("normalize_in_B: zero polynomial");
    Poly lc = p.lead(Var::B);
    Poly q = p;
    if (!lc.is_constant()) {
        q = primitive_part(p, Var::B);
        lc = q.lead(Var::B);
        if (!lc.is_constant()) throw std::domain_error("normalize_in_B: leading coefficient is not constant");
    }
    return q / lc.constant_value();
}

SpectralPolynomial spectral_poly_I(int ell) {
    if (ell < 1) throw std::invalid_argument("spectral_poly_I: ell must be positive");
    Poly p = cached(0, ell, [&] {
        if (ell == 1) return Poly(1);
        return normalize_in_B(run_recurrence(type_I_family(ell), ell).residual.poly());
    });
    return {SpectralKind::TypeI, ell, p};
}

SpectralPolynomial spectral_poly_II(int ell) {
    if (ell < 1) throw std::invalid_argument("spectral_poly_II: ell must be positive");
    Poly p = cached(1, ell, [&] { return normalize_in_B(run_recurrence(type_II_family(ell), ell).residual.poly()); });
    return {SpectralKind::TypeII, ell, p};
}

SpectralPolynomial full_spectral(int ell) {
    Poly p = cached(2, ell, [&] { return spectral_poly_I(ell).poly * norm_over_e(spectral_poly_II(ell).poly); });
    return {SpectralKind::Full, ell, p};
}

RecurrenceCoefficients lame_polynomial(int ell, LameType type, const LamePoly& B, const LamePoly& e) {
    if (type == LameType::I && ell == 1) throw std::invalid_argument("lame_polynomial: no Type I solution for ell = 1");
    Family f = type == LameType::I ? type_I_family(ell) : type_II_family(ell);
    return run_recurrence(f, ell, B, e);
}

namespace {

// Symmetric-square operator D^3 - 4(q + B) D - 2 (D q) with q = l(l+1) x.
LamePoly symmetric_square(const LamePoly& F, int ell) {
    const Rational n = ell * (ell + 1);
    LamePoly q = LamePoly::variable(Var::x) * n;
    LamePoly B = LamePoly::variable(Var::B);
    LamePoly d1 = curve_derivative(F);
    LamePoly d3 = curve_derivative(curve_derivative(d1));
    return d3 - LamePoly(4) * (q + B) * d1 - LamePoly(2) * curve_derivative(q) * F;
}

// Gaussian elimination on rows of polynomial entries with constant pivots.
// Each row is (coefficients..., rhs). Throws on a singular system.
std::vector<Poly> solve_constant_pivot(std::vector<std::vector<Poly>> rows, std::size_t unknowns) {
    std::size_t r = 0;
    std::vector<std::size_t> pivot_row(unknowns);
    for (std::size_t c = 0; c < unknowns; ++c) {
        std::size_t p = r;
        while (p < rows.size() && !(rows[p][c].is_constant() && !rows[p][c].is_zero())) ++p;
        if (p == rows.size()) throw std::domain_error("hermite_halphen: singular linear system");
        std::swap(rows[p], rows[r]);
        Rational piv = rows[r][c].constant_value();
        for (auto& x : rows[r]) x /= piv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c].is_zero()) continue;
            Poly f = rows[k][c];
            for (std::size_t j = 0; j < rows[k].size(); ++j) rows[k][j] -= f * rows[r][j];
        }
        pivot_row[c] = r++;
    }
    for (std::size_t k = r; k < rows.size(); ++k)
        if (!rows[k].back().is_zero()) throw std::domain_error("hermite_halphen: inconsistent linear system");
    std::vector<Poly> sol(unknowns);
    for (std::size_t c = 0; c < unknowns; ++c) sol[c] = rows[pivot_row[c]].back();
    return sol;
}

}  // namespace

Poly hermite_halphen(int ell) {
    if (ell < 1) throw std::invalid_argument("hermite_halphen: ell must be positive");
    return cached(3, ell, [&] {
        // Operator images of the basis x^0 .. x^ell; each is y times a polynomial in x.
        std::vector<std::vector<Poly>> images;
        unsigned max_deg = 0;
        for (int k = 0; k <= ell; ++k) {
            Poly img = symmetric_square(LamePoly::variable(Var::x, static_cast<unsigned>(k)), ell).poly();
            if (img.degree(Var::y) > 1 || !img.coeff(Var::y, 0).is_zero())
                throw std::logic_error("hermite_halphen: unexpected image shape");
            images.push_back(img.coeff(Var::y, 1).coefficients(Var::x));
            max_deg = std::max<unsigned>(max_deg, static_cast<unsigned>(images.back().size()));
        }
        std::vector<std::vector<Poly>> rows;
        for (unsigned i = 0; i < max_deg; ++i) {
            std::vector<Poly> row;
            for (int k = 0; k < ell; ++k) row.push_back(i < images[k].size() ? images[k][i] : Poly{});
            row.push_back(i < images[ell].size() ? -images[ell][i] : Poly{});
            rows.push_back(std::move(row));
        }
        auto sol = solve_constant_pivot(std::move(rows), static_cast<std::size_t>(ell));
        std::vector<Poly> coeffs(sol.begin(), sol.end());
        coeffs.push_back(Poly(1));
        return Poly::from_coefficients(Var::x, coeffs);
    });
}

SpectralPolynomial nu_squared_check(int ell) {
    Poly Fhat = hermite_halphen(ell);
    LamePoly F = Fhat.monic_in(Var::B);
    LamePoly DF = curve_derivative(F);
    LamePoly D2F = curve_derivative(DF);
    LamePoly q = LamePoly::variable(Var::x) * Rational(ell * (ell + 1));
    LamePoly nu2 = F * D2F * make_rational(-1, 2) + DF * DF * make_rational(1, 4) +
                   (q + LamePoly::variable(Var::B)) * F * F;
    if (nu2.poly().contains(Var::x) || nu2.poly().contains(Var::y))
        throw std::logic_error("nu_squared_check: residual dependence on x or y");
    return {SpectralKind::Full, ell, nu2.poly()};
}

}  // namespace lame
