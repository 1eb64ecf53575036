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

#include "lame/twisted.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "lame/elimination.hpp"

namespace lame {

int degree_twisted_I(int ell) {
    if (ell <= 2) return 0;
    return ell % 2 ? (ell * ell - 1) / 4 : ell * ell / 4 - 1;
}

int degree_twisted_II(int ell) {
    if (ell <= 1) return 0;
    return ell % 2 ? (ell * ell - 1) / 4 : ell * ell / 4;
}

int degree_theta_twisted(int ell) {
    if (ell <= 3) return 0;
    return ell % 2 ? (ell + 1) * (ell - 3) / 4 : ell * (ell - 2) / 4;
}

namespace {

enum class Parity { Even, Odd, Mixed };

Parity parity_in(const Poly& p, Var v) {
    bool even = false, odd = false;
    for (const auto& t : p.terms()) (t.mono[v] % 2 ? odd : even) = true;
    if (odd && even) return Parity::Mixed;
    return odd ? Parity::Odd : Parity::Even;
}

// Divides out the single odd eliminand's factor v.
int remove_parity_factor(Poly& a, Poly& b, Var v, const char* what) {
    Parity pa = parity_in(a, v), pb = parity_in(b, v);
    if (pa == Parity::Mixed || pb == Parity::Mixed || pa == pb)
        throw std::logic_error(std::string(what) + ": unexpected parity structure of the eliminands");
    if (pa == Parity::Odd) {
        a = divide_exact(a, Poly::variable(v));
        return 0;
    }
    b = divide_exact(b, Poly::variable(v));
    return 1;
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

void clear_twisted_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.clear();
}

TwistedSystem twisted_recurrence(int ell, TwistedType type) {
    if (ell < (type == TwistedType::I ? 3 : 2)) throw std::invalid_argument("twisted_recurrence: ell too small");
    Family f = type == TwistedType::I ? Family::TwistedI : Family::TwistedII;
    Symbols<LamePoly> s;
    s.B = LamePoly::variable(Var::B);
    s.g2 = LamePoly::variable(Var::g2);
    s.g3 = LamePoly::variable(Var::g3);
    s.e = LamePoly::variable(Var::e);
    s.kappa = LamePoly::variable(Var::kappa);
    RecurrenceSolver<LamePoly> solver(f, ell, s);
    TwistedSystem sys;
    sys.ell = ell;
    sys.kind = type == TwistedType::I ? SpectralKind::TwistedI : SpectralKind::TwistedII;
    sys.first_coeffs = solver.polynomial(0);
    sys.second_coeffs = solver.polynomial(1);
    sys.first = solver.residual(0).poly();
    sys.second = solver.residual(1).poly();
    sys.divided_sequence = remove_parity_factor(sys.first, sys.second, Var::kappa, "twisted_recurrence");
    return sys;
}

TwistedSystem theta_twisted_system(int ell) {
    if (ell < 4) throw std::invalid_argument("theta_twisted_system: ell too small");
    Symbols<LamePoly> s;
    s.B = LamePoly::variable(Var::B);
    s.g2 = LamePoly::variable(Var::g2);
    s.g3 = LamePoly::variable(Var::g3);
    s.x0 = LamePoly::variable(Var::x0);
    s.y0 = LamePoly::variable(Var::y0);
    RecurrenceSolver<LamePoly> solver(Family::Theta, ell, s);
    TwistedSystem sys;
    sys.ell = ell;
    sys.kind = SpectralKind::ThetaTwisted;
    sys.first_coeffs = solver.polynomial(0);
    sys.second_coeffs = solver.polynomial(1);
    sys.first = solver.residual(0).poly();
    sys.second = solver.residual(1).poly();
    sys.divided_sequence = remove_parity_factor(sys.first, sys.second, Var::y0, "theta_twisted_system");
    return sys;
}

Poly twisted_resultant(const TwistedSystem& sys) {
    // Both eliminands are even in kappa now; eliminate s = kappa^2.
    Poly a = sys.first.deflate(Var::kappa, 2, Var::s);
    Poly b = sys.second.deflate(Var::kappa, 2, Var::s);
    if (sys.kind == SpectralKind::TwistedII) {
        a = to_e_coordinates(a);
        b = to_e_coordinates(b);
    }
    Poly r = resultant(a, b, Var::s);
    if (r.is_zero()) throw std::domain_error("twisted_resultant: eliminands share a factor");
    return primitive_part(r, Var::B);
}

Poly theta_twisted_resultant(const TwistedSystem& sys) {
    Poly a = sys.first, b = sys.second;
    const Poly curve = Poly::variable(Var::y0, 2) - weierstrass_cubic(Var::x0);
    if (a.contains(Var::y0)) a = resultant(a, curve, Var::y0);
    if (b.contains(Var::y0)) b = resultant(b, curve, Var::y0);
    Poly r = resultant(a, b, Var::x0);
    if (r.is_zero()) throw std::domain_error("theta_twisted_resultant: eliminands share a factor");
    return primitive_part(r, Var::B);
}

Poly match_degree(const Poly& p, int target, const std::vector<Poly>& excluded, const char* what) {
    Poly q = normalize_in_B(p);
    if (static_cast<int>(q.degree(Var::B)) == target) return q;
    auto parts = squarefree_decomposition(q, Var::B);
    // Split every square-free part further by the excluded polynomials.
    std::vector<std::pair<Poly, unsigned>> factors;
    for (auto [f, k] : parts) {
        for (const auto& x : excluded) {
            Poly g = gcd(f, x);
            if (g.degree(Var::B) > 0 && g.degree(Var::B) < f.degree(Var::B)) {
                factors.emplace_back(g, 0);  // marked excluded
                f = divide_exact(f, g);
            } else if (g.degree(Var::B) > 0) {
                factors.emplace_back(f, 0);
                f = Poly(1);
                break;
            }
        }
        if (f.degree(Var::B) > 0) factors.emplace_back(f, k);
    }
    // Enumerate multiplicities 0..k for each remaining factor.
    std::vector<std::vector<unsigned>> solutions;
    std::vector<unsigned> pick(factors.size(), 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int remaining) {
        if (remaining < 0) return;
        if (i == factors.size()) {
            if (remaining == 0) solutions.push_back(pick);
            return;
        }
        int d = static_cast<int>(factors[i].first.degree(Var::B));
        for (unsigned k = 0; k <= factors[i].second; ++k) {
            pick[i] = k;
            walk(i + 1, remaining - static_cast<int>(k) * d);
        }
        pick[i] = 0;
    };
    walk(0, target);
    if (solutions.size() != 1) {
        std::string msg = std::string(what) + ": degree mismatch, resultant degree " +
                          std::to_string(q.degree(Var::B)) + " vs expected " + std::to_string(target) + ", " +
                          std::to_string(solutions.size()) + " admissible factor selections";
        throw std::domain_error(msg);
    }
    Poly out = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) out = out * pow(factors[i].first, solutions[0][i]);
    return normalize_in_B(out);
}

SpectralPolynomial twisted_spectral(int ell, TwistedType type) {
    if (ell < 1) throw std::invalid_argument("twisted_spectral: ell must be positive");
    const bool one = type == TwistedType::I;
    Poly p = cached(one ? 0 : 1, ell, [&]() -> Poly {
        if ((one && ell <= 2) || (!one && ell <= 1)) return Poly(1);
        TwistedSystem sys = twisted_recurrence(ell, type);
        Poly r = twisted_resultant(sys);
        int target = one ? degree_twisted_I(ell) : degree_twisted_II(ell);
        Poly m = match_degree(r, target, {}, one ? "twisted_spectral(I)" : "twisted_spectral(II)");
        return curve_reduce(m);
    });
    return {one ? SpectralKind::TwistedI : SpectralKind::TwistedII, ell, p};
}

SpectralPolynomial theta_twisted_spectral(int ell) {
    if (ell < 1) throw std::invalid_argument("theta_twisted_spectral: ell must be positive");
    Poly p = cached(2, ell, [&]() -> Poly {
        if (ell <= 3) return Poly(1);
        TwistedSystem sys = theta_twisted_system(ell);
        Poly r = theta_twisted_resultant(sys);
        return match_degree(r, degree_theta_twisted(ell), {}, "theta_twisted_spectral");
    });
    return {SpectralKind::ThetaTwisted, ell, p};
}

SpectralPolynomial full_twisted(int ell) {
    Poly p = cached(3, ell, [&] {
        return twisted_spectral(ell, TwistedType::I).poly * norm_over_e(twisted_spectral(ell, TwistedType::II).poly);
    });
    return {SpectralKind::FullTwisted, ell, p};
}

}  // namespace lame
