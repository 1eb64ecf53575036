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

#include "lame/dispersion.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/ellint_rf.hpp>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "lame/elimination.hpp"
#include "lame/moduli.hpp"
#include "lame/spectral.hpp"

namespace lame {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
const cplx kI(0.0, 1.0);

Poly var(Var v) { return Poly::variable(v); }

// Horner in long double; also returns the derivative.
std::pair<long double, long double> horner(const std::vector<long double>& c, long double x) {
    long double p = 0, d = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        d = d * x + p;
        p = p * x + c[i];
    }
    return {p, d};
}

std::vector<double> to_doubles(const UPoly& p) {
    std::vector<double> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c.get_d());
    return out;
}

double eval(const std::vector<double>& c, double x) {
    double p = 0;
    for (std::size_t i = c.size(); i-- > 0;) p = p * x + c[i];
    return p;
}

UPoly specialize(const Poly& p, const Rational& g2, const Rational& g3) {
    return to_upoly(p.substitute(Var::g2, g2).substitute(Var::g3, g3), Var::B);
}

// Exact isolation by Sturm counts, then bisection on rationals.
std::vector<double> bisect_roots(const UPoly& p, const SturmChain& chain) {
    // Cauchy bound.
    Rational bound = 1;
    for (const auto& c : p) bound += abs(c) / abs(p.back());
    std::vector<double> out;
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int c = chain.count(lo, hi);
        if (c == 0) continue;
        if (c > 1) {
            Rational mid = (lo + hi) / 2;
            stack.push_back({mid, hi});
            stack.push_back({lo, mid});
            continue;
        }
        // A single simple root in (lo, hi]: bisect on the sign of p.
        const int s_hi = sgn(upoly_eval(p, hi));
        for (int it = 0; it < 200 && Rational(hi - lo).get_d() > 1e-17 * std::max(1.0, std::abs(hi.get_d())); ++it) {
            Rational mid = (lo + hi) / 2;
            int s_mid = sgn(upoly_eval(p, mid));
            if (s_mid == 0) {
                lo = hi = mid;
                break;
            }
            if (s_mid == s_hi) hi = mid;
            else lo = mid;
        }
        out.push_back(Rational((lo + hi) / 2).get_d());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Real roots of a squarefree polynomial.
std::vector<double> real_roots(const UPoly& p) {
    const SturmChain chain(p);
    return chain.count_all() == 0 ? std::vector<double>{} : bisect_roots(p, chain);
}

}  // namespace

Poly jacobi_spectral_symbolic(int ell) {
    if (ell < 1) throw std::invalid_argument("jacobi_spectral: ell must be positive");
    const Poly m = var(Var::m);
    const Poly g2 = make_rational(4, 3) * (m * m - m + Poly(1));
    const Poly g3 = make_rational(4, 27) * (m - Poly(2)) * (Poly(2) * m - Poly(1)) * (m + Poly(1));
    const Poly B = Poly(0) - var(Var::E) + make_rational(ell * (ell + 1), 3) * (m + Poly(1));
    Poly L = full_spectral(ell).poly;
    return Poly(0) - L.substitute(Var::g2, g2).substitute(Var::g3, g3).substitute(Var::B, B);
}

JacobiSpectral jacobi_spectral(int ell, const Rational& m) {
    if (m == 0 || m == 1) throw std::domain_error("jacobi_spectral: degenerate modulus");
    Poly p = jacobi_spectral_symbolic(ell).substitute(Var::m, m);
    return {ell, m, to_upoly(p, Var::E)};
}

double upoly_eval(const UPoly& p, double x) { return eval(to_doubles(p), x); }

std::vector<double> band_edges(const JacobiSpectral& js) {
    const int n = static_cast<int>(js.Ltilde.size()) - 1;
    if (n != 2 * js.ell + 1 || js.Ltilde.back() != 1)
        throw std::logic_error("band_edges: spectral polynomial is not monic of degree 2l+1");
    const SturmChain chain(js.Ltilde);
    if (chain.count_all() != n) throw std::runtime_error("band_edges: fewer than 2l+1 distinct real roots");
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -js.Ltilde[i].get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(C, false);
    std::vector<long double> coeffs;
    for (const auto& c : js.Ltilde) coeffs.push_back(c.get_d());
    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        long double x = solver.eigenvalues()[i].real();
        for (int it = 0; it < 50; ++it) {
            auto [p, d] = horner(coeffs, x);
            if (d == 0) break;
            long double step = p / d;
            x -= step;
            if (std::abs(step) <= 1e-15L * std::max(1.0L, std::abs(x))) break;
        }
        roots.push_back(static_cast<double>(x));
    }
    std::sort(roots.begin(), roots.end());
    // Each polished root must sit alone in its exact Sturm cell; clustered
    // roots (narrow gaps) fall back to exact bisection.
    bool separated = true;
    for (int i = 0; i < n && separated; ++i) {
        Rational lo = i == 0 ? Rational(roots[0] - 1.0) : Rational(0.5 * (roots[i - 1] + roots[i]));
        Rational hi = i + 1 == n ? Rational(roots[n - 1] + 1.0) : Rational(0.5 * (roots[i] + roots[i + 1]));
        separated = roots[i] > (i ? roots[i - 1] : -INFINITY) && chain.count(lo, hi) == 1;
    }
    if (!separated) roots = bisect_roots(js.Ltilde, chain);
    return roots;
}

std::vector<double> band_edges(int ell, double m) { return band_edges(jacobi_spectral(ell, Rational(m))); }

int band_index(const std::vector<double>& edges, double E) {
    const int n = static_cast<int>(edges.size());
    for (int j = 0; 2 * j < n; ++j) {
        double hi = 2 * j + 1 < n ? edges[2 * j + 1] : INFINITY;
        if (E >= edges[2 * j] && E <= hi) return j;
    }
    return -1;
}

cplx nu_tilde_branch(const std::vector<double>& edges, double E) {
    cplx nu = 1.0;
    for (double e : edges) nu *= std::sqrt(cplx(E - e, 0.0));
    return nu;
}

cplx k1(double E, cplx nu_tilde, const ThetaContext& ctx) {
    cplx a0 = invert_dn_squared(E, nu_tilde, ctx);
    return -kI * ctx.Z(a0) + kPi / (2.0 * ctx.K());
}

double fold_k(cplx k, double K) {
    const double period = kPi / K;
    double r = std::fmod(k.real(), period);
    if (r < 0) r += period;
    return r > 0.5 * period ? period - r : r;
}

DispersionRelation::DispersionRelation(int ell, double m) : ell_(ell), m_(m), ctx_(m) {
    const Rational mq(m);
    edges_ = band_edges(jacobi_spectral(ell, mq));
    const auto p = params_from_m(mq);
    CoveringMap c = theorem_L(ell);
    x0_num_ = to_doubles(specialize(c.x0.num(), p.g2, p.g3));
    x0_den_ = to_doubles(specialize(c.x0.den(), p.g2, p.g3));
    y0_num_ = to_doubles(specialize(c.y0_over_nu.num(), p.g2, p.g3));
    y0_den_ = to_doubles(specialize(c.y0_over_nu.den(), p.g2, p.g3));
    ka_num_ = to_doubles(specialize(c.kappa_over_nu.num(), p.g2, p.g3));
    ka_den_ = to_doubles(specialize(c.kappa_over_nu.den(), p.g2, p.g3));
    Poly dens(1);
    for (const RatFunc* f : {&c.x0, &c.y0_over_nu, &c.kappa_over_nu})
        dens *= f->den().substitute(Var::g2, p.g2).substitute(Var::g3, p.g3);
    if (dens.contains(Var::B)) poles_ = real_roots(to_upoly(squarefree_part(dens, Var::B), Var::B));
}

DispersionRelation::Reduced DispersionRelation::reduce(double E, cplx nu_tilde) const {
    const double B = -E + ell_ * (ell_ + 1) * (m_ + 1.0) / 3.0;
    for (double p : poles_)
        if (std::abs(B - p) < 1e-6 * std::max(1.0, std::abs(p)))
            throw std::domain_error("DispersionRelation: energy at a pole of the covering map");
    Reduced r;
    r.E1 = -eval(x0_num_, B) / eval(x0_den_, B) + 2.0 * (m_ + 1.0) / 3.0;
    r.nu1 = 0.5 * eval(y0_num_, B) / eval(y0_den_, B) * nu_tilde;
    r.kappa_hat = eval(ka_num_, B) / eval(ka_den_, B);
    return r;
}

cplx DispersionRelation::k(double E, cplx nu_tilde) const {
    Reduced r = reduce(E, nu_tilde);
    return k1(r.E1, r.nu1, ctx_) + r.kappa_hat * nu_tilde;
}

std::vector<DispersionSample> dispersion_scan(int ell, double m, double e_min, double e_max, int n_samples,
                                              int threads) {
    if (n_samples < 1 || !(e_max >= e_min)) throw std::invalid_argument("dispersion_scan: bad sample range");
    if (m < 0.05 || m > 0.95) throw std::domain_error("dispersion_scan: m outside [0.05, 0.95]");
    DispersionRelation rel(ell, m);
    const auto& edges = rel.edges();
    std::vector<DispersionSample> out(n_samples);
    // Phase one: energies, branch of nu_tilde, band bookkeeping.
    for (int i = 0; i < n_samples; ++i) {
        double E = n_samples == 1 ? e_min : e_min + (e_max - e_min) * i / (n_samples - 1);
        auto& s = out[i];
        s.E = E;
        s.nu_tilde = nu_tilde_branch(edges, E);
        s.band_index = band_index(edges, E);
        s.flags = s.band_index >= 0 ? "band" : "gap";
        for (double e : edges)
            if (std::abs(E - e) <= 1e-12 * std::max(1.0, std::abs(e))) s.flags += "|edge";
    }
    // Phase two: independent k evaluations.
    auto work = [&](int first, int stride) {
        for (int i = first; i < n_samples; i += stride) {
            auto& s = out[i];
            try {
                s.k = rel.k(s.E, s.nu_tilde);
                s.k_folded = fold_k(s.k, rel.theta().K());
            } catch (const std::domain_error&) {
                s.k = cplx(NAN, NAN);
                s.k_folded = NAN;
                s.flags += "|pole";
            }
        }
    };
    threads = std::clamp(threads, 1, n_samples);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work, t, threads);
    work(0, threads);
    for (auto& t : pool) t.join();
    return out;
}

std::string dispersion_csv(const std::vector<DispersionSample>& samples) {
    std::string out = "E,nu_re,nu_im,k_re,k_im,k_folded,band_index,flags\n";
    char buf[256];
    auto z = [](double x) { return x + 0.0; };  // no "-0"
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%d,", z(s.E), z(s.nu_tilde.real()),
                      z(s.nu_tilde.imag()), z(s.k.real()), z(s.k.imag()), z(s.k_folded), s.band_index);
        out += buf;
        out += s.flags;
        out += '\n';
    }
    return out;
}

ReductionCheck reduction_integral_check(int ell, const Rational& m, double b_lo, double b_hi) {
    if (!(b_hi > b_lo)) throw std::invalid_argument("reduction_integral_check: empty segment");
    const auto p = params_from_m(m);
    const auto L = to_doubles(specialize(full_spectral(ell).poly, p.g2, p.g3));
    const auto P = to_doubles(specialize(reduction_polynomial(ell).P, p.g2, p.g3));
    CoveringMap c = theorem_L(ell);
    const auto xn = to_doubles(specialize(c.x0.num(), p.g2, p.g3));
    const auto xd = to_doubles(specialize(c.x0.den(), p.g2, p.g3));
    const auto yn = to_doubles(specialize(c.y0_over_nu.num(), p.g2, p.g3));
    const auto yd = to_doubles(specialize(c.y0_over_nu.den(), p.g2, p.g3));
    const double e1 = p.e1.get_d(), e2 = p.e2.get_d(), e3 = p.e3.get_d();
    auto x0 = [&](double B) { return eval(xn, B) / eval(xd, B); };

    // nu is taken on the sheet where y0 = y0hat * nu is positive.
    const double sheet = eval(yn, b_lo) / eval(yd, b_lo) > 0 ? 1.0 : -1.0;
    const int grid = 400;
    int direction = 0;
    double prev = x0(b_lo);
    for (int i = 0; i <= grid; ++i) {
        double B = b_lo + (b_hi - b_lo) * i / grid;
        double Lv = eval(L, B), xv = x0(B);
        if (!(Lv > 0) || !(xv > e1) || !(sheet * eval(yn, B) / eval(yd, B) > 0))
            throw std::domain_error("reduction_integral_check: segment leaves the real x0 > e1 sheet");
        if (i > 0) {
            int d = xv > prev ? 1 : -1;
            if (direction != 0 && d != direction) throw std::domain_error("reduction_integral_check: x0 not monotone");
            direction = d;
        }
        prev = xv;
    }
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    ReductionCheck r;
    r.lhs = GK::integrate([&](double B) { return eval(P, B) / (sheet * std::sqrt(eval(L, B))); }, b_lo, b_hi, 15, 1e-14);
    r.x0_lo = x0(b_lo);
    r.x0_hi = x0(b_hi);
    using boost::math::ellint_rf;
    r.rhs = ellint_rf(r.x0_lo - e1, r.x0_lo - e2, r.x0_lo - e3) - ellint_rf(r.x0_hi - e1, r.x0_hi - e2, r.x0_hi - e3);
    return r;
}

}  // namespace lame
