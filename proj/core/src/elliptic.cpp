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

#include "lame/elliptic.hpp"

#include <array>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <stdexcept>

namespace lame {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
const cplx kI(0.0, 1.0);

// Sums terms until they drop below 1e-16 of the partial sum.
template <class Term>
cplx theta_series(Term term, cplx start) {
    cplx sum = start;
    for (int n = 0; n < 200; ++n) {
        cplx t = term(n);
        sum += t;
        if (n > 1 && std::abs(t) < 1e-16 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
}

}  // namespace

double complete_K(double m) {
    if (!(m >= 0.0 && m < 1.0)) throw std::domain_error("complete_K: m must lie in [0, 1)");
    double a = 1.0, b = std::sqrt(1.0 - m);
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (a + b);
}

ThetaContext::ThetaContext(double m) : m_(m) {
    if (!(m > 0.0 && m < 1.0)) throw std::domain_error("ThetaContext: m must lie in (0, 1)");
    K_ = complete_K(m);
    Kp_ = complete_K(1.0 - m);
    q_ = std::exp(-kPi * Kp_ / K_);
    t2_0_ = theta2(0.0);
    t3_0_ = theta3(0.0);
    t4_0_ = theta4(0.0);
}

cplx ThetaContext::theta1(cplx v) const {
    return theta_series(
        [&](int n) {
            double sign = n % 2 ? -1.0 : 1.0;
            return 2.0 * sign * std::pow(q_, (n + 0.5) * (n + 0.5)) * std::sin(double(2 * n + 1) * v);
        },
        0.0);
}

cplx ThetaContext::theta2(cplx v) const {
    return theta_series(
        [&](int n) { return 2.0 * std::pow(q_, (n + 0.5) * (n + 0.5)) * std::cos(double(2 * n + 1) * v); }, 0.0);
}

cplx ThetaContext::theta3(cplx v) const {
    return theta_series(
        [&](int n) { return 2.0 * std::pow(q_, double(n + 1) * (n + 1)) * std::cos(double(2 * n + 2) * v); }, 1.0);
}

cplx ThetaContext::theta4(cplx v) const {
    return theta_series(
        [&](int n) {
            double sign = n % 2 ? 1.0 : -1.0;
            return 2.0 * sign * std::pow(q_, double(n + 1) * (n + 1)) * std::cos(double(2 * n + 2) * v);
        },
        1.0);
}

cplx ThetaContext::theta4_prime(cplx v) const {
    return theta_series(
        [&](int n) {
            double sign = n % 2 ? -1.0 : 1.0;
            return 4.0 * sign * double(n + 1) * std::pow(q_, double(n + 1) * (n + 1)) * std::sin(double(2 * n + 2) * v);
        },
        0.0);
}

JacobiTriple ThetaContext::reduced_sncndn(cplx u) const {
    cplx v = kPi * u / (2.0 * K_);
    cplx t4 = theta4(v);
    return {t3_0_ / t2_0_ * theta1(v) / t4, t4_0_ / t2_0_ * theta2(v) / t4, t4_0_ / t3_0_ * theta3(v) / t4};
}

JacobiTriple ThetaContext::sncndn(cplx u) const {
    // Move into |Re u| <= K, |Im u| <= K' using the half-period sign rules.
    double ni = std::round(u.imag() / (2.0 * Kp_));
    u -= 2.0 * Kp_ * ni * kI;
    double nr = std::round(u.real() / (2.0 * K_));
    u -= 2.0 * K_ * nr;
    for (double s : {-1.0, 1.0})
        if (std::abs(u - s * Kp_ * kI) < 1e-8) throw std::domain_error("jacobi_sn_cn_dn: argument at a pole");
    JacobiTriple t = reduced_sncndn(u);
    const double si = std::fmod(std::abs(ni), 2.0) == 1.0 ? -1.0 : 1.0;
    const double sr = std::fmod(std::abs(nr), 2.0) == 1.0 ? -1.0 : 1.0;
    return {t.sn * sr, t.cn * si * sr, t.dn * si};
}

cplx ThetaContext::reduced_Z(cplx u) const {
    cplx v = kPi * u / (2.0 * K_);
    return kPi / (2.0 * K_) * theta4_prime(v) / theta4(v);
}

cplx ThetaContext::Z(cplx u) const {
    double ni = std::round(u.imag() / (2.0 * Kp_));
    u -= 2.0 * Kp_ * ni * kI;
    cplx shift = -ni * kI * kPi / K_;
    u -= 2.0 * K_ * std::round(u.real() / (2.0 * K_));
    if (std::abs(u.imag()) <= 0.5 * Kp_) return reduced_Z(u) + shift;
    // Near the pole iK' the series cancels badly; shift by iK' instead.
    const double side = u.imag() > 0 ? 1.0 : -1.0;
    cplx beta = u - side * Kp_ * kI;
    if (std::abs(beta) < 1e-8) throw std::domain_error("jacobi_Z: argument at a pole");
    JacobiTriple t = reduced_sncndn(beta);
    return reduced_Z(beta) + t.cn * t.dn / t.sn - side * kI * kPi / (2.0 * K_) + shift;
}

JacobiTriple jacobi_sn_cn_dn(cplx u, double m) { return ThetaContext(m).sncndn(u); }

cplx jacobi_Z(cplx u, const ThetaContext& ctx) { return ctx.Z(u); }

cplx invert_dn_squared(double E, cplx nu_tilde, const ThetaContext& ctx) {
    const double m = ctx.m(), K = ctx.K(), Kp = ctx.Kp();
    const double k = std::sqrt(m), kp = std::sqrt(1.0 - m);
    using boost::math::ellint_1;
    // sn^2 = (1 + m - E)/m picks one edge of the rectangle per range of E.
    const double s2 = (1.0 + m - E) / m;
    cplx alpha;
    if (E >= 1.0 + m) {
        alpha = kI * ellint_1(kp, std::atan(std::sqrt(-s2)));
    } else if (E >= 1.0) {
        alpha = ellint_1(k, std::asin(std::sqrt(s2)));
    } else if (E >= m) {
        double r = (E - m) / (1.0 - m);
        double s = std::sqrt(std::max(0.0, (1.0 - r) / (1.0 - r * (1.0 - m))));
        alpha = K + kI * ellint_1(kp, std::asin(std::min(1.0, s)));
    } else {
        alpha = ellint_1(k, std::asin(std::min(1.0, 1.0 / (k * std::sqrt(s2))))) + kI * Kp;
    }
    // Select the sign from m sn cn dn = i nu_tilde, then reduce to the rectangle.
    const cplx target = kI * nu_tilde;
    const double scale = std::max({1.0, std::abs(target), std::abs(E)});
    cplx best;
    double best_err = INFINITY;
    for (double sign : {1.0, -1.0}) {
        cplx a = sign * alpha;
        JacobiTriple t = ctx.sncndn(a);
        double err = std::abs(m * t.sn * t.cn * t.dn - target);
        if (err < best_err) {
            best_err = err;
            best = a;
        }
    }
    // E = -inf side has alpha at the pole; the sign rule is vacuous there.
    if (best_err > 1e-9 * scale * std::max(1.0, std::abs(E) * std::sqrt(std::abs(E))))
        throw std::domain_error("invert_dn_squared: nu_tilde is inconsistent with E");
    double a = std::fmod(best.real(), 2.0 * K);
    if (a < 0) a += 2.0 * K;
    double b = std::fmod(best.imag(), 2.0 * Kp);
    if (b < 0) b += 2.0 * Kp;
    if (2.0 * K - a < 1e-13 * K) a = 0.0;
    if (2.0 * Kp - b < 1e-13 * Kp) b = 0.0;
    return {a, b};
}

CurvePoint curve_point(cplx alpha, const ThetaContext& ctx) {
    JacobiTriple t = ctx.sncndn(alpha);
    const double m = ctx.m();
    return {m * t.sn * t.sn - (m + 1.0) / 3.0, 2.0 * m * t.sn * t.cn * t.dn};
}

cplx phi_basepoint(const ThetaContext& ctx) { return cplx(0.5 * ctx.K(), 0.5 * ctx.Kp()); }

cplx phi_alpha(cplx alpha, cplx alpha0, const ThetaContext& ctx) {
    const cplx base = phi_basepoint(ctx);
    const cplx d = alpha - base;
    // Singularities on the path: the zero at alpha0 and the pole at iK'.
    auto near_segment = [&](cplx p) {
        double t = std::clamp(((p - base) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
        return std::abs(base + t * d - p);
    };
    if (std::abs(d) == 0.0) return 1.0;
    const double K = ctx.K(), Kp = ctx.Kp();
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            cplx shift(2.0 * K * a, 2.0 * Kp * b);
            if (std::abs(alpha - alpha0 - shift) < 1e-12) return 0.0;
            if (near_segment(alpha0 + shift) < 1e-8 || near_segment(cplx(0, Kp) + shift) < 1e-8)
                throw std::domain_error("phi_alpha: path passes through a singularity");
        }
    CurvePoint p0 = curve_point(alpha0, ctx);
    auto integrand = [&](double t) {
        CurvePoint p = curve_point(base + t * d, ctx);
        return 0.5 * (p.y + p0.y) / (p.x - p0.x) * d;
    };
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    double re = GK::integrate([&](double t) { return integrand(t).real(); }, 0.0, 1.0, 15, 1e-13);
    double im = GK::integrate([&](double t) { return integrand(t).imag(); }, 0.0, 1.0, 15, 1e-13);
    return std::exp(cplx(re, im));
}

cplx phi_numeric(double x, cplx y, double x0, cplx y0, const ThetaContext& ctx) {
    // x = 2(m+1)/3 - E on this locus, and y = 2 i nu_tilde.
    const double m = ctx.m();
    auto locate = [&](double xx, cplx yy) { return invert_dn_squared(2.0 * (m + 1.0) / 3.0 - xx, yy / (2.0 * kI), ctx); };
    return phi_alpha(locate(x, y), locate(x0, y0), ctx);
}

MonodromyResult hill_monodromy_oracle(int ell, double E, double m) {
    if (!(m > 0.0 && m < 1.0)) throw std::domain_error("hill_monodromy_oracle: m must lie in (0, 1)");
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 4>;  // psi1, psi1', psi2, psi2'
    const double K = complete_K(m), k = std::sqrt(m);
    const double c = double(ell) * (ell + 1) * m;
    auto rhs = [&](const State& s, State& ds, double a) {
        double sn = boost::math::jacobi_sn(k, a);
        double v = c * sn * sn - E;
        ds = {s[1], v * s[0], s[3], v * s[2]};
    };
    State s{1.0, 0.0, 0.0, 1.0};
    auto stepper = odeint::make_controlled(1e-13, 1e-13, odeint::runge_kutta_fehlberg78<State>());
    odeint::integrate_adaptive(stepper, rhs, s, 0.0, 2.0 * K, 1e-3);
    MonodromyResult r;
    r.trace = s[0] + s[3];
    r.wronskian_drift = std::abs(s[0] * s[3] - s[1] * s[2] - 1.0);
    if (!std::isfinite(r.trace) || r.wronskian_drift > 1e-6)
        throw std::runtime_error("hill_monodromy_oracle: integration lost accuracy");
    r.k = std::acos(cplx(r.trace / 2.0, 0.0)) / (2.0 * K);
    return r;
}

}  // namespace lame
