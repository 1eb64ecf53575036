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

namespace lame {

using cplx = std::complex<double>;

// K(m) by the arithmetic-geometric mean; m in [0, 1).
double complete_K(double m);

struct JacobiTriple {
    cplx sn, cn, dn;
};

// Theta-function machinery for a real modulus m in (0, 1). Immutable.
class ThetaContext {
  public:
    explicit ThetaContext(double m);

    double m() const { return m_; }
    double K() const { return K_; }
    double Kp() const { return Kp_; }
    double nome() const { return q_; }

    // Argument v = pi u / (2K).
    cplx theta1(cplx v) const;
    cplx theta2(cplx v) const;
    cplx theta3(cplx v) const;
    cplx theta4(cplx v) const;
    cplx theta4_prime(cplx v) const;

    // Throws std::domain_error within 1e-8 of a pole.
    JacobiTriple sncndn(cplx u) const;
    // Jacobi zeta; throws near its poles (iK' + lattice).
    cplx Z(cplx u) const;

  private:
    JacobiTriple reduced_sncndn(cplx u) const;
    cplx reduced_Z(cplx u) const;

    double m_, K_, Kp_, q_;
    cplx t2_0_, t3_0_, t4_0_;
};

JacobiTriple jacobi_sn_cn_dn(cplx u, double m);
cplx jacobi_Z(cplx u, const ThetaContext& ctx);

// alpha0 with dn^2(alpha0) = E - m and m sn cn dn(alpha0) = i nu_tilde, in
// the rectangle [0, 2K) x [0, 2K'). Throws std::domain_error when nu_tilde
// is inconsistent with E (relative 1e-9).
cplx invert_dn_squared(double E, cplx nu_tilde, const ThetaContext& ctx);

// Curve point of the Jacobi form: x = m sn^2(alpha) - (m+1)/3, y = 2 m sn cn dn(alpha).
struct CurvePoint {
    cplx x, y;
};
CurvePoint curve_point(cplx alpha, const ThetaContext& ctx);

// Base point of phi_alpha's integration path.
cplx phi_basepoint(const ThetaContext& ctx);

// exp(1/2 int (y + y0)/(x - x0) dx/y) along the straight alpha-segment from
// phi_basepoint to alpha; the parameter point is given by alpha0. Throws
// std::domain_error when the segment passes within 1e-8 of a singularity.
cplx phi_alpha(cplx alpha, cplx alpha0, const ThetaContext& ctx);

// Same, with both points given on the real-x locus of the curve by (x, y).
cplx phi_numeric(double x, cplx y, double x0, cplx y0, const ThetaContext& ctx);

struct MonodromyResult {
    double trace;
    cplx k;                  // arccos(trace/2) / (2K)
    double wronskian_drift;  // |W(2K) - 1|
};

// Integrates -psi'' + l(l+1) m sn^2 psi = E psi over one real period.
MonodromyResult hill_monodromy_oracle(int ell, double E, double m);

}  // namespace lame
