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
#include <string>
#include <vector>

#include "lame/covering.hpp"
#include "lame/elliptic.hpp"
#include "lame/poly.hpp"

namespace lame {

// -L(B; g2(m), g3(m)) with B = -E + l(l+1)(m+1)/3, as a polynomial in E and m.
Poly jacobi_spectral_symbolic(int ell);

struct JacobiSpectral {
    int ell;
    Rational m;
    UPoly Ltilde;  // monic in E, degree 2l+1
};

// Throws std::domain_error for m = 0 or m = 1.
JacobiSpectral jacobi_spectral(int ell, const Rational& m);

// Sorted real roots of Ltilde. Throws std::runtime_error unless the exact
// Sturm count and the polished eigenvalues both give 2l+1 distinct roots.
std::vector<double> band_edges(const JacobiSpectral& js);
std::vector<double> band_edges(int ell, double m);

double upoly_eval(const UPoly& p, double x);

// Band containing E (bands are [E0,E1], [E2,E3], ..., [E_2l, inf)), or -1.
int band_index(const std::vector<double>& edges, double E);

// nu_tilde(E) = prod sqrt(E - E_s) with the principal root, i.e. the branch
// continued along the real axis from just above it.
cplx nu_tilde_branch(const std::vector<double>& edges, double E);

// -i Z(alpha0) + pi/2K with alpha0 from invert_dn_squared.
cplx k1(double E, cplx nu_tilde, const ThetaContext& ctx);

// Reduces k modulo pi/K and folds the real part into [0, pi/2K].
double fold_k(cplx k, double K);

// Evaluates the reduced dispersion relation k_l = k1(E_l, nu_l) + kappa_hat nu_tilde
// for one (l, m). Immutable after construction.
class DispersionRelation {
  public:
    DispersionRelation(int ell, double m);

    int ell() const { return ell_; }
    const ThetaContext& theta() const { return ctx_; }
    const std::vector<double>& edges() const { return edges_; }

    struct Reduced {
        double E1;       // reduced energy
        cplx nu1;        // reduced nu_tilde
        double kappa_hat;
    };
    // Throws std::domain_error within 1e-6 (relative) of a covering pole.
    Reduced reduce(double E, cplx nu_tilde) const;
    cplx k(double E, cplx nu_tilde) const;

  private:
    int ell_;
    double m_;
    ThetaContext ctx_;
    std::vector<double> edges_;
    std::vector<double> poles_;  // real poles of the covering data, in B
    std::vector<double> x0_num_, x0_den_, y0_num_, y0_den_, ka_num_, ka_den_;  // in B
};

struct DispersionSample {
    double E;
    cplx nu_tilde;
    cplx k;
    double k_folded;
    int band_index;  // -1 in a gap
    std::string flags;
};

// Uniform samples on [e_min, e_max]. The branch of nu_tilde is fixed first
// (sequentially); the k evaluations then run on up to `threads` threads.
std::vector<DispersionSample> dispersion_scan(int ell, double m, double e_min, double e_max, int n_samples,
                                              int threads = 1);

// CSV with columns E,nu_re,nu_im,k_re,k_im,k_folded,band_index,flags.
std::string dispersion_csv(const std::vector<DispersionSample>& samples);

// Compares int P(B) dB / nu over [b_lo, b_hi] with int dx0/y0 evaluated
// through Carlson's R_F at the image endpoints. Requires L(B) > 0, x0 > e1
// and y0 > 0 on the segment, and x0 monotone; throws std::domain_error otherwise.
struct ReductionCheck {
    double lhs, rhs;
    double x0_lo, x0_hi;
};
ReductionCheck reduction_integral_check(int ell, const Rational& m, double b_lo, double b_hi);

}  // namespace lame
