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
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lame/lame_poly.hpp"
#include "lame/rational.hpp"

namespace lame {

// Coefficient-type hook for the generic recurrence engine.
template <class T>
struct ScalarTraits {
    static T from_rational(const Rational& r) { return T(r); }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static std::complex<double> from_rational(const Rational& r) { return {r.get_d(), 0.0}; }
};

// The eight recurrence systems obtained by equating powers of x.
//   C, D, E, F     : ordinary species 1, 4, 2, 3 (one sequence each)
//   TwistedI       : C (seq 0) coupled to D (seq 1), parameter kappa
//   TwistedII      : E (seq 0) coupled to F (seq 1), parameter kappa
//   Theta          : A (seq 0) coupled to B (seq 1), point (x0, y0)
//   HermiteKrichever: A, B with kappa and (x0, y0)
enum class Family { C, D, E, F, TwistedI, TwistedII, Theta, HermiteKrichever };

std::string family_name(Family f);

// Values substituted for the symbols appearing in the recurrences.
template <class T>
struct Symbols {
    T B, g2, g3, e, kappa, x0, y0;
};

struct FamilyLayout {
    int sequences = 1;
    std::array<int, 2> top{0, 0};  // highest power of x per sequence
    int normalized = 0;            // sequence whose top coefficient is 1
};

// Top degrees for the given family and ell; throws std::invalid_argument when
// the family has no polynomial solutions for this ell (wrong parity or ell too
// small).
FamilyLayout family_layout(Family f, int ell);

template <class T>
struct Dependency {
    int seq;
    int index;
    T coeff;
};

// P * u_seq[j] + sum coeff * u_dep = 0.
template <class T>
struct Equation {
    long prefactor = 0;
    std::vector<Dependency<T>> deps;
};

template <class T>
Equation<T> family_equation(Family f, int ell, int seq, int j, const Symbols<T>& s) {
    auto c = [](long v) { return ScalarTraits<T>::from_rational(Rational(v)); };
    auto q = [](long num, long den) { return ScalarTraits<T>::from_rational(make_rational(num, den)); };
    Equation<T> eq;
    auto add = [&](int sq, int idx, T coeff) { eq.deps.push_back({sq, idx, std::move(coeff)}); };
    const long J = j;
    const T& B = s.B;
    const T& g2 = s.g2;
    const T& g3 = s.g3;
    switch (f) {
        case Family::C:
            eq.prefactor = (2 * J - ell) * (2 * J + ell + 1);
            add(0, j + 1, c(0) - B);
            add(0, j + 2, c(-1) * q(2 * J + 3, 2) * c(J + 2) * g2);
            add(0, j + 3, c(-(J + 2) * (J + 3)) * g3);
            return eq;
        case Family::D:
            eq.prefactor = (2 * J - ell + 3) * (2 * J + ell + 4);
            add(0, j + 1, c(0) - B);
            add(0, j + 2, c(-1) * q(2 * J + 5, 2) * c(J + 2) * g2);
            add(0, j + 3, c(-(J + 2) * (J + 3)) * g3);
            return eq;
        case Family::E:
            eq.prefactor = (2 * J - ell + 1) * (2 * J + ell + 2);
            add(0, j + 1, c(4 * J + 5) * s.e - B);
            add(0, j + 2, (q(-(2 * J + 5), 2) * g2 + c(4) * s.e * s.e) * c(J + 2));
            add(0, j + 3, c(-(J + 2) * (J + 3)) * g3);
            return eq;
        case Family::F:
            eq.prefactor = (2 * J - ell + 2) * (2 * J + ell + 3);
            add(0, j + 1, c(-(4 * J + 7)) * s.e - B);
            add(0, j + 2, (q(-(2 * J + 3), 2) * g2 - c(4) * s.e * s.e) * c(J + 2));
            add(0, j + 3, c(-(J + 2) * (J + 3)) * g3);
            return eq;
        case Family::TwistedI: {
            const T& k = s.kappa;
            T k2 = k * k;
            if (seq == 0) {
                eq.prefactor = (2 * J - ell) * (2 * J + ell + 1);
                add(0, j + 1, k2 - B);
                add(0, j + 2, c(-1) * q(2 * J + 3, 2) * c(J + 2) * g2);
                add(0, j + 3, c(-(J + 2) * (J + 3)) * g3);
                add(1, j - 1, c(2 * (4 * J + 2)) * k);
                add(1, j + 1, c(-1) * q(2 * J + 3, 1) * k * g2);
                add(1, j + 2, c(-2 * (J + 2)) * k * g3);
            } else {
                eq.prefactor = (2 * J - ell + 3) * (2 * J + ell + 4);
                add(1, j + 1, k2 - B);
                add(1, j + 2, c(-1) * q(2 * J + 5, 2) * c(J + 2) * g2);
                add(1, j + 3, c(-(J + 2) * (J + 3)) * g3);
                add(0, j + 2, c(2 * (J + 2)) * k);
            }
            return eq;
        }
        case Family::TwistedII: {
            const T& k = s.kappa;
            const T& e = s.e;
            T k2 = k * k;
            if (seq == 0) {
                eq.prefactor = (2 * J - ell + 1) * (2 * J + ell + 2);
                add(0, j + 1, c(4 * J + 5) * e + k2 - B);
                add(0, j + 2, (q(-(2 * J + 5), 2) * g2 + c(4) * e * e) * c(J + 2));
                add(0, j + 3, c(-(J + 2) * (J + 3)) * g3);
                add(1, j, c(2 * (4 * J + 4)) * k);
                add(1, j + 1, c(2 * (4 * J + 6)) * k * e);
                add(1, j + 2, c(2 * (4 * J + 8)) * k * (e * e - q(1, 4) * g2));
            } else {
                eq.prefactor = (2 * J - ell + 2) * (2 * J + ell + 3);
                add(1, j + 1, c(-(4 * J + 7)) * e + k2 - B);
                add(1, j + 2, (q(-(2 * J + 3), 2) * g2 - c(4) * e * e) * c(J + 2));
                add(1, j + 3, c(-(J + 2) * (J + 3)) * g3);
                add(0, j + 1, q(2 * J + 3, 1) * k);
                add(0, j + 2, c(-2 * (J + 2)) * k * e);
            }
            return eq;
        }
        case Family::Theta: {
            const T& x0 = s.x0;
            const T& y0 = s.y0;
            if (seq == 0) {
                eq.prefactor = (2 * J - ell + 1) * (2 * J + ell + 2);
                add(0, j + 1, c(4 * J + 5) * x0 - B);
                add(0, j + 2, (q(-(2 * J + 5), 2) * g2 + c(4) * x0 * x0) * c(J + 2));
                add(0, j + 3, c(-(J + 2) * (J + 3)) * g3);
                add(1, j + 1, c(-2 * (4 * J + 6)) * y0);
                add(1, j + 2, c(-4 * (J + 2)) * x0 * y0);
            } else {
                eq.prefactor = (2 * J - ell + 2) * (2 * J + ell + 3);
                add(1, j + 1, c(-(4 * J + 7)) * x0 - B);
                add(1, j + 2, (q(-(2 * J + 3), 2) * g2 - c(4) * x0 * x0) * c(J + 2));
                add(1, j + 3, c(-(J + 2) * (J + 3)) * g3);
                add(0, j + 2, c(J + 2) * y0);
            }
            return eq;
        }
        case Family::HermiteKrichever: {
            const T& k = s.kappa;
            const T& x0 = s.x0;
            const T& y0 = s.y0;
            T k2 = k * k;
            if (seq == 0) {
                eq.prefactor = (2 * J - ell + 1) * (2 * J + ell + 2);
                add(0, j + 1, c(4 * J + 5) * x0 + k2 - B);
                add(0, j + 2, (q(-(2 * J + 5), 2) * g2 + c(4) * x0 * x0 - c(2) * k * y0) * c(J + 2));
                add(0, j + 3, c(-(J + 2) * (J + 3)) * g3);
                add(1, j, c(8 * (J + 1)) * k);
                add(1, j + 1, c(4 * (2 * J + 3)) * (k * x0 - y0));
                add(1, j + 2, c(2 * (J + 2)) * (k * (c(4) * x0 * x0 - g2) - c(2) * x0 * y0));
            } else {
                eq.prefactor = (2 * J - ell + 2) * (2 * J + ell + 3);
                add(1, j + 1, c(-(4 * J + 7)) * x0 + k2 - B);
                add(1, j + 2, (q(-(2 * J + 3), 2) * g2 - c(4) * x0 * x0 + c(2) * k * y0) * c(J + 2));
                add(1, j + 3, c(-(J + 2) * (J + 3)) * g3);
                add(0, j + 1, c(2 * J + 3) * k);
                add(0, j + 2, c(-(J + 2)) * (c(2) * k * x0 - y0));
            }
            return eq;
        }
    }
    throw std::logic_error("family_equation: unknown family");
}

// Top-down solver: coefficients above a sequence's top vanish, the
// normalized top is 1, every other coefficient comes from its own equation.
// Values are memoized; j = -1 gives the compatibility conditions.
template <class T>
class RecurrenceSolver {
  public:
    RecurrenceSolver(Family f, int ell, Symbols<T> symbols)
        : family_(f), ell_(ell), layout_(family_layout(f, ell)), symbols_(std::move(symbols)) {}

    const FamilyLayout& layout() const { return layout_; }

    const T& value(int seq, int j) {
        auto key = std::make_pair(seq, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        T result;
        if (j > layout_.top[seq]) {
            result = ScalarTraits<T>::from_rational(0);
        } else if (j == layout_.top[seq] && seq == layout_.normalized) {
            result = ScalarTraits<T>::from_rational(1);
        } else {
            Equation<T> eq = family_equation(family_, ell_, seq, j, symbols_);
            if (eq.prefactor == 0)
                throw std::domain_error("RecurrenceSolver: vanishing prefactor below the top degree");
            T acc = ScalarTraits<T>::from_rational(0);
            for (const auto& d : eq.deps) {
                if (d.index > layout_.top[d.seq]) continue;
                acc = acc + d.coeff * value(d.seq, d.index);
            }
            result = acc * ScalarTraits<T>::from_rational(Rational(-1) / Rational(eq.prefactor));
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

    // Coefficients from the top degree down to x^0 of one sequence.
    std::vector<T> polynomial(int seq) {
        std::vector<T> out;
        for (int j = layout_.top[seq]; j >= 0; --j) out.push_back(value(seq, j));
        return out;
    }

    T residual(int seq) { return value(seq, -1); }

  private:
    Family family_;
    int ell_;
    FamilyLayout layout_;
    Symbols<T> symbols_;
    std::map<std::pair<int, int>, T> memo_;
};

}  // namespace lame
