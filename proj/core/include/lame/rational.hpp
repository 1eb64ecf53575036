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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lame {

// Exact rational scalar. mpq_class keeps values canonical after every
// arithmetic operation; construct through make_rational() when starting
// from a raw numerator/denominator pair.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p/q", "p", and plain decimals such as "0.5" or "-1.25e-3".
// Decimals are converted exactly.
Rational parse_rational(std::string_view text);

// Always "num/den", also for integers ("3/1").
std::string to_fraction_string(const Rational& r);

// Shortest human form: "3", "-1/4".
std::string to_string(const Rational& r);

Rational pow(const Rational& base, unsigned exp);

}  // namespace lame
