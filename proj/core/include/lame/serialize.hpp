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

#include <string>
#include <string_view>

#include "lame/poly.hpp"
#include "lame/ratfunc.hpp"

namespace lame {

// {"vars": ["B","g2","g3","e", ...], "terms": [{"coeff": "num/den", "pows": [...]}, ...]}
// The four Lame variables are always listed; any others present follow in
// Var order. Terms keep the graded-lex order of Poly. indent < 0 is compact.
std::string poly_to_json(const Poly& p, int indent = -1);

// Throws std::invalid_argument on malformed input or unknown variables.
Poly poly_from_json(std::string_view text);

// {"num": <poly>, "den": <poly>}
std::string ratfunc_to_json(const RatFunc& f, int indent = -1);

}  // namespace lame
