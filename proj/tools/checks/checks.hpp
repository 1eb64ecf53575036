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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lame/rational.hpp"

namespace lame::checks {

struct Options {
    std::optional<int> ell;  // restrict to one ell where the check is a range
    Rational m = make_rational(1, 2);
};

struct Result {
    std::string name;
    bool pass = false;
    std::string detail;
};

const std::vector<std::string>& names();

// Throws std::invalid_argument for an unknown name. Failures inside a check,
// including exceptions, are reported in the result.
Result run(std::string_view name, const Options& opt = {});

}  // namespace lame::checks
