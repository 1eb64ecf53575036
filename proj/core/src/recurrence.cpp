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

#include "lame/recurrence.hpp"

namespace lame {

std::string family_name(Family f) {
    switch (f) {
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E: return "E";
        case Family::F: return "F";
        case Family::TwistedI: return "twisted-I";
        case Family::TwistedII: return "twisted-II";
        case Family::Theta: return "theta-twisted";
        case Family::HermiteKrichever: return "hermite-krichever";
    }
    return "?";
}

FamilyLayout family_layout(Family f, int ell) {
    auto bad = [&](const char* why) {
        return std::invalid_argument(family_name(f) + " recurrence: " + why + " (ell = " + std::to_string(ell) + ")");
    };
    if (ell < 1) throw bad("ell must be positive");
    const bool odd = ell % 2 == 1;
    FamilyLayout L;
    switch (f) {
        case Family::C:
            if (odd) throw bad("needs even ell");
            L.top = {ell / 2, 0};
            return L;
        case Family::D:
            if (!odd) throw bad("needs odd ell");
            if (ell < 3) throw bad("needs ell >= 3");
            L.top = {(ell - 3) / 2, 0};
            return L;
        case Family::E:
            if (!odd) throw bad("needs odd ell");
            L.top = {(ell - 1) / 2, 0};
            return L;
        case Family::F:
            if (odd) throw bad("needs even ell");
            L.top = {(ell - 2) / 2, 0};
            return L;
        case Family::TwistedI:
            if (ell < 3) throw bad("needs ell >= 3");
            L.sequences = 2;
            if (odd) {
                L.top = {(ell - 1) / 2, (ell - 3) / 2};
                L.normalized = 1;
            } else {
                L.top = {ell / 2, (ell - 4) / 2};
                L.normalized = 0;
            }
            return L;
        case Family::TwistedII:
            if (ell < 2) throw bad("needs ell >= 2");
            L.sequences = 2;
            if (odd) {
                L.top = {(ell - 1) / 2, (ell - 3) / 2};
                L.normalized = 0;
            } else {
                L.top = {ell / 2 - 1, ell / 2 - 1};
                L.normalized = 1;
            }
            return L;
        case Family::Theta:
            if (ell < 4) throw bad("needs ell >= 4");
            L.sequences = 2;
            if (odd) {
                L.top = {(ell - 1) / 2, (ell - 5) / 2};
                L.normalized = 0;
            } else {
                L.top = {ell / 2 - 2, ell / 2 - 1};
                L.normalized = 1;
            }
            return L;
        case Family::HermiteKrichever:
            L.sequences = 2;
            if (odd) {
                L.top = {(ell - 1) / 2, (ell - 3) / 2};
                L.normalized = 0;
            } else {
                L.top = {ell / 2 - 1, ell / 2 - 1};
                L.normalized = 1;
            }
            return L;
    }
    throw bad("unknown family");
}

}  // namespace lame
