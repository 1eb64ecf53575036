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

// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "checks/checks.hpp"

namespace {

struct Criterion {
    int id;
    const char* title;
    std::vector<std::string> checks;
};

}  // namespace

int main() {
    using lame::checks::run;
    const std::vector<Criterion> criteria = {
        {1, "reference tables", {"golden-tables"}},
        {2, "degree laws", {"degree-laws"}},
        {3, "covering consistency", {"gamma-independence", "curve-identity", "covering-degree"}},
        {4, "nu^2 formula", {"nu-squared"}},
        {5, "Cohn polynomials", {"cohn"}},
        {6, "Jacobi-form spectral polynomials", {"jacobi-spectral"}},
        {7, "dispersion vs Floquet oracle", {"dispersion-oracle"}},
        {8, "large-E asymptotics", {"asymptotics"}},
        {9, "hyperelliptic reduction", {"reduction"}},
        {10, "l=4 branch degeneracy", {"branch-degeneracy"}},
    };
    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        for (const auto& name : c.checks) {
            auto r = run(name);
            pass = pass && r.pass;
            if (!r.detail.empty()) detail += (detail.empty() ? "" : " | ") + r.name + ": " + r.detail;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d %-34s %s (%.1fs)%s%s\n", c.id, c.title, pass ? "PASS" : "FAIL", secs,
                    detail.empty() ? "" : "  ", detail.c_str());
        std::fflush(stdout);
        all = all && pass;
    }
    return all ? 0 : 1;
}
