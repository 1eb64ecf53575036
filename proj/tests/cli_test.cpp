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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "lame/poly.hpp"
#include "lame/serialize.hpp"

namespace {

struct Run {
    std::string out;
    int status;
};

Run run_lame(const std::string& args) {
    std::string cmd = std::string(LAME_BIN) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    int status = pclose(pipe.release());
    return {out, WEXITSTATUS(status)};
}

}  // namespace

TEST(Cli, SpectralTableText) {
    auto r = run_lame("tables --family spectral --ell 4 --format text");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("spectral-I l=4: B^3 - 52*B*g2 + 560*g3"), std::string::npos);
    EXPECT_NE(r.out.find("spectral-II l=4:"), std::string::npos);
}

TEST(Cli, CohnAndReductionRows) {
    EXPECT_NE(run_lame("tables --family cohn --ell 3 --format text").out.find("cohn-II l=3: 4*J + 1"), std::string::npos);
    EXPECT_NE(run_lame("tables --family reduction --ell 5 --format text").out.find("B^4 - 321/4*B^2*g2 + 2835/4*B*g3 + 891/2*g2^2"),
              std::string::npos);
}

TEST(Cli, CoveringJsonRoundTrips) {
    auto r = run_lame("covering --ell 2");
    ASSERT_EQ(r.status, 0);
    auto at = r.out.find("\"num\"");
    ASSERT_NE(at, std::string::npos);
    // The first rational function is x0; its numerator must parse back.
    std::size_t open = r.out.find('{', at), depth = 0, end = open;
    for (; end < r.out.size(); ++end) {
        if (r.out[end] == '{') ++depth;
        if (r.out[end] == '}' && --depth == 0) break;
    }
    lame::Poly num = lame::poly_from_json(r.out.substr(open, end - open + 1));
    EXPECT_EQ(num, lame::parse_poly("B^3/9 + 3*g3"));
}

TEST(Cli, BandEdgesToTwelveDigits) {
    auto r = run_lame("bandedges --ell 3 --m 1/2 --format text");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "2.050510257217e+00\n2.127016653793e+00\n5.050510257217e+00\n6.000000000000e+00\n"
              "6.949489742783e+00\n9.872983346207e+00\n9.949489742783e+00\n");
}

TEST(Cli, DispersionIsDeterministic) {
    auto a = run_lame("dispersion --ell 2 --m 1/2 --emin 1 --emax 8 --samples 60");
    auto b = run_lame("dispersion --ell 2 --m 0.5 --emin 1 --emax 8 --samples 60");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "E,nu_re,nu_im,k_re,k_im,k_folded,band_index,flags");
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 61);
    EXPECT_EQ(a.out.find("-0.000000000000e+00"), std::string::npos);
}

TEST(Cli, BudgetAndErrors) {
    auto r = run_lame("tables --family twisted --ell 11");
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.out.find("\"truncated\": true"), std::string::npos);
    EXPECT_EQ(run_lame("bandedges --ell 2 --m 1").status, 2);
    EXPECT_NE(run_lame("tables --family nonsense --ell 2").status, 0);
}

TEST(Cli, VerifySelectedChecks) {
    auto r = run_lame("verify --check gamma-independence --ell 8 --format text");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("PASS gamma-independence", 0), 0u);
    auto d = run_lame("verify --check dispersion-oracle --ell 2 --m 1/2");
    EXPECT_EQ(d.status, 0);
    EXPECT_NE(d.out.find("\"pass\": true"), std::string::npos);
}
