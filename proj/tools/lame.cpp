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

// lame: command-line front end for lamekit.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "checks/checks.hpp"
#include "lame/covering.hpp"
#include "lame/dispersion.hpp"
#include "lame/moduli.hpp"
#include "lame/serialize.hpp"
#include "lame/spectral.hpp"
#include "lame/twisted.hpp"

using namespace lame;
using nlohmann::ordered_json;

namespace {

constexpr int kSymbolicBudget = 10;

struct Common {
    std::string out;
    std::string format = "json";
    int verbosity = 0;
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
}

ordered_json poly_json(const Poly& p) { return ordered_json::parse(poly_to_json(p)); }
ordered_json ratfunc_json(const RatFunc& f) { return ordered_json::parse(ratfunc_to_json(f)); }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

int thread_cap() {
    const char* env = std::getenv("LAME_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

// Returns false (after a warning) when ell is over the symbolic budget.
bool within_budget(int ell, bool force) {
    if (ell <= kSymbolicBudget || force) return true;
    std::cerr << "warning: l=" << ell << " exceeds the symbolic budget (l <= " << kSymbolicBudget
              << "); pass --force to compute it\n";
    return false;
}

struct Entry {
    std::string kind;
    Poly poly;
};

std::vector<Entry> family_entries(const std::string& family, int ell) {
    const LamePoly B = LamePoly::variable(Var::B);
    auto lame_x = [&](LameType t) {
        Poly out;
        for (const auto& c : lame_polynomial(ell, t, B).coeffs) out = out * Poly::variable(Var::x) + c.poly();
        return out;
    };
    std::vector<Entry> e;
    auto want = [&](std::string_view f) { return family == f; };
    if (want("hermite-halphen")) e.push_back({"hermite-halphen", hermite_halphen(ell)});
    if (want("lame")) {
        e.push_back({"lame-I", lame_x(LameType::I)});
        e.push_back({"lame-II", lame_x(LameType::II)});
    }
    if (want("spectral")) {
        e.push_back({"spectral-I", spectral_poly_I(ell).poly});
        e.push_back({"spectral-II", spectral_poly_II(ell).poly});
    }
    if (want("full-spectral")) e.push_back({"full-spectral", full_spectral(ell).poly});
    if (want("twisted")) {
        if (ell >= 3) e.push_back({"twisted-I", twisted_spectral(ell, TwistedType::I).poly});
        if (ell >= 2) e.push_back({"twisted-II", twisted_spectral(ell, TwistedType::II).poly});
    }
    if (want("theta-twisted") && ell >= 4) e.push_back({"theta-twisted", theta_twisted_spectral(ell).poly});
    if (want("full-twisted")) e.push_back({"full-twisted", full_twisted(ell).poly});
    if (want("cohn")) {
        e.push_back({"cohn-I", cohn_polynomial(ell, CohnKind::I).poly});
        e.push_back({"cohn-II", cohn_polynomial(ell, CohnKind::II).poly});
    }
    if (want("reduction")) e.push_back({"reduction", reduction_polynomial(ell).P_hat});
    return e;
}

const std::vector<std::string> kFamilies = {"hermite-halphen", "lame",         "spectral", "full-spectral", "twisted",
                                            "theta-twisted",   "full-twisted", "cohn",     "reduction"};

std::string render_entries(const std::string& format, const std::string& family, int ell,
                           const std::vector<Entry>& entries, bool truncated) {
    if (format == "text") {
        std::string out;
        for (const auto& e : entries) out += e.kind + " l=" + std::to_string(ell) + ": " + e.poly.to_string() + "\n";
        return out;
    }
    ordered_json j;
    j["family"] = family;
    j["ell"] = ell;
    j["truncated"] = truncated;
    j["entries"] = ordered_json::array();
    for (const auto& e : entries) j["entries"].push_back({{"kind", e.kind}, {"ell", ell}, {"poly", poly_json(e.poly)}});
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lame equation toolkit: spectral polynomials, coverings, dispersion relations"};
    app.require_subcommand(1);
    Common common;
    app.add_option("-o,--out", common.out, "Output file (default stdout)");
    app.add_flag("-v,--verbose", common.verbosity, "More diagnostics on stderr");

    int ell = 1;
    bool force = false;
    std::string m_text = "1/2";
    std::string family;

    auto* tables = app.add_subcommand("tables", "Emit polynomial families for one l");
    tables->add_option("--family", family, "Polynomial family")->required()->check(CLI::IsMember(kFamilies));
    tables->add_option("--ell", ell, "l")->required()->check(CLI::PositiveNumber);
    tables->add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    tables->add_flag("--force", force, "Allow l above the symbolic budget");

    auto* covering = app.add_subcommand("covering", "Covering map x0, y0/nu, kappa/nu and P_hat as JSON");
    covering->add_option("--ell", ell, "l")->required()->check(CLI::PositiveNumber);
    covering->add_flag("--force", force, "Allow l above the symbolic budget");

    std::string kind = "both";
    auto* cohn = app.add_subcommand("cohn", "Cohn polynomials in J");
    cohn->add_option("--ell", ell, "l")->required()->check(CLI::PositiveNumber);
    cohn->add_option("--kind", kind, "I, II or both")->check(CLI::IsMember({"I", "II", "both"}));
    cohn->add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cohn->add_flag("--force", force, "Allow l above the symbolic budget");

    auto* bandedges = app.add_subcommand("bandedges", "Band edges of the Jacobi-form equation");
    bandedges->add_option("--ell", ell, "l")->required()->check(CLI::PositiveNumber);
    bandedges->add_option("--m", m_text, "Modulus, p/q or decimal");
    bandedges->add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    double emin = 0, emax = 10;
    int samples = 200;
    auto* dispersion = app.add_subcommand("dispersion", "Dispersion scan as CSV");
    dispersion->add_option("--ell", ell, "l")->required()->check(CLI::PositiveNumber);
    dispersion->add_option("--m", m_text, "Modulus, p/q or decimal");
    dispersion->add_option("--emin", emin, "Lowest energy");
    dispersion->add_option("--emax", emax, "Highest energy");
    dispersion->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);

    double blo = 0, bhi = 0;
    auto* reduce = app.add_subcommand("reduce", "Reduction polynomial and the numeric integral check");
    reduce->add_option("--ell", ell, "l")->required()->check(CLI::PositiveNumber);
    reduce->add_option("--m", m_text, "Modulus, p/q or decimal");
    reduce->add_option("--blo", blo, "Segment start in B (enables the integral check)");
    reduce->add_option("--bhi", bhi, "Segment end in B");
    reduce->add_flag("--force", force, "Allow l above the symbolic budget");

    std::vector<std::string> check_list;
    std::optional<int> check_ell;
    auto* verify = app.add_subcommand("verify", "Run reference comparisons and property checks");
    verify->add_option("--check", check_list, "Check name (repeatable; default all)")->check(CLI::IsMember(checks::names()));
    verify->add_option("--ell", check_ell, "Restrict range checks to one l");
    verify->add_option("--m", m_text, "Modulus for numeric checks");
    verify->add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        const Rational m = parse_rational(m_text);
        if (tables->parsed()) {
            bool ok = within_budget(ell, force);
            auto entries = ok ? family_entries(family, ell) : std::vector<Entry>{};
            emit(common, render_entries(common.format, family, ell, entries, !ok));
            return ok ? 0 : 3;
        }
        if (covering->parsed()) {
            if (!within_budget(ell, force)) return 3;
            auto c = theorem_L(ell);
            ordered_json j;
            j["ell"] = ell;
            j["x0"] = ratfunc_json(c.x0);
            j["y0_over_nu"] = ratfunc_json(c.y0_over_nu);
            j["kappa_over_nu"] = ratfunc_json(c.kappa_over_nu);
            j["P_hat"] = poly_json(reduction_polynomial(ell).P_hat);
            j["covering_degree"] = covering_degree(c);
            emit(common, j.dump(2) + "\n");
            return 0;
        }
        if (cohn->parsed()) {
            if (!within_budget(ell, force)) return 3;
            std::vector<Entry> e;
            if (kind != "II") e.push_back({"cohn-I", cohn_polynomial(ell, CohnKind::I).poly});
            if (kind != "I") e.push_back({"cohn-II", cohn_polynomial(ell, CohnKind::II).poly});
            emit(common, render_entries(common.format, "cohn", ell, e, false));
            return 0;
        }
        if (bandedges->parsed()) {
            auto edges = band_edges(jacobi_spectral(ell, m));
            if (common.format == "text") {
                std::string out;
                for (double e : edges) out += fmt(e) + "\n";
                emit(common, out);
            } else {
                ordered_json j;
                j["ell"] = ell;
                j["m"] = to_fraction_string(m);
                j["edges"] = ordered_json::array();
                for (double e : edges) j["edges"].push_back(fmt(e));
                emit(common, j.dump(2) + "\n");
            }
            return 0;
        }
        if (dispersion->parsed()) {
            auto s = dispersion_scan(ell, m.get_d(), emin, emax, samples, thread_cap());
            emit(common, dispersion_csv(s));
            return 0;
        }
        if (reduce->parsed()) {
            if (!within_budget(ell, force)) return 3;
            auto r = reduction_polynomial(ell);
            ordered_json j;
            j["ell"] = ell;
            j["P"] = poly_json(r.P);
            j["P_hat"] = poly_json(r.P_hat);
            if (bhi > blo) {
                auto c = reduction_integral_check(ell, m, blo, bhi);
                j["segment"] = {fmt(blo), fmt(bhi)};
                j["integral_P_over_nu"] = fmt(c.lhs);
                j["integral_dx0_over_y0"] = fmt(c.rhs);
                j["x0_endpoints"] = {fmt(c.x0_lo), fmt(c.x0_hi)};
            }
            emit(common, j.dump(2) + "\n");
            return 0;
        }
        if (verify->parsed()) {
            if (check_list.empty()) check_list = checks::names();
            checks::Options opt;
            opt.ell = check_ell;
            opt.m = m;
            bool all = true;
            ordered_json report = ordered_json::array();
            std::string text;
            for (const auto& name : check_list) {
                auto r = checks::run(name, opt);
                all = all && r.pass;
                report.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                text += (r.pass ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : ": " + r.detail) + "\n";
                if (common.verbosity) std::cerr << r.name << (r.pass ? " ok\n" : " FAILED\n");
            }
            emit(common, common.format == "text" ? text : ordered_json{{"pass", all}, {"checks", report}}.dump(2) + "\n");
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
