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

#include "lame/serialize.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <vector>

namespace lame {

namespace {

using nlohmann::ordered_json;

ordered_json poly_json(const Poly& p) {
    std::vector<Var> vars{Var::B, Var::g2, Var::g3, Var::e};
    for (Var v : p.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin() + 4, vars.end());
    ordered_json j;
    j["vars"] = ordered_json::array();
    for (Var v : vars) j["vars"].push_back(std::string(var_name(v)));
    j["terms"] = ordered_json::array();
    for (const auto& t : p.terms()) {
        ordered_json pows = ordered_json::array();
        for (Var v : vars) pows.push_back(t.mono[v]);
        j["terms"].push_back({{"coeff", to_fraction_string(t.coeff)}, {"pows", pows}});
    }
    return j;
}

Poly poly_of(const ordered_json& j) {
    std::vector<Var> vars;
    for (const auto& name : j.at("vars")) {
        auto v = parse_var(name.get<std::string>());
        if (!v) throw std::invalid_argument("poly_from_json: unknown variable " + name.get<std::string>());
        vars.push_back(*v);
    }
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        const auto& pows = t.at("pows");
        if (pows.size() != vars.size()) throw std::invalid_argument("poly_from_json: pows length mismatch");
        Monomial mono;
        for (std::size_t i = 0; i < vars.size(); ++i) mono.set(vars[i], pows[i].get<unsigned>());
        terms.push_back({mono, parse_rational(t.at("coeff").get<std::string>())});
    }
    return Poly::from_terms(std::move(terms));
}

}  // namespace

std::string poly_to_json(const Poly& p, int indent) { return poly_json(p).dump(indent); }

Poly poly_from_json(std::string_view text) {
    try {
        return poly_of(ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("poly_from_json: ") + e.what());
    }
}

std::string ratfunc_to_json(const RatFunc& f, int indent) {
    ordered_json j;
    j["num"] = poly_json(f.num());
    j["den"] = poly_json(f.den());
    return j.dump(indent);
}

}  // namespace lame
