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

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>

#include "lame/poly.hpp"

namespace lame {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly parse() {
        Poly p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expression() {
        Poly acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = power();
        for (;;) {
            if (accept('*')) {
                acc = acc * power();
            } else if (accept('/')) {
                Poly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
                acc /= d.constant_value();
            } else {
                skip_space();
                // Implicit product: "3B", "2(B+1)".
                if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
                    acc = acc * power();
                else
                    return acc;
            }
        }
    }

    Poly power() {
        Poly base = atom();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            return pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Poly atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expression();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            return Poly(parse_rational(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // Longest known name wins, so "g2B" reads as g2*B.
            std::optional<Var> best;
            std::size_t best_len = 0;
            for (std::size_t i = 0; i < kNumVars; ++i) {
                auto name = var_name(static_cast<Var>(i));
                if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
                    best = static_cast<Var>(i);
                    best_len = name.size();
                }
            }
            if (!best) fail("unknown variable");
            pos_ += best_len;
            return Poly::variable(*best);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace lame
