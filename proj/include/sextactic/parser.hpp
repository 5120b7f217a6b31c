/*
   Copyright 2026 The sextactic authors

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
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sextactic/branch.hpp"
#include "sextactic/census.hpp"
#include "sextactic/errors.hpp"
#include "sextactic/point.hpp"
#include "sextactic/poly.hpp"
#include "sextactic/rational.hpp"
#include "sextactic/series.hpp"

// Text input. Polynomials follow
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | VARIABLE | '(' expr ')'
//
// with explicit '*' everywhere. Branch and profile files are JSON.

namespace sextactic {

struct ExprAst {
    enum class Kind { integer, variable, neg, add, sub, mul, pow };
    Kind kind = Kind::integer;
    BigInt value;           // integer
    char var = 0;           // variable
    unsigned exponent = 0;  // pow
    std::vector<ExprAst> children;
    SourceSpan span;
};

namespace detail {

class ExprParser {
   public:
    ExprParser(std::string_view text, const VarSet& vars, std::size_t begin = 0)
        : text_(text), vars_(vars), pos_(begin) {}

    ExprAst parse_expr() {
        skip_ws();
        ExprAst lhs = parse_term();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            ExprAst rhs = parse_term();
            lhs = binary(c == '+' ? ExprAst::Kind::add : ExprAst::Kind::sub, std::move(lhs), std::move(rhs));
        }
    }

    std::size_t pos() const noexcept { return pos_; }
    void seek(std::size_t p) noexcept { pos_ = p; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const noexcept { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& kind, const std::string& msg, std::size_t b, std::size_t e) const {
        e = std::max(e, b + 1);
        e = std::min(e, text_.size());
        b = std::min(b, e);
        throw ParseError(kind, msg, SourceSpan{b, e});
    }

    [[noreturn]] void unexpected(const std::string& wanted) const {
        if (pos_ >= text_.size()) fail(errors::syntax, "expected " + wanted + " but reached the end of input", pos_, pos_);
        std::string msg = "expected " + wanted + ", found '" + std::string(1, text_[pos_]) + "'";
        fail(errors::syntax, msg, pos_, pos_ + 1);
    }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (peek() != c) unexpected(what);
        ++pos_;
    }

   private:
    static ExprAst binary(ExprAst::Kind k, ExprAst a, ExprAst b) {
        ExprAst n;
        n.kind = k;
        n.span = {a.span.begin, b.span.end};
        n.children.push_back(std::move(a));
        n.children.push_back(std::move(b));
        return n;
    }

    ExprAst parse_term() {
        ExprAst lhs = parse_unary();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                lhs = binary(ExprAst::Kind::mul, std::move(lhs), parse_unary());
                continue;
            }
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
                fail(errors::syntax, "implicit multiplication is not supported; write '*'", pos_, pos_ + 1);
            return lhs;
        }
    }

    ExprAst parse_unary() {
        skip_ws();
        if (peek() == '-') {
            std::size_t b = pos_++;
            ExprAst inner = parse_unary();
            ExprAst n;
            n.kind = ExprAst::Kind::neg;
            n.span = {b, inner.span.end};
            n.children.push_back(std::move(inner));
            return n;
        }
        return parse_power();
    }

    ExprAst parse_power() {
        ExprAst base = parse_primary();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        std::size_t b = pos_;
        if (peek() == '-') {
            std::size_t e = b + 1;
            while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
            fail(errors::bad_exponent, "exponents must be non-negative integer literals", b, e);
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail(errors::bad_exponent, "exponent must be an integer literal", b, b + 1);
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string digits(text_.substr(b, pos_ - b));
        if (digits.size() > 5 || std::stoul(digits) > Monomial::max_exponent)
            fail(errors::overflow, "exponent " + digits + " exceeds " + std::to_string(Monomial::max_exponent), b, pos_);
        const std::size_t end = pos_;
        skip_ws();
        if (peek() == '^') fail(errors::syntax, "chained '^' is ambiguous; use parentheses", pos_, pos_ + 1);
        ExprAst n;
        n.kind = ExprAst::Kind::pow;
        n.exponent = static_cast<unsigned>(std::stoul(digits));
        n.span = {base.span.begin, end};
        n.children.push_back(std::move(base));
        return n;
    }

    ExprAst parse_primary() {
        skip_ws();
        std::size_t b = pos_;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (peek() == '/' || peek() == '.')
                fail(errors::syntax, "only integer coefficients are accepted here", pos_, pos_ + 1);
            ExprAst n;
            n.kind = ExprAst::Kind::integer;
            n.value = BigInt(std::string(text_.substr(b, pos_ - b)));
            n.span = {b, pos_};
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t e = b;
            while (e < text_.size() && std::isalnum(static_cast<unsigned char>(text_[e]))) ++e;
            if (e - b > 1) {
                bool all_vars = true;
                for (std::size_t i = b; i < e; ++i)
                    if (!vars_.index_of(text_[i])) all_vars = false;
                if (all_vars)
                    fail(errors::syntax, "implicit multiplication is not supported; write '*' between variables", b, e);
                fail(errors::unknown_variable, "unknown identifier '" + std::string(text_.substr(b, e - b)) + "'", b, e);
            }
            if (!vars_.index_of(c))
                fail(errors::unknown_variable,
                     "unknown variable '" + std::string(1, c) + "' (allowed: " + vars_.names() + ")", b, b + 1);
            ++pos_;
            ExprAst n;
            n.kind = ExprAst::Kind::variable;
            n.var = c;
            n.span = {b, pos_};
            return n;
        }
        if (c == '(') {
            ++pos_;
            ExprAst inner = parse_expr();
            expect(')', "')'");
            inner.span = {b, pos_};
            return inner;
        }
        unexpected("a number, variable or '('");
    }

    std::string_view text_;
    const VarSet& vars_;
    std::size_t pos_;
};

}  // namespace detail

inline ExprAst parse_expr_ast(std::string_view text, const VarSet& vars) {
    detail::ExprParser p(text, vars);
    ExprAst ast = p.parse_expr();
    p.skip_ws();
    if (p.pos() != text.size()) p.unexpected("an operator or the end of input");
    return ast;
}

inline MPoly evaluate(const ExprAst& ast, const VarSet& vars) {
    switch (ast.kind) {
        case ExprAst::Kind::integer:
            return MPoly::constant(vars, Rat(ast.value));
        case ExprAst::Kind::variable:
            return MPoly::variable(vars, ast.var);
        case ExprAst::Kind::neg:
            return -evaluate(ast.children[0], vars);
        case ExprAst::Kind::add:
            return evaluate(ast.children[0], vars) + evaluate(ast.children[1], vars);
        case ExprAst::Kind::sub:
            return evaluate(ast.children[0], vars) - evaluate(ast.children[1], vars);
        case ExprAst::Kind::mul:
            return evaluate(ast.children[0], vars) * evaluate(ast.children[1], vars);
        case ExprAst::Kind::pow: {
            MPoly base = evaluate(ast.children[0], vars);
            auto deg = base.degree();
            if (deg && static_cast<unsigned long>(*deg) * ast.exponent > Monomial::max_exponent)
                throw ParseError(errors::overflow, "power exceeds the maximum degree", ast.span);
            return pow(base, ast.exponent);
        }
    }
    throw Error(errors::internal, "unknown AST node");
}

inline MPoly parse_poly(std::string_view text, const VarSet& vars = xyz_vars()) {
    return evaluate(parse_expr_ast(text, vars), vars);
}

namespace detail {

/// Signed rational "a" or "a/b" at the parser position.
inline Rat parse_rat_token(ExprParser& p, std::string_view text) {
    p.skip_ws();
    std::size_t b = p.pos(), e = b;
    if (e < text.size() && (text[e] == '-' || text[e] == '+')) ++e;
    while (e < text.size() && (std::isdigit(static_cast<unsigned char>(text[e])) || text[e] == '/')) ++e;
    try {
        Rat r = parse_rat(text.substr(b, e - b));
        p.seek(e);
        return r;
    } catch (const Error&) {
        p.fail(errors::syntax, "expected a rational number", b, e);
    }
}

template <std::size_t N>
std::array<Rat, N> parse_tuple(std::string_view text, std::size_t& pos) {
    detail::ExprParser p(text, xyz_vars(), pos);
    p.expect('(', "'('");
    std::array<Rat, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        if (i) p.expect(':', "':'");
        out[i] = parse_rat_token(p, text);
    }
    p.expect(')', "')'");
    pos = p.pos();
    return out;
}

}  // namespace detail

/// "(a:b:c)" with rational entries.
inline PointP2 parse_point(std::string_view text) {
    std::size_t pos = 0;
    auto c = detail::parse_tuple<3>(text, pos);
    detail::ExprParser p(text, xyz_vars(), pos);
    p.skip_ws();
    if (p.pos() != text.size()) p.unexpected("the end of input");
    PointP2 pt{c};
    if (!pt.is_valid()) throw ParseError(errors::invalid_argument, "(0:0:0) is not a point", SourceSpan{0, text.size()});
    return pt;
}

/// "(s0:t0)[,(s1:t1)...]".
inline std::vector<PointP1> parse_p1_list(std::string_view text) {
    std::vector<PointP1> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t start = pos;
        auto c = detail::parse_tuple<2>(text, pos);
        if (c[0] == 0 && c[1] == 0)
            throw ParseError(errors::invalid_argument, "(0:0) is not a point of P^1", SourceSpan{start, pos});
        out.push_back(PointP1{c[0], c[1]});
        detail::ExprParser p(text, xyz_vars(), pos);
        p.skip_ws();
        if (p.pos() == text.size()) break;
        p.expect(',', "',' or the end of input");
        pos = p.pos();
    }
    return out;
}

inline PointP1 parse_p1(std::string_view text) {
    auto v = parse_p1_list(text);
    if (v.size() != 1) throw ParseError(errors::syntax, "expected a single point (s0:t0)", SourceSpan{0, text.size()});
    return v.front();
}

/// "(e0 : e1 : e2)" with binary forms in s, t.
inline RationalParam parse_param(std::string_view text) {
    detail::ExprParser p(text, st_vars());
    p.expect('(', "'('");
    std::array<BinaryForm, 3> phi;
    std::array<SourceSpan, 3> spans;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) p.expect(':', "':'");
        ExprAst ast = p.parse_expr();
        spans[i] = ast.span;
        phi[i] = evaluate(ast, st_vars());
    }
    p.expect(')', "')'");
    p.skip_ws();
    if (p.pos() != text.size()) p.unexpected("the end of input");
    try {
        return make_param(std::move(phi));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        SourceSpan span{0, text.size()};
        // point at the offending component when the message names one
        for (std::size_t i = 0; i < 3; ++i)
            if (std::string(e.what()).find("component " + std::to_string(i)) != std::string::npos) span = spans[i];
        throw ParseError(e.kind(), e.what(), span);
    }
}

namespace detail {

inline nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw ParseError(errors::malformed_file, std::string("invalid JSON: ") + e.what(), SourceSpan{at, at + 1});
    }
}

[[noreturn]] inline void malformed(const std::string& msg) { throw Error(errors::malformed_file, msg); }

inline BigInt json_integer(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return BigInt(v.dump());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        try {
            Rat r = parse_rat(s);
            if (is_integer(r)) return r.get_num();
        } catch (const Error&) {
        }
    }
    malformed(where + ": expected an integer");
}

inline long json_long(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number_integer()) malformed(where + ": expected an integer");
    return v.get<long>();
}

}  // namespace detail

/// {"truncation": N, "x": [[num, den, exp], ...], "y": [...], "z": [...]}.
/// Numerators and denominators may be JSON integers or decimal strings.
inline BranchParam parse_branch(std::string_view text) {
    nlohmann::json j = detail::parse_json(text);
    if (!j.is_object()) detail::malformed("branch file must be a JSON object");
    for (const auto& [k, v] : j.items())
        if (k != "truncation" && k != "x" && k != "y" && k != "z") detail::malformed("unknown key '" + k + "'");
    if (!j.contains("truncation")) detail::malformed("missing key 'truncation'");
    long n = detail::json_long(j["truncation"], "truncation");
    if (n < 1 || n > 4096) detail::malformed("truncation must be in [1, 4096]");
    std::array<TruncSeries, 3> coords{TruncSeries(int(n)), TruncSeries(int(n)), TruncSeries(int(n))};
    const char* names[3] = {"x", "y", "z"};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j.contains(names[i])) detail::malformed(std::string("missing key '") + names[i] + "'");
        const auto& list = j[names[i]];
        if (!list.is_array()) detail::malformed(std::string(names[i]) + " must be a list of [num, den, exp]");
        std::map<long, Rat> seen;
        for (const auto& entry : list) {
            std::string where = std::string(names[i]) + " entry " + entry.dump();
            if (!entry.is_array() || entry.size() != 3) detail::malformed(where + ": expected [num, den, exp]");
            BigInt num = detail::json_integer(entry[0], where);
            BigInt den = detail::json_integer(entry[1], where);
            long e = detail::json_long(entry[2], where);
            if (den == 0) detail::malformed(where + ": zero denominator");
            if (e < 0) detail::malformed(where + ": negative exponent");
            if (e >= n)
                detail::malformed(where + ": exponent " + std::to_string(e) + " is not below the truncation " +
                                  std::to_string(n));
            if (seen.count(e)) detail::malformed(where + ": exponent listed twice");
            seen[e] = make_rat(num, den);
        }
        for (const auto& [e, c] : seen) coords[i].set(int(e), c);
    }
    return BranchParam(std::move(coords));
}

/// {"d": 5, "g": 0, "points": [{"role": "cusp", "m": 3, "l": 5,
///  "multiplicity_sequence": [3, 2]}, ...]}; "g", "c", "delta",
/// "multiplicity_sequence" and "label" are optional.
inline CurveProfile parse_profile(std::string_view text) {
    nlohmann::json j = detail::parse_json(text);
    if (!j.is_object()) detail::malformed("profile file must be a JSON object");
    for (const auto& [k, v] : j.items())
        if (k != "d" && k != "g" && k != "points" && k != "name") detail::malformed("unknown key '" + k + "'");
    if (!j.contains("d")) throw Error(errors::invalid_profile, "profile is missing the degree 'd'");
    long d = detail::json_long(j["d"], "d");
    std::optional<long> g;
    if (j.contains("g")) g = detail::json_long(j["g"], "g");
    std::vector<PointRecord> pts;
    if (j.contains("points")) {
        if (!j["points"].is_array()) detail::malformed("'points' must be a list");
        std::size_t index = 0;
        for (const auto& q : j["points"]) {
            std::string where = "points[" + std::to_string(index++) + "]";
            if (!q.is_object()) detail::malformed(where + ": expected an object");
            PointRecord r;
            r.label = where;
            for (const auto& [k, v] : q.items()) {
                if (k == "role") {
                    if (!v.is_string()) detail::malformed(where + ": role must be a string");
                    std::string role = v.get<std::string>();
                    if (role == "cusp")
                        r.role = PointRole::cusp;
                    else if (role == "inflection")
                        r.role = PointRole::inflection;
                    else if (role == "smooth_sextactic_candidate")
                        r.role = PointRole::smooth_sextactic_candidate;
                    else
                        detail::malformed(where + ": unknown role '" + role + "'");
                } else if (k == "m") {
                    r.m = detail::json_long(v, where + ".m");
                } else if (k == "l") {
                    r.l = detail::json_long(v, where + ".l");
                } else if (k == "c") {
                    r.c = detail::json_long(v, where + ".c");
                } else if (k == "delta") {
                    r.delta = detail::json_long(v, where + ".delta");
                } else if (k == "label") {
                    if (!v.is_string()) detail::malformed(where + ": label must be a string");
                    r.label = v.get<std::string>();
                } else if (k == "multiplicity_sequence") {
                    if (!v.is_array()) detail::malformed(where + ": multiplicity_sequence must be a list");
                    std::vector<long> ms;
                    for (const auto& e : v) ms.push_back(detail::json_long(e, where + ".multiplicity_sequence"));
                    r.ms = std::move(ms);
                } else {
                    detail::malformed(where + ": unknown key '" + k + "'");
                }
            }
            if (!q.contains("role")) detail::malformed(where + ": missing role");
            if (!q.contains("m") || !q.contains("l")) detail::malformed(where + ": m and l are required");
            pts.push_back(std::move(r));
        }
    }
    return make_profile(d, g, std::move(pts));
}

}  // namespace sextactic
