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

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "sextactic/errors.hpp"

namespace sextactic {

/// Exact rational. mpq_class keeps num/den reduced with den > 0 after every
/// arithmetic operation; values built from strings go through `make_rat`.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(errors::invalid_argument, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a" or "a/b" with optional leading sign.
inline Rat parse_rat(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return Error(errors::invalid_argument, "not a rational number: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view d, bool allow_sign) {
        if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) d.remove_prefix(1);
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    return make_rat(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace sextactic
