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
#include <string>

#include "sextactic/errors.hpp"
#include "sextactic/rat.hpp"

namespace sextactic {

/// Point of P^2 with rational homogeneous coordinates.
struct PointP2 {
    std::array<Rat, 3> coords;

    bool is_valid() const { return coords[0] != 0 || coords[1] != 0 || coords[2] != 0; }

    /// Scaled so the last nonzero coordinate is 1, e.g. (64/3 : 256/3 : 1).
    PointP2 normalized() const {
        if (!is_valid()) throw Error(errors::invalid_argument, "(0:0:0) is not a point of P^2");
        PointP2 p = *this;
        for (int i = 2; i >= 0; --i) {
            if (p.coords[i] != 0) {
                Rat k = p.coords[i];
                for (auto& c : p.coords) c /= k;
                break;
            }
        }
        return p;
    }

    std::string to_string() const {
        return "(" + coords[0].get_str() + ":" + coords[1].get_str() + ":" + coords[2].get_str() + ")";
    }

    friend bool operator==(const PointP2& a, const PointP2& b) {
        return a.normalized().coords == b.normalized().coords;
    }
};

/// Point of P^1, (s0 : t0).
struct PointP1 {
    Rat s;
    Rat t;

    PointP1 normalized() const {
        if (s == 0 && t == 0) throw Error(errors::invalid_argument, "(0:0) is not a point of P^1");
        if (t == 0) return {Rat(1), Rat(0)};
        Rat r = s / t;
        return {Rat(r.get_num()), Rat(r.get_den())};
    }

    std::string to_string() const { return "(" + s.get_str() + ":" + t.get_str() + ")"; }

    friend bool operator==(const PointP1& a, const PointP1& b) {
        auto x = a.normalized(), y = b.normalized();
        return x.s == y.s && x.t == y.t;
    }
};

}  // namespace sextactic
