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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Bundled example curves. File texts mirror fixtures/ byte for byte.

namespace sextactic {

struct FixtureFile {
    std::string_view name;
    std::string_view text;
};

inline const std::vector<FixtureFile>& fixture_files() {
    static const std::vector<FixtureFile> files{
        {"quartic_ex25.profile", R"json({
  "d": 4,
  "g": 0,
  "points": [
    {"label": "(0:0:1)", "role": "cusp", "m": 3, "l": 4, "multiplicity_sequence": [3]},
    {"label": "(8:16:1)", "role": "inflection", "m": 1, "l": 3},
    {"label": "(0:1:0)", "role": "inflection", "m": 1, "l": 3},
    {"label": "(64/3:256/3:1)", "role": "smooth_sextactic_candidate", "m": 1, "l": 2, "c": 6},
    {"label": "p3", "role": "smooth_sextactic_candidate", "m": 1, "l": 2, "c": 6},
    {"label": "p4", "role": "smooth_sextactic_candidate", "m": 1, "l": 2, "c": 6}
  ]
}
)json"},
        {"quintic_ex38.profile", R"json({
  "d": 5,
  "g": 0,
  "points": [
    {"label": "(0:0:1)", "role": "cusp", "m": 3, "l": 5, "multiplicity_sequence": [3, 2]},
    {"label": "(1:0:0)", "role": "cusp", "m": 2, "l": 4, "c": 5, "multiplicity_sequence": [2, 2]},
    {"label": "(759375/28672:3375/448:1)", "role": "inflection", "m": 1, "l": 3},
    {"label": "p4", "role": "smooth_sextactic_candidate", "m": 1, "l": 2, "c": 6},
    {"label": "p5", "role": "smooth_sextactic_candidate", "m": 1, "l": 2, "c": 6}
  ]
}
)json"},
        {"binomial_quintic.profile", R"json({
  "d": 5,
  "g": 0,
  "points": [
    {"label": "(0:0:1)", "role": "cusp", "m": 3, "l": 5, "multiplicity_sequence": [3, 2]},
    {"label": "(1:0:0)", "role": "cusp", "m": 2, "l": 5, "multiplicity_sequence": [2, 2]}
  ]
}
)json"},
        {"smooth_cubic.profile", R"json({
  "d": 3,
  "g": 1,
  "points": [
    {
      "label": "q1",
      "role": "inflection",
      "m": 1,
      "l": 3
    },
    {
      "label": "q2",
      "role": "inflection",
      "m": 1,
      "l": 3
    },
    {
      "label": "q3",
      "role": "inflection",
      "m": 1,
      "l": 3
    },
    {
      "label": "q4",
      "role": "inflection",
      "m": 1,
      "l": 3
    },
    {
      "label": "q5",
      "role": "inflection",
      "m": 1,
      "l": 3
    },
    {
      "label": "q6",
      "role": "inflection",
      "m": 1,
      "l": 3
    },
    {
      "label": "q7",
      "role": "inflection",
      "m": 1,
      "l": 3
    },
    {
      "label": "q8",
      "role": "inflection",
      "m": 1,
      "l": 3
    },
    {
      "label": "q9",
      "role": "inflection",
      "m": 1,
      "l": 3
    }
  ]
}
)json"},
        {"cusp_3_5.branch", R"json({"truncation": 16, "x": [[1, 1, 3]], "y": [[1, 1, 5]], "z": [[1, 1, 0]]}
)json"},
        {"cusp_2_2.branch", R"json({"truncation": 16, "x": [[1, 1, 2]], "y": [[1, 1, 4], [1, 1, 5]], "z": [[1, 1, 0]]}
)json"},
        {"smooth_sextactic.branch", R"json({"truncation": 12, "x": [[1, 1, 1]], "y": [[1, 1, 2], [1, 1, 6]], "z": [[1, 1, 0]]}
)json"},
    };
    return files;
}

inline std::optional<std::string_view> fixture_file(std::string_view name) {
    for (const auto& f : fixture_files())
        if (f.name == name) return f.text;
    return std::nullopt;
}

struct CurveFixture {
    std::string_view name;
    std::string_view summary;
    std::string_view implicit;  // empty when absent
    std::string_view param;     // empty when absent
    std::string_view profile;   // fixture file name, empty when absent
    std::vector<std::string_view> params_of_interest;  // "(s0:t0)" texts
    std::string_view point;     // rational point for the osculating conic
};

inline const std::vector<CurveFixture>& bundled_examples() {
    static const std::vector<CurveFixture> list{
        {"nodal_cubic", "nodal cubic, osculating conic at (-1:0:1)", "y^2*z - x^3 - x^2*z",
         "(s*t^2 - s^3 : t^3 - s^2*t : s^3)", "", {"(1:0)"}, "(-1:0:1)"},
        {"quartic", "cuspidal quartic with one [3] cusp, two inflections, three sextactic points",
         "x^4 - x^3*y + y^3*z", "(s*t^3 : t^4 : s^3*t - s^4)", "quartic_ex25.profile",
         {"(1:0)", "(0:1)", "(1:2)", "(1:4)"}, ""},
        {"quintic", "cuspidal quintic with cusps [3,2], [2_2], one inflection, two sextactic points",
         "y^5 + 2*x^2*y^2*z - x^3*z^2 - x*y^4", "(s^5 : s^3*t^2 : s*t^4 + t^5)", "quintic_ex38.profile",
         {"(0:1)", "(1:0)", "(-15:8)"}, ""},
        {"binomial_quintic", "binomial quintic x^3 z^2 = y^5 with cusps [3,2], [2_2]", "x^3*z^2 - y^5",
         "(s^5 : s^3*t^2 : t^5)", "binomial_quintic.profile", {"(0:1)", "(1:0)"}, ""},
        {"smooth_cubic", "Fermat cubic, nine inflections", "x^3 + y^3 + z^3", "", "smooth_cubic.profile", {}, ""},
    };
    return list;
}

inline const CurveFixture* find_example(std::string_view name) {
    for (const auto& f : bundled_examples())
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace sextactic
