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

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sextactic/branch.hpp"

// Two independent references for the conic ladder of a branch.
//
// rank_profile_orders: v is attained iff the rank of the coefficient matrix of
// the six pullbacks grows when column v is added (exact, over Q).
//
// grid_orders: valuations of every combination sum c_i b_i with integer c_i
// in [-k, k]. Sound (each value found is attained) but not complete when a
// needed combination has coefficients outside the grid.

namespace sextactic::testing {

struct OracleResult {
    std::set<int> orders;
    bool complete = false;  // six orders resolved within the common truncation
};

inline OracleResult rank_profile_orders(const BranchParam& b) {
    auto pulled = conic_pullbacks(b);
    int trunc = pulled[0].trunc();
    for (const auto& s : pulled) trunc = std::min(trunc, s.trunc());
    // incremental row reduction of column vectors
    std::vector<std::vector<Rat>> basis;  // echelon rows over the 6 slots
    std::vector<int> pivots;
    OracleResult out;
    for (int v = 0; v < trunc && basis.size() < 6; ++v) {
        std::vector<Rat> col(6);
        for (std::size_t i = 0; i < 6; ++i) col[i] = pulled[i].coefficient(v);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            if (col[pivots[r]] == 0) continue;
            Rat f = col[pivots[r]] / basis[r][pivots[r]];
            for (std::size_t k = 0; k < 6; ++k) col[k] -= f * basis[r][k];
        }
        auto it = std::find_if(col.begin(), col.end(), [](const Rat& x) { return x != 0; });
        if (it == col.end()) continue;
        pivots.push_back(static_cast<int>(it - col.begin()));
        basis.push_back(col);
        out.orders.insert(v);
    }
    out.complete = basis.size() == 6;
    return out;
}

inline std::set<int> grid_orders(const BranchParam& b, int k) {
    auto pulled = conic_pullbacks(b);
    int trunc = pulled[0].trunc();
    for (const auto& s : pulled) trunc = std::min(trunc, s.trunc());
    // integer coefficient table scaled by a common denominator
    BigInt den = 1;
    for (const auto& s : pulled)
        for (const auto& [e, c] : s.coefficients()) den = lcm(den, BigInt(c.get_den()));
    std::vector<std::vector<long long>> coef(6, std::vector<long long>(trunc, 0));
    for (std::size_t i = 0; i < 6; ++i)
        for (int e = 0; e < trunc; ++e) {
            Rat c = pulled[i].coefficient(e) * Rat(den);
            coef[i][e] = c.get_num().get_si();
        }
    std::set<int> found;
    const int side = 2 * k + 1;
    long total = 1;
    for (int i = 0; i < 6; ++i) total *= side;
    std::vector<long long> acc(trunc);
    for (long code = 1; code < total; ++code) {
        long rest = code;
        int c[6];
        for (int i = 0; i < 6; ++i) {
            c[i] = static_cast<int>(rest % side) - k;
            rest /= side;
        }
        int val = -1;
        for (int e = 0; e < trunc && val < 0; ++e) {
            long long sum = 0;
            for (int i = 0; i < 6; ++i) sum += c[i] * coef[i][e];
            if (sum != 0) val = e;
        }
        if (val >= 0) found.insert(val);
    }
    return found;
}

inline TruncSeries series_from(const std::vector<std::pair<int, Rat>>& terms, int trunc) {
    TruncSeries s(trunc);
    for (const auto& [e, c] : terms) s.set(e, c);
    return s;
}

/// (t^m : a t^l + higher : 1) with small integer coefficients.
inline BranchParam random_normal_form(std::mt19937_64& rng, int& m, int& l, int trunc) {
    std::uniform_int_distribution<int> md(1, 4), coef(-3, 3), nz(1, 3), extra(0, 3);
    m = md(rng);
    l = std::uniform_int_distribution<int>(m + 1, trunc - 1)(rng);
    std::vector<std::pair<int, Rat>> y{{l, Rat(nz(rng) * (coef(rng) < 0 ? -1 : 1))}};
    int n = extra(rng);
    for (int i = 0; i < n && l + 1 < trunc; ++i) {
        int e = std::uniform_int_distribution<int>(l + 1, trunc - 1)(rng);
        if (std::none_of(y.begin(), y.end(), [&](const auto& p) { return p.first == e; })) y.push_back({e, Rat(coef(rng))});
    }
    return BranchParam({series_from({{m, Rat(1)}}, trunc), series_from(y, trunc), series_from({{0, Rat(1)}}, trunc)});
}

/// Arbitrary primitive branch: random valuations and coefficients, one unit
/// coordinate chosen at random (not necessarily z).
inline BranchParam random_branch(std::mt19937_64& rng, int trunc) {
    std::uniform_int_distribution<int> coef(-2, 2), val(0, 3), which(0, 2), nterms(1, 4);
    int unit = which(rng);
    std::array<TruncSeries, 3> c{TruncSeries(trunc), TruncSeries(trunc), TruncSeries(trunc)};
    for (int i = 0; i < 3; ++i) {
        int v = i == unit ? 0 : val(rng) + 1;
        int lead = 0;
        while (lead == 0) lead = coef(rng);
        if (v < trunc) c[i].set(v, Rat(lead));
        int n = nterms(rng);
        for (int k = 0; k < n; ++k) {
            int e = std::uniform_int_distribution<int>(v + 1, trunc + 2)(rng);
            if (e < trunc) c[i].set(e, Rat(coef(rng)));
        }
    }
    return BranchParam(std::move(c));
}

}  // namespace sextactic::testing
