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

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sextactic/errors.hpp"
#include "sextactic/poly.hpp"
#include "sextactic/series.hpp"

// Local analysis of one branch (x(t) : y(t) : z(t)) of a plane curve. The
// attainable intersection orders of lines and conics are found by
// eliminating leading terms among the pulled-back basis monomials, which
// needs no Puiseux normal form.

namespace sextactic {

class BranchParam {
   public:
    explicit BranchParam(std::array<TruncSeries, 3> coords) : coords_(std::move(coords)) {
        bool unit = false;
        for (const auto& c : coords_)
            if (c.valuation() == 0) unit = true;
        if (!unit) throw Error(errors::non_primitive, "branch has no coordinate with valuation 0");
    }

    const std::array<TruncSeries, 3>& coords() const noexcept { return coords_; }
    const TruncSeries& operator[](std::size_t i) const { return coords_.at(i); }

    int trunc() const noexcept {
        return std::min({coords_[0].trunc(), coords_[1].trunc(), coords_[2].trunc()});
    }

   private:
    std::array<TruncSeries, 3> coords_;
};

/// Conic basis in the order x^2, y^2, z^2, yz, xz, xy.
inline constexpr std::array<std::array<unsigned, 3>, 6> conic_basis_exponents{
    {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};

/// Attainable orders (ascending) together with a witnessing combination of
/// the basis for each.
template <std::size_t N>
struct Ladder {
    std::array<int, N> h{};
    std::array<std::array<Rat, N>, N> combos{};
};

namespace detail {

template <std::size_t N>
struct EliminationRow {
    TruncSeries series;
    std::array<Rat, N> combo{};
};

/// Reduces rows until all valuations are distinct. Ties are broken by
/// keeping the row with the smallest basis slot and reducing the others by
/// it, so a row is never changed by rows of higher valuation.
template <std::size_t N>
Ladder<N> separate_valuations(std::array<EliminationRow<N>, N> rows, int branch_trunc) {
    for (;;) {
        std::map<int, std::vector<std::size_t>> by_val;
        for (std::size_t i = 0; i < N; ++i) {
            auto v = rows[i].series.valuation();
            if (!v)
                throw TruncationInsufficient(branch_trunc + 1,
                                             "a basis combination vanishes to the known order t^" +
                                                 std::to_string(rows[i].series.trunc()) +
                                                 "; increase the branch truncation beyond " +
                                                 std::to_string(branch_trunc));
            by_val[*v].push_back(i);
        }
        auto tie = std::find_if(by_val.begin(), by_val.end(), [](const auto& kv) { return kv.second.size() > 1; });
        if (tie == by_val.end()) break;
        const int v = tie->first;
        const std::size_t pivot = tie->second.front();
        const Rat lead_p = rows[pivot].series.coefficient(v);
        for (std::size_t k = 1; k < tie->second.size(); ++k) {
            auto& row = rows[tie->second[k]];
            Rat factor = row.series.coefficient(v) / lead_p;
            row.series = row.series - factor * rows[pivot].series;
            for (std::size_t j = 0; j < N; ++j) row.combo[j] -= factor * rows[pivot].combo[j];
        }
    }
    std::array<std::size_t, N> order{};
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return *rows[a].series.valuation() < *rows[b].series.valuation();
    });
    Ladder<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out.h[i] = *rows[order[i]].series.valuation();
        out.combos[i] = rows[order[i]].combo;
    }
    return out;
}

}  // namespace detail

inline MPoly conic_from_combo(const std::array<Rat, 6>& combo) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < 6; ++j) {
        const auto& e = conic_basis_exponents[j];
        terms.push_back({Monomial::from_exponents({e[0], e[1], e[2]}), combo[j]});
    }
    return primitive_part(MPoly::from_terms(xyz_vars(), std::move(terms)));
}

inline MPoly line_from_combo(const std::array<Rat, 3>& combo) {
    std::vector<Term> terms;
    for (unsigned j = 0; j < 3; ++j) {
        std::array<unsigned, 3> e{};
        e[j] = 1;
        terms.push_back({Monomial::from_exponents(e), combo[j]});
    }
    return primitive_part(MPoly::from_terms(xyz_vars(), std::move(terms)));
}

/// Six conic basis monomials pulled back along the branch.
inline std::array<TruncSeries, 6> conic_pullbacks(const BranchParam& b) {
    const auto& [x, y, z] = b.coords();
    return {x * x, y * y, z * z, y * z, x * z, x * y};
}

struct ValuationLadder {
    std::array<int, 6> h{};
    std::array<MPoly, 6> witnesses;
};

struct LineLadder {
    std::array<int, 3> h{};  // 0, m, l
    std::array<MPoly, 3> witnesses;
};

inline ValuationLadder valuation_ladder(const BranchParam& b) {
    auto pulled = conic_pullbacks(b);
    std::array<detail::EliminationRow<6>, 6> rows;
    for (std::size_t i = 0; i < 6; ++i) {
        rows[i].series = pulled[i];
        rows[i].combo[i] = 1;
    }
    auto lad = detail::separate_valuations<6>(std::move(rows), b.trunc());
    ValuationLadder out;
    out.h = lad.h;
    for (std::size_t i = 0; i < 6; ++i) out.witnesses[i] = conic_from_combo(lad.combos[i]);
    return out;
}

/// Orders of lines: h = (0, m, l) with m the multiplicity and l the
/// intersection order of the tangent, which is witnesses[2].
inline LineLadder line_ladder(const BranchParam& b) {
    std::array<detail::EliminationRow<3>, 3> rows;
    for (std::size_t i = 0; i < 3; ++i) {
        rows[i].series = b[i];
        rows[i].combo[i] = 1;
    }
    auto lad = detail::separate_valuations<3>(std::move(rows), b.trunc());
    LineLadder out;
    out.h = lad.h;
    for (std::size_t i = 0; i < 3; ++i) out.witnesses[i] = line_from_combo(lad.combos[i]);
    return out;
}

enum class PointKind { smooth_ordinary, inflection, sextactic, cusp };

inline const char* to_string(PointKind k) {
    switch (k) {
        case PointKind::smooth_ordinary:
            return "smooth_ordinary";
        case PointKind::inflection:
            return "inflection";
        case PointKind::sextactic:
            return "sextactic";
        case PointKind::cusp:
            return "cusp";
    }
    return "?";
}

struct WeightReport {
    int w2 = 0;
    ValuationLadder ladder;
    LineLadder lines;
    int m = 0;
    int l = 0;
    std::optional<int> c;  // present when l = 2m
    PointKind kind = PointKind::smooth_ordinary;
    int sextactic_order = 0;  // c - 5 for sextactic points, else 0
};

/// The conic order outside {0, m, 2m, 3m, 4m} when l = 2m.
inline std::optional<int> osculating_order(const ValuationLadder& lad, int m, int l) {
    if (l != 2 * m) return std::nullopt;
    std::optional<int> c;
    for (int h : lad.h) {
        if (h == 0 || h == m || h == 2 * m || h == 3 * m || h == 4 * m) continue;
        if (c) throw Error(errors::internal, "conic ladder has more than one order outside {0,m,2m,3m,4m}");
        c = h;
    }
    if (!c) throw Error(errors::internal, "conic ladder lacks the osculating order");
    return c;
}

/// 2-Weierstrass weight sum(h_i - i) with the point classified from (m, l, c).
inline WeightReport weight2(const BranchParam& b) {
    WeightReport r;
    r.ladder = valuation_ladder(b);
    r.lines = line_ladder(b);
    r.m = r.lines.h[1];
    r.l = r.lines.h[2];
    r.w2 = 0;
    for (int i = 0; i < 6; ++i) r.w2 += r.ladder.h[i] - i;
    r.c = osculating_order(r.ladder, r.m, r.l);
    if (r.m > 1) {
        r.kind = PointKind::cusp;
    } else if (r.l > 2) {
        r.kind = PointKind::inflection;
    } else if (*r.c > 5) {
        r.kind = PointKind::sextactic;
        r.sextactic_order = *r.c - 5;
    } else {
        r.kind = PointKind::smooth_ordinary;
    }
    return r;
}

/// Conic orders predicted from (m, l) alone, or (m, 2m, c). Ascending.
inline std::array<int, 6> closed_form_ladder(int m, int l, std::optional<int> c = std::nullopt) {
    if (m < 1 || l <= m) throw Error(errors::invalid_argument, "closed_form_ladder needs 1 <= m < l");
    std::array<int, 6> h;
    if (l != 2 * m) {
        h = {0, m, l, 2 * m, m + l, 2 * l};
    } else {
        if (!c) throw Error(errors::invalid_argument, "l = 2m requires the osculating order c");
        if (*c <= 2 * m || *c == 3 * m || *c == 4 * m)
            throw Error(errors::invalid_argument, "c must satisfy c > 2m and c != 3m, 4m");
        h = {0, m, 2 * m, 3 * m, 4 * m, *c};
    }
    std::sort(h.begin(), h.end());
    return h;
}

/// Conic meeting the branch to the highest order; at l = 2m it is the
/// osculating conic of order c instead (which can sit below 4m at a cusp).
inline MPoly hyperosculating_conic_at_branch(const BranchParam& b) {
    WeightReport r = weight2(b);
    if (r.c) {
        for (std::size_t i = 0; i < 6; ++i)
            if (r.ladder.h[i] == *r.c) return r.ladder.witnesses[i];
    }
    return r.ladder.witnesses[5];
}

struct Lemma37Report {
    bool consistent = true;
    int m = 0;
    std::vector<int> feasible_l;
    std::vector<int> feasible_c;  // orders allowed for c when l = 2m
    std::optional<int> k_for_l;
    std::optional<int> k_for_c;
    std::vector<std::string> notes;
};

/// Checks the bounds an irreducible cusp's multiplicity sequence imposes:
/// d >= l = km + m_k >= m + m_1 with m = m_1 = ... = m_(k-1), and for l = 2m,
/// 2d >= c = km + m_k > 2m (k >= 2), c != 3m, 4m. Entries past the end of
/// the sequence are 1.
inline Lemma37Report validate_lemma37(const std::vector<int>& ms, int d, std::optional<int> l = std::nullopt,
                                      std::optional<int> c = std::nullopt) {
    if (ms.empty()) throw Error(errors::invalid_argument, "empty multiplicity sequence");
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i] < 1) throw Error(errors::invalid_argument, "multiplicities must be positive");
        if (i && ms[i] > ms[i - 1]) throw Error(errors::invalid_argument, "multiplicity sequence must be non-increasing");
    }
    if (d < 3) throw Error(errors::degree_too_low, "curve degree must be at least 3");
    Lemma37Report rep;
    const int m = rep.m = ms[0];
    auto mult = [&](int i) { return i < static_cast<int>(ms.size()) ? ms[i] : 1; };
    const int m1 = mult(1);
    // k ranges while m_0 = ... = m_(k-1) = m
    for (int k = 1; k * m <= 2 * d; ++k) {
        if (mult(k - 1) != m) break;
        int v = k * m + mult(k);
        if (v >= m + m1 && v <= d) rep.feasible_l.push_back(v);
        if (k >= 2 && v > 2 * m && v <= 2 * d && v != 3 * m && v != 4 * m) rep.feasible_c.push_back(v);
    }
    auto k_of = [&](int v, int kmin) -> std::optional<int> {
        for (int k = kmin; k * m <= 2 * d; ++k) {
            if (mult(k - 1) != m) break;
            if (k * m + mult(k) == v) return k;
        }
        return std::nullopt;
    };
    if (l) {
        rep.k_for_l = (*l <= d && *l >= m + m1) ? k_of(*l, 1) : std::nullopt;
        if (!rep.k_for_l) {
            rep.consistent = false;
            rep.notes.push_back("l = " + std::to_string(*l) + " is not of the form km + m_k within [m + m_1, d]");
        }
        if (*l == 2 * m) {
            if (c) {
                bool ok = *c > 2 * m && *c <= 2 * d && *c != 3 * m && *c != 4 * m;
                rep.k_for_c = ok ? k_of(*c, 2) : std::nullopt;
                if (!rep.k_for_c) {
                    rep.consistent = false;
                    rep.notes.push_back("c = " + std::to_string(*c) + " violates 2d >= c = km + m_k > 2m, c != 3m, 4m");
                }
            }
        } else if (c) {
            rep.consistent = false;
            rep.notes.push_back("c is only defined when l = 2m");
        }
    } else if (c) {
        rep.consistent = false;
        rep.notes.push_back("c given without l");
    }
    return rep;
}

}  // namespace sextactic
