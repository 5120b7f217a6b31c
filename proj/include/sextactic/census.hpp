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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sextactic/errors.hpp"

// Global counts for a cuspidal plane curve described by its local data:
// sextactic points, inflection points, the two consistency identities tying
// them to the 2-Hessian's degree, and the conjectured local 2-Hessian
// intersection numbers.

namespace sextactic {

enum class PointRole { cusp, inflection, smooth_sextactic_candidate };

inline const char* to_string(PointRole r) {
    switch (r) {
        case PointRole::cusp:
            return "cusp";
        case PointRole::inflection:
            return "inflection";
        case PointRole::smooth_sextactic_candidate:
            return "smooth_sextactic_candidate";
    }
    return "?";
}

struct PointRecord {
    std::string label;  // records sharing a label are branches of one point
    PointRole role = PointRole::cusp;
    long m = 1;
    long l = 2;
    std::optional<long> c;
    std::optional<std::vector<long>> ms;
    std::optional<long> delta;

    /// l = 2m, the records falling in J.
    bool in_j() const noexcept { return l == 2 * m; }
};

inline long delta_from_sequence(const std::vector<long>& ms) {
    long d = 0;
    for (long m : ms) d += m * (m - 1) / 2;
    return d;
}

/// Validates one record; fills delta from the multiplicity sequence and sets
/// delta = 0 for smooth records.
inline PointRecord validate_record(PointRecord r) {
    auto bad = [&](const std::string& msg) {
        throw Error(errors::invalid_profile, (r.label.empty() ? std::string("point") : r.label) + ": " + msg);
    };
    switch (r.role) {
        case PointRole::inflection:
            if (r.m != 1) bad("an inflection point has m = 1");
            if (r.l < 3) bad("an inflection point has l >= 3");
            if (r.c) bad("c is only defined when l = 2m");
            break;
        case PointRole::smooth_sextactic_candidate:
            if (r.m != 1 || r.l != 2) bad("a smooth sextactic candidate has m = 1, l = 2");
            if (!r.c) bad("a smooth sextactic candidate needs c");
            if (*r.c < 5) bad("c >= 5 at a smooth point");
            break;
        case PointRole::cusp:
            if (r.m < 2) bad("a cusp has m >= 2");
            if (r.l <= r.m) bad("l > m is required");
            if (r.in_j()) {
                if (!r.c) bad("l = 2m but c is missing");
                if (*r.c <= 2 * r.m || *r.c == 3 * r.m || *r.c == 4 * r.m) bad("c must satisfy c > 2m, c != 3m, 4m");
            } else if (r.c) {
                bad("c is only defined when l = 2m");
            }
            break;
    }
    if (r.ms) {
        const auto& ms = *r.ms;
        if (ms.empty()) bad("empty multiplicity sequence");
        for (std::size_t i = 0; i < ms.size(); ++i) {
            if (ms[i] < 1) bad("multiplicities must be positive");
            if (i && ms[i] > ms[i - 1]) bad("multiplicity sequence must be non-increasing");
        }
        if (ms.front() != r.m) bad("multiplicity sequence starts with " + std::to_string(ms.front()) + ", m = " +
                                   std::to_string(r.m));
        long dd = delta_from_sequence(ms);
        if (r.delta && *r.delta != dd)
            bad("delta " + std::to_string(*r.delta) + " disagrees with the sequence (" + std::to_string(dd) + ")");
        r.delta = dd;
    }
    if (r.role != PointRole::cusp) {
        if (r.delta && *r.delta != 0) bad("a smooth point has delta = 0");
        r.delta = 0;
    }
    if (r.delta && *r.delta < 0) bad("delta must be non-negative");
    return r;
}

struct CurveProfile {
    long d = 0;
    long g = 0;
    bool genus_given = false;
    std::vector<PointRecord> points;

    std::vector<const PointRecord*> set_i() const {
        std::vector<const PointRecord*> out;
        for (const auto& p : points)
            if (p.role != PointRole::smooth_sextactic_candidate && !p.in_j()) out.push_back(&p);
        return out;
    }
    std::vector<const PointRecord*> set_j() const {
        std::vector<const PointRecord*> out;
        for (const auto& p : points)
            if (p.role == PointRole::cusp && p.in_j()) out.push_back(&p);
        return out;
    }
    std::vector<const PointRecord*> cusps() const {
        std::vector<const PointRecord*> out;
        for (const auto& p : points)
            if (p.role == PointRole::cusp) out.push_back(&p);
        return out;
    }
    /// Sum of cusp deltas, or nullopt when some cusp lacks one.
    std::optional<long> total_delta() const {
        long s = 0;
        for (const auto* p : cusps()) {
            if (!p->delta) return std::nullopt;
            s += *p->delta;
        }
        return s;
    }
};

/// (d-1)(d-2)/2 - sum delta.
inline long clebsch_genus(long d, long total_delta) { return (d - 1) * (d - 2) / 2 - total_delta; }

/// Genus taken from `g` when given, else by Clebsch from the deltas; when
/// both are available they must agree.
inline CurveProfile make_profile(long d, std::optional<long> g, std::vector<PointRecord> points) {
    if (d < 3) throw Error(errors::invalid_profile, "curve degree must be at least 3");
    CurveProfile p;
    p.d = d;
    for (auto& r : points) p.points.push_back(validate_record(std::move(r)));
    auto td = p.total_delta();
    if (g) {
        if (*g < 0) throw Error(errors::invalid_profile, "genus must be non-negative");
        if (td && clebsch_genus(d, *td) != *g)
            throw Error(errors::invalid_profile, "genus " + std::to_string(*g) + " conflicts with Clebsch's formula (" +
                                                     std::to_string(clebsch_genus(d, *td)) + ")");
        p.g = *g;
        p.genus_given = true;
    } else {
        if (!td) throw Error(errors::invalid_profile, "genus missing and some cusp has no delta");
        p.g = clebsch_genus(d, *td);
        if (p.g < 0) throw Error(errors::invalid_profile, "deltas exceed the arithmetic genus");
    }
    return p;
}

/// 6(2d + 5g - 5), the total 2-Weierstrass weight.
inline long brill_segre_total(long d, long g) {
    if (d < 3 || g < 0) throw Error(errors::invalid_argument, "brill_segre_total needs d >= 3, g >= 0");
    return 6 * (2 * d + 5 * g - 5);
}

/// Weight of an I record (l != 2m): 4m + 4l - 15; of a J record: 10m + c - 15.
inline long weight_of(const PointRecord& r) { return r.in_j() ? 10 * r.m + *r.c - 15 : 4 * r.m + 4 * r.l - 15; }

struct CensusReport {
    long s = 0;
    std::optional<long> v;
    long brill_segre = 0;
    long sum_i = 0;
    long sum_j = 0;
    std::optional<long> genus0_count;  // g = 0 specialization
    bool genus0_agrees = true;
    long listed_sextactic = 0;  // sum of c - 5 over smooth candidates
    std::vector<std::pair<std::string, long>> weights;
};

/// Inflection points counted with multiplicity l - 2:
/// v = 3d(d-2) - sum over cusps of (6 delta + m + l - 3).
inline long inflection_count(const CurveProfile& p) {
    long v = 3 * p.d * (p.d - 2);
    for (const auto* r : p.cusps()) {
        if (!r->delta) throw Error(errors::invalid_profile, "cusp " + r->label + " has no delta");
        v -= 6 * *r->delta + r->m + r->l - 3;
    }
    return v;
}

/// s = 6(2d + 5g - 5) - sum_I (4m + 4l - 15) - sum_J (10m + c - 15). Without
/// `per_branch`, records sharing a label (multibranch points) are rejected.
inline CensusReport sextactic_count(const CurveProfile& p, bool per_branch = false) {
    if (!per_branch) {
        std::map<std::string, int> seen;
        for (const auto& r : p.points)
            if (!r.label.empty() && ++seen[r.label] > 1)
                throw Error(errors::invalid_profile,
                            "point " + r.label + " has several branches; the count needs a cuspidal curve (use per-branch)");
    }
    CensusReport rep;
    rep.brill_segre = brill_segre_total(p.d, p.g);
    for (const auto* r : p.set_i()) {
        long w = weight_of(*r);
        rep.sum_i += w;
        rep.weights.emplace_back(r->label, w);
    }
    for (const auto* r : p.set_j()) {
        long w = weight_of(*r);
        rep.sum_j += w;
        rep.weights.emplace_back(r->label, w);
    }
    rep.s = rep.brill_segre - rep.sum_i - rep.sum_j;
    if (rep.s < 0)
        throw Error(errors::invalid_profile, "negative sextactic count " + std::to_string(rep.s) + "; profile is inconsistent");
    if (p.g == 0) {
        rep.genus0_count = 6 * (2 * p.d - 5) - rep.sum_i - rep.sum_j;
        rep.genus0_agrees = *rep.genus0_count == rep.s;
    }
    for (const auto& r : p.points)
        if (r.role == PointRole::smooth_sextactic_candidate) rep.listed_sextactic += *r.c - 5;
    if (p.total_delta()) rep.v = inflection_count(p);
    return rep;
}

struct Corollary36Report {
    long lhs1 = 0, rhs1 = 0;
    long lhs2 = 0, rhs2 = 0;
    long residual1() const noexcept { return lhs1 - rhs1; }
    long residual2() const noexcept { return lhs2 - rhs2; }
    bool holds() const noexcept { return residual1() == 0 && residual2() == 0; }
};

/// d(12d-27) + 3d(d-2) = s + 30 sum delta + sum_I (4m+4l-15) + sum_J (10m+c-15)
/// d(12d-27)           = s + 24 sum delta + sum_I (3m+3l-12) + sum_J (7m+c-12)
inline Corollary36Report corollary36_check(const CurveProfile& p, long s) {
    auto td = p.total_delta();
    if (!td) throw Error(errors::invalid_profile, "every cusp needs delta for the identities");
    Corollary36Report r;
    r.lhs1 = p.d * (12 * p.d - 27) + 3 * p.d * (p.d - 2);
    r.lhs2 = p.d * (12 * p.d - 27);
    r.rhs1 = s + 30 * *td;
    r.rhs2 = s + 24 * *td;
    for (const auto* q : p.set_i()) {
        r.rhs1 += 4 * q->m + 4 * q->l - 15;
        r.rhs2 += 3 * q->m + 3 * q->l - 12;
    }
    for (const auto* q : p.set_j()) {
        r.rhs1 += 10 * q->m + *q->c - 15;
        r.rhs2 += 7 * q->m + *q->c - 12;
    }
    return r;
}

inline long require_delta(const PointRecord& r) {
    if (!r.delta) throw Error(errors::invalid_profile, "point " + r.label + " has no delta");
    return *r.delta;
}

/// Conjectured (H2 . C)_p: 24 delta + 3m + 3l - 12 when l != 2m, else
/// 24 delta + 7m + c - 12.
inline long conjecture39_predict(const PointRecord& r) {
    const long delta = require_delta(r);
    if (r.in_j()) {
        if (!r.c) throw Error(errors::invalid_profile, "point " + r.label + ": l = 2m but c is missing");
        return 24 * delta + 7 * r.m + *r.c - 12;
    }
    return 24 * delta + 3 * r.m + 3 * r.l - 12;
}

/// (H . C)_p = 6 delta + m + l - 3 (l - 2 at a smooth point).
inline long hessian_order_predict(const PointRecord& r) { return 6 * require_delta(r) + r.m + r.l - 3; }

}  // namespace sextactic
