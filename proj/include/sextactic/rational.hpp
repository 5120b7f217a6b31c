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
#include <optional>
#include <string>
#include <vector>

#include "sextactic/binary_form.hpp"
#include "sextactic/branch.hpp"
#include "sextactic/errors.hpp"
#include "sextactic/matrix.hpp"
#include "sextactic/point.hpp"
#include "sextactic/poly.hpp"
#include "sextactic/series.hpp"

// Rational curves (phi_0 : phi_1 : phi_2) over P^1: the Veronese row, the
// osculating-conic determinant omega, the Wronskian xi whose zeros are the
// 2-Weierstrass parameters, and pullbacks of plane curves.

namespace sextactic {

struct RationalParam {
    std::array<BinaryForm, 3> phi;
    unsigned d = 0;

    std::string to_string() const {
        return "(" + phi[0].to_string() + " : " + phi[1].to_string() + " : " + phi[2].to_string() + ")";
    }
};

/// Validates a triple of binary forms: homogeneous, one common degree, not
/// all zero and free of a common factor. A common rational content is
/// divided out.
inline RationalParam make_param(std::array<BinaryForm, 3> phi) {
    std::optional<unsigned> d;
    for (std::size_t i = 0; i < 3; ++i) {
        if (phi[i].vars() != st_vars())
            throw Error(errors::variable_mismatch, "parametrization components must be forms in (s,t)");
        if (phi[i].is_zero()) continue;
        if (!phi[i].is_homogeneous())
            throw Error(errors::inhomogeneous, "component " + std::to_string(i) + " is not homogeneous");
        unsigned di = *phi[i].degree();
        if (d && *d != di)
            throw Error(errors::unequal_degrees, "components have degrees " + std::to_string(*d) + " and " +
                                                     std::to_string(di));
        d = di;
    }
    if (!d) throw Error(errors::zero_triple, "all three components are zero");
    if (*d == 0) throw Error(errors::degree_too_low, "a constant triple does not parametrize a curve");
    BinaryForm g(st_vars());
    for (const auto& f : phi)
        if (!f.is_zero()) g = g.is_zero() ? primitive_part(f) : binary_gcd(g, f);
    if (g.degree().value_or(0) > 0)
        throw Error(errors::common_factor, "components share the factor " + g.to_string());
    Rat k = 0;
    for (const auto& f : phi)
        if (!f.is_zero()) {
            Rat cf = content(f);
            k = k == 0 ? cf : Rat(gcd(k.get_num(), cf.get_num()), lcm(k.get_den(), cf.get_den()));
        }
    for (auto& f : phi) f *= Rat(1 / k);
    return RationalParam{std::move(phi), *d};
}

/// (phi0^2, phi1^2, phi2^2, phi1 phi2, phi0 phi2, phi0 phi1).
inline std::array<BinaryForm, 6> veronese(const RationalParam& p) {
    const auto& f = p.phi;
    return {f[0] * f[0], f[1] * f[1], f[2] * f[2], f[1] * f[2], f[0] * f[2], f[0] * f[1]};
}

/// d^(i+j) f / ds^i dt^j.
inline BinaryForm partial_st(const BinaryForm& f, unsigned i, unsigned j) {
    BinaryForm g = f;
    for (unsigned k = 0; k < i; ++k) g = partial(g, std::size_t{0});
    for (unsigned k = 0; k < j; ++k) g = partial(g, std::size_t{1});
    return g;
}

/// Rows d^n/ds^(n-j) dt^j of the Veronese row for j = first .. first+count-1.
inline PolyMatrix veronese_partials(const RationalParam& p, unsigned n, std::size_t first_row, std::size_t rows) {
    auto v = veronese(p);
    PolyMatrix m(first_row + rows, 6, st_vars());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            m(first_row + r, c) = partial_st(v[c], n - static_cast<unsigned>(r), static_cast<unsigned>(r));
    return m;
}

inline void require_curve_degree(const RationalParam& p) {
    if (p.d < 3) throw Error(errors::degree_too_low, "parametrization degree " + std::to_string(p.d) + " < 3");
}

inline PointP2 curve_point(const RationalParam& p, const PointP1& at) {
    std::array<Rat, 2> st{at.s, at.t};
    PointP2 q{{p.phi[0].evaluate(st), p.phi[1].evaluate(st), p.phi[2].evaluate(st)}};
    return q.normalized();
}

/// omega as a conic whose six coefficients (over x^2, y^2, z^2, yz, xz, xy)
/// are binary forms in (s,t).
struct OmegaConic {
    std::array<BinaryForm, 6> coeffs;

    MPoly at(const PointP1& pt) const {
        std::array<Rat, 2> st{pt.s, pt.t};
        std::vector<Term> terms;
        for (std::size_t j = 0; j < 6; ++j) {
            const auto& e = conic_basis_exponents[j];
            terms.push_back({Monomial::from_exponents({e[0], e[1], e[2]}), coeffs[j].evaluate(st)});
        }
        return MPoly::from_terms(xyz_vars(), std::move(terms));
    }
};

/// 6x6 determinant: first row the conic basis, then the five 4th-order
/// partials of the Veronese row. Expanded along the first row.
inline OmegaConic omega_conic(const RationalParam& p) {
    require_curve_degree(p);
    PolyMatrix rows = veronese_partials(p, 4, 0, 5);
    OmegaConic out;
    bool any = false;
    for (std::size_t j = 0; j < 6; ++j) {
        PolyMatrix minor(5, 5, st_vars());
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0, cc = 0; c < 6; ++c)
                if (c != j) minor(r, cc++) = rows(r, c);
        out.coeffs[j] = det(minor, DetStrategy::cofactor);
        if (j % 2) out.coeffs[j] = -out.coeffs[j];
        if (!out.coeffs[j].is_zero()) any = true;
    }
    if (!any) throw Error(errors::degenerate, "omega vanishes identically");
    return out;
}

/// omega at (s0:t0), primitive over Z with positive leading coefficient.
inline MPoly omega_conic_at(const RationalParam& p, const PointP1& at) {
    MPoly c = omega_conic(p).at(at);
    if (c.is_zero()) throw Error(errors::degenerate, "omega vanishes at " + at.to_string());
    return primitive_part(c);
}

struct WeierstrassScan {
    BinaryForm xi;
    Rat content;  // xi = content * prod factor^multiplicity
    std::vector<ZeroClass> zero_classes;
    unsigned total = 0;  // sum of degree * multiplicity
};

/// Wronskian of the Veronese row: det of the six 5th-order partials.
inline WeierstrassScan xi_wronskian(const RationalParam& p) {
    require_curve_degree(p);
    PolyMatrix m = veronese_partials(p, 5, 0, 6);
    WeierstrassScan scan;
    scan.xi = det(m, DetStrategy::cofactor);
    if (scan.xi.is_zero())
        throw Error(errors::degenerate, "xi vanishes identically (degenerate or conic-contained parametrization)");
    scan.content = squarefree_decomp(scan.xi).content;
    scan.zero_classes = zero_classes(scan.xi);
    for (const auto& zc : scan.zero_classes) scan.total += zc.degree * zc.multiplicity;
    const unsigned expected = 6 * (2 * p.d - 5);
    if (scan.total != expected || *scan.xi.degree() != expected)
        throw Error(errors::internal, "xi bookkeeping: total " + std::to_string(scan.total) + " != 6(2d-5) = " +
                                          std::to_string(expected));
    return scan;
}

/// G(phi0, phi1, phi2). Zero when the curve lies on G.
inline BinaryForm pullback(const MPoly& G, const RationalParam& p) {
    if (G.vars() != xyz_vars()) throw Error(errors::variable_mismatch, "pullback needs a polynomial in (x,y,z)");
    if (!G.is_homogeneous()) throw Error(errors::inhomogeneous, "pullback needs a homogeneous polynomial");
    return compose(G, std::span<const MPoly>(p.phi.data(), 3));
}

struct OrderReport {
    std::vector<std::pair<PointP1, unsigned>> orders;
    unsigned degree = 0;
    int residual = 0;  // degree minus the orders listed
};

inline OrderReport intersection_orders(const MPoly& G, const RationalParam& p, const std::vector<PointP1>& params) {
    BinaryForm g = pullback(G, p);
    if (g.is_zero()) throw Error(errors::zero_input, "pullback is identically zero (the curve lies on G)");
    OrderReport rep;
    rep.degree = *g.degree();
    rep.residual = static_cast<int>(rep.degree);
    for (const auto& pt : params) {
        auto n = pt.normalized();
        unsigned k = linear_factor_order(g, n.s, n.t);
        rep.orders.emplace_back(n, k);
        rep.residual -= static_cast<int>(k);
    }
    return rep;
}

/// Order of G's pullback along an arbitrary factor class (e.g. a quadratic
/// factor whose roots are conjugate parameters).
inline unsigned order_along(const MPoly& G, const RationalParam& p, const BinaryForm& factor) {
    BinaryForm g = pullback(G, p);
    if (g.is_zero()) throw Error(errors::zero_input, "pullback is identically zero (the curve lies on G)");
    return factor_multiplicity(g, factor);
}

struct WeightEntry {
    ZeroClass zero;
    std::optional<PointP2> point;  // resolved image for rational parameters
    unsigned weight = 0;           // weight of each point in the class
    unsigned points = 0;           // number of (conjugate) points in the class
};

struct PointWeight {
    PointP2 point;
    unsigned weight = 0;
    std::vector<PointP1> params;
};

struct WeightTable {
    std::vector<WeightEntry> entries;
    /// Rational-parameter entries summed per image point, so branches of a
    /// multibranch point add up.
    std::vector<PointWeight> by_point;
    unsigned total = 0;
};

inline WeightTable weights_from_xi(const WeierstrassScan& scan, const RationalParam& p) {
    WeightTable tab;
    for (const auto& zc : scan.zero_classes) {
        WeightEntry e{zc, std::nullopt, zc.multiplicity, zc.degree};
        if (zc.root) {
            PointP2 q = curve_point(p, *zc.root);
            e.point = q;
            auto it = std::find_if(tab.by_point.begin(), tab.by_point.end(),
                                   [&](const PointWeight& pw) { return pw.point == q; });
            if (it == tab.by_point.end())
                tab.by_point.push_back({q, zc.multiplicity, {*zc.root}});
            else {
                it->weight += zc.multiplicity;
                it->params.push_back(*zc.root);
            }
        }
        tab.total += zc.degree * zc.multiplicity;
        tab.entries.push_back(std::move(e));
    }
    return tab;
}

/// Branch at the parameter (s0:t0) in a local parameter u: s = s0/t0 + u,
/// t = 1, or s = 1, t = u at (1:0).
inline BranchParam local_branch_at(const RationalParam& p, const PointP1& at, int trunc) {
    if (trunc < 1) throw Error(errors::invalid_argument, "truncation must be positive");
    const PointP1 n = at.normalized();
    std::array<MPoly, 2> sub;
    const VarSet u_vars("u");
    const MPoly u = MPoly::variable(u_vars, 'u');
    if (n.t != 0) {
        sub = {MPoly::constant(u_vars, n.s / n.t) + u, MPoly::constant(u_vars, Rat(1))};
    } else {
        sub = {MPoly::constant(u_vars, Rat(1)), u};
    }
    std::array<TruncSeries, 3> coords{TruncSeries(trunc), TruncSeries(trunc), TruncSeries(trunc)};
    for (std::size_t i = 0; i < 3; ++i) {
        MPoly local = compose(p.phi[i], std::span<const MPoly>(sub.data(), 2));
        for (const auto& term : local.terms()) {
            int e = static_cast<int>(term.mono.exponent(0));
            if (e < trunc) coords[i].set(e, term.coeff);
        }
    }
    return BranchParam(std::move(coords));
}

/// A truncation at which every branch of a degree-d rational curve resolves
/// its conic ladder: h5 <= w2 + 5 <= 6(2d - 5) + 5.
inline int sufficient_truncation(const RationalParam& p) { return 6 * (2 * static_cast<int>(p.d) - 5) + 6; }

}  // namespace sextactic
