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
#include "sextactic/matrix.hpp"
#include "sextactic/point.hpp"
#include "sextactic/poly.hpp"

// Differential covariants of a plane curve F(x,y,z) = 0 in Cayley's
// notation: the Hessian H, the adjoint of Hess(F), Omega, Psi, the three
// (pseudo-)Jacobians and the 2-Hessian built from them.

namespace sextactic {

/// Symmetric 3x3 entries in the order (00, 11, 22, 12, 02, 01), i.e.
/// (a, b, c, f, g, h) for Hess(F).
using Sym6 = std::array<MPoly, 6>;

inline Sym6 sym6(const PolyMatrix& m) { return {m(0, 0), m(1, 1), m(2, 2), m(1, 2), m(0, 2), m(0, 1)}; }

/// Weights (1,1,1,2,2,2) turning a Sym6 dot product into a full trace.
inline MPoly sym_dot(const Sym6& u, const Sym6& v) {
    MPoly acc(u[0].vars());
    for (std::size_t k = 0; k < 6; ++k) {
        MPoly term = u[k] * v[k];
        if (k >= 3) term *= Rat(2);
        acc += term;
    }
    return acc;
}

inline PolyMatrix hessian_matrix(const MPoly& f) {
    PolyMatrix m(3, 3, f.vars());
    std::array<MPoly, 3> grad{partial(f, std::size_t{0}), partial(f, std::size_t{1}), partial(f, std::size_t{2})};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            m(i, j) = partial(grad[i], j);
            m(j, i) = m(i, j);
        }
    return m;
}

inline std::array<MPoly, 3> gradient(const MPoly& f) {
    return {partial(f, std::size_t{0}), partial(f, std::size_t{1}), partial(f, std::size_t{2})};
}

struct HessianBundle {
    MPoly F;
    unsigned d = 0;
    MPoly H;
    PolyMatrix hessF{3, 3, xyz_vars()};  // a h g / h b f / g f c
    PolyMatrix hessH{3, 3, xyz_vars()};  // a' .. h'
    PolyMatrix adjF{3, 3, xyz_vars()};   // A H G / H B F / G F C (calligraphic)
    std::array<MPoly, 3> gradF;
    std::array<MPoly, 3> gradH;
};

inline void require_plane_curve(const MPoly& F) {
    if (F.vars() != xyz_vars()) throw Error(errors::variable_mismatch, "expected a polynomial in (x,y,z)");
    if (F.is_zero()) throw Error(errors::zero_input, "the zero polynomial does not define a curve");
    if (!F.is_homogeneous()) throw Error(errors::inhomogeneous, "curve polynomial is not homogeneous");
    if (*F.degree() < 3)
        throw Error(errors::degree_too_low, "curve degree " + std::to_string(*F.degree()) + " < 3");
}

inline HessianBundle hessian(const MPoly& F) {
    require_plane_curve(F);
    HessianBundle b;
    b.F = F;
    b.d = *F.degree();
    b.gradF = gradient(F);
    b.hessF = hessian_matrix(F);
    const Sym6 e = sym6(b.hessF);
    const MPoly &a = e[0], &bb = e[1], &c = e[2], &f = e[3], &g = e[4], &h = e[5];
    // A = bc - f^2, B = ac - g^2, C = ab - h^2, F = hg - af, G = hf - bg, H = fg - hc
    PolyMatrix& adj = b.adjF;
    adj(0, 0) = bb * c - f * f;
    adj(1, 1) = a * c - g * g;
    adj(2, 2) = a * bb - h * h;
    adj(1, 2) = adj(2, 1) = h * g - a * f;
    adj(0, 2) = adj(2, 0) = h * f - bb * g;
    adj(0, 1) = adj(1, 0) = f * g - h * c;
    b.H = a * adj(0, 0) + h * adj(0, 1) + g * adj(0, 2);
    b.gradH = gradient(b.H);
    b.hessH = hessian_matrix(b.H);
    return b;
}

struct CovariantSet {
    MPoly Omega;
    std::array<MPoly, 3> OmegaBarH;  // d_v Omega with only the adjoint differentiated
    std::array<MPoly, 3> OmegaBarF;  // d_v Omega with only Hess(H) differentiated
    MPoly Psi;
};

inline CovariantSet covariants(const HessianBundle& b) {
    const Sym6 adj = sym6(b.adjF);
    const Sym6 hh = sym6(b.hessH);
    CovariantSet cs;
    cs.Omega = sym_dot(adj, hh);
    for (std::size_t v = 0; v < 3; ++v) {
        Sym6 dadj, dhh;
        for (std::size_t k = 0; k < 6; ++k) {
            dadj[k] = partial(adj[k], v);
            dhh[k] = partial(hh[k], v);
        }
        cs.OmegaBarH[v] = sym_dot(dadj, hh);
        cs.OmegaBarF[v] = sym_dot(adj, dhh);
    }
    const auto& gh = b.gradH;
    Sym6 outer{gh[0] * gh[0], gh[1] * gh[1], gh[2] * gh[2], gh[1] * gh[2], gh[0] * gh[2], gh[0] * gh[1]};
    cs.Psi = sym_dot(adj, outer);
    return cs;
}

/// det [[0, H_x, H_y, H_z], [H_x, a, h, g], [H_y, h, b, f], [H_z, g, f, c]],
/// which equals -Psi.
inline MPoly bordered_hessian_det(const HessianBundle& b) {
    PolyMatrix m(4, 4, xyz_vars());
    for (std::size_t i = 0; i < 3; ++i) {
        m(0, i + 1) = b.gradH[i];
        m(i + 1, 0) = b.gradH[i];
        for (std::size_t j = 0; j < 3; ++j) m(i + 1, j + 1) = b.hessF(i, j);
    }
    return det(m, DetStrategy::cofactor);
}

/// det of the rows (grad F, grad H, third).
inline MPoly jacobian_det(const HessianBundle& b, const std::array<MPoly, 3>& third) {
    PolyMatrix m(3, 3, xyz_vars());
    for (std::size_t j = 0; j < 3; ++j) {
        m(0, j) = b.gradF[j];
        m(1, j) = b.gradH[j];
        m(2, j) = third[j];
    }
    return det(m, DetStrategy::cofactor);
}

enum class Hessian2Variant { corrected, cayley1865 };

inline const char* to_string(Hessian2Variant v) { return v == Hessian2Variant::corrected ? "corrected" : "cayley1865"; }

/// The three determinant terms any 2-Hessian variant is assembled from.
struct Hessian2Parts {
    unsigned d = 0;
    MPoly H;
    MPoly jac_omega_h;  // Jac(F, H, Omega_Hbar)
    MPoly jac_omega_f;  // Jac(F, H, Omega_Fbar)
    MPoly jac_psi;      // Jac(F, H, Psi)
};

inline Hessian2Parts hessian2_parts(const MPoly& F) {
    HessianBundle b = hessian(F);
    if (b.H.is_zero())
        throw Error(errors::hessian_vanishes, "the Hessian vanishes identically; the 2-Hessian is undefined");
    CovariantSet cs = covariants(b);
    Hessian2Parts p;
    p.d = b.d;
    p.H = b.H;
    p.jac_omega_h = jacobian_det(b, cs.OmegaBarH);
    p.jac_omega_f = jacobian_det(b, cs.OmegaBarF);
    p.jac_psi = jacobian_det(b, gradient(cs.Psi));
    return p;
}

/// Coefficient of -Jac(F,H,Psi): 20 in the corrected 2-Hessian, 40 in the
/// 1865 formula.
inline long psi_coefficient(Hessian2Variant v) { return v == Hessian2Variant::corrected ? 20 : 40; }

inline MPoly assemble_hessian2(const Hessian2Parts& p, Hessian2Variant variant) {
    const long d = p.d;
    Rat c1(12 * d * d - 54 * d + 57);
    Rat c2((d - 2) * (12 * d - 27));
    Rat c3(psi_coefficient(variant) * (d - 2) * (d - 2));
    return c1 * (p.H * p.jac_omega_h) + c2 * (p.H * p.jac_omega_f) - c3 * p.jac_psi;
}

/// 2-Hessian of degree 12d - 27, returned with its integer content intact
/// unless `normalize` asks for the primitive, positively led representative.
inline MPoly hessian2(const MPoly& F, Hessian2Variant variant = Hessian2Variant::corrected, bool normalize = false) {
    MPoly h2 = assemble_hessian2(hessian2_parts(F), variant);
    return normalize ? primitive_part(h2) : h2;
}

inline void require_rational_point_on(const MPoly& F, const PointP2& p) {
    if (!p.is_valid()) throw Error(errors::invalid_argument, "(0:0:0) is not a point of P^2");
    if (F.evaluate(p.coords) != 0) throw Error(errors::not_on_curve, "point " + p.to_string() + " is not on the curve");
}

/// D F_p (x,y,z) = x F_x(p) + y F_y(p) + z F_z(p).
inline MPoly polar_line(const std::array<MPoly, 3>& grad, const PointP2& p) {
    MPoly out(xyz_vars());
    const char names[3] = {'x', 'y', 'z'};
    for (std::size_t i = 0; i < 3; ++i) out += grad[i].evaluate(p.coords) * MPoly::variable(xyz_vars(), names[i]);
    return out;
}

/// Cayley's osculating conic at a smooth, non-inflection rational point:
/// D^2F_p - (2/3 DH_p / H(p) + Lambda(p) DF_p) DF_p with
/// 9 H^3 Lambda = -3 Omega H + 4 Psi. Output is primitive over Z with a
/// positive leading coefficient.
inline MPoly osculating_conic(const MPoly& F, const PointP2& p) {
    HessianBundle b = hessian(F);
    require_rational_point_on(F, p);
    bool singular = true;
    for (const auto& g : b.gradF)
        if (g.evaluate(p.coords) != 0) singular = false;
    if (singular) throw Error(errors::singular_point, "point " + p.to_string() + " is a singular point of the curve");
    const Rat Hp = b.H.evaluate(p.coords);
    if (Hp == 0)
        throw Error(errors::inflection_point,
                    "H vanishes at " + p.to_string() + " (inflection point); the osculating conic is the double tangent");
    CovariantSet cs = covariants(b);
    const Rat lambda = (-3 * cs.Omega.evaluate(p.coords) * Hp + 4 * cs.Psi.evaluate(p.coords)) / (9 * Hp * Hp * Hp);

    const MPoly X[3] = {MPoly::variable(xyz_vars(), 'x'), MPoly::variable(xyz_vars(), 'y'),
                        MPoly::variable(xyz_vars(), 'z')};
    MPoly d2f(xyz_vars());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) d2f += b.hessF(i, j).evaluate(p.coords) * (X[i] * X[j]);
    const MPoly df = polar_line(b.gradF, p);
    const MPoly dh = polar_line(b.gradH, p);
    MPoly conic = d2f - (Rat(2, 3) / Hp * dh + lambda * df) * df;
    if (conic.is_zero()) throw Error(errors::degenerate, "osculating conic formula degenerated to 0");
    return primitive_part(conic);
}

}  // namespace sextactic
