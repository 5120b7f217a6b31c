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
#include <optional>
#include <utility>
#include <vector>

#include "sextactic/errors.hpp"
#include "sextactic/point.hpp"
#include "sextactic/poly.hpp"
#include "sextactic/rat.hpp"

// Binary forms are MPoly values over (s,t) that are homogeneous. Everything
// that needs one-variable algebra (gcd, squarefree parts, rational roots)
// goes through the dehomogenization f(s,1).

namespace sextactic {

using BinaryForm = MPoly;

namespace detail {

/// Dense univariate polynomial, index = exponent.
using UPoly = std::vector<Rat>;

inline void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly uderiv(const UPoly& p) {
    UPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

inline UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

/// Returns (quotient, remainder); `b` nonzero.
inline std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
    trim(a);
    if (b.empty()) throw Error(errors::zero_input, "univariate division by zero");
    if (a.size() < b.size()) return {UPoly{}, a};
    UPoly q(a.size() - b.size() + 1);
    const Rat& lb = b.back();
    for (int i = udeg(a) - udeg(b); i >= 0; --i) {
        Rat c = a[i + b.size() - 1] / lb;
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline UPoly umonic(UPoly p) {
    trim(p);
    if (p.empty()) return p;
    Rat lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

inline UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = udivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(a);
}

inline UPoly uexact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = udivmod(a, b);
    if (!r.empty()) throw Error(errors::internal, "univariate division expected to be exact");
    return q;
}

inline Rat ueval(const UPoly& p, const Rat& x) {
    Rat v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

/// Prime factorization by trial division; nullopt when a composite
/// cofactor survives the trial bound.
inline std::optional<std::vector<std::pair<BigInt, unsigned>>> factor_integer(BigInt n) {
    n = abs(n);
    std::vector<std::pair<BigInt, unsigned>> out;
    if (n <= 1) return out;
    constexpr unsigned long trial_bound = 200000;
    for (unsigned long p = 2; p <= trial_bound && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                ++e;
            }
            out.emplace_back(BigInt(p), e);
        }
    }
    if (n > 1) {
        if (BigInt(trial_bound) * trial_bound < n && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
        out.emplace_back(n, 1);
    }
    return out;
}

inline std::vector<BigInt> divisors(const std::vector<std::pair<BigInt, unsigned>>& fac) {
    std::vector<BigInt> ds{BigInt(1)};
    for (const auto& [p, e] : fac) {
        std::size_t n = ds.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < n; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// Rational roots of a univariate polynomial with p(0) != 0, ascending.
/// nullopt when the coefficient factorizations could not be completed.
inline std::optional<std::vector<Rat>> rational_roots(const UPoly& p) {
    if (p.size() < 2) return std::vector<Rat>{};
    BigInt den = 1;
    for (const auto& c : p) den = lcm(den, BigInt(c.get_den()));
    BigInt lead = BigInt(p.back() * den), constant = BigInt(p.front() * den);
    auto fl = factor_integer(lead);
    auto fc = factor_integer(constant);
    if (!fl || !fc) return std::nullopt;
    std::vector<Rat> roots;
    for (const auto& num : divisors(*fc))
        for (const auto& dv : divisors(*fl))
            for (int sg : {-1, 1}) {
                Rat r = make_rat(num * sg, dv);
                if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
                if (ueval(p, r) == 0) roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

inline void require_binary_form(const MPoly& f, const char* what) {
    if (f.vars() != st_vars())
        throw Error(errors::variable_mismatch, std::string(what) + ": expected a form in (s,t)");
    if (!f.is_homogeneous()) throw Error(errors::inhomogeneous, std::string(what) + ": form is not homogeneous");
}

/// Coefficients c_i of s^(n-i) t^i, i = 0..n, for a nonzero form.
inline std::vector<Rat> to_dense(const BinaryForm& f) {
    unsigned n = f.degree().value();
    std::vector<Rat> c(n + 1);
    for (const auto& t : f.terms()) c[t.mono.exponent(1)] = t.coeff;
    return c;
}

inline BinaryForm from_dense(const std::vector<Rat>& c) {
    std::vector<Term> terms;
    unsigned n = static_cast<unsigned>(c.size()) - 1;
    for (unsigned i = 0; i <= n; ++i)
        if (c[i] != 0) terms.push_back({Monomial::from_exponents({n - i, i}), c[i]});
    return MPoly::from_terms(st_vars(), std::move(terms));
}

/// f(s, 1) as a dense univariate polynomial in s.
inline detail::UPoly dehomogenize(const BinaryForm& f) {
    detail::UPoly u(f.degree_in(0) + 1);
    for (const auto& t : f.terms()) u[t.mono.exponent(0)] = t.coeff;
    detail::trim(u);
    return u;
}

/// t^deg(u) u(s/t), the homogenization of u in its own degree.
inline BinaryForm homogenize(const detail::UPoly& u) {
    std::vector<Term> terms;
    unsigned n = static_cast<unsigned>(u.size()) - 1;
    for (unsigned k = 0; k <= n; ++k)
        if (u[k] != 0) terms.push_back({Monomial::from_exponents({k, n - k}), u[k]});
    return MPoly::from_terms(st_vars(), std::move(terms));
}

inline BinaryForm s_power(unsigned k) { return MPoly::monomial(st_vars(), {k, 0}, Rat(1)); }
inline BinaryForm t_power(unsigned k) { return MPoly::monomial(st_vars(), {0, k}, Rat(1)); }

/// The linear form t0*s - s0*t vanishing at (s0:t0).
inline BinaryForm linear_form_at(const Rat& s0, const Rat& t0) {
    if (s0 == 0 && t0 == 0) throw Error(errors::invalid_argument, "(0:0) is not a point of P^1");
    return primitive_part(from_dense({t0, Rat(-s0)}));
}

/// Multiplicity of the linear factor (t0 s - s0 t) in f, by repeated exact
/// synthetic division. Throws InfiniteOrder for the zero form.
inline unsigned linear_factor_order(const BinaryForm& f, const Rat& s0, const Rat& t0) {
    if (s0 == 0 && t0 == 0) throw Error(errors::invalid_argument, "(0:0) is not a point of P^1");
    if (f.is_zero()) throw Error(errors::infinite_order, "the zero form vanishes to infinite order");
    require_binary_form(f, "linear_factor_order");
    std::vector<Rat> c = to_dense(f);
    const Rat alpha = t0, beta = -s0;  // divisor alpha*s + beta*t
    unsigned order = 0;
    while (c.size() > 1) {
        std::size_t n = c.size() - 1;
        std::vector<Rat> q(n);
        if (alpha != 0) {
            for (std::size_t i = 0; i < n; ++i) q[i] = (c[i] - (i ? beta * q[i - 1] : Rat(0))) / alpha;
            if (c[n] != beta * q[n - 1]) break;
        } else {
            if (c[0] != 0) break;
            for (std::size_t i = 1; i <= n; ++i) q[i - 1] = c[i] / beta;
        }
        c = std::move(q);
        ++order;
    }
    return order;
}

/// Largest k with g^k dividing f; g must be nonconstant.
inline unsigned factor_multiplicity(const MPoly& f, const MPoly& g) {
    if (f.is_zero()) throw Error(errors::infinite_order, "the zero polynomial vanishes to infinite order");
    if (g.is_constant()) throw Error(errors::invalid_argument, "factor_multiplicity: constant factor");
    unsigned k = 0;
    MPoly cur = f;
    while (auto q = try_divide(cur, g)) {
        cur = std::move(*q);
        ++k;
    }
    return k;
}

inline BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    unsigned ks = std::min(a.order_in(0), b.order_in(0));
    unsigned kt = std::min(a.order_in(1), b.order_in(1));
    auto strip = [](const BinaryForm& f) {
        return divide_exact(f, MPoly::monomial(st_vars(), {f.order_in(0), f.order_in(1)}, Rat(1)));
    };
    detail::UPoly g = detail::ugcd(dehomogenize(strip(a)), dehomogenize(strip(b)));
    return primitive_part(MPoly::monomial(st_vars(), {ks, kt}, Rat(1)) * homogenize(g));
}

struct SquarefreeFactor {
    BinaryForm factor;
    unsigned multiplicity;
};

struct SquarefreeDecomposition {
    Rat content;
    std::vector<SquarefreeFactor> factors;
};

/// f = content * prod factor^multiplicity with primitive integer factors of
/// positive leading coefficient, squarefree and pairwise coprime. The powers
/// of s and t come first, then the remaining parts by ascending
/// multiplicity.
inline SquarefreeDecomposition squarefree_decomp(const BinaryForm& f) {
    if (f.is_zero()) throw Error(errors::zero_input, "squarefree decomposition of the zero form");
    require_binary_form(f, "squarefree_decomp");
    SquarefreeDecomposition out;
    unsigned ks = f.order_in(0), kt = f.order_in(1);
    if (ks) out.factors.push_back({s_power(1), ks});
    if (kt) out.factors.push_back({t_power(1), kt});
    MPoly rest = divide_exact(f, MPoly::monomial(st_vars(), {ks, kt}, Rat(1)));
    detail::UPoly u = dehomogenize(rest);
    if (detail::udeg(u) > 0) {
        // Yun's algorithm
        detail::UPoly du = detail::uderiv(u);
        detail::UPoly a = detail::ugcd(u, du);
        detail::UPoly b = detail::uexact_div(u, a);
        detail::UPoly c = detail::uexact_div(du, a);
        detail::UPoly d = detail::usub(c, detail::uderiv(b));
        unsigned i = 1;
        while (detail::udeg(b) > 0) {
            detail::UPoly ai = detail::ugcd(b, d);
            b = detail::uexact_div(b, ai);
            c = detail::uexact_div(d, ai);
            d = detail::usub(c, detail::uderiv(b));
            if (detail::udeg(ai) > 0) out.factors.push_back({primitive_part(homogenize(ai)), i});
            ++i;
        }
    }
    MPoly product = MPoly::constant(st_vars(), Rat(1));
    for (const auto& sf : out.factors) product *= pow(sf.factor, sf.multiplicity);
    out.content = f.leading_term().coeff / product.leading_term().coeff;
    return out;
}

/// One class of zeros of a binary form: either a rational point (linear
/// factor) or the roots of a residual factor without rational roots.
struct ZeroClass {
    BinaryForm factor;
    unsigned degree = 0;
    unsigned multiplicity = 0;
    /// Known irreducible over Q (always true for degree <= 3 without rational
    /// roots, and for linear factors).
    bool irreducible = false;
    /// (s0:t0) for linear factors, normalized to coprime integers with t0 > 0,
    /// or (1:0).
    std::optional<PointP1> root;
};

inline PointP1 normalize_root(const Rat& s0, const Rat& t0) { return PointP1{s0, t0}.normalized(); }

/// Zero classes of f: squarefree decomposition, then every squarefree part
/// split into its rational linear factors and a residual.
inline std::vector<ZeroClass> zero_classes(const BinaryForm& f) {
    std::vector<ZeroClass> out;
    for (const auto& [factor, mult] : squarefree_decomp(f).factors) {
        unsigned deg = factor.degree().value();
        if (deg == 1) {
            auto c = to_dense(factor);  // c0 s + c1 t
            out.push_back({factor, 1, mult, true, normalize_root(-c[1], c[0])});
            continue;
        }
        detail::UPoly u = dehomogenize(factor);
        auto roots = detail::rational_roots(u);
        if (!roots) {
            out.push_back({factor, deg, mult, false, std::nullopt});
            continue;
        }
        detail::UPoly rest = u;
        for (const Rat& r : *roots) {
            rest = detail::uexact_div(rest, detail::UPoly{-r, Rat(1)});
            BinaryForm lin = linear_form_at(r, Rat(1));
            out.push_back({lin, 1, mult, true, normalize_root(r, Rat(1))});
        }
        if (detail::udeg(rest) > 0) {
            unsigned rd = static_cast<unsigned>(detail::udeg(rest));
            out.push_back({primitive_part(homogenize(rest)), rd, mult, rd <= 3, std::nullopt});
        }
    }
    return out;
}

}  // namespace sextactic
