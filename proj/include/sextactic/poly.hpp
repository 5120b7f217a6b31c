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
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sextactic/errors.hpp"
#include "sextactic/rat.hpp"

namespace sextactic {

/// Ordered set of single-letter variables, e.g. "xyz" or "st". Position 0 is
/// the most significant variable of the lexicographic tie break.
class VarSet {
   public:
    static constexpr std::size_t max_vars = 3;

    VarSet() : names_("xyz") {}
    explicit VarSet(std::string names) : names_(std::move(names)) {
        if (names_.empty() || names_.size() > max_vars)
            throw Error(errors::invalid_argument, "variable set must have 1 to 3 variables");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw Error(errors::invalid_argument, "repeated variable in variable set");
    }

    std::size_t size() const noexcept { return names_.size(); }
    char name(std::size_t i) const { return names_.at(i); }
    const std::string& names() const noexcept { return names_; }

    std::optional<std::size_t> index_of(char c) const noexcept {
        auto pos = names_.find(c);
        if (pos == std::string::npos) return std::nullopt;
        return pos;
    }

    friend bool operator==(const VarSet&, const VarSet&) = default;

   private:
    std::string names_;
};

inline const VarSet& xyz_vars() {
    static const VarSet v("xyz");
    return v;
}
inline const VarSet& st_vars() {
    static const VarSet v("st");
    return v;
}

/// Exponent vector packed into 64 bits as [degree | e0 | e1 | e2], 16 bits
/// each. Comparing keys numerically is graded-lex with e0 > e1 > e2.
class Monomial {
   public:
    static constexpr unsigned max_exponent = 0xFFFF;

    constexpr Monomial() = default;

    static Monomial from_exponents(std::span<const unsigned> e) {
        if (e.size() > VarSet::max_vars) throw Error(errors::invalid_argument, "too many exponents");
        std::uint64_t deg = 0;
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            deg += e[i];
            key |= static_cast<std::uint64_t>(e[i]) << shift(i);
        }
        if (deg > max_exponent) throw Error(errors::overflow, "monomial degree exceeds 65535");
        return Monomial(key | (deg << 48));
    }
    static Monomial from_exponents(std::initializer_list<unsigned> e) {
        return from_exponents(std::span<const unsigned>(e.begin(), e.size()));
    }

    unsigned exponent(std::size_t i) const noexcept {
        return static_cast<unsigned>((key_ >> shift(i)) & 0xFFFF);
    }
    unsigned degree() const noexcept { return static_cast<unsigned>(key_ >> 48); }
    std::uint64_t key() const noexcept { return key_; }

    bool divides(Monomial other) const noexcept {
        for (std::size_t i = 0; i < VarSet::max_vars; ++i)
            if (exponent(i) > other.exponent(i)) return false;
        return true;
    }

    friend Monomial operator*(Monomial a, Monomial b) {
        if (a.degree() + b.degree() > max_exponent)
            throw Error(errors::overflow, "monomial degree exceeds 65535");
        return Monomial(a.key_ + b.key_);
    }
    /// Requires `b.divides(a)`.
    friend Monomial operator/(Monomial a, Monomial b) noexcept { return Monomial(a.key_ - b.key_); }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

   private:
    explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
    static constexpr unsigned shift(std::size_t i) { return static_cast<unsigned>(32 - 16 * i); }

    std::uint64_t key_ = 0;
};

struct Term {
    Monomial mono;
    Rat coeff;

    friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted in
/// descending graded-lex order with no zero coefficients, so equality is
/// plain term-vector equality.
class MPoly {
   public:
    MPoly() = default;
    explicit MPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MPoly constant(const VarSet& vars, const Rat& c) {
        MPoly p(vars);
        if (c != 0) p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static MPoly variable(const VarSet& vars, char name) {
        auto idx = vars.index_of(name);
        if (!idx) throw Error(errors::unknown_variable, std::string("unknown variable '") + name + "'");
        std::array<unsigned, VarSet::max_vars> e{};
        e[*idx] = 1;
        return monomial(vars, std::span<const unsigned>(e.data(), vars.size()), Rat(1));
    }
    static MPoly monomial(const VarSet& vars, std::span<const unsigned> exps, const Rat& c) {
        if (exps.size() != vars.size())
            throw Error(errors::invalid_argument, "exponent vector length does not match variables");
        MPoly p(vars);
        if (c != 0) p.terms_.push_back({Monomial::from_exponents(exps), c});
        return p;
    }
    static MPoly monomial(const VarSet& vars, std::initializer_list<unsigned> exps, const Rat& c) {
        return monomial(vars, std::span<const unsigned>(exps.begin(), exps.size()), c);
    }
    /// Builds a canonical polynomial from arbitrary (possibly repeated, zero)
    /// terms.
    static MPoly from_terms(const VarSet& vars, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
        MPoly p(vars);
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coeff += t.coeff;
            else
                p.terms_.push_back(std::move(t));
        }
        std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
        return p;
    }

    const VarSet& vars() const noexcept { return vars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

    /// Total degree; the zero polynomial has none.
    std::optional<unsigned> degree() const noexcept {
        if (terms_.empty()) return std::nullopt;
        return terms_.front().mono.degree();
    }
    bool is_homogeneous() const noexcept {
        if (terms_.empty()) return true;
        unsigned d = terms_.front().mono.degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
    }
    unsigned degree_in(std::size_t var) const noexcept {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
        return d;
    }
    /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
    unsigned order_in(std::size_t var) const noexcept {
        if (terms_.empty()) return 0;
        unsigned d = Monomial::max_exponent;
        for (const auto& t : terms_) d = std::min(d, t.mono.exponent(var));
        return d;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw Error(errors::zero_input, "leading term of zero polynomial");
        return terms_.front();
    }

    Rat coefficient(Monomial m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Monomial key) { return t.mono > key; });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return Rat(0);
    }
    Rat coefficient(std::initializer_list<unsigned> exps) const {
        return coefficient(Monomial::from_exponents(exps));
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = merge(*this, o, false); }
    MPoly& operator-=(const MPoly& o) { return *this = merge(*this, o, true); }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.coeff *= c;
        }
        return *this;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_vars(a, b);
        MPoly r(a.vars_);
        if (a.is_zero() || b.is_zero()) return r;
        if (a.size() == 1 || b.size() == 1) {
            const MPoly& one = a.size() == 1 ? a : b;
            const MPoly& many = a.size() == 1 ? b : a;
            const Term& m = one.terms_.front();
            r.terms_.reserve(many.size());
            for (const auto& t : many.terms_) r.terms_.push_back({t.mono * m.mono, t.coeff * m.coeff});
            return r;
        }
        std::unordered_map<std::uint64_t, Rat> acc;
        acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
        Rat prod;
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
                auto [it, inserted] = acc.try_emplace((ta.mono * tb.mono).key());
                if (inserted)
                    it->second = prod;
                else
                    it->second += prod;
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [key, c] : acc)
            if (c != 0) r.terms_.push_back({from_key(key), std::move(c)});
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    /// Evaluates at a point given in variable order.
    Rat evaluate(std::span<const Rat> point) const {
        if (point.size() != vars_.size())
            throw Error(errors::invalid_argument, "evaluation point has wrong dimension");
        std::vector<std::vector<Rat>> powers(vars_.size());
        auto power = [&](std::size_t v, unsigned e) -> const Rat& {
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(Rat(1));
            while (cache.size() <= e) cache.push_back(cache.back() * point[v]);
            return cache[e];
        };
        Rat sum = 0;
        for (const auto& t : terms_) {
            Rat v = t.coeff;
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (unsigned e = t.mono.exponent(i)) v *= power(i, e);
            sum += v;
        }
        return sum;
    }

    /// Canonical text: terms in canonical order, `c*` omitted for +-1,
    /// `^1` omitted.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            bool neg = t.coeff < 0;
            Rat mag = abs(t.coeff);
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                unsigned e = t.mono.exponent(i);
                if (e == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += vars_.name(i);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + "*" + mono;
        }
        return out;
    }

   private:
    static Monomial from_key(std::uint64_t key) {
        std::array<unsigned, 3> e{static_cast<unsigned>((key >> 32) & 0xFFFF),
                                  static_cast<unsigned>((key >> 16) & 0xFFFF), static_cast<unsigned>(key & 0xFFFF)};
        return Monomial::from_exponents(e);
    }

    static void check_vars(const MPoly& a, const MPoly& b) {
        if (a.vars_ != b.vars_)
            throw Error(errors::variable_mismatch,
                        "variable sets differ: [" + a.vars_.names() + "] vs [" + b.vars_.names() + "]");
    }

    static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
        check_vars(a, b);
        MPoly r(a.vars_);
        r.terms_.reserve(a.size() + b.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono > ib->mono)) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->mono > ia->mono) {
                r.terms_.push_back({ib->mono, subtract ? Rat(-ib->coeff) : ib->coeff});
                ++ib;
            } else {
                Rat c = subtract ? Rat(ia->coeff - ib->coeff) : Rat(ia->coeff + ib->coeff);
                if (c != 0) r.terms_.push_back({ia->mono, std::move(c)});
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    VarSet vars_;
    std::vector<Term> terms_;
};

inline MPoly pow(const MPoly& base, unsigned e) {
    MPoly result = MPoly::constant(base.vars(), Rat(1));
    MPoly b = base;
    while (e) {
        if (e & 1u) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

inline MPoly partial(const MPoly& f, std::size_t var) {
    if (var >= f.vars().size()) throw Error(errors::unknown_variable, "partial: variable index out of range");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        unsigned e = t.mono.exponent(var);
        if (e == 0) continue;
        std::array<unsigned, VarSet::max_vars> ex{};
        for (std::size_t i = 0; i < f.vars().size(); ++i) ex[i] = t.mono.exponent(i);
        ex[var] -= 1;
        out.push_back({Monomial::from_exponents(std::span<const unsigned>(ex.data(), f.vars().size())),
                       t.coeff * e});
    }
    // Only terms containing `var` survive and all lose the same unit
    // exponent, so no two collide and the graded-lex order is unchanged.
    return MPoly::from_terms(f.vars(), std::move(out));
}

inline MPoly partial(const MPoly& f, char var) {
    auto idx = f.vars().index_of(var);
    if (!idx) throw Error(errors::unknown_variable, std::string("partial: unknown variable '") + var + "'");
    return partial(f, *idx);
}

/// Exact division `a / b`; nullopt when `b` does not divide `a`.
inline std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw Error(errors::zero_input, "division by the zero polynomial");
    if (a.vars() != b.vars()) throw Error(errors::variable_mismatch, "division: variable sets differ");
    if (a.is_zero()) return MPoly(a.vars());
    if (b.size() == 1) {
        const Term& lt = b.terms().front();
        std::vector<Term> q;
        q.reserve(a.size());
        for (const auto& t : a.terms()) {
            if (!lt.mono.divides(t.mono)) return std::nullopt;
            q.push_back({t.mono / lt.mono, t.coeff / lt.coeff});
        }
        return MPoly::from_terms(a.vars(), std::move(q));
    }
    std::map<Monomial, Rat, std::greater<>> rem;
    for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);
    const Term& lt = b.terms().front();
    std::vector<Term> q;
    Rat prod;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!lt.mono.divides(top->first)) return std::nullopt;
        Monomial qm = top->first / lt.mono;
        Rat qc = top->second / lt.coeff;
        for (const auto& tb : b.terms()) {
            Monomial m = qm * tb.mono;
            mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), tb.coeff.get_mpq_t());
            auto [it, inserted] = rem.try_emplace(m);
            if (inserted)
                it->second = -prod;
            else
                it->second -= prod;
            if (it->second == 0) rem.erase(it);
        }
        q.push_back({qm, std::move(qc)});
    }
    return MPoly::from_terms(a.vars(), std::move(q));
}

inline MPoly divide_exact(const MPoly& a, const MPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw Error(errors::not_exact, "polynomial division is not exact");
    return std::move(*q);
}

/// Positive rational c with f / c an integer polynomial with coprime
/// coefficients. Zero for the zero polynomial.
inline Rat content(const MPoly& f) {
    BigInt g = 0, l = 1;
    for (const auto& t : f.terms()) {
        g = gcd(g, BigInt(t.coeff.get_num()));
        l = lcm(l, BigInt(t.coeff.get_den()));
    }
    if (g == 0) return Rat(0);
    return make_rat(abs(g), l);
}

/// f divided by its content, sign fixed so the leading canonical coefficient
/// is positive. Conics and other projective objects use this as their
/// canonical representative.
inline MPoly primitive_part(const MPoly& f) {
    if (f.is_zero()) return f;
    Rat c = content(f);
    if (f.leading_term().coeff < 0) c = -c;
    return f * Rat(1 / c);
}

/// Substitutes `subs[i]` for variable i of `f`. All substitutes share one
/// variable set, which becomes the result's.
inline MPoly compose(const MPoly& f, std::span<const MPoly> subs) {
    if (subs.size() != f.vars().size()) throw Error(errors::invalid_argument, "compose: wrong number of substitutes");
    const VarSet& target = subs.front().vars();
    std::vector<std::vector<MPoly>> powers(subs.size());
    auto power = [&](std::size_t v, unsigned e) -> const MPoly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(MPoly::constant(target, Rat(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * subs[v]);
        return cache[e];
    };
    MPoly result(target);
    for (const auto& t : f.terms()) {
        MPoly term = MPoly::constant(target, t.coeff);
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (unsigned e = t.mono.exponent(i)) term *= power(i, e);
        result += term;
    }
    return result;
}

}  // namespace sextactic
