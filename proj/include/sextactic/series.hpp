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
#include <map>
#include <optional>
#include <string>

#include "sextactic/errors.hpp"
#include "sextactic/rat.hpp"

namespace sextactic {

/// Power series in one local parameter known modulo t^trunc. Coefficients of
/// order >= trunc are unknown, never assumed zero.
class TruncSeries {
   public:
    TruncSeries() = default;
    explicit TruncSeries(int trunc) : trunc_(trunc) {
        if (trunc < 0) throw Error(errors::invalid_argument, "negative truncation");
    }

    static TruncSeries monomial(const Rat& c, int exponent, int trunc) {
        TruncSeries s(trunc);
        s.set(exponent, c);
        return s;
    }

    int trunc() const noexcept { return trunc_; }
    const std::map<int, Rat>& coefficients() const noexcept { return coeffs_; }

    /// Stores c t^e; terms at or beyond the truncation are discarded.
    void set(int e, const Rat& c) {
        if (e < 0) throw Error(errors::invalid_argument, "negative series exponent");
        if (e >= trunc_) return;
        if (c == 0)
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }

    Rat coefficient(int e) const {
        if (e >= trunc_)
            throw TruncationInsufficient(e + 1, "coefficient of t^" + std::to_string(e) + " is beyond truncation " +
                                                    std::to_string(trunc_));
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    /// Smallest stored exponent; nullopt means "valuation >= trunc".
    std::optional<int> valuation() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.begin()->first;
    }
    /// Valuation, or trunc when unresolved: a valid lower bound either way.
    int valuation_bound() const noexcept { return coeffs_.empty() ? trunc_ : coeffs_.begin()->first; }

    TruncSeries truncated(int trunc) const {
        TruncSeries r(std::min(trunc, trunc_));
        for (const auto& [e, c] : coeffs_)
            if (e < r.trunc_) r.coeffs_.emplace(e, c);
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, false); }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, true); }

    friend TruncSeries operator*(const Rat& k, const TruncSeries& a) {
        TruncSeries r(a.trunc_);
        if (k == 0) return r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_.emplace(e, k * c);
        return r;
    }

    /// The product is known modulo t^min(Na + vb, Nb + va), where v is the
    /// (lower bound on the) valuation.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int trunc = std::min(a.trunc_ + b.valuation_bound(), b.trunc_ + a.valuation_bound());
        TruncSeries r(trunc);
        for (const auto& [ea, ca] : a.coeffs_) {
            if (ea >= trunc) break;
            for (const auto& [eb, cb] : b.coeffs_) {
                if (ea + eb >= trunc) break;
                r.coeffs_[ea + eb] += ca * cb;
            }
        }
        std::erase_if(r.coeffs_, [](const auto& kv) { return kv.second == 0; });
        return r;
    }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    std::string to_string() const {
        std::string out;
        for (const auto& [e, c] : coeffs_) {
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            Rat mag = abs(c);
            std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
            if (mono.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + "*" + mono;
        }
        std::string tail = "O(t^" + std::to_string(trunc_) + ")";
        return out.empty() ? tail : out + " + " + tail;
    }

   private:
    static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, bool subtract) {
        TruncSeries r(std::min(a.trunc_, b.trunc_));
        for (const auto& [e, c] : a.coeffs_)
            if (e < r.trunc_) r.coeffs_.emplace(e, c);
        for (const auto& [e, c] : b.coeffs_) {
            if (e >= r.trunc_) continue;
            auto& slot = r.coeffs_[e];
            if (subtract)
                slot -= c;
            else
                slot += c;
        }
        std::erase_if(r.coeffs_, [](const auto& kv) { return kv.second == 0; });
        return r;
    }

    int trunc_ = 0;
    std::map<int, Rat> coeffs_;
};

}  // namespace sextactic
