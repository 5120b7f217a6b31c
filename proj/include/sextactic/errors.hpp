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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sextactic {

/// Byte range [begin, end) into a parsed input text.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Every domain failure raised by the library. `kind()` is a stable
/// CamelCase identifier (e.g. "TruncationInsufficient") that the CLI prints
/// next to the message.
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

    virtual std::optional<SourceSpan> span() const noexcept { return std::nullopt; }

   private:
    std::string kind_;
};

class ParseError : public Error {
   public:
    ParseError(std::string kind, const std::string& message, SourceSpan span)
        : Error(std::move(kind), message), span_(span) {}

    std::optional<SourceSpan> span() const noexcept override { return span_; }

   private:
    SourceSpan span_;
};

/// Raised when a series computation needs coefficients beyond the declared
/// truncation. `needed()` is the smallest truncation that could resolve it.
class TruncationInsufficient : public Error {
   public:
    TruncationInsufficient(int needed, const std::string& message)
        : Error("TruncationInsufficient", message), needed_(needed) {}

    int needed() const noexcept { return needed_; }

   private:
    int needed_;
};

namespace errors {
inline constexpr const char* variable_mismatch = "VariableMismatch";
inline constexpr const char* unknown_variable = "UnknownVariable";
inline constexpr const char* non_square = "NonSquareMatrix";
inline constexpr const char* zero_input = "ZeroInput";
inline constexpr const char* infinite_order = "InfiniteOrder";
inline constexpr const char* not_exact = "InexactDivision";
inline constexpr const char* inhomogeneous = "Inhomogeneous";
inline constexpr const char* degree_too_low = "DegreeTooLow";
inline constexpr const char* hessian_vanishes = "HessianVanishes";
inline constexpr const char* not_on_curve = "PointNotOnCurve";
inline constexpr const char* singular_point = "SingularPoint";
inline constexpr const char* inflection_point = "InflectionPoint";
inline constexpr const char* non_primitive = "NonPrimitive";
inline constexpr const char* syntax = "SyntaxError";
inline constexpr const char* bad_exponent = "BadExponent";
inline constexpr const char* unequal_degrees = "UnequalDegrees";
inline constexpr const char* zero_triple = "ZeroTriple";
inline constexpr const char* common_factor = "CommonFactor";
inline constexpr const char* malformed_file = "MalformedFile";
inline constexpr const char* invalid_profile = "InvalidProfile";
inline constexpr const char* degenerate = "DegenerateDeterminant";
inline constexpr const char* invalid_argument = "InvalidArgument";
inline constexpr const char* overflow = "ExponentOverflow";
inline constexpr const char* internal = "InternalError";
}  // namespace errors

}  // namespace sextactic
