#pragma once

#include <string>

#include "orchard/rational.hpp"
#include "orchard/theorems.hpp"

namespace orchard {

/// "p^n" with the default modulus, or "p^n:c0,c1,...,cn" with an explicit
/// one (constant term first, monic).
FieldPtr parse_field(const std::string& text);

/// "<fieldspec>;a1,a2,a3,a4,a6" with 5*n comma-separated residues grouped
/// per coefficient (constant term first), or the short-form sugar
/// "<fieldspec>;y2=x3+Ax+B" with integer A, B.
EllipticCurve parse_curve(const std::string& text);

/// Comma-separated invariant factors, e.g. "2,10"; the divisibility chain
/// is enforced.
AbelianStructure parse_group(const std::string& text);

/// Canonical arrangement file: header "N t q", N point rows "X Y Z", then
/// t sorted index rows "i j k"; whitespace-separated decimal, LF-terminated.
std::string arrangement_to_text(const Arrangement& arr, const Field& field);

/// Rational configuration in the same shape with q = 0. Coordinates may be
/// "num/den"; '#' starts a comment line. The line rows are optional input
/// (t = 0 leaves them out).
struct RationalConfig {
    std::vector<RationalPoint> points;
    std::vector<std::array<int, 3>> lines;
};
RationalConfig parse_rational_config(const std::string& text);
std::string rational_config_to_text(const RationalConfig& config);

} // namespace orchard
