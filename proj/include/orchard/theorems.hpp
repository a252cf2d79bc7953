#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orchard/arrangement.hpp"
#include "orchard/group_counting.hpp"

namespace orchard {

/// Outcome of a curve-order or group-structure realizability test, carrying
/// the single clause that decided it.
struct AdmissibilityVerdict {
    std::int64_t q = 0;
    std::int64_t t = 0;
    bool admissible = false;
    std::string rule;
};

/// Realizability of #E(F_q) = q+1-t over q = p^n: trace prime to p inside
/// the Hasse bound, or one of the special supersingular traces.
AdmissibilityVerdict schoof_admissible(std::int64_t p, int n, std::int64_t t);

/// Realizability of the group shape Z_n1 + Z_n2 (prime-to-p part, n1 | n2)
/// for an admissible order: n1 = n2 when n is even with t^2 = 4q, otherwise
/// n1 must divide q-1.
AdmissibilityVerdict ruck_admissible(std::int64_t p, int n, std::int64_t t, std::int64_t n1,
                                     std::int64_t n2);

/// Named supersingular curve families with known orders and group shapes.
enum class CurveFamily {
    MordellB,           // y^2 = x^3 + b,      q = 2 mod 3: cyclic of order q+1
    MinusX,             // y^2 = x^3 - x,      q = 3 mod 4: Z_2 + Z_{(q+1)/2}
    PlusX,              // y^2 = x^3 + x,      q = 3 mod 4: cyclic of order q+1
    Char2Cyclic,        // y^2 + y = x^3,          n odd: cyclic of order q+1
    Char2X,             // y^2 + y = x^3 + x,      n odd: cyclic, q+1 -+ sqrt(2q)
    Char2X1,            // y^2 + y = x^3 + x + 1,  n odd: cyclic, q+1 +- sqrt(2q)
    Char2EvenDeltaX,    // y^2 + y = x^3 + dx,     n even: cyclic of order q+1
    Char2EvenGamma,     // y^2 + gy = x^3,         n even: cyclic, q+1 +- sqrt(q)
    Char2EvenGammaA,    // y^2 + gy = x^3 + a,     n even: cyclic, q+1 -+ sqrt(q)
    Char2EvenGamma2,    // y^2 + g^2 y = x^3,      n even: cyclic, q+1 +- sqrt(q)
    Char2EvenGamma2B,   // y^2 + g^2 y = x^3 + b,  n even: cyclic, q+1 -+ sqrt(q)
    Char2EvenZZ,        // y^2 + y = x^3,          n even: Z_m + Z_m
    Char2EvenZZOmega,   // y^2 + y = x^3 + w,      n even: Z_m + Z_m, other sign
};

const char* curve_family_name(CurveFamily family);
std::optional<CurveFamily> parse_curve_family(const std::string& name);

/// Target number of points for the family over this field (the group-model
/// order; for the two Z_m + Z_m rows the order follows the group model, not
/// the misprinted order column).
std::int64_t family_expected_order(CurveFamily family, const Field& field);

/// Builds the family representative. Families with free parameters search
/// field elements in enumeration order until the point count matches the
/// expected order; no match raises NoParameterFound. A field that fails the
/// family's congruence requirement raises CongruenceViolated. MordellB
/// accepts an optional nonzero b (default 1).
EllipticCurve construct_family(CurveFamily family, const FieldPtr& field,
                               std::optional<std::int64_t> param = std::nullopt);

struct CheckItem {
    std::string what;
    std::string expected;
    std::string got;
    bool ok = false;
};

struct TheoremReport {
    std::string id;
    bool pass = true;
    std::vector<CheckItem> checks;
    std::vector<std::string> notes;

    void check(const std::string& what, const std::string& expected, const std::string& got);
    void check_int(const std::string& what, std::int64_t expected, std::int64_t got);
};

/// Arrangements of N = q+1 points meeting the Green-Tao value exactly, for
/// odd q: both group models when q = 3 mod 4, the cyclic one otherwise.
TheoremReport verify_t35(std::int64_t q);
/// Cyclic arrangements over F_{2^n} at N = q+1 and q+1 +- sqrt(2q) (n odd)
/// or q+1 +- sqrt(q) (n even), all meeting the Green-Tao value.
TheoremReport verify_t36(std::int64_t q);
/// Z_m + Z_m arrangements at N = (sqrt(q) -+ 1)^2 for square q, with the
/// closed-form line counts; the Green-Tao value is exceeded by 2 when 3 | N.
TheoremReport verify_t37(std::int64_t q);
/// For prime p and admissible N = p+1-t: every invariant-factor splitting
/// N = n1 * n2 allowed by the structure theory is realized by a witness
/// curve whose line count matches the closed form.
TheoremReport verify_t38(std::int64_t p, std::int64_t N);

/// Dispatch by id "t35" | "t36" | "t37" | "t38" (t38 needs both arguments).
TheoremReport verify_theorem(const std::string& id, std::int64_t q,
                             std::optional<std::int64_t> n_points = std::nullopt);

/// One row of the worked-examples table: the printed values, the values we
/// recompute, and a note when the printed field size is a known misprint.
struct Table3Row {
    std::string curve_label;
    std::array<std::int64_t, 5> coeffs; // a1, a2, a3, a4, a6 over the integers
    std::int64_t printed_q = 0;
    std::int64_t effective_q = 0;
    std::string printed_group;
    std::int64_t printed_n = 0;
    std::int64_t printed_t = 0;
    std::int64_t printed_bound = 0;
    std::string note;

    std::string computed_group;
    std::int64_t computed_n = 0;
    std::int64_t computed_t_formula = 0;
    std::int64_t computed_t_enumerated = -1; // -1 when skipped (N > 300)
    std::int64_t computed_bound = 0;
    std::int64_t excess = 0;
    bool pass = false;
};

/// Recomputes all 12 rows. Rows where the printed field size contradicts
/// the rest of the row (Hasse bound or the group column) are evaluated at
/// the corrected size and annotated, never silently altered.
std::vector<Table3Row> reproduce_table3();

/// Exhaustive short-form sweep over F_p: for every nonsingular y^2 = x^3 +
/// Ax + B, the point count, group structure and line count. Used for the
/// per-N statistics of the CLI and the realizable-order cross-check.
struct SweepEntry {
    std::int64_t n_points = 0;
    std::int64_t curve_count = 0;
    std::vector<std::string> structures; // distinct, sorted
    std::int64_t bound = 0;
    std::vector<std::int64_t> line_counts; // distinct, sorted
};
std::vector<SweepEntry> sweep_short_form(std::int64_t p);

} // namespace orchard
