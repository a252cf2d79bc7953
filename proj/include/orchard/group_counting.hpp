#pragma once

#include <cstdint>

#include "orchard/elliptic_curve.hpp"

namespace orchard {

/// Count of unordered solutions of x + y + z = 0 with pairwise distinct
/// entries, next to the Green-Tao value for the same number of points.
struct SolutionCount {
    AbelianStructure group;
    std::int64_t formula_count = 0;
    std::int64_t bound = 0;
    std::int64_t excess = 0;
};

/// 3-torsion exponent of the group: the number of invariant factors
/// divisible by 3, so that the 3-torsion subgroup has size 3^psi. This is
/// the value the closed-form triple count needs; it is validated against
/// the brute-force oracle over every small group shape in the test suite.
int psi(const AbelianStructure& g);

/// Diagnostic variant k - j (distance from the first factor divisible by 3
/// to the last); off by one from psi whenever the 3-part is nontrivial.
int psi_index_gap(const AbelianStructure& g);

/// Closed form (prod n_i^2 - 3 prod n_i + 2*3^psi) / 6; the division must
/// be exact and a failed divisibility check reports NonInteger.
std::int64_t zero_sum_triples(const AbelianStructure& g);

/// Independent oracle: walks all ordered pairs of group elements in
/// mixed-radix coordinates and counts distinct unordered triples directly.
/// Capped at |G| <= 500.
std::int64_t zero_sum_triples_bruteforce(const AbelianStructure& g);

/// floor(N(N-3)/6) + 1 for N >= 3.
std::int64_t green_tao_bound(std::int64_t n_points);

/// Formula count, bound and excess for a rank <= 2 group; checks the
/// excess-dichotomy (excess is 2 exactly when 3 divides n1, otherwise 0).
SolutionCount classify_excess(const AbelianStructure& g);

} // namespace orchard
