#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "orchard/elliptic_curve.hpp"

namespace orchard {

/// A point set together with its 3-rich lines, each line stored as the
/// sorted index triple (i, j, k) into the point list; the triples are in
/// lexicographic order.
struct Arrangement {
    std::vector<ProjPoint> points;
    std::vector<std::array<int, 3>> lines;

    int n_points() const { return static_cast<int>(points.size()); }
    int n_lines() const { return static_cast<int>(lines.size()); }
};

/// Enumerates the 3-rich lines of E(F_q) through the group law: for each
/// point pair the third point on their chord is -(P+Q), kept when it is a
/// distinct member of the set. Capped at q <= 2^10.
Arrangement lines_from_group(const EllipticCurve& curve);

/// Independent geometric route: scans all q^2+q+1 lines of PG(2,q) in dual
/// coordinates and keeps those meeting the point set in exactly 3 points.
/// Points must be distinct and normalized. Capped at q <= 64.
Arrangement lines_geometric(const std::vector<ProjPoint>& points, const FieldPtr& field);

/// Largest number of input points on any single line of PG(2,q); 3-rich
/// arrangements from a cubic must never reach 4. Same cap as the scan.
int max_line_incidence(const std::vector<ProjPoint>& points, const FieldPtr& field);

} // namespace orchard
