#include "orchard/arrangement.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace orchard {

namespace {

constexpr std::int64_t kGroupLinesCap = 1 << 10;
constexpr std::int64_t kGeometricCap = 64;

void check_normalized_distinct(const std::vector<ProjPoint>& points, const Field& field) {
    std::unordered_map<std::int64_t, int> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ProjPoint& P = points[i];
        if (&P.X.field() != &field) fail(Errc::SpecMismatch, "point from a different field");
        if (P.is_infinity()) {
            if (!P.X.is_zero() || !P.Y.is_one())
                fail(Errc::ParseError, "point at infinity must be (0:1:0)");
        } else if (!P.Z.is_one()) {
            fail(Errc::ParseError, "affine points must be normalized to Z = 1");
        }
        if (!seen.emplace(P.key(), static_cast<int>(i)).second)
            fail(Errc::DuplicatePoints, "duplicate point at position " + std::to_string(i));
    }
}

// Walks all normalized dual vectors (a:b:c), leading coefficient 1, and
// reports the incident input indices for each line ax + by + cz = 0.
template <typename Visit>
void scan_lines(const std::vector<ProjPoint>& points, const Field& field, Visit&& visit) {
    auto els = field.elements();
    std::vector<int> hits;
    auto run = [&](const FieldElement& a, const FieldElement& b, const FieldElement& c) {
        hits.clear();
        for (std::size_t i = 0; i < points.size(); ++i) {
            const ProjPoint& P = points[i];
            if ((a * P.X + b * P.Y + c * P.Z).is_zero()) hits.push_back(static_cast<int>(i));
        }
        visit(hits);
    };
    for (const auto& b : els)
        for (const auto& c : els) run(field.one(), b, c);
    for (const auto& c : els) run(field.zero(), field.one(), c);
    run(field.zero(), field.zero(), field.one());
}

} // namespace

Arrangement lines_from_group(const EllipticCurve& curve) {
    if (curve.field().q() > static_cast<std::int64_t>(effective_q_cap(kGroupLinesCap)))
        fail(Errc::TooLarge, "group-law line enumeration capped at q <= 2^10");

    Arrangement arr;
    arr.points = curve.points();

    std::unordered_map<std::int64_t, int> index_of;
    index_of.reserve(arr.points.size() * 2);
    for (std::size_t i = 0; i < arr.points.size(); ++i)
        index_of.emplace(arr.points[i].key(), static_cast<int>(i));

    const int n = arr.n_points();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ProjPoint third = curve.negate(curve.add(arr.points[static_cast<std::size_t>(i)],
                                                     arr.points[static_cast<std::size_t>(j)]));
            int k = index_of.at(third.key());
            // Each sorted triple is emitted from its two smallest indices;
            // k <= j also drops tangent chords whose third point repeats.
            if (k > j) arr.lines.push_back({i, j, k});
        }
    }
    return arr;
}

Arrangement lines_geometric(const std::vector<ProjPoint>& points, const FieldPtr& field) {
    if (field->q() > static_cast<std::int64_t>(effective_q_cap(kGeometricCap)))
        fail(Errc::TooLarge, "geometric line scan capped at q <= 64");
    check_normalized_distinct(points, *field);

    Arrangement arr;
    arr.points = points;
    scan_lines(points, *field, [&](const std::vector<int>& hits) {
        if (hits.size() == 3) arr.lines.push_back({hits[0], hits[1], hits[2]});
    });
    std::sort(arr.lines.begin(), arr.lines.end());
    return arr;
}

int max_line_incidence(const std::vector<ProjPoint>& points, const FieldPtr& field) {
    if (field->q() > static_cast<std::int64_t>(effective_q_cap(kGeometricCap)))
        fail(Errc::TooLarge, "geometric line scan capped at q <= 64");
    check_normalized_distinct(points, *field);

    int best = 0;
    scan_lines(points, *field, [&](const std::vector<int>& hits) {
        best = std::max(best, static_cast<int>(hits.size()));
    });
    return best;
}

} // namespace orchard
