#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "orchard/arrangement.hpp"
#include "orchard/group_counting.hpp"

using namespace orchard;

namespace {

std::vector<EllipticCurve> all_short_form_curves(const FieldPtr& f) {
    std::vector<EllipticCurve> out;
    for (const auto& a : f->elements())
        for (const auto& b : f->elements()) {
            FieldElement zero = f->zero();
            if (weierstrass_discriminant(zero, zero, zero, a, b).is_zero()) continue;
            out.emplace_back(f, zero, zero, zero, a, b);
        }
    return out;
}

} // namespace

TEST_CASE("the 6-point, 4-line configuration") {
    auto f5 = Field::make(5, 1);
    auto e = EllipticCurve::short_form(f5, 0, 3);
    Arrangement arr = lines_from_group(e);
    REQUIRE(arr.n_points() == 6);
    // Point order: O, A=(1,2), B=(1,3), C=(2,1), D=(2,4), E=(3,0); the four
    // lines are {O,A,B}, {O,C,D}, {A,C,E}, {B,D,E}.
    std::vector<std::array<int, 3>> expected = {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}};
    CHECK(arr.lines == expected);
}

TEST_CASE("the 8-point, 7-line configuration") {
    auto f7 = Field::make(7, 1);
    auto e = EllipticCurve::from_ints(f7, 0, 5, 0, 4, 0); // y^2 = x^3 + 5x^2 + 4x
    Arrangement arr = lines_from_group(e);
    REQUIRE(arr.n_points() == 8);
    // O, A=(0,0), B=(2,1), C=(2,6), D=(3,0), E=(5,2), F=(5,5), G=(6,0).
    std::vector<std::array<int, 3>> expected = {{0, 2, 3}, {0, 5, 6}, {1, 4, 7}, {2, 4, 6},
                                                {2, 5, 7}, {3, 4, 5}, {3, 6, 7}};
    CHECK(arr.lines == expected);
    CHECK(e.group_structure() == AbelianStructure{{2, 4}});
}

TEST_CASE("the 9-point, 12-line configuration") {
    auto f7 = Field::make(7, 1);
    auto e = EllipticCurve::short_form(f7, 0, 2); // y^2 = x^3 + 2
    Arrangement arr = lines_from_group(e);
    REQUIRE(arr.n_points() == 9);
    // O, A=(0,3), B=(0,4), C=(3,1), D=(3,6), E=(5,1), F=(5,6), G=(6,1), H=(6,6).
    std::vector<std::array<int, 3>> expected = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 7, 8},
                                                {1, 3, 8}, {1, 4, 5}, {1, 6, 7}, {2, 3, 6},
                                                {2, 4, 7}, {2, 5, 8}, {3, 5, 7}, {4, 6, 8}};
    CHECK(arr.lines == expected);
    CHECK(arr.n_lines() == green_tao_bound(9) + 2);
}

TEST_CASE("geometric scan agrees with the group law") {
    auto f5 = Field::make(5, 1);
    auto e = EllipticCurve::short_form(f5, 0, 3);
    Arrangement group = lines_from_group(e);
    Arrangement geo = lines_geometric(group.points, f5);
    CHECK(group.lines == geo.lines);

    auto f7 = Field::make(7, 1);
    auto e9 = EllipticCurve::short_form(f7, 0, 2);
    Arrangement group9 = lines_from_group(e9);
    CHECK(lines_geometric(group9.points, f7).lines == group9.lines);
}

TEST_CASE("geometric scan on hand-picked point sets") {
    auto f7 = Field::make(7, 1);
    // Three collinear affine points alone: exactly one 3-rich line.
    std::vector<ProjPoint> pts = {
        ProjPoint::affine(f7->from_int(0), f7->from_int(0)),
        ProjPoint::affine(f7->from_int(1), f7->from_int(1)),
        ProjPoint::affine(f7->from_int(2), f7->from_int(2)),
    };
    Arrangement arr = lines_geometric(pts, f7);
    CHECK(arr.lines == std::vector<std::array<int, 3>>{{0, 1, 2}});

    // The point at infinity sits on vertical lines: (0:1:0), (1,0), (1,1)
    // share the line x = 1.
    std::vector<ProjPoint> vertical = {
        ProjPoint::infinity(*f7),
        ProjPoint::affine(f7->from_int(1), f7->from_int(0)),
        ProjPoint::affine(f7->from_int(1), f7->from_int(1)),
    };
    CHECK(lines_geometric(vertical, f7).n_lines() == 1);

    // A 4-point line is not 3-rich.
    std::vector<ProjPoint> four = {
        ProjPoint::affine(f7->from_int(0), f7->from_int(0)),
        ProjPoint::affine(f7->from_int(1), f7->from_int(1)),
        ProjPoint::affine(f7->from_int(2), f7->from_int(2)),
        ProjPoint::affine(f7->from_int(3), f7->from_int(3)),
    };
    CHECK(lines_geometric(four, f7).n_lines() == 0);
    CHECK(max_line_incidence(four, f7) == 4);

    std::vector<ProjPoint> dup = {pts[0], pts[0]};
    CHECK_THROWS_AS(lines_geometric(dup, f7), Error);
}

TEST_CASE("oracle agreement and arrangement invariants, exhaustive for q in {5,7}") {
    for (std::int64_t q : {5, 7}) {
        auto f = Field::make(q, 1);
        for (const auto& e : all_short_form_curves(f)) {
            Arrangement group = lines_from_group(e);
            Arrangement geo = lines_geometric(group.points, f);
            CHECK(group.lines == geo.lines);
            CHECK(max_line_incidence(group.points, f) <= 3);
            CHECK(static_cast<std::int64_t>(group.lines.size()) ==
                  zero_sum_triples(e.group_structure()));

            // Bound law: the count is the Green-Tao value, +2 exactly when
            // both invariant factors are divisible by 3.
            AbelianStructure s = e.group_structure();
            if (s.order() >= 3) {
                SolutionCount c = classify_excess(s);
                CHECK(group.n_lines() == c.bound + c.excess);
            }

            // Triples never repeat an index (tangent chords are excluded).
            for (const auto& line : group.lines) {
                CHECK(line[0] < line[1]);
                CHECK(line[1] < line[2]);
            }
        }
    }
}

TEST_CASE("arrangement caps") {
    auto f = Field::make(2, 11); // q = 2048 > group-lines cap
    auto e = EllipticCurve::from_ints(f, 0, 0, 1, 0, 0);
    try {
        lines_from_group(e);
        FAIL("cap not enforced");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::TooLarge);
    }

    auto f128 = Field::make(2, 7); // q = 128 > geometric cap
    try {
        lines_geometric({ProjPoint::infinity(*f128)}, f128);
        FAIL("cap not enforced");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::TooLarge);
    }
}
