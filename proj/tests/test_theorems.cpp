#include <doctest.h>

#include <cstdint>

#include "orchard/text_io.hpp"
#include "orchard/theorems.hpp"

using namespace orchard;

TEST_CASE("realizable orders") {
    auto v = schoof_admissible(7, 1, 0);
    CHECK(v.admissible);
    CHECK(v.rule == "n odd, t = 0");

    v = schoof_admissible(2, 2, 4);
    CHECK(v.admissible);
    CHECK(v.rule == "n even, t^2 = 4q");

    v = schoof_admissible(5, 2, 5);
    CHECK(v.admissible);
    CHECK(v.rule == "n even, t^2 = q, p not 1 mod 3");

    CHECK_FALSE(schoof_admissible(5, 1, 5).admissible); // t = 0 mod 5, no special clause
    CHECK_FALSE(schoof_admissible(7, 1, 6).admissible); // 36 > 4q = 28

    v = schoof_admissible(11, 1, -4);
    CHECK(v.admissible);
    CHECK(v.rule == "t not divisible by p, t^2 <= 4q");
}

TEST_CASE("realizable group shapes") {
    CHECK(ruck_admissible(13, 1, -6, 2, 10).admissible); // 2 | 12
    CHECK(ruck_admissible(2, 2, -4, 3, 3).admissible);   // n even, t^2 = 4q, n1 = n2
    CHECK(ruck_admissible(7, 1, 0, 1, 8).admissible);    // cyclic shape
    CHECK_FALSE(ruck_admissible(2, 2, -4, 1, 9).admissible); // needs n1 = n2

    try {
        ruck_admissible(13, 1, -6, 4, 5); // 4 does not divide 5
        FAIL("factorization not validated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadFactorization);
    }
    try {
        ruck_admissible(5, 1, 5, 1, 1);
        FAIL("unrealizable order accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotRealizableOrder);
    }
}

TEST_CASE("curve families") {
    auto f5 = Field::make(5, 1);
    auto e = construct_family(CurveFamily::MordellB, f5, 3); // y^2 = x^3 + 3
    CHECK(e.order() == 6);
    CHECK(e.group_structure() == AbelianStructure{{6}});
    CHECK(construct_family(CurveFamily::MordellB, f5).order() == 6); // default b = 1

    auto f7 = Field::make(7, 1);
    CHECK(construct_family(CurveFamily::MinusX, f7).group_structure() == AbelianStructure{{2, 4}});
    CHECK(construct_family(CurveFamily::PlusX, f7).group_structure() == AbelianStructure{{8}});

    auto f8 = Field::make(2, 3);
    CHECK(construct_family(CurveFamily::Char2X, f8).order() == 5); // q+1-sqrt(2q), n = 3 mod 8
    CHECK(construct_family(CurveFamily::Char2X, f8).group_structure() == AbelianStructure{{5}});
    CHECK(construct_family(CurveFamily::Char2X1, f8).order() == 13);
    CHECK(construct_family(CurveFamily::Char2Cyclic, f8).order() == 9);

    auto f4 = Field::make(2, 2);
    CHECK(construct_family(CurveFamily::Char2EvenZZ, f4).group_structure() ==
          AbelianStructure{{3, 3}});
    CHECK(construct_family(CurveFamily::Char2EvenDeltaX, f4).order() == 5);
    CHECK(construct_family(CurveFamily::Char2EvenGamma, f4).order() == 3); // q+1-sqrt(q), n = 2 mod 4
    CHECK(construct_family(CurveFamily::Char2EvenGammaA, f4).order() == 7);
    CHECK(construct_family(CurveFamily::Char2EvenZZOmega, f4).order() == 1);

    try {
        construct_family(CurveFamily::MordellB, f7); // 7 = 1 mod 3
        FAIL("congruence not checked");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::CongruenceViolated);
    }
}

TEST_CASE("published sign conventions hold for n in {3,5,7}") {
    for (int n : {3, 5, 7}) {
        auto f = Field::make(2, n);
        for (CurveFamily fam : {CurveFamily::Char2Cyclic, CurveFamily::Char2X, CurveFamily::Char2X1}) {
            auto e = construct_family(fam, f); // throws NoParameterFound on a sign flip
            CHECK(e.order() == family_expected_order(fam, *f));
            CHECK(e.group_structure().is_cyclic());
        }
    }
}

TEST_CASE("theorem verifier: odd characteristic, N = q+1") {
    TheoremReport r = verify_t35(7);
    CHECK(r.pass);
    CHECK_THROWS_AS(verify_t35(8), Error);
}

TEST_CASE("theorem verifier: characteristic 2, cyclic models") {
    CHECK(verify_t36(8).pass);
    CHECK(verify_t36(4).pass);
    CHECK_THROWS_AS(verify_t36(7), Error);
}

TEST_CASE("theorem verifier: Z_m x Z_m models over square fields") {
    TheoremReport r = verify_t37(4);
    CHECK(r.pass);
    CHECK(verify_t37(9).pass);
    CHECK_THROWS_AS(verify_t37(7), Error);
}

TEST_CASE("theorem verifier: all realizable splittings at p = 13, N = 20") {
    TheoremReport r = verify_t38(13, 20);
    CHECK(r.pass);
    // Both shapes appear and both reach 57 lines.
    bool saw_cyclic = false, saw_rank2 = false;
    for (const auto& c : r.checks) {
        if (c.what.find("[20]") != std::string::npos) saw_cyclic = true;
        if (c.what.find("[2,10]") != std::string::npos) saw_rank2 = true;
    }
    CHECK(saw_cyclic);
    CHECK(saw_rank2);
}

TEST_CASE("table of worked examples reproduces") {
    auto rows = reproduce_table3();
    REQUIRE(rows.size() == 12);
    for (const auto& row : rows) {
        INFO(row.curve_label, " over q=", row.printed_q);
        CHECK(row.pass);
    }
    CHECK(rows[1].computed_group == "145");
    CHECK(rows[1].computed_t_formula == 3432);
    CHECK(rows[9].computed_group == "15,15");
    CHECK(rows[9].computed_t_formula == 8328);
    CHECK(rows[9].computed_bound == 8326);

    // The two annotated rows document printed-q corrections.
    CHECK(rows[3].printed_q == 49);
    CHECK(rows[3].effective_q == 47);
    CHECK_FALSE(rows[3].note.empty());
    CHECK(rows[8].printed_q == 16);
    CHECK(rows[8].effective_q == 64);
    CHECK_FALSE(rows[8].note.empty());
}

TEST_CASE("the printed q=49 row cannot hold as printed") {
    // Over F_49 the curve y^2 = x^3 + 1 has full 2-torsion (x^3 + 1 splits
    // already over F_7), so its group cannot be cyclic.
    auto f49 = Field::make(7, 2);
    auto e = EllipticCurve::short_form(f49, 0, 1);
    CHECK(e.order() == 48);
    AbelianStructure s = e.group_structure();
    CHECK(s.factors.size() == 2);
    CHECK(s.factors[0] % 2 == 0);
    // The line count still matches the printed row either way.
    CHECK(zero_sum_triples(s) == 361);
}

TEST_CASE("short-form sweep statistics") {
    auto entries = sweep_short_form(5);
    // Every N in the Hasse window [2, 10] is realized over F_5.
    REQUIRE(entries.size() == 9);
    CHECK(entries.front().n_points == 2);
    CHECK(entries.back().n_points == 10);
    std::int64_t total = 0;
    for (const auto& entry : entries) total += entry.curve_count;
    CHECK(total == 20); // 25 pairs minus 5 singular ones
}
