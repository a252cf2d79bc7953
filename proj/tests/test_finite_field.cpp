#include <doctest.h>

#include <cstdint>
#include <vector>

#include "orchard/finite_field.hpp"

using namespace orchard;

namespace {

// Every prime power up to the given bound, for exhaustive sweeps.
std::vector<std::pair<std::int64_t, int>> prime_powers_up_to(std::int64_t bound) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        std::int64_t q = p;
        int n = 1;
        while (q <= bound) {
            out.emplace_back(p, n);
            if (q > bound / p) break;
            q *= p;
            ++n;
        }
    }
    return out;
}

} // namespace

TEST_CASE("default modulus for F_8 agrees with exhaustive irreducibility search") {
    // Independent oracle: a monic cubic over F_2 is irreducible iff it has no
    // root; scan candidates in base-2 encoding order of (c0,c1,c2).
    std::vector<std::uint32_t> expected;
    for (int v = 1; v < 8 && expected.empty(); ++v) {
        std::uint32_t c0 = v & 1u, c1 = (v >> 1) & 1u, c2 = (v >> 2) & 1u;
        auto eval = [&](std::uint32_t x) { return (c0 + c1 * x + c2 * x * x + x * x * x) % 2; };
        if (c0 != 0 && eval(0) != 0 && eval(1) != 0) expected = {c0, c1, c2, 1};
    }
    REQUIRE(expected == std::vector<std::uint32_t>{1, 1, 0, 1}); // x^3 + x + 1

    auto f8 = Field::make(2, 3);
    CHECK(f8->modulus() == expected);
    CHECK(f8->q() == 8);
}

TEST_CASE("field construction") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->modulus() == std::vector<std::uint32_t>{0, 1}); // plain F_5, modulus x
    CHECK(f5->q() == 5);

    CHECK_THROWS_AS(Field::make(4, 1), Error);
    try {
        Field::make(4, 1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }

    try {
        Field::make(2, 21); // 2^21 > desk-scale cap
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }

    try {
        Field::make(2, 3, std::vector<std::uint32_t>{1, 0, 0, 1}); // x^3+1 = (x+1)(x^2+x+1)
        FAIL("reducible modulus accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Reducible);
    }

    // Default modulus is deterministic.
    CHECK(Field::make(3, 3)->modulus() == Field::make(3, 3)->modulus());
    CHECK(Field::make(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1}); // x^4+x+1
}

TEST_CASE("arithmetic matches the worked examples") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->from_int(2) * f5->from_int(4) == f5->from_int(3));

    auto f7 = Field::make(7, 1);
    CHECK(f7->from_int(6) + f7->from_int(1) == f7->zero());

    auto f8 = Field::make(2, 3); // mod x^3 + x + 1
    auto x = f8->element({0, 1});
    auto x2 = f8->element({0, 0, 1});
    CHECK(x * x2 == f8->element({1, 1})); // x^3 = x + 1
    CHECK(x * x == x2);
}

TEST_CASE("inverses") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->from_int(3).inverse() == f7->from_int(5));

    auto f8 = Field::make(2, 3);
    auto x = f8->element({0, 1});
    CHECK(x.inverse() == f8->element({1, 0, 1})); // x * (x^2+1) = 1

    auto f5 = Field::make(5, 1);
    CHECK_THROWS_AS(f5->zero().inverse(), Error);
    try {
        f5->zero().inverse();
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroInverse);
    }
}

TEST_CASE("legendre symbol") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->from_int(4).legendre() == 1);
    CHECK(f5->from_int(3).legendre() == -1); // squares mod 5 are {0,1,4}
    CHECK(f5->from_int(0).legendre() == 0);

    auto f4 = Field::make(2, 2);
    CHECK_THROWS_AS(f4->one().legendre(), Error);

    // For odd q <= 49 exactly half the nonzero elements are squares.
    for (auto [p, n] : prime_powers_up_to(49)) {
        if (p == 2) continue;
        auto f = Field::make(p, n);
        std::int64_t squares = 0;
        for (const auto& a : f->elements())
            if (!a.is_zero() && a.legendre() == 1) ++squares;
        CHECK(squares == (f->q() - 1) / 2);
    }
}

TEST_CASE("enumeration order") {
    auto f3 = Field::make(3, 1);
    auto e3 = f3->elements();
    REQUIRE(e3.size() == 3);
    CHECK(e3[0] == f3->from_int(0));
    CHECK(e3[1] == f3->from_int(1));
    CHECK(e3[2] == f3->from_int(2));

    auto f4 = Field::make(2, 2);
    auto e4 = f4->elements();
    REQUIRE(e4.size() == 4);
    CHECK(e4[0].is_zero());
    CHECK(e4[1].is_one());
    CHECK(e4[2] == f4->element({0, 1}));
    CHECK(e4[3] == f4->element({1, 1}));

    CHECK(Field::make(2, 3)->elements().size() == 8);

    // index() inverts from_index().
    auto f9 = Field::make(3, 2);
    for (std::int64_t i = 0; i < 9; ++i) CHECK(f9->from_index(i).index() == i);
}

TEST_CASE("field axioms and Frobenius, exhaustive for q <= 64") {
    for (auto [p, n] : prime_powers_up_to(64)) {
        auto f = Field::make(p, n);
        auto els = f->elements();
        const std::int64_t q = f->q();

        // a * inv(a) = 1 for all nonzero a, and a^q = a for all a.
        for (const auto& a : els) {
            if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
            CHECK(a.pow(q) == a);
        }

        // Associativity/commutativity/distributivity: exhaustive for tiny
        // fields, strided samples for the rest.
        const std::int64_t step = q <= 16 ? 1 : 7;
        for (std::int64_t i = 0; i < q; i += step)
            for (std::int64_t j = 0; j < q; j += step) {
                const auto &a = els[static_cast<std::size_t>(i)], &b = els[static_cast<std::size_t>(j)];
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (std::int64_t k = 0; k < q; k += step) {
                    const auto& c = els[static_cast<std::size_t>(k)];
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
    }
}

TEST_CASE("operands from different fields are rejected") {
    auto f5a = Field::make(5, 1);
    auto f5b = Field::make(5, 1);
    try {
        auto r = f5a->one() + f5b->one();
        (void)r;
        FAIL("mismatched fields accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SpecMismatch);
    }
}
