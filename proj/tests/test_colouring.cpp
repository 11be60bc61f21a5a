#include <doctest.h>

#include "oracles.hpp"
#include "schurlab/colouring.hpp"

using namespace schurlab;
using colouring::count_valid_colourings;
using colouring::search_f;

TEST_CASE("pinned counting examples") {
    CHECK(count_valid_colourings(construct(ConstructKind::odd, 8), 2) == 16);
    CHECK(count_valid_colourings(IntSet::from_elements(2, {1, 2}), 2) == 2);
    CHECK(count_valid_colourings(IntSet::from_elements(5, {1, 2, 3, 4, 5}), 2) == 0);
    CHECK(count_valid_colourings(IntSet(6), 3) == 1);  // empty set, one colouring
    CHECK(count_valid_colourings(IntSet::from_elements(4, {1, 3, 4}), 2) == 6);  // 2^3 - 2
    CHECK_THROWS_AS(count_valid_colourings(IntSet(3), 0), InputError);
}

TEST_CASE("counter agrees with the brute-force oracle on all subsets of [7]") {
    for (unsigned mask = 0; mask < 128; ++mask) {
        IntSet a(7);
        for (int v = 1; v <= 7; ++v)
            if (mask >> (v - 1) & 1) a.insert(v);
        for (int r : {1, 2, 3})
            CHECK(count_valid_colourings(a, r) == oracles::brute_count_colourings(a, r));
    }
}

TEST_CASE("count is at most r^|A| with equality exactly on sum-free sets") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        int n = static_cast<int>(rng.range(1, 12));
        IntSet a(n);
        for (int v = 1; v <= n; ++v)
            if (rng.below(2)) a.insert(v);
        int r = static_cast<int>(rng.range(1, 4));
        BigInt cnt = count_valid_colourings(a, r);
        BigInt cap = pow_big(r, static_cast<unsigned long>(a.size()));
        CHECK(cnt <= cap);
        CHECK((cnt == cap) == is_sum_free(a));
    }
}

TEST_CASE("restriction monotonicity") {
    Rng rng(12);
    for (int it = 0; it < 100; ++it) {
        int n = static_cast<int>(rng.range(2, 10));
        IntSet b(n);
        for (int v = 1; v <= n; ++v)
            if (rng.below(2)) b.insert(v);
        IntSet a = b;
        b.for_each([&](int v) {
            if (rng.below(2)) a.erase(v);
        });
        int r = static_cast<int>(rng.range(2, 3));
        BigInt lhs = count_valid_colourings(b, r);
        BigInt rhs = count_valid_colourings(a, r) *
                     pow_big(r, static_cast<unsigned long>(b.size() - a.size()));
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("exhaustive search, small pinned cases") {
    auto res = search_f(2, 2, true);
    CHECK(res.max_count == 2);
    REQUIRE(res.extremal.size() == 3);
    CHECK(res.extremal[0].str() == "1");
    CHECK(res.extremal[1].str() == "2");
    CHECK(res.extremal[2].str() == "1,2");

    auto res13 = search_f(1, 3, true);
    CHECK(res13.max_count == 3);
    REQUIRE(res13.extremal.size() == 1);
    CHECK(res13.extremal[0].str() == "1");

    auto res42 = search_f(4, 2, true);
    CHECK(res42.max_count >= 6);
    bool has134 = false;
    for (const auto& s : res42.extremal) has134 |= s.str() == "1,3,4";
    CHECK(count_valid_colourings(IntSet::from_elements(4, {1, 3, 4}), 2) == 6);
    CHECK((res42.max_count > 6 || has134));
}

TEST_CASE("search maximum matches a direct scan on [6]") {
    for (int r : {2, 3}) {
        BigInt direct = -1;
        for (unsigned mask = 0; mask < 64; ++mask) {
            IntSet a(6);
            for (int v = 1; v <= 6; ++v)
                if (mask >> (v - 1) & 1) a.insert(v);
            BigInt c = oracles::brute_count_colourings(a, r);
            if (c > direct) direct = c;
        }
        CHECK(search_f(6, r, false).max_count == direct);
    }
}

TEST_CASE("parallel search reproduces the sequential result") {
    auto seq = search_f(9, 2, true, 0, 1);
    auto par = search_f(9, 2, true, 0, 4);
    CHECK(seq.max_count == par.max_count);
    REQUIRE(seq.extremal.size() == par.extremal.size());
    for (std::size_t i = 0; i < seq.extremal.size(); ++i)
        CHECK(seq.extremal[i] == par.extremal[i]);
}

TEST_CASE("whole-interval counts vanish exactly past the classical bounds") {
    // r = 2: [n] admits a valid colouring iff n <= 4
    for (int n = 1; n <= 6; ++n) {
        BigInt c = count_valid_colourings(construct(ConstructKind::interval, n, 1, n), 2);
        CHECK((c > 0) == (n <= 4));
    }
    // r = 3: iff n <= 13
    for (int n : {12, 13, 14, 15}) {
        BigInt c = count_valid_colourings(construct(ConstructKind::interval, n, 1, n), 3);
        CHECK((c > 0) == (n <= 13));
    }
}

TEST_CASE("construction lower bounds and their crossover") {
    auto b84 = colouring::construction_lower_bounds(8, 4);
    CHECK(b84.half_exponent_bound == 256);
    CHECK(b84.quarter_exponent_bound == 256);
    CHECK(b84.comparison == 0);
    auto b82 = colouring::construction_lower_bounds(8, 2);
    CHECK(b82.half_exponent_bound == 16);
    CHECK(b82.quarter_exponent_bound == 4);
    CHECK(b82.comparison > 0);
    auto b45 = colouring::construction_lower_bounds(4, 5);
    CHECK(b45.half_exponent_bound == 25);
    CHECK(b45.quarter_exponent_bound == 30);
    CHECK(b45.comparison < 0);
}

TEST_CASE("search ceilings guard runtime") {
    CHECK_THROWS_AS(search_f(15, 2, false), CeilingError);
    CHECK_THROWS_AS(search_f(11, 3, false), CeilingError);
    CHECK_THROWS_AS(search_f(9, 4, false), CeilingError);
    CHECK_NOTHROW(search_f(9, 4, false, 9));
}

TEST_CASE("five-element configurations cap at six two-colourings, n <= 16") {
    for (int n = 2; n <= 16; ++n)
        for (int x = 1; x < n; ++x)
            for (int y = x + 1; x + y <= n; ++y) {
                IntSet c(n);
                for (int v : {x, y, x + y, 2 * x, 2 * y})
                    if (v <= n) c.insert(v);
                CHECK(count_valid_colourings(c, 2) <= 6);
            }
}
