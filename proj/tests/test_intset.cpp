#include <doctest.h>

#include <algorithm>

#include "schurlab/intset.hpp"

using namespace schurlab;

TEST_CASE("constructions") {
    CHECK(construct(ConstructKind::odd, 7).str() == "1,3,5,7");
    CHECK(construct(ConstructKind::odd, 8).str() == "1,3,5,7");
    CHECK(construct(ConstructKind::upper, 7).str() == "4,5,6,7");
    CHECK(construct(ConstructKind::lower, 7).str() == "1,2,3");
    CHECK(construct(ConstructKind::mod5, 10).str() == "1,4,6,9");
    CHECK(construct(ConstructKind::interval, 10, 5, 9).str() == "5,6,7,8,9");
    CHECK(construct(ConstructKind::odd_union_upper, 6).str() == "1,3,4,5,6");
    CHECK_THROWS_AS(construct(ConstructKind::interval, 10, 0, 5), InputError);
    CHECK_THROWS_AS(construct(ConstructKind::interval, 10, 7, 11), InputError);
    CHECK_THROWS_AS(construct(ConstructKind::interval, 10, 8, 3), InputError);
}

TEST_CASE("sum-freeness") {
    CHECK(is_sum_free(construct(ConstructKind::odd, 8)));
    CHECK(is_sum_free(construct(ConstructKind::upper, 9)));
    CHECK_FALSE(is_sum_free(IntSet::from_elements(2, {1, 2})));  // 1+1=2
    CHECK(is_sum_free(IntSet(5)));                               // empty set
    for (int n = 1; n <= 1000; n += 7) CHECK(is_sum_free(construct(ConstructKind::mod5, n)));
}

TEST_CASE("Schur triples") {
    auto t = schur_triples(IntSet::from_elements(4, {1, 2, 3, 4}));
    REQUIRE(t.size() == 4);
    CHECK(t[0] == SchurTriple{1, 1, 2});
    CHECK(t[1] == SchurTriple{1, 2, 3});
    CHECK(t[2] == SchurTriple{1, 3, 4});
    CHECK(t[3] == SchurTriple{2, 2, 4});
    CHECK(schur_triples(IntSet::from_elements(2, {1, 2})).size() == 1);
    CHECK(schur_triples(construct(ConstructKind::odd, 9)).empty());
}

TEST_CASE("sum-free iff no triple, exhaustively on [8]") {
    for (unsigned mask = 0; mask < 256; ++mask) {
        IntSet s(8);
        for (int v = 1; v <= 8; ++v)
            if (mask >> (v - 1) & 1) s.insert(v);
        CHECK(is_sum_free(s) == schur_triples(s).empty());
    }
}

TEST_CASE("classification") {
    auto odd20 = classify_types(construct(ConstructKind::odd, 20));
    CHECK_FALSE(odd20.small);  // 10 elements, 5*10 > 45
    CHECK(odd20.all_odd);
    CHECK_FALSE(odd20.min_bounded);
    auto upper20 = classify_types(construct(ConstructKind::upper, 20));
    CHECK_FALSE(upper20.small);
    CHECK_FALSE(upper20.all_odd);
    CHECK(upper20.min_bounded);  // 10 <= 11
    auto single = classify_types(IntSet::from_elements(20, {1}));
    CHECK(single.small);
    CHECK(single.all_odd);
    CHECK(single.min_bounded);
    CHECK_THROWS_AS(classify_types(IntSet(5)), InputError);
    CHECK_THROWS_AS(classify_types(IntSet::from_elements(2, {1, 2})), InputError);
}

TEST_CASE("trichotomy holds exhaustively for n <= 12") {
    for (int n = 1; n <= 12; ++n)
        for_each_sum_free(n, false, [](const IntSet& s) {
            if (s.empty()) return;
            auto t = classify_types(s);
            CHECK((t.small || t.all_odd || t.min_bounded));
        });
}

TEST_CASE("sumsets and growth") {
    CHECK(sumset({1, 2}, {3, 5}) == std::vector<long long>{4, 5, 6, 7});
    CHECK(sumset({3}, {9}) == std::vector<long long>{12});
    CHECK(sumset({1, 2, 3}, {10, 11, 12}) == std::vector<long long>{11, 12, 13, 14, 15});
    CHECK_THROWS_AS(sumset({}, {1}), InputError);
    Rng rng(7);
    for (int it = 0; it < 500; ++it) {
        std::vector<long long> a, b;
        while (a.empty())
            for (long v = 1; v <= 50; ++v)
                if (rng.below(4) == 0) a.push_back(v);
        while (b.empty())
            for (long v = 1; v <= 50; ++v)
                if (rng.below(4) == 0) b.push_back(v);
        CHECK(sumset(a, b).size() >= a.size() + b.size() - 1);
    }
}

TEST_CASE("symmetric difference") {
    auto odd8 = construct(ConstructKind::odd, 8);
    CHECK(sym_diff_size(odd8, odd8) == 0);
    CHECK(sym_diff_size(odd8, construct(ConstructKind::upper, 8)) == 4);
    CHECK(sym_diff_size(odd8, IntSet(8)) == 4);
    CHECK_THROWS_AS(sym_diff_size(odd8, IntSet(9)), InputError);
}

TEST_CASE("enumeration order and contents") {
    auto max3 = enumerate_sum_free(3, true);
    REQUIRE(max3.size() == 2);
    CHECK(max3[0].str() == "1,3");
    CHECK(max3[1].str() == "2,3");
    auto max4 = enumerate_sum_free(4, true);
    REQUIRE(max4.size() == 4);
    CHECK(max4[0].str() == "1,3");
    CHECK(max4[1].str() == "1,4");
    CHECK(max4[2].str() == "2,3");
    CHECK(max4[3].str() == "3,4");
    auto max1 = enumerate_sum_free(1, true);
    REQUIRE(max1.size() == 1);
    CHECK(max1[0].str() == "1");

    auto all4 = enumerate_sum_free(4, false);
    CHECK(all4.front().empty());  // empty set leads
    for (std::size_t i = 1; i < all4.size(); ++i) CHECK(all4[i - 1].lex_less(all4[i]));
    for (const auto& s : all4) CHECK(is_sum_free(s));
    // every sum-free subset appears: compare against direct mask filtering
    std::size_t direct = 0;
    for (unsigned mask = 0; mask < 16; ++mask) {
        IntSet s(4);
        for (int v = 1; v <= 4; ++v)
            if (mask >> (v - 1) & 1) s.insert(v);
        if (is_sum_free(s)) ++direct;
    }
    CHECK(all4.size() == direct);
}

TEST_CASE("maximality predicate matches the enumeration") {
    for (int n = 1; n <= 10; ++n) {
        auto maximal = enumerate_sum_free(n, true);
        long direct = 0;
        for_each_sum_free(n, false, [&](const IntSet& s) {
            if (!s.empty() && is_maximal_sum_free(s)) ++direct;
        });
        CHECK(static_cast<long>(maximal.size()) == direct);
        for (const auto& s : maximal) CHECK(is_maximal_sum_free(s));
    }
    CHECK_FALSE(is_maximal_sum_free(IntSet::from_elements(10, {8, 9, 10})));  // 3 extends it
}

TEST_CASE("parallel enumeration reproduces the sequential order") {
    auto seq = enumerate_sum_free(9, false);
    auto par = enumerate_sum_free(9, false, 0, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq[i] == par[i]);
    auto seqm = enumerate_sum_free(9, true);
    auto parm = enumerate_sum_free(9, true, 0, 3);
    REQUIRE(seqm.size() == parm.size());
    for (std::size_t i = 0; i < seqm.size(); ++i) CHECK(seqm[i] == parm[i]);
}

TEST_CASE("largest sum-free subsets have ceil(n/2) elements, via odd and upper") {
    for (int n = 1; n <= 14; ++n) {
        int best = 0;
        for_each_sum_free(n, false, [&](const IntSet& s) { best = std::max(best, s.size()); });
        CHECK(best == (n + 1) / 2);
        CHECK(construct(ConstructKind::odd, n).size() == best);
        CHECK(construct(ConstructKind::upper, n).size() == best);
    }
}

TEST_CASE("the odd set is the only all-odd maximal set, n <= 14") {
    for (int n = 1; n <= 14; ++n) {
        auto odd = construct(ConstructKind::odd, n);
        for (const auto& s : enumerate_sum_free(n, true)) {
            bool all_odd = true;
            s.for_each([&](int v) { all_odd &= v % 2 == 1; });
            if (all_odd) CHECK(s == odd);
        }
    }
}

TEST_CASE("enumeration ceiling") {
    CHECK_THROWS_AS(enumerate_sum_free(25, false), CeilingError);
    CHECK_NOTHROW(enumerate_sum_free(10, false, 10));
    CHECK_THROWS_AS(enumerate_sum_free(11, true, 10), CeilingError);
}

TEST_CASE("set literal parsing") {
    CHECK(IntSet::parse(8, "1,3,5").str() == "1,3,5");
    CHECK(IntSet::parse(8, "").empty());
    CHECK_THROWS_AS(IntSet::parse(8, "1,x"), InputError);
    CHECK_THROWS_AS(IntSet::parse(8, "9"), InputError);
    CHECK_THROWS_AS(IntSet::parse(8, "0"), InputError);
}
