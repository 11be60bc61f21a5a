#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "schurlab/colouring.hpp"
#include "schurlab/linkgraph.hpp"

using namespace schurlab;
using namespace schurlab::linkgraph;

TEST_CASE("link graph construction") {
    auto g = link_graph(IntSet::from_elements(10, {4}), construct(ConstructKind::odd, 10));
    REQUIRE(g.edges.size() == 4);
    CHECK(g.edges[0] == std::pair<int, int>{1, 3});
    CHECK(g.edges[1] == std::pair<int, int>{1, 5});
    CHECK(g.edges[2] == std::pair<int, int>{3, 7});
    CHECK(g.edges[3] == std::pair<int, int>{5, 9});

    auto empty = link_graph(IntSet::from_elements(6, {3}), IntSet(6));
    CHECK(empty.edges.empty());

    auto tiny = link_graph(IntSet::from_elements(3, {1}), IntSet::from_elements(3, {2, 3}));
    REQUIRE(tiny.edges.size() == 1);
    CHECK(tiny.edges[0] == std::pair<int, int>{2, 3});

    // distinctness: y - x = x is not an edge witness
    auto no_half = link_graph(IntSet::from_elements(6, {2}), IntSet::from_elements(6, {2, 4}));
    CHECK(no_half.edges.empty());  // {2,4,2} is not three distinct elements, 2+4=6 not in S

    CHECK_THROWS_AS(link_graph(IntSet(5), IntSet(6)), InputError);
}

TEST_CASE("maximum matching basics") {
    Graph path;  // 1-2-3
    path.n = 3;
    path.vertices = IntSet::from_elements(3, {1, 2, 3});
    path.edges = {{1, 2}, {2, 3}};
    CHECK(max_matching_size(path) == 1);
    CHECK(max_matching(path) == std::vector<std::pair<int, int>>{{1, 2}});

    auto g = link_graph(IntSet::from_elements(10, {4}), construct(ConstructKind::odd, 10));
    CHECK(max_matching_size(g) == 2);
    CHECK(max_matching(g) == std::vector<std::pair<int, int>>{{1, 3}, {5, 9}});

    Graph even_cycle;  // perfect matching of size 3
    even_cycle.n = 6;
    even_cycle.vertices = IntSet::from_elements(6, {1, 2, 3, 4, 5, 6});
    even_cycle.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}};
    CHECK(max_matching_size(even_cycle) == 3);

    Graph blossom;  // odd cycle plus a pendant, forces a contraction
    blossom.n = 5;
    blossom.vertices = IntSet::from_elements(5, {1, 2, 3, 4, 5});
    blossom.edges = {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}};
    CHECK(max_matching_size(blossom) == 2);
}

TEST_CASE("blossom matcher equals brute force on a random corpus") {
    Rng rng(1234);
    for (int it = 0; it < 300; ++it) {
        int nv = static_cast<int>(rng.range(2, 12));
        Graph g;
        g.n = nv;
        g.vertices = IntSet(nv);
        for (int v = 1; v <= nv; ++v) g.vertices.insert(v);
        for (int u = 1; u <= nv; ++u)
            for (int v = u + 1; v <= nv; ++v)
                if (rng.below(10) < 4) g.edges.push_back({u, v});
        std::vector<bool> used(static_cast<std::size_t>(nv) + 1, false);
        int brute = oracles::brute_matching(g.edges, 0, used);
        CHECK(max_matching_size(g) == brute);
        auto m = max_matching(g);
        CHECK(static_cast<int>(m.size()) == brute);
        // returned edges form a matching inside the graph
        std::vector<bool> seen(static_cast<std::size_t>(nv) + 1, false);
        for (auto [u, v] : m) {
            CHECK_FALSE(seen[static_cast<std::size_t>(u)]);
            CHECK_FALSE(seen[static_cast<std::size_t>(v)]);
            seen[static_cast<std::size_t>(u)] = seen[static_cast<std::size_t>(v)] = true;
            CHECK(std::find(g.edges.begin(), g.edges.end(), std::make_pair(u, v)) !=
                  g.edges.end());
        }
    }
}

TEST_CASE("degree bound versus matching size") {
    Graph triangle;
    triangle.n = 3;
    triangle.vertices = IntSet::from_elements(3, {1, 2, 3});
    triangle.edges = {{1, 2}, {1, 3}, {2, 3}};
    CHECK(vizing_bound(triangle) == 1);
    CHECK(max_matching_size(triangle) == 1);

    Graph star;
    star.n = 6;
    star.vertices = IntSet::from_elements(6, {1, 2, 3, 4, 5, 6});
    star.edges = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}};
    CHECK(vizing_bound(star) == ratio(5, 6));
    CHECK(max_matching_size(star) == 1);

    Rng rng(77);
    for (int it = 0; it < 200; ++it) {
        int nv = static_cast<int>(rng.range(2, 40));
        Graph g;
        g.n = nv;
        g.vertices = IntSet(nv);
        for (int v = 1; v <= nv; ++v) g.vertices.insert(v);
        for (int u = 1; u <= nv; ++u)
            for (int v = u + 1; v <= nv; ++v)
                if (rng.below(10) < 3) g.edges.push_back({u, v});
        CHECK(vizing_bound(g) <= Rational(max_matching_size(g)));
    }
}

TEST_CASE("matching colouring bound") {
    // no matching: the bound collapses to r^|A|
    IntSet free3 = IntSet::from_elements(9, {4, 6, 9});  // sum-free, no triple through 4
    BigInt b = matching_colouring_bound(free3, 9, 2);
    CHECK(b == 8);

    IntSet tiny = IntSet::from_elements(3, {1, 2, 3});
    CHECK(matching_colouring_bound(tiny, 1, 2) == 6);  // m = 1: 3 * 2
    CHECK(colouring::count_valid_colourings(tiny, 2) == 4);

    IntSet odd4 = construct(ConstructKind::odd, 10);
    odd4.insert(4);
    BigInt bound = matching_colouring_bound(odd4, 4, 2);
    CHECK(bound == 36);  // m = 2: 9 * 4
    CHECK(colouring::count_valid_colourings(odd4, 2) <= bound);

    CHECK_THROWS_AS(matching_colouring_bound(tiny, 4, 2), InputError);
}

TEST_CASE("matching bound dominates exact counts on random instances") {
    Rng rng(4242);
    for (int it = 0; it < 100; ++it) {
        int n = static_cast<int>(rng.range(4, 14));
        IntSet a(n);
        for (int v = 1; v <= n; ++v)
            if (rng.below(2)) a.insert(v);
        if (a.empty()) a.insert(1);
        auto elems = a.elements();
        int x = elems[rng.below(elems.size())];
        int r = rng.below(2) ? 2 : 3;
        CHECK(colouring::count_valid_colourings(a, r) <= matching_colouring_bound(a, x, r));
    }
}

TEST_CASE("link graphs over the odd set: degree structure and edge count") {
    for (int n = 6; n <= 60; n += 3)
        for (int x = 2; x <= n / 2; x += 2) {
            auto g = link_graph(IntSet::from_elements(n, {x}), construct(ConstructKind::odd, n));
            CHECK(g.max_degree() <= 2);
            // vertices above n-x keep only the downward edge; x/2 of them are
            // odd, plus the self-paired odd x/2 when x = 2 mod 4
            std::map<int, int> deg;
            for (auto [u, v] : g.edges) {
                ++deg[u];
                ++deg[v];
            }
            int deg1 = 0;
            for (auto [v, d] : deg)
                if (d == 1) ++deg1;
            int expect = x / 2 + (x % 4 == 2 ? 1 : 0);
            CHECK(deg1 == expect);
            CHECK(2 * g.edge_count() >= static_cast<std::size_t>(n - x));
        }
}

TEST_CASE("the explicit pairing {1,x-1},{3,x-3},... matches floor(x/4) edges, all even x") {
    for (int n = 4; n <= 60; n += 8)
        for (int x = 2; x <= n; x += 2) {
            auto g = link_graph(IntSet::from_elements(n, {x}), construct(ConstructKind::odd, n));
            int fam = 0;
            for (int u = 1; u < x - u; u += 2) {
                ++fam;
                CHECK(std::find(g.edges.begin(), g.edges.end(),
                                std::make_pair(u, x - u)) != g.edges.end());
            }
            CHECK(fam == x / 4);
            CHECK(max_matching_size(g) >= x / 4);
        }
}

TEST_CASE("link graphs over the upper interval have exactly ceil(n/2)-delta edges") {
    for (int n = 4; n <= 60; n += 7)
        for (int d = 1; d <= n / 2; ++d) {
            auto g =
                link_graph(IntSet::from_elements(n, {d}), construct(ConstructKind::upper, n));
            CHECK(g.edge_count() == static_cast<std::size_t>((n + 1) / 2 - d));
        }
}
