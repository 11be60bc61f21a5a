#pragma once

#include <utility>
#include <vector>

#include "schurlab/intset.hpp"
#include "schurlab/util.hpp"

namespace schurlab::linkgraph {

// Simple graph on a subset of [n]; edges normalised to u < v and sorted.
struct Graph {
    int n = 0;
    IntSet vertices;
    std::vector<std::pair<int, int>> edges;

    std::size_t edge_count() const { return edges.size(); }
    int max_degree() const;
};

// Vertex set B; {x,y} is an edge iff some z in S makes {x,y,z} a Schur triple
// with x, y, z pairwise distinct (z = x+y or z = |y-x|).
Graph link_graph(const IntSet& s, const IntSet& b);

// Maximum-cardinality matching via augmenting paths with blossom
// contraction; the reported matching is the lexicographically least maximum
// matching under the edge order, so results are reproducible fixtures.
std::vector<std::pair<int, int>> max_matching(const Graph& g);
int max_matching_size(const Graph& g);

// e / (max degree + 1): a matching-size lower bound; exact rational, 0 for
// an empty edge set.
Rational vizing_bound(const Graph& g);

// m = maximum matching of the link graph of {x} over A minus x, then the
// colouring-count upper bound (r^2 - 1)^m * r^(|A| - 2m).
BigInt matching_colouring_bound(const IntSet& a, int x, int r);

}  // namespace schurlab::linkgraph
