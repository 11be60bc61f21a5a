#pragma once

#include <vector>

#include "schurlab/intset.hpp"
#include "schurlab/util.hpp"

namespace schurlab::colouring {

// Exact number of maps A -> [r] whose colour classes are all sum-free.
// Empty A counts 1 (the empty colouring). Arbitrary precision throughout.
BigInt count_valid_colourings(const IntSet& a, int r);

struct SearchResult {
    int n = 0;
    int r = 0;
    BigInt max_count;
    std::vector<IntSet> extremal;  // attaining subsets, lexicographic; empty unless requested
};

inline constexpr int kSearchCeilingR2 = 14;
inline constexpr int kSearchCeilingR3 = 10;
inline constexpr int kSearchCeilingOther = 8;

// Exact maximum of count_valid_colourings over all 2^n subsets of [n].
// Deterministic; the subset space is split into contiguous index ranges when
// jobs > 1 and merged in order, so the result is schedule-independent.
SearchResult search_f(int n, int r, bool emit_extremal, int ceiling = 0, unsigned jobs = 1);

struct ConstructionBounds {
    BigInt half_exponent_bound;     // r^(ceil(n/2))
    BigInt quarter_exponent_bound;  // (r * floor(r^2/4))^(floor(n/4))
    int comparison;                 // sign(first - second)
};
ConstructionBounds construction_lower_bounds(int n, int r);

}  // namespace schurlab::colouring
