#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurlab/intset.hpp"
#include "schurlab/loglin.hpp"
#include "schurlab/util.hpp"

namespace schurlab::layering {

// Exact overlap profile of a tuple of sum-free sets: exact_sets[mask] holds
// the elements lying in precisely the tuple members named by mask, level[i]
// the elements covered exactly i times, d[i] = |level[i]| / n.
struct IntersectionVector {
    int n = 0;
    int r = 0;
    std::vector<Rational> d;        // d[0..r], sums to 1 exactly
    std::vector<IntSet> level;      // D_0 .. D_r
    std::vector<IntSet> exact_sets; // E_I indexed by member mask, slot 0 unused
};

IntersectionVector intersection_vector(const std::vector<IntSet>& tuple);

// g = sum d_i log2(i); exact for r <= 6 (all log2(i) are then 5-smooth).
loglin::LogLin g_value(const std::vector<IntSet>& tuple);
// enclosure fallback for r >= 7
loglin::Interval g_value_interval(const std::vector<IntSet>& tuple, unsigned precision_bits);

struct TupleClassification {
    enum class Label { small, all_odd, high_min };
    std::vector<Label> labels;
    int odd_count = 0;       // sets labelled all_odd
    int high_min_count = 0;  // sets labelled high_min
    std::vector<int> small_indices;
    Rational deficit;  // (1/n) * sum over non-small sets of (ceil(n/2) - |A_i|)
    int deficit_n = 0; // deficit * n, always integral
    IntSet first_interval, second_interval, middle_interval;  // J1, J2, J3
    std::vector<Rational> middle_density;  // per position: d(A_i ^ J3) for high_min sets, else 0
};

// Labels use the priority rule: all_odd iff the set equals the odd construction;
// else high_min iff |S| <= min(S); else small.
TupleClassification classify_tuple(const std::vector<IntSet>& tuple, bool require_maximal = true);

struct LemmaCheck {
    std::string name;
    std::string instance;  // which member / subset the check ran on
    Rational lhs, rhs;
    bool is_upper;  // true: lhs <= rhs asserted, false: lhs >= rhs
    bool holds = false;
};

struct LemmaReport {
    TupleClassification cls;
    std::vector<LemmaCheck> verified;   // instances the structure theory guarantees
    std::vector<LemmaCheck> informational;  // report-mode-only constraint-family rows
    bool all_verified_hold = true;
};

// assert-mode runs only `verified`; report-mode additionally evaluates the
// constraint-family rows matching the tuple's class profile (informational,
// never asserted) with the instance substitution eps' = r/n.
LemmaReport check_structural_lemmas(const std::vector<IntSet>& tuple, bool report_mode);

struct GSearchResult {
    loglin::LogLin value;
    std::vector<std::vector<IntSet>> argmax;  // attaining multisets, sorted members
};

// Exhaustive maximum of g. Without union_equals: over multisets of maximal
// sum-free sets (an extremal tuple of maximal sets always exists). With
// union_equals: over multisets of sum-free subsets whose union is exactly the
// given set, maximality not imposed.
GSearchResult g_search(int n, int r, const std::optional<IntSet>& union_equals = std::nullopt,
                       int ceiling = 0);

inline constexpr int kGSearchMaxColours = 4;

// For each subset A of [n] (indexed by element mask), the largest exact value
// of prod_i i^(|D_i|) over multisets of sum-free sets with union exactly A.
std::vector<BigInt> best_cover_product(int n, int r);

}  // namespace schurlab::layering
