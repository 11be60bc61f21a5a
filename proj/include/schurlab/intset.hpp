#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "schurlab/util.hpp"

namespace schurlab {

// A subset of [n] = {1,...,n} stored as a bit vector; n travels with the value.
class IntSet {
public:
    IntSet() = default;
    explicit IntSet(int n);
    static IntSet from_elements(int n, const std::vector<int>& elems);
    // "1,3,5" -> set; empty string -> empty set
    static IntSet parse(int n, const std::string& csv);

    int ground() const { return n_; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    int size() const;
    bool empty() const { return size() == 0; }
    int min() const;  // 0 when empty
    int max() const;  // 0 when empty

    std::vector<int> elements() const;
    std::string str() const;  // comma-separated ascending elements

    IntSet set_union(const IntSet& o) const;
    IntSet set_intersect(const IntSet& o) const;
    IntSet set_minus(const IntSet& o) const;
    IntSet complement() const;

    bool operator==(const IntSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const IntSet& o) const { return !(*this == o); }
    // order by ascending element list (present beats absent at the first difference)
    bool lex_less(const IntSet& o) const;

    const std::vector<std::uint64_t>& words() const { return w_; }
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t word = w_[wi];
            while (word) {
                int bit = __builtin_ctzll(word);
                fn(static_cast<int>(wi * 64 + bit));
                word &= word - 1;
            }
        }
    }

private:
    void check_ground(const IntSet& o) const;
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct SchurTriple {
    int x, y, z;  // x <= y, x + y = z; elements need not be distinct
    bool operator==(const SchurTriple& o) const { return x == o.x && y == o.y && z == o.z; }
};

bool is_sum_free(const IntSet& s);
std::vector<SchurTriple> schur_triples(const IntSet& s);

// The three structure classes a sum-free set can fall into: small cardinality
// (5|S| <= 2n+5), all elements odd, or |S| <= min(S). Every sum-free set
// satisfies at least one.
struct SumFreeTypes {
    bool small = false;
    bool all_odd = false;
    bool min_bounded = false;
};
// pre: s sum-free and nonempty (throws InputError otherwise)
SumFreeTypes classify_types(const IntSet& s);

enum class ConstructKind { odd, upper, lower, interval, mod5, odd_union_upper };
ConstructKind construct_kind_from(const std::string& name);
IntSet construct(ConstructKind kind, int n, int m1 = 0, int m2 = 0);

// A + B over the integers; inputs and output are plain sorted sets, not
// IntSets, because sums may leave [n].
std::vector<long long> sumset(const std::vector<long long>& a, const std::vector<long long>& b);

int sym_diff_size(const IntSet& a, const IntSet& b);

// S is maximal sum-free iff every v outside S completes a Schur triple with S.
bool is_maximal_sum_free(const IntSet& s);

inline constexpr int kDefaultEnumerationCeiling = 24;

// All sum-free subsets of [n] (the empty set included), or only the maximal
// ones, in ascending-element-list lexicographic order. `ceiling` of 0 applies
// the default; enumeration refuses n beyond the ceiling.
std::vector<IntSet> enumerate_sum_free(int n, bool maximal_only, int ceiling = 0,
                                       unsigned jobs = 1);
void for_each_sum_free(int n, bool maximal_only,
                       const std::function<void(const IntSet&)>& fn, int ceiling = 0);

}  // namespace schurlab
