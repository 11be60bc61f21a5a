#include "schurlab/colouring.hpp"

#include <algorithm>
#include <bit>

namespace schurlab::colouring {

namespace {

// Backtracking counter. Elements are coloured in increasing order, so any
// monochromatic triple is detected when its largest element receives a
// colour; a branch dies the moment the new element closes a triple.
struct Counter {
    std::vector<int> elems;
    // pairs[i]: indices (j,k), j<=k<i, with elems[j]+elems[k] == elems[i]
    std::vector<std::vector<std::pair<int, int>>> pairs;
    // free_from[i]: no element from position i on closes any triple
    std::vector<bool> free_from;
    std::vector<BigInt> r_pow;
    std::vector<int> colour;
    int r = 0;
    BigInt total;

    void prepare(const std::vector<int>& elements, int colours) {
        elems = elements;
        r = colours;
        std::size_t m = elems.size();
        pairs.assign(m, {});
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                int want = elems[i] - elems[j];
                if (want < elems[j]) break;  // pairs are ordered x <= y
                auto it = std::lower_bound(elems.begin(), elems.begin() + i, want);
                if (it != elems.begin() + i && *it == want)
                    pairs[i].push_back({static_cast<int>(j),
                                        static_cast<int>(it - elems.begin())});
            }
        free_from.assign(m + 1, true);
        for (std::size_t i = m; i-- > 0;)
            free_from[i] = free_from[i + 1] && pairs[i].empty();
        r_pow.assign(m + 1, BigInt(1));
        for (std::size_t i = 1; i <= m; ++i) r_pow[i] = r_pow[i - 1] * r;
        colour.assign(m, 0);
        total = 0;
    }

    void run(std::size_t pos) {
        if (free_from[pos]) {
            total += r_pow[elems.size() - pos];
            return;
        }
        for (int c = 1; c <= r; ++c) {
            bool ok = true;
            for (const auto& [j, k] : pairs[pos])
                if (colour[j] == c && colour[k] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            colour[pos] = c;
            run(pos + 1);
        }
        colour[pos] = 0;
    }
};

struct PairTable {
    // for each z in [n]: the (x, y) with x <= y and x + y = z
    std::vector<std::vector<std::pair<int, int>>> at;
    explicit PairTable(int n) : at(static_cast<std::size_t>(n) + 1) {
        for (int x = 1; x <= n; ++x)
            for (int y = x; x + y <= n; ++y) at[static_cast<std::size_t>(x + y)].push_back({x, y});
    }
};

// shortlex on subsets-as-masks (bit v = element v present): smaller sets
// first, ties broken by the first differing element
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    std::uint64_t diff = a ^ b;
    if (!diff) return false;
    return (a >> std::countr_zero(diff)) & 1;
}

}  // namespace

BigInt count_valid_colourings(const IntSet& a, int r) {
    if (r < 1) throw InputError("need at least one colour");
    if (a.empty()) return 1;
    if (is_sum_free(a)) return pow_big(r, static_cast<unsigned long>(a.size()));
    Counter counter;
    counter.prepare(a.elements(), r);
    counter.run(0);
    return counter.total;
}

SearchResult search_f(int n, int r, bool emit_extremal, int ceiling, unsigned jobs) {
    if (n < 1) throw InputError("ground size must be positive");
    if (r < 1) throw InputError("need at least one colour");
    int cap = ceiling;
    if (cap == 0) cap = (r == 2) ? kSearchCeilingR2 : (r == 3) ? kSearchCeilingR3 : kSearchCeilingOther;
    if (n > cap)
        throw CeilingError("search ceiling " + std::to_string(cap) + " exceeded by n = " +
                           std::to_string(n) + " (raise it explicitly to proceed)");

    PairTable table(n);
    struct Partial {
        BigInt best = -1;
        std::vector<std::uint64_t> masks;
    };
    std::uint64_t total_masks = std::uint64_t(1) << n;

    std::function<Partial(std::size_t, std::size_t)> scan = [&](std::size_t lo, std::size_t hi) {
        Partial part;
        Counter counter;
        std::vector<int> elems;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            elems.clear();
            for (std::uint64_t m = mask; m; m &= m - 1)
                elems.push_back(std::countr_zero(m) + 1);
            BigInt cnt;
            // sum-free subsets colour freely
            bool any_pair = false;
            for (int z : elems) {
                for (const auto& [x, y] : table.at[static_cast<std::size_t>(z)])
                    if ((mask >> (x - 1) & 1) && (mask >> (y - 1) & 1)) {
                        any_pair = true;
                        break;
                    }
                if (any_pair) break;
            }
            if (!any_pair) {
                cnt = pow_big(r, elems.size());
            } else {
                counter.prepare(elems, r);
                counter.run(0);
                cnt = counter.total;
            }
            int c = cmp(cnt, part.best);
            if (c > 0) {
                part.best = cnt;
                part.masks.assign(1, mask);
            } else if (c == 0) {
                part.masks.push_back(mask);
            }
        }
        return part;
    };
    std::function<void(Partial&, Partial&&)> merge = [](Partial& into, Partial&& more) {
        int c = cmp(more.best, into.best);
        if (c > 0) {
            into = std::move(more);
        } else if (c == 0) {
            for (auto m : more.masks) into.masks.push_back(m);
        }
    };
    Partial best = parallel_chunks<Partial>(total_masks, jobs, scan, merge);

    SearchResult out;
    out.n = n;
    out.r = r;
    out.max_count = best.best;
    if (emit_extremal) {
        std::sort(best.masks.begin(), best.masks.end(), mask_lex_less);
        for (auto mask : best.masks) {
            IntSet s(n);
            for (std::uint64_t m = mask; m; m &= m - 1) s.insert(std::countr_zero(m) + 1);
            out.extremal.push_back(std::move(s));
        }
    }
    return out;
}

ConstructionBounds construction_lower_bounds(int n, int r) {
    if (n < 1 || r < 1) throw InputError("n and r must be positive");
    ConstructionBounds b;
    b.half_exponent_bound = pow_big(r, static_cast<unsigned long>((n + 1) / 2));
    BigInt base = BigInt(r) * (BigInt(r) * r / 4);
    b.quarter_exponent_bound = pow_big(base, static_cast<unsigned long>(n / 4));
    b.comparison = cmp(b.half_exponent_bound, b.quarter_exponent_bound);
    return b;
}

}  // namespace schurlab::colouring
