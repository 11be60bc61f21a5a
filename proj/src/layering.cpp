#include "schurlab/layering.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "schurlab/families.hpp"

namespace schurlab::layering {

namespace {

void check_tuple(const std::vector<IntSet>& tuple) {
    if (tuple.empty()) throw InputError("need at least one set");
    int n = tuple.front().ground();
    for (const auto& s : tuple) {
        if (s.ground() != n) throw InputError("ground-size mismatch inside tuple");
        if (!is_sum_free(s)) throw InputError("tuple member is not sum-free: {" + s.str() + "}");
    }
}

Rational density(const IntSet& s) { return ratio(s.size(), s.ground()); }

}  // namespace

IntersectionVector intersection_vector(const std::vector<IntSet>& tuple) {
    check_tuple(tuple);
    int n = tuple.front().ground();
    int r = static_cast<int>(tuple.size());
    IntersectionVector iv;
    iv.n = n;
    iv.r = r;
    iv.level.assign(static_cast<std::size_t>(r) + 1, IntSet(n));
    iv.exact_sets.assign(std::size_t(1) << r, IntSet(n));
    for (int v = 1; v <= n; ++v) {
        unsigned mask = 0;
        for (int i = 0; i < r; ++i)
            if (tuple[static_cast<std::size_t>(i)].contains(v)) mask |= 1u << i;
        iv.level[std::popcount(mask)].insert(v);
        if (mask) iv.exact_sets[mask].insert(v);
    }
    iv.d.reserve(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) iv.d.push_back(ratio(iv.level[i].size(), n));
    return iv;
}

loglin::LogLin g_value(const std::vector<IntSet>& tuple) {
    if (tuple.size() > 6)
        throw InputError("exact g-values cover at most six sets; use the enclosure form");
    IntersectionVector iv = intersection_vector(tuple);
    loglin::LogLin g;
    for (int i = 2; i <= iv.r; ++i)
        g += loglin::scale(loglin::log_int(static_cast<unsigned long>(i)), iv.d[i]);
    return g;
}

loglin::Interval g_value_interval(const std::vector<IntSet>& tuple, unsigned precision_bits) {
    IntersectionVector iv = intersection_vector(tuple);
    loglin::Interval out{Rational(0), Rational(0)};
    for (int i = 2; i <= iv.r; ++i) {
        if (iv.d[i] == 0) continue;
        loglin::Interval li = loglin::log2_of(static_cast<unsigned long>(i), precision_bits);
        out.lo += iv.d[i] * li.lo;
        out.hi += iv.d[i] * li.hi;
    }
    return out;
}

TupleClassification classify_tuple(const std::vector<IntSet>& tuple, bool require_maximal) {
    check_tuple(tuple);
    int n = tuple.front().ground();
    if (require_maximal)
        for (const auto& s : tuple)
            if (!is_maximal_sum_free(s))
                throw InputError("tuple member is not maximal sum-free: {" + s.str() + "}");

    TupleClassification cls;
    IntSet odd = construct(ConstructKind::odd, n);
    int half_up = (n + 1) / 2;
    long deficit_n = 0;
    for (const auto& s : tuple) {
        TupleClassification::Label lab;
        if (s == odd) {
            lab = TupleClassification::Label::all_odd;
            ++cls.odd_count;
        } else if (!s.empty() && s.size() <= s.min()) {
            lab = TupleClassification::Label::high_min;
            ++cls.high_min_count;
        } else {
            lab = TupleClassification::Label::small;
            cls.small_indices.push_back(static_cast<int>(cls.labels.size()));
        }
        if (lab != TupleClassification::Label::small) deficit_n += half_up - s.size();
        cls.labels.push_back(lab);
    }
    cls.deficit_n = static_cast<int>(deficit_n);
    cls.deficit = ratio(deficit_n, n);

    // J1 = [1, floor(n/2) - an], J2 = (that, n], J3 = middle slice up to floor(n/2);
    // clipped to the ground set (an may exceed floor(n/2) far from the extremal regime)
    int cut = n / 2 - cls.deficit_n;
    cls.first_interval = IntSet(n);
    cls.second_interval = IntSet(n);
    cls.middle_interval = IntSet(n);
    for (int v = 1; v <= n; ++v) {
        if (v <= cut)
            cls.first_interval.insert(v);
        else
            cls.second_interval.insert(v);
        if (v > cut && v <= n / 2) cls.middle_interval.insert(v);
    }
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (cls.labels[i] == TupleClassification::Label::high_min)
            cls.middle_density.push_back(
                density(tuple[i].set_intersect(cls.middle_interval)));
        else
            cls.middle_density.push_back(Rational(0));
    }
    return cls;
}

namespace {

void push_check(std::vector<LemmaCheck>& out, std::string name, std::string instance,
                Rational lhs, Rational rhs, bool is_upper) {
    LemmaCheck c;
    c.name = std::move(name);
    c.instance = std::move(instance);
    c.holds = is_upper ? lhs <= rhs : lhs >= rhs;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.is_upper = is_upper;
    out.push_back(std::move(c));
}

std::string subset_str(const std::vector<int>& idx) {
    std::string s = "members";
    for (int i : idx) s += " " + std::to_string(i + 1);
    return s;
}

}  // namespace

LemmaReport check_structural_lemmas(const std::vector<IntSet>& tuple, bool report_mode) {
    LemmaReport rep;
    rep.cls = classify_tuple(tuple, true);
    const auto& cls = rep.cls;
    int n = tuple.front().ground();
    int r = static_cast<int>(tuple.size());
    IntersectionVector iv = intersection_vector(tuple);
    Rational eps_r = ratio(r, n);
    int s_cnt = cls.odd_count, t_cnt = cls.high_min_count;
    Rational half_up_density = ratio((n + 1) / 2, n);

    // general size bound: sum i*d_i <= r/2 - (r-s-t)/10 - a + eps  (r >= 4)
    if (r >= 4) {
        Rational lhs(0);
        for (int i = 1; i <= r; ++i) lhs += Rational(i) * iv.d[i];
        Rational rhs = ratio(r, 2) - ratio(r - s_cnt - t_cnt, 10) - cls.deficit + eps_r;
        push_check(rep.verified, "weighted-size-bound", "whole tuple", lhs, rhs, true);
        push_check(rep.verified, "top-two-levels", "whole tuple", iv.d[r - 1] + iv.d[r],
                   ratio(1, 2) + eps_r, true);
    }

    std::vector<int> high_min_idx;
    for (int i = 0; i < r; ++i)
        if (cls.labels[i] == TupleClassification::Label::high_min) high_min_idx.push_back(i);

    // exact observations for high-min members
    for (int i : high_min_idx) {
        push_check(rep.verified, "min-element", "member " + std::to_string(i + 1),
                   Rational(tuple[i].min()), Rational((n + 1) / 2 - cls.deficit_n), false);
        push_check(rep.verified, "outside-second-interval", "member " + std::to_string(i + 1),
                   Rational(tuple[i].set_minus(cls.second_interval).size()), Rational(1), true);
    }

    // all nonempty sub-collections of the high-min members
    int t = static_cast<int>(high_min_idx.size());
    IntSet upper = cls.second_interval.set_minus(cls.middle_interval);
    for (unsigned mask = 1; mask < (1u << t); ++mask) {
        std::vector<int> idx;
        for (int j = 0; j < t; ++j)
            if (mask >> j & 1) idx.push_back(high_min_idx[j]);
        int k = static_cast<int>(idx.size());
        IntSet inter = tuple[idx[0]];
        Rational size_sum(0), q_sum(0);
        for (int i : idx) {
            if (i != idx[0]) inter = inter.set_intersect(tuple[i]);
            size_sum += density(tuple[i]);
            q_sum += cls.middle_density[i];
        }
        push_check(rep.verified, "size-sum-floor", subset_str(idx), size_sum,
                   Rational(k) * half_up_density - cls.deficit, false);
        push_check(rep.verified, "overlap-floor", subset_str(idx), density(inter),
                   ratio(1, 2) - Rational(k) * cls.deficit - ratio(k, n), false);
        push_check(rep.verified, "middle-budget", subset_str(idx), q_sum, cls.deficit + eps_r,
                   true);
        push_check(rep.verified, "upper-overlap-floor", subset_str(idx),
                   density(inter.set_intersect(upper)),
                   ratio(1, 2) - q_sum - cls.deficit - eps_r, false);
    }

    rep.all_verified_hold = true;
    for (const auto& c : rep.verified) rep.all_verified_hold &= c.holds;

    if (report_mode && (r == 3 || r == 4 || r == 5)) {
        // evaluate the matching constraint-family rows on this instance with
        // eps' = r/n; informational only
        std::vector<std::string> labels;
        if (r == 3) {
            labels = {"r3-basic"};
        } else if (r == 4) {
            if (s_cnt + t_cnt < 4)
                labels = {"4c-1"};
            else if (s_cnt == 0)
                labels = {"4c-2", "4c-2-s6"};
            else if (s_cnt == 1)
                labels = {"4c-3"};
            else if (t_cnt == 0 || t_cnt == 1)
                labels = {"4c-4"};
            else
                labels = {"4c-5"};
        } else {
            if (r - s_cnt - t_cnt >= 2)
                labels = {"5c-6"};
            else if (s_cnt >= 4 || t_cnt >= 4)
                labels = {"5c-7"};
            else if (s_cnt == 1 && t_cnt == 3)
                labels = {"5c-8"};
            else if (s_cnt == 3 && t_cnt == 1)
                labels = {"5c-9"};
            else if (s_cnt == 2 && t_cnt == 3)
                labels = {"5c-10", "5c-11"};
            else if (s_cnt == 3 && t_cnt == 2)
                labels = {"5c-12"};
            else
                labels = {"5c-13", "5c-14"};
        }
        Rational eps_cap = std::min(eps_r, ratio(1, 100));
        for (const auto& label : labels) {
            const auto& fam = lp::families::family(label);
            auto lp = fam.build(eps_cap);
            for (std::size_t row = 0; row < lp.num_rows(); ++row) {
                Rational lhs(0);
                for (std::size_t col = 0; col < lp.num_vars(); ++col) {
                    if (lp.rows[row][col] == 0) continue;
                    const std::string& var = lp.var_names[col];
                    Rational value = var == "a"
                                         ? cls.deficit
                                         : iv.d[static_cast<std::size_t>(
                                               std::stoi(var.substr(1)))];
                    lhs += lp.rows[row][col] * value;
                }
                push_check(rep.informational, label + ":" + lp.row_labels[row],
                           "whole tuple", lhs, lp.rhs[row], true);
            }
        }
    }
    return rep;
}

namespace {

struct MultisetSearch {
    const std::vector<IntSet>* pool;
    int r;
    std::function<void(const std::vector<int>&)> leaf;
    std::vector<int> idx;

    void run(int depth, int from) {
        if (depth == r) {
            leaf(idx);
            return;
        }
        for (int i = from; i < static_cast<int>(pool->size()); ++i) {
            idx.push_back(i);
            run(depth + 1, i);
            idx.pop_back();
        }
    }
};

}  // namespace

GSearchResult g_search(int n, int r, const std::optional<IntSet>& union_equals, int ceiling) {
    if (r < 1) throw InputError("need at least one set");
    if (r > kGSearchMaxColours)
        throw CeilingError("g-search handles at most " + std::to_string(kGSearchMaxColours) +
                           " sets");
    std::vector<IntSet> pool;
    if (union_equals) {
        if (union_equals->ground() != n) throw InputError("ground-size mismatch");
        if (union_equals->empty()) {
            GSearchResult res;
            res.value = loglin::LogLin();
            res.argmax.push_back(std::vector<IntSet>(static_cast<std::size_t>(r), IntSet(n)));
            return res;
        }
        for_each_sum_free(
            n, false,
            [&](const IntSet& s) {
                if (!s.empty() && s.set_minus(*union_equals).empty()) pool.push_back(s);
            },
            ceiling);
    } else {
        pool = enumerate_sum_free(n, true, ceiling);
    }

    GSearchResult res;
    bool have = false;
    MultisetSearch search;
    search.pool = &pool;
    search.r = r;
    search.leaf = [&](const std::vector<int>& idx) {
        std::vector<IntSet> tuple;
        tuple.reserve(idx.size());
        for (int i : idx) tuple.push_back(pool[static_cast<std::size_t>(i)]);
        if (union_equals) {
            IntSet u = tuple[0];
            for (std::size_t i = 1; i < tuple.size(); ++i) u = u.set_union(tuple[i]);
            if (!(u == *union_equals)) return;
        }
        loglin::LogLin g = g_value(tuple);
        int c = have ? loglin::sign(g - res.value) : 1;
        if (c > 0) {
            res.value = g;
            res.argmax.clear();
            res.argmax.push_back(std::move(tuple));
            have = true;
        } else if (c == 0) {
            res.argmax.push_back(std::move(tuple));
        }
    };
    search.run(0, 0);
    if (!have && union_equals)
        throw InputError("no tuple of sum-free subsets covers the requested union");
    return res;
}

std::vector<BigInt> best_cover_product(int n, int r) {
    if (n < 1 || n > 24) throw CeilingError("cover scan supports n <= 24");
    if (r < 1 || r > kGSearchMaxColours)
        throw CeilingError("cover scan supports r <= " + std::to_string(kGSearchMaxColours));
    std::vector<std::uint32_t> pool;  // nonempty sum-free subsets as masks
    for_each_sum_free(n, false, [&](const IntSet& s) {
        if (s.empty()) return;
        std::uint32_t m = 0;
        s.for_each([&m](int v) { m |= std::uint32_t(1) << (v - 1); });
        pool.push_back(m);
    });

    std::vector<BigInt> best(std::size_t(1) << n, BigInt(0));
    best[0] = 1;  // the empty union is covered by the empty tuple, one colouring

    std::vector<std::uint32_t> masks(static_cast<std::size_t>(r));
    std::function<void(int, std::size_t)> rec = [&](int depth, std::size_t from) {
        if (depth == r) {
            std::uint32_t u = 0;
            for (auto m : masks) u |= m;
            BigInt prod(1);
            std::uint32_t rest = u;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                int mult = 0;
                for (auto m : masks)
                    if (m >> v & 1) ++mult;
                prod *= mult;
            }
            if (cmp(prod, best[u]) > 0) best[u] = prod;
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            masks[static_cast<std::size_t>(depth)] = pool[i];
            rec(depth + 1, i);
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace schurlab::layering
