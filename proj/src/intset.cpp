#include "schurlab/intset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace schurlab {

namespace {

std::size_t words_for(int n) { return static_cast<std::size_t>(n) / 64 + 1; }

// dst |= src << shift (bit positions, shift >= 0); bits beyond dst are dropped
void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                int shift) {
    int word_shift = shift / 64;
    int bit_shift = shift % 64;
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::uint64_t w = src[i];
        if (!w) continue;
        std::size_t j = i + static_cast<std::size_t>(word_shift);
        if (j < dst.size()) dst[j] |= w << bit_shift;
        if (bit_shift && j + 1 < dst.size()) dst[j + 1] |= w >> (64 - bit_shift);
    }
}

bool intersects_shifted(const std::vector<std::uint64_t>& s, int shift) {
    // does (s << shift) intersect s?
    int word_shift = shift / 64;
    int bit_shift = shift % 64;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::uint64_t w = s[i];
        if (!w) continue;
        std::size_t j = i + static_cast<std::size_t>(word_shift);
        if (j < s.size() && ((w << bit_shift) & s[j])) return true;
        if (bit_shift && j + 1 < s.size() && ((w >> (64 - bit_shift)) & s[j + 1])) return true;
    }
    return false;
}

}  // namespace

IntSet::IntSet(int n) : n_(n), w_(words_for(n), 0) {
    if (n < 0) throw InputError("negative ground size");
}

IntSet IntSet::from_elements(int n, const std::vector<int>& elems) {
    IntSet s(n);
    for (int v : elems) s.insert(v);
    return s;
}

IntSet IntSet::parse(int n, const std::string& csv) {
    IntSet s(n);
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        std::size_t a = token.find_first_not_of(" \t");
        if (a == std::string::npos) throw InputError("empty element in set literal: " + csv);
        std::size_t b = token.find_last_not_of(" \t");
        token = token.substr(a, b - a + 1);
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw InputError("bad element: " + token);
            s.insert(v);
        } catch (const std::logic_error&) {
            throw InputError("bad element in set literal: " + token);
        }
    }
    return s;
}

bool IntSet::contains(int v) const {
    if (v < 1 || v > n_) return false;
    return (w_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
}

void IntSet::insert(int v) {
    if (v < 1 || v > n_)
        throw InputError("element " + std::to_string(v) + " outside [1," + std::to_string(n_) +
                         "]");
    w_[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1) << (v % 64);
}

void IntSet::erase(int v) {
    if (v < 1 || v > n_) return;
    w_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t(1) << (v % 64));
}

int IntSet::size() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

int IntSet::min() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return 0;
}

int IntSet::max() const {
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(w_[i]));
    return 0;
}

std::vector<int> IntSet::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&out](int v) { out.push_back(v); });
    return out;
}

std::string IntSet::str() const {
    std::string out;
    bool first = true;
    for_each([&](int v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    return out;
}

void IntSet::check_ground(const IntSet& o) const {
    if (n_ != o.n_) throw InputError("ground-size mismatch");
}

IntSet IntSet::set_union(const IntSet& o) const {
    check_ground(o);
    IntSet r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
    return r;
}

IntSet IntSet::set_intersect(const IntSet& o) const {
    check_ground(o);
    IntSet r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
}

IntSet IntSet::set_minus(const IntSet& o) const {
    check_ground(o);
    IntSet r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
}

IntSet IntSet::complement() const {
    IntSet r(n_);
    for (int v = 1; v <= n_; ++v)
        if (!contains(v)) r.insert(v);
    return r;
}

bool IntSet::lex_less(const IntSet& o) const {
    // dictionary order on the ascending element lists: the holder of the
    // first differing element wins unless the other side has already ended
    check_ground(o);
    auto has_above = [](const std::vector<std::uint64_t>& w, std::size_t i,
                        std::uint64_t low) {
        std::uint64_t mask_above = ~((low << 1) - 1);
        if (w[i] & mask_above) return true;
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[j]) return true;
        return false;
    };
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t diff = w_[i] ^ o.w_[i];
        if (!diff) continue;
        std::uint64_t low = diff & (~diff + 1);
        if (w_[i] & low) {
            // ours: smaller unless the other side is a strict prefix
            return has_above(o.w_, i, low);
        }
        // theirs: smaller only if we have already ended
        return !has_above(w_, i, low);
    }
    return false;
}

bool is_sum_free(const IntSet& s) {
    bool free = true;
    s.for_each([&](int x) {
        if (free && intersects_shifted(s.words(), x)) free = false;
    });
    return free;
}

std::vector<SchurTriple> schur_triples(const IntSet& s) {
    std::vector<SchurTriple> out;
    auto elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j) {
            int z = elems[i] + elems[j];
            if (z > s.ground()) break;
            if (s.contains(z)) out.push_back({elems[i], elems[j], z});
        }
    std::sort(out.begin(), out.end(), [](const SchurTriple& a, const SchurTriple& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    return out;
}

SumFreeTypes classify_types(const IntSet& s) {
    if (s.empty()) throw InputError("classify_types needs a nonempty set");
    if (!is_sum_free(s)) throw InputError("classify_types needs a sum-free set");
    SumFreeTypes t;
    // |S| <= 2n/5 + 1 evaluated as 5|S| <= 2n + 5, exactly
    t.small = 5 * s.size() <= 2 * s.ground() + 5;
    t.all_odd = true;
    s.for_each([&](int v) {
        if (v % 2 == 0) t.all_odd = false;
    });
    t.min_bounded = s.size() <= s.min();
    return t;
}

ConstructKind construct_kind_from(const std::string& name) {
    if (name == "odd") return ConstructKind::odd;
    if (name == "upper") return ConstructKind::upper;
    if (name == "lower") return ConstructKind::lower;
    if (name == "interval") return ConstructKind::interval;
    if (name == "mod5") return ConstructKind::mod5;
    if (name == "odd_union_upper") return ConstructKind::odd_union_upper;
    throw InputError("unknown construction: " + name);
}

IntSet construct(ConstructKind kind, int n, int m1, int m2) {
    if (n < 1) throw InputError("ground size must be positive");
    IntSet s(n);
    switch (kind) {
        case ConstructKind::odd:
            for (int v = 1; v <= n; v += 2) s.insert(v);
            break;
        case ConstructKind::upper:
            for (int v = n / 2 + 1; v <= n; ++v) s.insert(v);
            break;
        case ConstructKind::lower:
            for (int v = 1; v <= n / 2; ++v) s.insert(v);
            break;
        case ConstructKind::interval:
            if (m1 < 1 || m2 > n || m1 > m2) throw InputError("invalid interval bounds");
            for (int v = m1; v <= m2; ++v) s.insert(v);
            break;
        case ConstructKind::mod5:
            for (int v = 1; v <= n; ++v)
                if (v % 5 == 1 || v % 5 == 4) s.insert(v);
            break;
        case ConstructKind::odd_union_upper:
            for (int v = 1; v <= n; v += 2) s.insert(v);
            for (int v = n / 2 + 1; v <= n; ++v) s.insert(v);
            break;
    }
    return s;
}

std::vector<long long> sumset(const std::vector<long long>& a, const std::vector<long long>& b) {
    if (a.empty() || b.empty()) throw InputError("sumset needs nonempty operands");
    std::set<long long> out;
    for (long long x : a)
        for (long long y : b) out.insert(x + y);
    return {out.begin(), out.end()};
}

int sym_diff_size(const IntSet& a, const IntSet& b) {
    if (a.ground() != b.ground()) throw InputError("ground-size mismatch");
    int c = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i)
        c += std::popcount(a.words()[i] ^ b.words()[i]);
    return c;
}

namespace {

// v completes a Schur triple with S: v = x+y, or v+x = z, or v+v = z (x,y,z in S)
bool blocked_by(const IntSet& s, const std::vector<std::uint64_t>& sums, int v) {
    if ((sums[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1) return true;
    if (intersects_shifted(s.words(), v)) return true;  // v + x = z for x,z in S
    if (2 * v <= s.ground() && s.contains(2 * v)) return true;
    return false;
}

struct Enumerator {
    int n;
    bool maximal_only;
    const std::function<void(const IntSet&)>* emit;

    void visit(IntSet& s, std::vector<std::uint64_t>& sums, int next) {
        if (!maximal_only) {
            (*emit)(s);
        } else {
            bool maximal = true;
            for (int v = 1; v <= n && maximal; ++v)
                if (!s.contains(v) && !blocked_by(s, sums, v)) maximal = false;
            if (maximal && !s.empty()) (*emit)(s);
        }
        for (int v = next; v <= n; ++v) {
            if ((sums[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1) continue;
            // grow: new forbidden sums are v + (S u {v})
            std::vector<std::uint64_t> sums2 = sums;
            or_shifted(sums2, s.words(), v);
            if (2 * v <= n) sums2[static_cast<std::size_t>(2 * v) / 64] |= std::uint64_t(1)
                                                                          << ((2 * v) % 64);
            s.insert(v);
            visit(s, sums2, v + 1);
            s.erase(v);
        }
    }
};

}  // namespace

void for_each_sum_free(int n, bool maximal_only, const std::function<void(const IntSet&)>& fn,
                       int ceiling) {
    if (n < 1) throw InputError("ground size must be positive");
    int cap = ceiling > 0 ? ceiling : kDefaultEnumerationCeiling;
    if (n > cap)
        throw CeilingError("enumeration ceiling " + std::to_string(cap) + " exceeded by n = " +
                           std::to_string(n) + " (raise it explicitly to proceed)");
    Enumerator e{n, maximal_only, &fn};
    IntSet s(n);
    std::vector<std::uint64_t> sums(n / 64 + 1, 0);
    e.visit(s, sums, 1);
}

std::vector<IntSet> enumerate_sum_free(int n, bool maximal_only, int ceiling, unsigned jobs) {
    if (jobs <= 1) {
        std::vector<IntSet> out;
        for_each_sum_free(
            n, maximal_only, [&out](const IntSet& s) { out.push_back(s); }, ceiling);
        return out;
    }
    int cap = ceiling > 0 ? ceiling : kDefaultEnumerationCeiling;
    if (n < 1) throw InputError("ground size must be positive");
    if (n > cap)
        throw CeilingError("enumeration ceiling " + std::to_string(cap) + " exceeded by n = " +
                           std::to_string(n) + " (raise it explicitly to proceed)");
    // partition by first element: subtree v0 holds exactly the sets with min = v0,
    // so concatenating v0 = 1..n reproduces the sequential lexicographic order
    using Chunk = std::vector<IntSet>;
    std::function<Chunk(std::size_t, std::size_t)> run = [&](std::size_t lo, std::size_t hi) {
        Chunk part;
        std::function<void(const IntSet&)> sink = [&part](const IntSet& s) { part.push_back(s); };
        Enumerator e{n, maximal_only, &sink};
        for (std::size_t v0 = lo; v0 < hi; ++v0) {
            IntSet s(n);
            std::vector<std::uint64_t> sums(n / 64 + 1, 0);
            int v = static_cast<int>(v0) + 1;
            or_shifted(sums, s.words(), v);
            if (2 * v <= n) sums[static_cast<std::size_t>(2 * v) / 64] |= std::uint64_t(1)
                                                                         << ((2 * v) % 64);
            s.insert(v);
            e.visit(s, sums, v + 1);
        }
        return part;
    };
    std::function<void(Chunk&, Chunk&&)> merge = [](Chunk& into, Chunk&& more) {
        for (auto& s : more) into.push_back(std::move(s));
    };
    Chunk body = parallel_chunks<Chunk>(static_cast<std::size_t>(n), jobs, run, merge);
    std::vector<IntSet> out;
    if (!maximal_only) out.push_back(IntSet(n));  // the empty set leads the order
    for (auto& s : body) out.push_back(std::move(s));
    return out;
}

bool is_maximal_sum_free(const IntSet& s) {
    if (!is_sum_free(s)) return false;
    std::vector<std::uint64_t> sums(static_cast<std::size_t>(s.ground()) / 64 + 1, 0);
    s.for_each([&](int x) { or_shifted(sums, s.words(), x); });
    for (int v = 1; v <= s.ground(); ++v)
        if (!s.contains(v) && !blocked_by(s, sums, v)) return false;
    return true;
}

}  // namespace schurlab
