#include "schurlab/linkgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace schurlab::linkgraph {

int Graph::max_degree() const {
    std::map<int, int> deg;
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    int best = 0;
    for (auto [v, d] : deg) best = std::max(best, d);
    return best;
}

Graph link_graph(const IntSet& s, const IntSet& b) {
    if (s.ground() != b.ground()) throw InputError("ground-size mismatch");
    Graph g;
    g.n = b.ground();
    g.vertices = b;
    auto verts = b.elements();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int x = verts[i], y = verts[j];  // x < y
            bool edge = false;
            if (x + y <= g.n && s.contains(x + y)) edge = true;  // z above both
            int diff = y - x;
            if (!edge && diff != x && diff != y && s.contains(diff)) edge = true;
            if (edge) g.edges.push_back({x, y});
        }
    return g;
}

namespace {

// Blossom augmenting-path matcher on 0-based compressed vertices, size only.
// Classic O(V^3) contraction scheme: BFS a forest of even vertices, shrink
// odd cycles to their base, augment when an unmatched even vertex is reached.
class Matcher {
public:
    explicit Matcher(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {}

    void add_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    int solve() {
        match_.assign(static_cast<std::size_t>(n_), -1);
        int size = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] == -1 && find_augmenting(v)) ++size;
        return size;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = true;
            if (match_[static_cast<std::size_t>(a)] == -1) break;
            a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            int mv = match_[static_cast<std::size_t>(v)];
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    bool find_augmenting(int root) {
        parent_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        used[static_cast<std::size_t>(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] !=
                         -1)) {
                    // odd cycle: contract the blossom at the common base
                    int cur = lca(v, to);
                    blossom_.assign(static_cast<std::size_t>(n_), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[static_cast<std::size_t>(
                                base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = true;
                                q.push(i);
                            }
                        }
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) {
                        // augment along the alternating path back to the root
                        int u = to;
                        while (u != -1) {
                            int pv = parent_[static_cast<std::size_t>(u)];
                            int ppv = match_[static_cast<std::size_t>(pv)];
                            match_[static_cast<std::size_t>(u)] = pv;
                            match_[static_cast<std::size_t>(pv)] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    int m = match_[static_cast<std::size_t>(to)];
                    used[static_cast<std::size_t>(m)] = true;
                    q.push(m);
                }
            }
        }
        return false;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> blossom_;
};

int matching_size_with(const Graph& g, const std::vector<std::pair<int, int>>& forced,
                       const std::vector<bool>& removed_vertex) {
    // map surviving vertices to compact ids
    std::vector<int> verts = g.vertices.elements();
    std::map<int, int> id;
    for (int v : verts)
        if (!removed_vertex[static_cast<std::size_t>(v)]) {
            int next = static_cast<int>(id.size());
            id[v] = next;
        }
    Matcher m(static_cast<int>(id.size()));
    for (auto [u, v] : g.edges)
        if (!removed_vertex[static_cast<std::size_t>(u)] &&
            !removed_vertex[static_cast<std::size_t>(v)])
            m.add_edge(id[u], id[v]);
    return static_cast<int>(forced.size()) + m.solve();
}

}  // namespace

int max_matching_size(const Graph& g) {
    std::vector<bool> removed(static_cast<std::size_t>(g.n) + 1, false);
    return matching_size_with(g, {}, removed);
}

std::vector<std::pair<int, int>> max_matching(const Graph& g) {
    int target = max_matching_size(g);
    std::vector<std::pair<int, int>> chosen;
    std::vector<bool> removed(static_cast<std::size_t>(g.n) + 1, false);
    std::vector<std::pair<int, int>> edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) {
        if (static_cast<int>(chosen.size()) == target) break;
        if (removed[static_cast<std::size_t>(u)] || removed[static_cast<std::size_t>(v)])
            continue;
        removed[static_cast<std::size_t>(u)] = removed[static_cast<std::size_t>(v)] = true;
        chosen.push_back({u, v});
        if (matching_size_with(g, chosen, removed) != target) {
            removed[static_cast<std::size_t>(u)] = removed[static_cast<std::size_t>(v)] = false;
            chosen.pop_back();
        }
    }
    return chosen;
}

Rational vizing_bound(const Graph& g) {
    if (g.edges.empty()) return Rational(0);
    return ratio(static_cast<long>(g.edge_count()), g.max_degree() + 1);
}

BigInt matching_colouring_bound(const IntSet& a, int x, int r) {
    if (!a.contains(x)) throw InputError("x must belong to the set");
    if (r < 1) throw InputError("need at least one colour");
    IntSet sx(a.ground());
    sx.insert(x);
    IntSet rest = a;
    rest.erase(x);
    Graph g = link_graph(sx, rest);
    int m = max_matching_size(g);
    BigInt factor = BigInt(r) * r - 1;
    return pow_big(factor, static_cast<unsigned long>(m)) *
           pow_big(BigInt(r), static_cast<unsigned long>(a.size() - 2 * m));
}

}  // namespace schurlab::linkgraph
