#include "palin/graphs.hpp"

#include <algorithm>
#include <string>

#include "palin/errors.hpp"

namespace palin {

Graph Graph::of(int d, const std::vector<std::pair<int, int>>& edges_1based) {
    checked_dim(d);
    Graph g;
    g.d = d;
    g.adj.assign(d, 0);
    for (auto [u, v] : edges_1based) {
        if (u < 1 || u > d || v < 1 || v > d)
            throw input_error("graph edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range 1.." + std::to_string(d));
        if (u == v) throw input_error("graph has a self-loop at node " + std::to_string(u));
        g.adj[u - 1] |= std::uint32_t{1} << (v - 1);
        g.adj[v - 1] |= std::uint32_t{1} << (u - 1);
    }
    return g;
}

Graph Graph::complete(int d) {
    checked_dim(d);
    Graph g;
    g.d = d;
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << d) - 1);
    g.adj.assign(d, 0);
    for (int i = 0; i < d; ++i) g.adj[i] = full & ~(std::uint32_t{1} << i);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    return (adj[u - 1] >> (v - 1)) & 1u;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if ((adj[i] >> j) & 1u) out.emplace_back(i + 1, j + 1);
    return out;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

int Graph::missing_edge_count() const { return d * (d - 1) / 2 - edge_count(); }

bool Graph::is_complete_subset(std::uint32_t mask) const {
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const std::uint32_t needed = mask & ~(std::uint32_t{1} << v);
        if ((adj[v] & needed) != needed) return false;
    }
    return true;
}

namespace {

void bron_kerbosch(std::uint32_t r, std::uint32_t p, std::uint32_t x,
                   const std::vector<std::uint32_t>& adj,
                   std::vector<std::uint32_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // pivot with the most candidates removed
    std::uint32_t pivot_adj = 0;
    int best = -1;
    for (std::uint32_t px = p | x; px != 0; px &= px - 1) {
        const int u = std::countr_zero(px);
        const int cnt = std::popcount(p & adj[u]);
        if (cnt > best) {
            best = cnt;
            pivot_adj = adj[u];
        }
    }
    for (std::uint32_t cand = p & ~pivot_adj; cand != 0; cand &= cand - 1) {
        const int v = std::countr_zero(cand);
        const std::uint32_t vb = std::uint32_t{1} << v;
        bron_kerbosch(r | vb, p & adj[v], x & adj[v], adj, out);
        p &= ~vb;
        x |= vb;
    }
}

} // namespace

std::vector<std::uint32_t> cliques(const Graph& g) {
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << g.d) - 1);
    std::vector<std::uint32_t> out;
    bron_kerbosch(0, full, 0, g.adj, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CliqueDecomposition> decompose(const Graph& g) {
    const int d = g.d;

    // maximum cardinality search; ties broken by smallest index
    std::vector<int> weight(d, 0);
    std::vector<int> order;      // selection order
    std::vector<std::uint32_t> earlier(d, 0); // per node: neighbors selected before it
    std::uint32_t numbered = 0;
    order.reserve(d);
    for (int step = 0; step < d; ++step) {
        int pick = -1;
        for (int v = 0; v < d; ++v) {
            if ((numbered >> v) & 1u) continue;
            if (pick < 0 || weight[v] > weight[pick]) pick = v;
        }
        earlier[pick] = g.adj[pick] & numbered;
        numbered |= std::uint32_t{1} << pick;
        order.push_back(pick);
        for (std::uint32_t nb = g.adj[pick] & ~numbered; nb != 0; nb &= nb - 1)
            ++weight[std::countr_zero(nb)];
    }

    // reverse selection order is a perfect elimination order iff each
    // earlier-neighbor set is complete
    for (int v = 0; v < d; ++v)
        if (!g.is_complete_subset(earlier[v])) return std::nullopt;

    // junction tree: maximum-weight spanning tree over the maximal cliques
    // with separator size as weight (Prim; zero-weight links join components)
    const std::vector<std::uint32_t> cl = cliques(g);
    const int t = static_cast<int>(cl.size());
    CliqueDecomposition out;
    if (t == 1) {
        out.cliques = cl;
        return out;
    }
    std::vector<bool> in_tree(t, false);
    std::vector<int> parent(t, -1), best_w(t, -1);
    best_w[0] = 0;
    std::vector<int> tree_order;
    for (int round = 0; round < t; ++round) {
        int pick = -1;
        for (int i = 0; i < t; ++i)
            if (!in_tree[i] && best_w[i] >= 0 && (pick < 0 || best_w[i] > best_w[pick]))
                pick = i;
        in_tree[pick] = true;
        tree_order.push_back(pick);
        for (int i = 0; i < t; ++i) {
            if (in_tree[i]) continue;
            const int w = std::popcount(cl[pick] & cl[i]);
            if (w > best_w[i]) {
                best_w[i] = w;
                parent[i] = pick;
            }
        }
    }

    out.cliques.reserve(t);
    out.separators.reserve(t - 1);
    std::uint32_t seen = 0;
    for (int idx = 0; idx < t; ++idx) {
        const int ci = tree_order[idx];
        out.cliques.push_back(cl[ci]);
        if (idx > 0) {
            const std::uint32_t sep = cl[ci] & cl[parent[ci]];
            // running intersection: the separator is the full overlap with
            // everything placed so far (guaranteed by chordality)
            if ((cl[ci] & seen) != sep) return std::nullopt;
            out.separators.push_back(sep);
        }
        seen |= cl[ci];
    }
    return out;
}

} // namespace palin
