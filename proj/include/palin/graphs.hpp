#ifndef PALIN_GRAPHS_HPP
#define PALIN_GRAPHS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "palin/cells.hpp"

// Undirected concentration graphs on d nodes.  Nodes are 1-based in the
// public interface (matching variable indices); node subsets are the same
// bitmasks used for cells, bit (v-1) for node v.

namespace palin {

struct Graph {
    int d = 0;
    std::vector<std::uint32_t> adj; // adj[i]: neighbor mask of node i (0-based)

    static Graph of(int d, const std::vector<std::pair<int, int>>& edges_1based);
    static Graph complete(int d);

    bool has_edge(int u, int v) const; // 1-based
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;
    int missing_edge_count() const;

    /// True iff every node pair inside `mask` is joined; singletons and the
    /// empty set count as complete.
    bool is_complete_subset(std::uint32_t mask) const;
};

/// All maximal cliques (Bron-Kerbosch with pivoting), as masks in
/// ascending order.
std::vector<std::uint32_t> cliques(const Graph& g);

struct CliqueDecomposition {
    std::vector<std::uint32_t> cliques;    // C_1..C_T in running-intersection order
    std::vector<std::uint32_t> separators; // S_t = C_t ∩ (C_1 ∪ ... ∪ C_{t-1}), t >= 2
};

/// Maximum-cardinality-search chordality test; on success returns a clique
/// ordering with the running intersection property and its separators,
/// otherwise nullopt.
std::optional<CliqueDecomposition> decompose(const Graph& g);

} // namespace palin

#endif
