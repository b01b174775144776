#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chromabound {

// Simple undirected graph. Vertices are 0..n-1, edges are stored as a
// lexicographically sorted list of (min,max) endpoint pairs; the position of
// an edge in that list is its edge index, which every other module (line
// graphs, colourings, bound certificates) relies on.
class Graph {
public:
    Graph() = default;

    // Validates endpoints, rejects self-loops and repeated edges, sorts the
    // edge list into canonical order.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const;

    bool has_edge(int u, int v) const;
    // Index of edge {u,v} in canonical order, if present.
    std::optional<int> edge_index(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Largest vertex degree. Rejects the empty graph.
int max_degree(const Graph& g);

// Common degree k if g is regular, nullopt otherwise. Rejects the empty graph.
std::optional<int> regularity(const Graph& g);

// True if g is connected (the empty graph counts as connected).
bool is_connected(const Graph& g);

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

// Line graph L(g): one vertex per edge of g (same indexing as g.edges()),
// adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

// Distance-t power: edge {u,v} iff 1 <= dist_g(u,v) <= t. Requires t >= 1.
Graph power_graph(const Graph& g, int t);

// Distance between edges e and f: the number of vertices on a shortest path
// between them, i.e. their vertex distance in line_graph(g). 0 iff e == f,
// 1 iff they share an endpoint, nullopt if no connecting path exists.
std::optional<int> edge_distance(const Graph& g, int e, int f);

// Diagonal of A^l for l = 0..t, computed in exact integer arithmetic.
// diag[l][v] counts closed l-walks at v.
std::vector<std::vector<std::int64_t>> walk_diagonals(const Graph& g, int t);

// True when diag(A^l) is constant for every l <= t. If failing_power is
// non-null it receives the smallest power that breaks the condition.
bool is_t_partially_walk_regular(const Graph& g, int t, int* failing_power = nullptr);

}  // namespace chromabound
