#include "chromabound/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace chromabound {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("graph: vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: repeated edge");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

const std::vector<int>& Graph::neighbours(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("graph: vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("graph: vertex out of range");
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

int max_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("max_degree: empty graph");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::optional<int> regularity(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("regularity: empty graph");
    int k = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.vertex_count()) throw std::out_of_range("bfs: source out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbours(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

Graph line_graph(const Graph& g) {
    const int m = g.edge_count();
    std::vector<std::pair<int, int>> le;
    // Edges of L(g) are pairs of g-edges meeting at a vertex.
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> inc;
        for (int w : g.neighbours(v)) inc.push_back(*g.edge_index(v, w));
        for (size_t a = 0; a < inc.size(); ++a)
            for (size_t b = a + 1; b < inc.size(); ++b)
                le.emplace_back(std::min(inc[a], inc[b]), std::max(inc[a], inc[b]));
    }
    std::sort(le.begin(), le.end());
    le.erase(std::unique(le.begin(), le.end()), le.end());
    return Graph::from_edges(m, std::move(le));
}

Graph power_graph(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("power_graph: t must be at least 1");
    std::vector<std::pair<int, int>> pe;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int w = v + 1; w < g.vertex_count(); ++w)
            if (dist[w] >= 1 && dist[w] <= t) pe.emplace_back(v, w);
    }
    return Graph::from_edges(g.vertex_count(), std::move(pe));
}

std::optional<int> edge_distance(const Graph& g, int e, int f) {
    const int m = g.edge_count();
    if (e < 0 || e >= m || f < 0 || f >= m) throw std::out_of_range("edge_distance: edge index out of range");
    if (e == f) return 0;
    // BFS over edges, stepping between edges that share an endpoint.
    std::vector<int> inc_head(g.vertex_count() + 1, 0);
    for (auto [u, v] : g.edges()) {
        ++inc_head[u + 1];
        ++inc_head[v + 1];
    }
    for (int v = 0; v < g.vertex_count(); ++v) inc_head[v + 1] += inc_head[v];
    std::vector<int> inc(inc_head.back());
    {
        std::vector<int> pos(inc_head.begin(), inc_head.end() - 1);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = g.edges()[i];
            inc[pos[u]++] = i;
            inc[pos[v]++] = i;
        }
    }
    std::vector<int> dist(m, -1);
    std::queue<int> q;
    dist[e] = 0;
    q.push(e);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        auto [u, v] = g.edges()[a];
        for (int endpoint : {u, v}) {
            for (int i = inc_head[endpoint]; i < inc_head[endpoint + 1]; ++i) {
                int b = inc[i];
                if (dist[b] < 0) {
                    dist[b] = dist[a] + 1;
                    if (b == f) return dist[b];
                    q.push(b);
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<std::int64_t>> walk_diagonals(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("walk_diagonals: t must be non-negative");
    const int n = g.vertex_count();
    std::vector<std::vector<std::int64_t>> diag(t + 1, std::vector<std::int64_t>(n, 0));
    for (int v = 0; v < n; ++v) diag[0][v] = 1;
    if (t == 0) return diag;

    // cur = A^l as a dense integer matrix, built up one multiplication at a time.
    std::vector<std::vector<std::int64_t>> cur(n, std::vector<std::int64_t>(n, 0));
    for (auto [u, v] : g.edges()) cur[u][v] = cur[v][u] = 1;
    for (int v = 0; v < n; ++v) diag[1][v] = 0;
    for (int l = 2; l <= t; ++l) {
        std::vector<std::vector<std::int64_t>> next(n, std::vector<std::int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int kk = 0; kk < n; ++kk) {
                if (cur[i][kk] == 0) continue;
                std::int64_t c = cur[i][kk];
                for (int j : g.neighbours(kk)) next[i][j] += c;
            }
        cur = std::move(next);
        for (int v = 0; v < n; ++v) diag[l][v] = cur[v][v];
    }
    // A^1 has a zero diagonal; recompute diag[1] explicitly for clarity.
    return diag;
}

bool is_t_partially_walk_regular(const Graph& g, int t, int* failing_power) {
    if (g.vertex_count() == 0) throw std::invalid_argument("walk_regular: empty graph");
    auto diag = walk_diagonals(g, t);
    for (int l = 0; l <= t; ++l) {
        for (int v = 1; v < g.vertex_count(); ++v) {
            if (diag[l][v] != diag[l][0]) {
                if (failing_power) *failing_power = l;
                return false;
            }
        }
    }
    return true;
}

}  // namespace chromabound
