#include "chromabound/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chromabound {

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete_bipartite: both sides must be non-empty");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, std::move(edges));
}

BipartiteOrdered::BipartiteOrdered(Graph graph, std::vector<int> v_side, std::vector<int> u_side)
    : graph_(std::move(graph)), v_side_(std::move(v_side)), u_side_(std::move(u_side)) {
    const int n = graph_.vertex_count();
    if (v_side_.empty() || v_side_.size() != u_side_.size())
        throw std::invalid_argument("BipartiteOrdered: sides must be non-empty and equal in size");
    if (static_cast<int>(v_side_.size() + u_side_.size()) != n)
        throw std::invalid_argument("BipartiteOrdered: sides must cover every vertex");

    // 0 = unseen, 1 = V side, 2 = U side.
    std::vector<int> side(n, 0);
    auto place = [&](const std::vector<int>& vs, int tag) {
        for (int v : vs) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("BipartiteOrdered: vertex " + std::to_string(v) +
                                            " out of range");
            if (side[v] != 0)
                throw std::invalid_argument("BipartiteOrdered: vertex " + std::to_string(v) +
                                            " listed twice");
            side[v] = tag;
        }
    };
    place(v_side_, 1);
    place(u_side_, 2);

    for (const auto& [x, y] : graph_.edges())
        if (side[x] == side[y])
            throw std::invalid_argument("BipartiteOrdered: edge (" + std::to_string(x) + "," +
                                        std::to_string(y) + ") does not cross the sides");

    for (int j = 0; j < half(); ++j)
        if (!graph_.has_edge(v_side_[j], u_side_[j]))
            throw std::invalid_argument(
                "BipartiteOrdered: not a matching ordering, (v[" + std::to_string(j) + "], u[" +
                std::to_string(j) + "]) is not an edge");
}

int BipartiteOrdered::biadjacency(int a, int c) const {
    return graph_.has_edge(v_side_[a], u_side_[c]) ? 1 : 0;
}

BipartiteOrdered cycle_bipartite_ordered(int q) {
    if (q < 4 || q % 2 != 0)
        throw std::invalid_argument("cycle_bipartite_ordered: need even q >= 4, got " +
                                    std::to_string(q));
    std::vector<int> v_side, u_side;
    for (int j = 0; j < q / 2; ++j) {
        v_side.push_back(2 * j);
        u_side.push_back(2 * j + 1);
    }
    return BipartiteOrdered(cycle(q), std::move(v_side), std::move(u_side));
}

int product_v_index(int n1, int i, int j) { return 2 * j * n1 + i; }
int product_u_index(int n1, int i, int j) { return 2 * j * n1 + n1 + i; }

Graph balanced_bipartite_product(const BipartiteOrdered& g1, const BipartiteOrdered& g2) {
    const int n1 = g1.half();
    const int n2 = g2.half();
    const int n = 2 * n1 * n2;

    // The two defining edge families overlap where both coordinates are
    // matched pairs, so collect into a set.
    std::set<std::pair<int, int>> edge_set;
    auto add = [&edge_set](int x, int y) { edge_set.insert(std::minmax(x, y)); };

    // Shared first coordinate, second coordinates adjacent in g2.
    for (int i = 0; i < n1; ++i)
        for (int b = 0; b < n2; ++b)
            for (int d = 0; d < n2; ++d)
                if (g2.biadjacency(b, d)) add(product_v_index(n1, i, b), product_u_index(n1, i, d));

    // Shared second coordinate, first coordinates adjacent in g1.
    for (int j = 0; j < n2; ++j)
        for (int a = 0; a < n1; ++a)
            for (int c = 0; c < n1; ++c)
                if (g1.biadjacency(a, c)) add(product_v_index(n1, a, j), product_u_index(n1, c, j));

    Graph h = Graph::from_edges(n, {edge_set.begin(), edge_set.end()});

    // Rebuild the adjacency matrix from the block description and compare.
    // Diagonal V~_j/U~_j pairs carry the biadjacency of g1, the V~_j/U~_d
    // blocks for j != d are B_{jd} I, everything else is zero.
    std::vector<std::vector<int>> expected(n, std::vector<int>(n, 0));
    for (int j = 0; j < n2; ++j)
        for (int a = 0; a < n1; ++a)
            for (int c = 0; c < n1; ++c)
                if (g1.biadjacency(a, c)) {
                    int x = product_v_index(n1, a, j);
                    int y = product_u_index(n1, c, j);
                    expected[x][y] = expected[y][x] = 1;
                }
    for (int j = 0; j < n2; ++j)
        for (int d = 0; d < n2; ++d) {
            if (j == d || !g2.biadjacency(j, d)) continue;
            for (int i = 0; i < n1; ++i) {
                int x = product_v_index(n1, i, j);
                int y = product_u_index(n1, i, d);
                expected[x][y] = expected[y][x] = 1;
            }
        }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (h.has_edge(x, y) != (expected[x][y] == 1))
                throw std::logic_error("balanced_bipartite_product: block structure violated at (" +
                                       std::to_string(x) + "," + std::to_string(y) + ")");
    return h;
}

Graph guo_mohar(int k) {
    if (k < 2) throw std::invalid_argument("guo_mohar: need k >= 2, got " + std::to_string(k));
    return balanced_bipartite_product(cycle_bipartite_ordered(4), cycle_bipartite_ordered(2 * k));
}

Spectrum gm_spectrum_formula(int k, double tol) {
    if (k < 2)
        throw std::invalid_argument("gm_spectrum_formula: need k >= 2, got " + std::to_string(k));
    std::vector<double> values;
    values.reserve(4 * k);
    for (int i = 0; i < k; ++i) {
        values.push_back(1.0);
        values.push_back(-1.0);
    }
    for (int j = 0; j < k; ++j) {
        double r = std::sqrt(5.0 + 4.0 * std::cos(2.0 * std::numbers::pi * j / k));
        values.push_back(r);
        values.push_back(-r);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return group_eigenvalues(values, tol);
}

namespace {

// Decomposed product vertex: block j, index i within the half-block, and
// which half it sits in.
struct ProductVertex {
    int i = 0;
    int j = 0;
    bool is_v = false;
};

ProductVertex split_product_vertex(int id, int n1) {
    ProductVertex p;
    p.j = id / (2 * n1);
    int r = id % (2 * n1);
    p.is_v = r < n1;
    p.i = p.is_v ? r : r - n1;
    return p;
}

// Maps every product edge to (v endpoint, u endpoint) and hands the four
// 1-based coordinates to pick: pick(a, b, c, d) with (v^1_a, v^2_b) on the
// v side and (u^1_c, u^2_d) on the u side.
template <typename Pick>
EdgeColouring colour_product_edges(const Graph& h, int n1, int t, Pick pick) {
    EdgeColouring col;
    col.t = t;
    col.colours.assign(h.edge_count(), -1);
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [x, y] = h.edges()[e];
        ProductVertex vx = split_product_vertex(x, n1);
        ProductVertex vy = split_product_vertex(y, n1);
        if (vx.is_v == vy.is_v)
            throw std::logic_error("colour_product_edges: edge inside one half");
        const ProductVertex& v = vx.is_v ? vx : vy;
        const ProductVertex& u = vx.is_v ? vy : vx;
        if (v.i != u.i && v.j != u.j)
            throw std::logic_error("colour_product_edges: edge matches neither coordinate");
        col.colours[e] = pick(v.i + 1, v.j + 1, u.i + 1, u.j + 1);
    }
    return col;
}

}  // namespace

EdgeColouring six_colouring_cycles(int q, int q_prime) {
    if (q % 4 != 0 || q_prime % 4 != 0 || q < 4 || q_prime < 4)
        throw std::invalid_argument("six_colouring_cycles: need q, q' divisible by 4");
    Graph h = balanced_bipartite_product(cycle_bipartite_ordered(q),
                                         cycle_bipartite_ordered(q_prime));
    return colour_product_edges(h, q / 2, 2, [](int a, int b, int c, int d) {
        if (a == c && b == d) return (3 * a + 3 * b) % 6;
        if (b == d) return (1 + 3 * c) % 6;
        return (2 + 3 * d) % 6;
    });
}

EdgeColouring twelve_colouring_gm(int k) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("twelve_colouring_gm: need even k >= 2, got " +
                                    std::to_string(k));
    Graph h = guo_mohar(k);
    return colour_product_edges(h, 2, 3, [](int a, int b, int c, int d) {
        if (a == c && b == d) return (a + 6 * b) % 12;
        if (b == d) return c == 1 ? (3 + 6 * b) % 12 : (4 + 6 * b) % 12;
        return (4 + a + 6 * d) % 12;
    });
}

TCriticalExample t_critical_example(int n, int t) {
    if (t < 2) throw std::invalid_argument("t_critical_example: need t >= 2");
    if (n < 1) throw std::invalid_argument("t_critical_example: need n >= 1");
    auto u = [](int i) { return i - 1; };
    auto v = [t](int i) { return t + i - 1; };
    auto w = [t](int i) { return 2 * t + i - 1; };
    const int w_prime = 3 * t;
    auto clique = [t](int i) { return 3 * t + i; };

    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < t; ++i) {
        edges.emplace_back(u(i), u(i + 1));
        edges.emplace_back(v(i), v(i + 1));
    }
    for (int i = 1; i <= t; ++i) {
        edges.emplace_back(w(i), u(i));
        edges.emplace_back(w(i), v(i));
    }
    edges.emplace_back(w_prime, u(t));
    edges.emplace_back(w_prime, v(1));
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(u(1), clique(i));
        edges.emplace_back(v(t), clique(i));
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(clique(i), clique(j));
    }
    return {Graph::from_edges(3 * t + 1 + n, std::move(edges)), w_prime};
}

bool SrgParams::feasible() const {
    return n >= 0 && k >= 0 && lambda >= 0 && mu >= 0 &&
           k * (k - lambda - 1) == (n - k - 1) * mu;
}

BigInt srg_wilf(const SrgParams& p) {
    if (!p.feasible()) {
        std::ostringstream msg;
        msg << "srg_wilf: infeasible parameters (" << p.n << "," << p.k << "," << p.lambda << ","
            << p.mu << ")";
        throw std::invalid_argument(msg.str());
    }
    return 2 * p.k * p.k + (1 + p.lambda) * (p.mu - 1) - p.k * (1 + p.lambda + p.mu) + 1;
}

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0 || num % den != 0)
        throw std::logic_error("e6_parameters: non-integral parameter formula");
    return num / den;
}

BigInt qpow(const BigInt& q, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace

SrgParams e6_parameters(const BigInt& q) {
    if (q < 2) throw std::invalid_argument("e6_parameters: need q >= 2");
    SrgParams p;
    p.n = exact_div((qpow(q, 12) - 1) * (qpow(q, 9) - 1), (qpow(q, 4) - 1) * (q - 1));
    p.k = exact_div(q * (qpow(q, 3) + 1) * (qpow(q, 8) - 1), q - 1);
    p.lambda = p.k - 1 - exact_div(qpow(q, 7) * (qpow(q, 5) - 1), q - 1);
    p.mu = exact_div((qpow(q, 3) + 1) * (qpow(q, 4) - 1), q - 1);
    if (!p.feasible()) throw std::logic_error("e6_parameters: parameters fail the SRG identity");
    return p;
}

double e6_wilf_ratio(const BigInt& q) {
    SrgParams p = e6_parameters(q);
    BigInt valency = srg_wilf(p) - 1;
    boost::multiprecision::cpp_rational ratio(valency, p.k * p.k);
    return ratio.convert_to<double>();
}

bool balbiprod_tight_predicate(int q, int q_prime) {
    if (q % 4 != 0 || q_prime % 4 != 0 || q < 4 || q_prime < 4)
        throw std::invalid_argument("balbiprod_tight_predicate: need q, q' divisible by 4");
    Graph h = balanced_bipartite_product(cycle_bipartite_ordered(q),
                                         cycle_bipartite_ordered(q_prime));
    Spectrum s = adjacency_spectrum(h);
    bool minus_two = false;
    for (double v : s.values)
        if (std::abs(v + 2.0) <= s.tol) minus_two = true;
    return !minus_two || (q * q_prime) % 5 != 0;
}

}  // namespace chromabound
