#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chromabound/exact.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/spectral.hpp"

namespace chromabound {

using BigInt = boost::multiprecision::cpp_int;

// Cycle C_n (n >= 3), complete graph K_n, complete bipartite K_{a,b}.
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);

// Graph from the embedded catalog. Lookup ignores case, spaces, hyphens and
// underscores, so "Moebius-Kantor" and "moebiuskantor" both work. An unknown
// name raises std::invalid_argument whose message lists every catalog entry.
Graph named(const std::string& name);

// Canonical catalog names in fixed (alphabetical) order.
std::vector<std::string> catalog_names();

// Balanced bipartite graph with an explicit order on both sides. The two
// sides must have equal length, partition the vertex set, carry every edge
// between them, and be in matching order: (v_side[j], u_side[j]) is an edge
// for every j. The constructor checks all of this; a broken matching reports
// the first violating position.
class BipartiteOrdered {
public:
    BipartiteOrdered(Graph graph, std::vector<int> v_side, std::vector<int> u_side);

    const Graph& graph() const { return graph_; }
    const std::vector<int>& v_side() const { return v_side_; }
    const std::vector<int>& u_side() const { return u_side_; }

    // Number of vertices per side.
    int half() const { return static_cast<int>(v_side_.size()); }

    // 1 when (v_side[a], u_side[c]) is an edge, 0 otherwise (0-based).
    int biadjacency(int a, int c) const;

private:
    Graph graph_;
    std::vector<int> v_side_;
    std::vector<int> u_side_;
};

// C_q split into alternate vertices: v_j sits at cycle position 2j, u_j at
// 2j+1 (0-based j < q/2). Consecutive positions are adjacent, so (v_j, u_j)
// is a matching and (v_{j+1}, u_j) is an edge, with u_{q/2-1} wrapping back
// to v_0. Requires q even, q >= 4.
BipartiteOrdered cycle_bipartite_ordered(int q);

// Position of (v^1_i, v^2_j) in the product's vertex order, 0-based i < n1,
// j < n2. Blocks are laid out as V~_0, U~_0, V~_1, U~_1, ..., where V~_j
// collects the (v^1_i, v^2_j) over i and U~_j the (u^1_i, u^2_j).
int product_v_index(int n1, int i, int j);
int product_u_index(int n1, int i, int j);

// Balanced bipartite product: vertex set (V1 x V2) u (U1 x U2), with
// (v^1,v^2) ~ (u^1,u^2) whenever the first coordinates match and the second
// form an edge of g2, or the second coordinates match and the first form an
// edge of g1. The result uses the block vertex order above. After assembling
// the edge set, the adjacency matrix is rebuilt independently from the block
// description (A on each diagonal V~_j/U~_j pair, B_{jd} I between V~_j and
// U~_d, zeros inside the V~ and U~ families) and compared entry for entry;
// a mismatch throws std::logic_error.
Graph balanced_bipartite_product(const BipartiteOrdered& g1, const BipartiteOrdered& g2);

// Guo-Mohar graph GM(k) = C_4 join C_{2k}: cubic on 4k vertices. Requires
// k >= 2.
Graph guo_mohar(int k);

// Predicted spectrum of GM(k): +-1 with multiplicity k each, together with
// +-sqrt(5 + 4 cos(2 pi j / k)) for j = 0..k-1, merged at tol.
Spectrum gm_spectrum_formula(int k, double tol = kSpectralTol);

// Distance-2 edge colouring of C_q join C_q' with at most 6 colours, defined
// whenever q and q' are divisible by 4. Edges between (v^1_a, v^2_b) and
// (u^1_c, u^2_d) get, with 1-based indices:
//   matched (a = c, b = d):        3a + 3b   (mod 6)
//   first-cycle step (b = d):      1 + 3c    (mod 6)
//   second-cycle step (a = c):     2 + 3d    (mod 6)
// Colour indices land in 0..5. The result indexes the edge order of
// balanced_bipartite_product(cycle_bipartite_ordered(q), cycle_bipartite_ordered(q')).
EdgeColouring six_colouring_cycles(int q, int q_prime);

// Distance-3 edge colouring of GM(k) with at most 12 colours, defined for
// even k >= 2. With 1-based indices (the first cycle is C_4, so a, c are 1
// or 2):
//   matched (a = c, b = d):            a + 6b   (mod 12)
//   first-cycle step, c = 1 (a = 2):   3 + 6b   (mod 12)
//   first-cycle step, c = 2 (a = 1):   4 + 6b   (mod 12)
//   second-cycle step (a = c):         4 + a + 6d (mod 12)
// Indexes the edge order of guo_mohar(k). Odd or too-small k is rejected.
EdgeColouring twelve_colouring_gm(int k);

// Witness family separating chi_t from the distance-t degree: two paths
// u_1..u_t and v_1..v_t, a vertex w_i joined to u_i and v_i for each i, a
// vertex w' joined to u_t and v_1, and a clique K_n joined completely to
// u_1 and to v_t. Vertex ids: u_i at i-1, v_i at t+i-1, w_i at 2t+i-1, w'
// at 3t, the clique at 3t+1 .. 3t+n. Requires t >= 2, n >= 1.
struct TCriticalExample {
    Graph graph;
    int w_prime;
};
TCriticalExample t_critical_example(int n, int t);

// Strongly regular graph parameters. Arbitrary-precision fields so that the
// E6(q) family stays exact for large q.
struct SrgParams {
    BigInt n;
    BigInt k;
    BigInt lambda;
    BigInt mu;

    // Standard counting identity k(k - lambda - 1) = (n - k - 1) mu.
    bool feasible() const;
};

// Wilf bound on the distance-2 chromatic index of any SRG with these
// parameters: L(G)^2 is regular with valency
// 2k^2 + (1 + lambda)(mu - 1) - k(1 + lambda + mu), and the bound adds 1.
// Infeasible parameters are rejected.
BigInt srg_wilf(const SrgParams& p);

// Parameters of the Lie-type strongly regular graph E6(q), q >= 2.
SrgParams e6_parameters(const BigInt& q);

// srg_wilf(e6_parameters(q)) minus 1, divided by k^2, as a double. Tends to
// 2 from below as q grows.
double e6_wilf_ratio(const BigInt& q);

// True when the closed-form distance-2 bound is tight for C_q join C_q',
// i.e. when -2 is not an eigenvalue of the product, or it is but qq' is not
// divisible by 5. Requires q and q' divisible by 4.
bool balbiprod_tight_predicate(int q, int q_prime);

}  // namespace chromabound
