#include "chromabound/exact.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace chromabound {

ValidationResult validate_colouring(const Graph& g, const EdgeColouring& c) {
    const int m = g.edge_count();
    if (c.t < 1) throw std::invalid_argument("validate_colouring: t must be at least 1");
    if (static_cast<int>(c.colours.size()) != m)
        throw std::invalid_argument("validate_colouring: colouring must cover every edge");
    Graph lg = line_graph(g);
    for (int e = 0; e < m; ++e) {
        // Edges within distance t of e, by truncated BFS in the line graph.
        std::vector<int> dist(m, -1);
        std::vector<int> frontier{e};
        dist[e] = 0;
        for (int d = 1; d <= c.t && !frontier.empty(); ++d) {
            std::vector<int> next;
            for (int a : frontier)
                for (int b : lg.neighbours(a))
                    if (dist[b] < 0) {
                        dist[b] = d;
                        next.push_back(b);
                    }
            frontier = std::move(next);
        }
        for (int f = e + 1; f < m; ++f)
            if (dist[f] >= 1 && c.colours[e] == c.colours[f])
                return {false, ColouringViolation{e, f, c.colours[e]}};
    }
    return {true, std::nullopt};
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxColours = 64;
// Largest instance the bitset-based clique machinery handles; beyond this the
// solver falls back to the greedy clique bound alone.
constexpr int kBitsetCap = 192;
using VertexSet = std::bitset<kBitsetCap>;

struct SearchDeadline {
    Clock::time_point at;
    bool expired = false;
    std::uint64_t ticks = 0;
    bool check() {
        if (expired) return true;
        if ((++ticks & 1023) == 0 && Clock::now() >= at) expired = true;
        return expired;
    }
};

int first_bit(const VertexSet& s, int n) {
    for (int i = 0; i < n; ++i)
        if (s[i]) return i;
    return -1;
}

// Greedy clique, deterministic: grow from every start vertex, always adding
// the candidate with the most neighbours among the remaining candidates.
std::vector<int> greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> best;
    std::vector<char> in_cand(n, 0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> clique{s};
        std::vector<int> cand = g.neighbours(s);
        while (!cand.empty()) {
            std::fill(in_cand.begin(), in_cand.end(), 0);
            for (int v : cand) in_cand[v] = 1;
            int pick = -1, pick_deg = -1;
            for (int v : cand) {
                int d = 0;
                for (int w : g.neighbours(v))
                    if (in_cand[w]) ++d;
                if (d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            clique.push_back(pick);
            std::vector<int> next;
            for (int v : cand)
                if (v != pick && g.has_edge(v, pick)) next.push_back(v);
            cand = std::move(next);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

// Exact maximum clique (Tomita-style branch and bound with a greedy colouring
// bound). Used twice: on the graph itself for the clique lower bound, and on
// the complement for the independence number. `exact` reports whether the
// search ran to completion within its deadline.
class MaxCliqueSearch {
public:
    MaxCliqueSearch(const std::vector<VertexSet>& adj, int n, SearchDeadline& deadline)
        : adj_(adj), n_(n), deadline_(deadline) {}

    std::vector<int> run(std::vector<int> seed, bool* exact) {
        best_ = seed;
        VertexSet all;
        for (int i = 0; i < n_; ++i) all[i] = true;
        current_.clear();
        expand(all);
        *exact = !deadline_.expired;
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    const std::vector<VertexSet>& adj_;
    int n_;
    SearchDeadline& deadline_;
    std::vector<int> best_;
    std::vector<int> current_;

    void expand(VertexSet cand) {
        if (deadline_.check()) return;
        if (cand.none()) {
            if (current_.size() > best_.size()) best_ = current_;
            return;
        }
        // Greedy colouring of the candidates; colour numbers bound the clique
        // size attainable from each candidate onwards.
        std::vector<std::pair<int, int>> order;  // (vertex, colour)
        VertexSet rem = cand;
        int col = 0;
        while (rem.any()) {
            ++col;
            VertexSet avail = rem;
            while (avail.any()) {
                int v = first_bit(avail, n_);
                order.emplace_back(v, col);
                avail &= ~adj_[v];
                avail[v] = false;
                rem[v] = false;
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            auto [v, c] = order[i];
            if (current_.size() + c <= best_.size()) return;
            if (!cand[v]) continue;
            current_.push_back(v);
            expand(cand & adj_[v]);
            current_.pop_back();
            if (deadline_.expired) return;
            cand[v] = false;
        }
    }
};

// Classic DSATUR heuristic; returns the colouring it found.
std::vector<int> dsatur_colouring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    std::vector<std::uint64_t> seen(n, 0);  // colours present in the neighbourhood
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            int sat = std::popcount(seen[v]);
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = std::countr_one(seen[pick]);
        if (c >= kMaxColours) throw std::runtime_error("chromatic_number: more than 64 colours needed");
        colour[pick] = c;
        for (int w : g.neighbours(pick))
            if (colour[w] < 0) seen[w] |= std::uint64_t{1} << c;
    }
    return colour;
}

// Iterated greedy improvement: recolouring a graph class by class can only
// keep or reduce the number of colours, and cycling through a few fixed class
// orders escapes many local optima while staying deterministic.
std::vector<int> iterated_greedy(const Graph& g, std::vector<int> colour, SearchDeadline& deadline) {
    const int n = g.vertex_count();
    int colours = 1 + *std::max_element(colour.begin(), colour.end());
    int stale = 0;
    for (int pass = 0; pass < 4000 && stale < 400; ++pass) {
        if (Clock::now() >= deadline.at) break;
        std::vector<std::vector<int>> classes(colours);
        for (int v = 0; v < n; ++v) classes[colour[v]].push_back(v);
        std::vector<int> idx(colours);
        std::iota(idx.begin(), idx.end(), 0);
        switch (pass % 4) {
            case 0:  // large classes first
                std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
                    return classes[a].size() > classes[b].size();
                });
                break;
            case 1:  // small classes first
                std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
                    return classes[a].size() < classes[b].size();
                });
                break;
            case 2:
                std::reverse(idx.begin(), idx.end());
                break;
            default:  // rotate to vary the starting class
                std::rotate(idx.begin(), idx.begin() + (pass / 4) % colours, idx.end());
                break;
        }
        std::vector<int> next(n, -1);
        int used = 0;
        for (int ci : idx) {
            for (int v : classes[ci]) {
                std::uint64_t forbidden = 0;
                for (int w : g.neighbours(v))
                    if (next[w] >= 0) forbidden |= std::uint64_t{1} << next[w];
                int c = std::countr_one(forbidden);
                next[v] = c;
                used = std::max(used, c + 1);
            }
        }
        if (used < colours) {
            colours = used;
            stale = 0;
        } else {
            ++stale;
        }
        colour = std::move(next);
    }
    return colour;
}

// Decision search: can g be properly coloured with q colours? Vertices of the
// seed clique are fixed to distinct colours first. Branching picks an
// uncoloured vertex with the fewest admissible colours (ties: larger degree,
// smaller index). A fresh colour index may only be introduced once per
// branch node, which removes colour permutation symmetry.
class DecisionSearch {
public:
    DecisionSearch(const Graph& g, int q, SearchDeadline& deadline)
        : g_(g), n_(g.vertex_count()), q_(q), deadline_(deadline), colour_(n_, -1) {
        full_ = q >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q) - 1;
        avail_.assign(n_, full_);
    }

    bool run(const std::vector<int>& clique, std::vector<int>* out) {
        if (static_cast<int>(clique.size()) > q_) return false;
        for (std::size_t i = 0; i < clique.size(); ++i)
            if (!assign(clique[i], static_cast<int>(i))) return false;
        bool ok = dfs();
        if (ok && out) *out = colour_;
        return ok;
    }

private:
    const Graph& g_;
    int n_, q_;
    SearchDeadline& deadline_;
    std::vector<int> colour_;
    std::vector<std::uint64_t> avail_;
    std::uint64_t full_;
    int max_used_ = -1;
    std::vector<std::pair<int, int>> trail_;  // (vertex, colour bit removed)

    std::uint64_t allowed_mask() const {
        int hi = std::min(max_used_ + 1, q_ - 1);
        return hi >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (hi + 1)) - 1;
    }

    bool assign(int v, int c) {
        colour_[v] = c;
        max_used_ = std::max(max_used_, c);
        for (int w : g_.neighbours(v)) {
            if (colour_[w] >= 0) {
                if (colour_[w] == c) return false;
                continue;
            }
            std::uint64_t bit = std::uint64_t{1} << c;
            if (avail_[w] & bit) {
                avail_[w] &= ~bit;
                trail_.emplace_back(w, c);
                if ((avail_[w] & allowed_mask()) == 0) return false;
            }
        }
        return true;
    }

    bool dfs() {
        if (deadline_.check()) return false;

        const std::uint64_t allowed = allowed_mask();
        int pick = -1, pick_cnt = 65, pick_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) continue;
            int cnt = std::popcount(avail_[v] & allowed);
            if (cnt == 0) return false;
            int deg = g_.degree(v);
            if (cnt < pick_cnt || (cnt == pick_cnt && deg > pick_deg)) {
                pick = v;
                pick_cnt = cnt;
                pick_deg = deg;
            }
        }
        if (pick < 0) return true;  // everything coloured

        std::uint64_t options = avail_[pick] & allowed;
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            std::size_t mark = trail_.size();
            int saved_max = max_used_;
            if (assign(pick, c) && dfs()) return true;
            while (trail_.size() > mark) {
                auto [w, bit] = trail_.back();
                trail_.pop_back();
                avail_[w] |= std::uint64_t{1} << bit;
            }
            colour_[pick] = -1;
            max_used_ = saved_max;
            if (deadline_.expired) return false;
            // Any second fresh colour is a renaming of this branch.
            if (c > saved_max) break;
        }
        return false;
    }
};

long long div_ceil(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

ExactResult chromatic_number(const Graph& g, std::chrono::milliseconds budget) {
    auto start = Clock::now();
    auto finish = [&](ExactResult r) {
        r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        return r;
    };
    ExactResult res;
    const int n = g.vertex_count();
    if (n == 0) return finish(res);
    if (g.edge_count() == 0) {
        res.value = res.lower = res.upper = 1;
        return finish(res);
    }

    const auto global_deadline = start + budget;
    SearchDeadline ub_deadline{global_deadline};
    auto best_colouring = iterated_greedy(g, dsatur_colouring(g), ub_deadline);
    long long ub = 1 + *std::max_element(best_colouring.begin(), best_colouring.end());

    std::vector<int> clique = greedy_clique(g);
    long long lb = static_cast<long long>(clique.size());

    // Sharpen the lower bound with exact clique and independence numbers when
    // the instance fits the bitset machinery. Each call gets a slice of the
    // budget; an unfinished search still yields a usable clique.
    if (n <= kBitsetCap && lb < ub) {
        std::vector<VertexSet> adj(n), cadj(n);
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbours(u)) adj[u][v] = true;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && !adj[u][v]) cadj[u][v] = true;

        auto slice = std::chrono::duration_cast<std::chrono::milliseconds>(budget) / 4;
        bool exact = false;
        SearchDeadline clique_deadline{std::min(global_deadline, Clock::now() + slice)};
        MaxCliqueSearch mc(adj, n, clique_deadline);
        auto mc_clique = mc.run(clique, &exact);
        if (mc_clique.size() >= clique.size()) clique = mc_clique;
        lb = std::max(lb, static_cast<long long>(clique.size()));

        if (lb < ub) {
            SearchDeadline alpha_deadline{std::min(global_deadline, Clock::now() + slice)};
            MaxCliqueSearch mis(cadj, n, alpha_deadline);
            bool alpha_exact = false;
            auto ind = mis.run({}, &alpha_exact);
            // n/alpha bounds the chromatic number only with the true alpha.
            if (alpha_exact && !ind.empty())
                lb = std::max(lb, div_ceil(n, static_cast<long long>(ind.size())));
        }
    }

    SearchDeadline deadline{global_deadline};
    while (lb < ub) {
        int q = static_cast<int>(ub) - 1;
        if (q >= kMaxColours) throw std::runtime_error("chromatic_number: more than 64 colours needed");
        DecisionSearch search(g, q, deadline);
        std::vector<int> found;
        bool sat = search.run(clique, &found);
        if (deadline.expired) {
            res.status = ExactResult::Status::TimedOut;
            res.lower = lb;
            res.upper = ub;
            return finish(res);
        }
        if (sat) {
            ub = 1 + *std::max_element(found.begin(), found.end());
        } else {
            lb = ub;
        }
    }
    res.status = ExactResult::Status::Exact;
    res.value = res.lower = res.upper = ub;
    return finish(res);
}

ExactResult exact_chi_t_prime(const Graph& g, int t, std::chrono::milliseconds budget) {
    if (t < 1) throw std::invalid_argument("exact_chi_t_prime: t must be at least 1");
    return chromatic_number(power_graph(line_graph(g), t), budget);
}

int brute_force_chi(const Graph& gp, int cap) {
    const int n = gp.vertex_count();
    if (n > 14) throw std::invalid_argument("brute_force_chi: graph too large for the oracle");
    if (cap < 1) throw std::invalid_argument("brute_force_chi: cap must be at least 1");
    if (n == 0) return 0;

    std::vector<int> colour(n, -1);
    // Plain depth-first enumeration of assignments in vertex order.
    auto feasible = [&](auto&& self, int v, int c) -> bool {
        if (v == n) return true;
        for (int col = 0; col < c; ++col) {
            bool ok = true;
            for (int w : gp.neighbours(v)) {
                if (colour[w] == col) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colour[v] = col;
            if (self(self, v + 1, c)) return true;
            colour[v] = -1;
        }
        return false;
    };
    for (int c = 1; c <= cap; ++c) {
        if (feasible(feasible, 0, c)) return c;
    }
    throw std::runtime_error("brute_force_chi: no colouring within cap");
}

}  // namespace chromabound
