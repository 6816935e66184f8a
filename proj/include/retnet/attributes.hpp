// Per-node attributes: degrees, strengths, farness/closeness and betweenness
// centrality (Brandes' algorithm over unweighted hop distances, exact or
// pivot-sampled). Sampled estimates scale by |N|/k and are approximate.
#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "retnet/errors.hpp"
#include "retnet/graph.hpp"

namespace retnet {

struct BetweennessMode {
    enum class Kind { exact, sampled, automatic };
    Kind kind = Kind::automatic;
    std::size_t pivots = 256;   // only used when sampled
    std::uint64_t seed = 1;     // pivot selection seed

    static BetweennessMode exact() { return {Kind::exact, 0, 0}; }
    static BetweennessMode sampled(std::size_t k, std::uint64_t seed) {
        return {Kind::sampled, k, seed};
    }
    static BetweennessMode automatic(std::size_t k = 256,
                                     std::uint64_t seed = 1) {
        return {Kind::automatic, k, seed};
    }
};

// Threshold above which automatic mode switches from exact to sampled.
constexpr std::size_t kExactBetweennessLimit = 10000;

struct NodeAttributes {
    std::vector<std::uint32_t> deg_in, deg_out;
    std::vector<std::uint64_t> str_in, str_out;
    // Sum of hop distances to reachable nodes (self excluded) and how many
    // nodes were reachable. In sampled mode both are |N|/k-scaled estimates.
    std::vector<double> farness;
    std::vector<double> reachable;
    std::vector<double> betweenness; // raw (unnormalized) values
    bool sampled = false;
    std::size_t pivots_used = 0;
    std::uint64_t pivot_seed = 0;

    std::size_t order() const { return deg_in.size(); }

    // Reciprocal mean distance to reachable nodes; 0 when nothing is
    // reachable. Size-free, suitable for comparisons across graph sizes.
    double closeness_raw(NodeIndex u) const {
        return farness[u] > 0.0 ? reachable[u] / farness[u] : 0.0;
    }
    // Wasserman-Faust normalization: scaled by the fraction of the graph the
    // node reaches, in [0,1].
    double closeness_norm(NodeIndex u) const {
        const std::size_t n = order();
        if (n < 2 || farness[u] <= 0.0) return 0.0;
        return (reachable[u] / static_cast<double>(n - 1)) * closeness_raw(u);
    }
    // Betweenness divided by (n-1)(n-2), the number of ordered pairs a node
    // could mediate in a directed graph.
    double betweenness_norm(NodeIndex u) const {
        const std::size_t n = order();
        if (n < 3) return 0.0;
        return betweenness[u] / (static_cast<double>(n - 1) *
                                 static_cast<double>(n - 2));
    }
};

namespace detail {

// One Brandes source pass: BFS from s with shortest-path counting, then
// dependency accumulation in reverse BFS order using the in-adjacency.
// Adds dependencies into `bc` and returns (farness(s), reachable(s)).
struct BrandesScratch {
    std::vector<std::int32_t> dist;
    std::vector<double> sigma, delta;
    std::vector<NodeIndex> order; // BFS visitation order
};

inline std::pair<double, double> brandes_source(const SocialGraph& g,
                                                NodeIndex s,
                                                BrandesScratch& sc,
                                                std::vector<double>& bc) {
    const std::size_t n = g.order();
    sc.dist.assign(n, -1);
    sc.sigma.assign(n, 0.0);
    sc.delta.assign(n, 0.0);
    sc.order.clear();

    sc.dist[s] = 0;
    sc.sigma[s] = 1.0;
    std::size_t head = 0;
    sc.order.push_back(s);
    while (head < sc.order.size()) {
        const NodeIndex u = sc.order[head++];
        for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i) {
            const NodeIndex v = g.out_dst[i];
            if (sc.dist[v] < 0) {
                sc.dist[v] = sc.dist[u] + 1;
                sc.order.push_back(v);
            }
            if (sc.dist[v] == sc.dist[u] + 1) sc.sigma[v] += sc.sigma[u];
        }
    }

    double far = 0.0;
    for (std::size_t i = 1; i < sc.order.size(); ++i)
        far += sc.dist[sc.order[i]];

    // delta[v] = sum over successors w on shortest paths of
    // sigma[v]/sigma[w] * (1 + delta[w]); accumulate walking the BFS order
    // backwards and looking at predecessors via the in-adjacency.
    for (std::size_t i = sc.order.size(); i-- > 1;) {
        const NodeIndex w = sc.order[i];
        const double coeff = (1.0 + sc.delta[w]) / sc.sigma[w];
        for (std::size_t j = g.in_off[w]; j < g.in_off[w + 1]; ++j) {
            const NodeIndex v = g.in_src[j];
            if (sc.dist[v] >= 0 && sc.dist[v] + 1 == sc.dist[w])
                sc.delta[v] += sc.sigma[v] * coeff;
        }
        if (w != s) bc[w] += sc.delta[w];
    }
    return {far, static_cast<double>(sc.order.size() - 1)};
}

// Reverse BFS from pivot p: hop distances towards p over reversed edges,
// i.e. d(u, p) for every u. Used for sampled farness estimation.
inline void reverse_bfs_accumulate(const SocialGraph& g, NodeIndex p,
                                   std::vector<std::int32_t>& dist,
                                   std::vector<NodeIndex>& queue,
                                   std::vector<double>& farness,
                                   std::vector<double>& reachable) {
    dist.assign(g.order(), -1);
    queue.clear();
    dist[p] = 0;
    queue.push_back(p);
    std::size_t head = 0;
    while (head < queue.size()) {
        const NodeIndex u = queue[head++];
        for (std::size_t i = g.in_off[u]; i < g.in_off[u + 1]; ++i) {
            const NodeIndex v = g.in_src[i];
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    for (std::size_t i = 1; i < queue.size(); ++i) { // skip p itself
        const NodeIndex u = queue[i];
        farness[u] += dist[u];
        reachable[u] += 1.0;
    }
}

} // namespace detail

// Computes all attributes. Exact mode runs a Brandes pass from every node
// (farness falls out of the same BFS). Sampled mode draws k pivots without
// replacement (seeded), runs Brandes from each pivot with |N|/k scaling, and
// estimates farness via reverse BFS towards the same pivots. k >= |N| is
// clamped to |N| and then matches exact mode.
inline NodeAttributes node_attributes(const SocialGraph& g,
                                      BetweennessMode mode = {}) {
    const std::size_t n = g.order();
    NodeAttributes a;
    a.deg_in.resize(n);
    a.deg_out.resize(n);
    a.str_in.resize(n);
    a.str_out.resize(n);
    for (NodeIndex u = 0; u < n; ++u) {
        a.deg_in[u] = g.deg_in(u);
        a.deg_out[u] = g.deg_out(u);
        a.str_in[u] = g.str_in(u);
        a.str_out[u] = g.str_out(u);
    }
    a.farness.assign(n, 0.0);
    a.reachable.assign(n, 0.0);
    a.betweenness.assign(n, 0.0);

    bool exact = true;
    std::size_t k = n;
    if (mode.kind == BetweennessMode::Kind::sampled) exact = false;
    else if (mode.kind == BetweennessMode::Kind::automatic)
        exact = n <= kExactBetweennessLimit;
    if (!exact) {
        if (mode.pivots == 0)
            throw ConfigError("sampled betweenness needs at least one pivot");
        k = std::min(mode.pivots, n);
        if (k == n) exact = true; // degenerate sample = exact
    }

    detail::BrandesScratch sc;
    if (exact) {
        for (NodeIndex s = 0; s < n; ++s) {
            const auto [far, reach] = detail::brandes_source(g, s, sc, a.betweenness);
            a.farness[s] = far;
            a.reachable[s] = reach;
        }
        a.sampled = false;
        a.pivots_used = n;
        return a;
    }

    // Seeded pivot draw without replacement; pivots processed in ascending
    // index order so results are independent of draw order.
    std::vector<NodeIndex> all(n);
    for (NodeIndex i = 0; i < n; ++i) all[i] = i;
    std::mt19937_64 rng(mode.seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(all[i], all[pick(rng)]);
    }
    all.resize(k);
    std::sort(all.begin(), all.end());

    std::vector<std::int32_t> rdist;
    std::vector<NodeIndex> rqueue;
    for (NodeIndex p : all) {
        detail::brandes_source(g, p, sc, a.betweenness);
        detail::reverse_bfs_accumulate(g, p, rdist, rqueue, a.farness,
                                       a.reachable);
    }
    const double scale = static_cast<double>(n) / static_cast<double>(k);
    for (NodeIndex u = 0; u < n; ++u) {
        a.betweenness[u] *= scale;
        a.farness[u] *= scale;
        a.reachable[u] *= scale;
    }
    a.sampled = true;
    a.pivots_used = k;
    a.pivot_seed = mode.seed;
    return a;
}

} // namespace retnet
