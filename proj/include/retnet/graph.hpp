// Weighted directed retweet graph. An edge (u, v, w) means u retweeted
// content authored by v exactly w times. Nodes are indexed densely; ids are
// kept sorted so identical datasets always produce identical adjacency.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "retnet/errors.hpp"
#include "retnet/interactions.hpp"

namespace retnet {

using NodeIndex = std::uint32_t;

struct SocialGraph {
    std::vector<UserId> users;  // index -> id, sorted lexicographically
    std::unordered_map<UserId, NodeIndex> index; // id -> index

    // CSR, out direction: for u, targets are out_dst[out_off[u]..out_off[u+1])
    std::vector<std::size_t> out_off;
    std::vector<NodeIndex> out_dst;
    std::vector<std::uint64_t> out_w;
    // CSR, in direction
    std::vector<std::size_t> in_off;
    std::vector<NodeIndex> in_src;
    std::vector<std::uint64_t> in_w;

    std::uint64_t total_weight = 0;   // sum of edge weights = retained interactions
    std::size_t self_loop_drops = 0;  // interactions discarded as self-retweets

    std::size_t order() const { return users.size(); }
    std::size_t size() const { return out_dst.size(); } // number of edges

    const UserId& user(NodeIndex u) const { return users[u]; }

    bool contains(const UserId& id) const { return index.count(id) != 0; }

    NodeIndex at(const UserId& id) const {
        auto it = index.find(id);
        if (it == index.end()) throw DataError("unknown user: " + id);
        return it->second;
    }

    std::uint32_t deg_out(NodeIndex u) const {
        return static_cast<std::uint32_t>(out_off[u + 1] - out_off[u]);
    }
    std::uint32_t deg_in(NodeIndex u) const {
        return static_cast<std::uint32_t>(in_off[u + 1] - in_off[u]);
    }
    std::uint64_t str_out(NodeIndex u) const {
        return std::accumulate(out_w.begin() + out_off[u],
                               out_w.begin() + out_off[u + 1], std::uint64_t{0});
    }
    std::uint64_t str_in(NodeIndex u) const {
        return std::accumulate(in_w.begin() + in_off[u],
                               in_w.begin() + in_off[u + 1], std::uint64_t{0});
    }
};

namespace detail {

// Fills both CSR directions from an aggregated edge list sorted by (src, dst).
inline void fill_csr(SocialGraph& g,
                     const std::vector<std::pair<NodeIndex, NodeIndex>>& edges,
                     const std::vector<std::uint64_t>& weights) {
    const std::size_t n = g.users.size();
    const std::size_t m = edges.size();
    g.out_off.assign(n + 1, 0);
    g.in_off.assign(n + 1, 0);
    for (const auto& e : edges) {
        ++g.out_off[e.first + 1];
        ++g.in_off[e.second + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        g.out_off[i + 1] += g.out_off[i];
        g.in_off[i + 1] += g.in_off[i];
    }
    g.out_dst.resize(m);
    g.out_w.resize(m);
    g.in_src.resize(m);
    g.in_w.resize(m);
    std::vector<std::size_t> out_pos(g.out_off.begin(), g.out_off.end() - 1);
    std::vector<std::size_t> in_pos(g.in_off.begin(), g.in_off.end() - 1);
    for (std::size_t i = 0; i < m; ++i) {
        const auto [s, d] = edges[i];
        g.out_dst[out_pos[s]] = d;
        g.out_w[out_pos[s]] = weights[i];
        ++out_pos[s];
        g.in_src[in_pos[d]] = s;
        g.in_w[in_pos[d]] = weights[i];
        ++in_pos[d];
    }
    // Edges are processed in (src, dst) order, so out-rows are sorted by dst
    // and in-rows by src already.
    g.total_weight = std::accumulate(weights.begin(), weights.end(),
                                     std::uint64_t{0});
}

} // namespace detail

// Builds the graph. Self-retweets are dropped from the edge set (counted in
// self_loop_drops) but their endpoints still become nodes. Parallel
// interactions between the same ordered pair collapse into one weighted edge.
inline SocialGraph build_graph(const InteractionDataset& ds) {
    SocialGraph g;
    g.users.reserve(ds.rows.size() / 4 + 8);
    for (const auto& r : ds.rows) {
        g.users.push_back(r.retweeter);
        g.users.push_back(r.retweeted);
    }
    std::sort(g.users.begin(), g.users.end());
    g.users.erase(std::unique(g.users.begin(), g.users.end()), g.users.end());
    g.index.reserve(g.users.size() * 2);
    for (NodeIndex i = 0; i < g.users.size(); ++i) g.index.emplace(g.users[i], i);

    std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
    pairs.reserve(ds.rows.size());
    for (const auto& r : ds.rows) {
        const NodeIndex s = g.index.find(r.retweeter)->second;
        const NodeIndex d = g.index.find(r.retweeted)->second;
        if (s == d) { ++g.self_loop_drops; continue; }
        pairs.emplace_back(s, d);
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    std::vector<std::uint64_t> weights;
    edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
        edges.push_back(pairs[i]);
        weights.push_back(j - i);
        i = j;
    }
    detail::fill_csr(g, edges, weights);
    return g;
}

// Weakly-connected component id per node (0-based, in order of discovery
// from node 0 upward), plus component count via the return value's max + 1.
inline std::vector<NodeIndex> weak_components(const SocialGraph& g) {
    const std::size_t n = g.order();
    std::vector<NodeIndex> comp(n, static_cast<NodeIndex>(-1));
    std::vector<NodeIndex> stack;
    NodeIndex next = 0;
    for (NodeIndex s = 0; s < n; ++s) {
        if (comp[s] != static_cast<NodeIndex>(-1)) continue;
        comp[s] = next;
        stack.assign(1, s);
        while (!stack.empty()) {
            const NodeIndex u = stack.back();
            stack.pop_back();
            for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i)
                if (comp[g.out_dst[i]] == static_cast<NodeIndex>(-1)) {
                    comp[g.out_dst[i]] = next;
                    stack.push_back(g.out_dst[i]);
                }
            for (std::size_t i = g.in_off[u]; i < g.in_off[u + 1]; ++i)
                if (comp[g.in_src[i]] == static_cast<NodeIndex>(-1)) {
                    comp[g.in_src[i]] = next;
                    stack.push_back(g.in_src[i]);
                }
        }
        ++next;
    }
    return comp;
}

// Size of the largest weakly-connected component (0 for an empty graph).
inline std::size_t giant_component_size(const SocialGraph& g) {
    if (g.order() == 0) return 0;
    const auto comp = weak_components(g);
    std::vector<std::size_t> sizes;
    for (NodeIndex c : comp) {
        if (c >= sizes.size()) sizes.resize(c + 1, 0);
        ++sizes[c];
    }
    return *std::max_element(sizes.begin(), sizes.end());
}

struct GraphProperties {
    std::size_t order = 0;
    std::size_t size = 0;
    double density = 0.0; // |E| / (|N| (|N|-1)), 0 when |N| < 2
    std::uint64_t total_weight = 0;
    std::size_t giant_component = 0;
    std::size_t component_count = 0;
};

inline GraphProperties graph_properties(const SocialGraph& g) {
    GraphProperties p;
    p.order = g.order();
    p.size = g.size();
    p.total_weight = g.total_weight;
    if (p.order >= 2)
        p.density = static_cast<double>(p.size) /
                    (static_cast<double>(p.order) *
                     static_cast<double>(p.order - 1));
    if (p.order > 0) {
        const auto comp = weak_components(g);
        std::vector<std::size_t> sizes;
        for (NodeIndex c : comp) {
            if (c >= sizes.size()) sizes.resize(c + 1, 0);
            ++sizes[c];
        }
        p.component_count = sizes.size();
        p.giant_component = *std::max_element(sizes.begin(), sizes.end());
    }
    return p;
}

// Subgraph induced on `keep` (indices into g). Unknown ids in the UserId
// overload raise DataError. Applying the same keep twice is a no-op.
inline SocialGraph induced_subgraph(const SocialGraph& g,
                                    const std::vector<NodeIndex>& keep) {
    std::vector<bool> in_keep(g.order(), false);
    for (NodeIndex u : keep) {
        if (u >= g.order()) throw DataError("node index out of range");
        in_keep[u] = true;
    }
    SocialGraph s;
    std::vector<NodeIndex> remap(g.order(), static_cast<NodeIndex>(-1));
    for (NodeIndex u = 0; u < g.order(); ++u) // ascending -> ids stay sorted
        if (in_keep[u]) {
            remap[u] = static_cast<NodeIndex>(s.users.size());
            s.users.push_back(g.users[u]);
        }
    s.index.reserve(s.users.size() * 2);
    for (NodeIndex i = 0; i < s.users.size(); ++i) s.index.emplace(s.users[i], i);

    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    std::vector<std::uint64_t> weights;
    for (NodeIndex u = 0; u < g.order(); ++u) {
        if (!in_keep[u]) continue;
        for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i) {
            const NodeIndex v = g.out_dst[i];
            if (!in_keep[v]) continue;
            edges.emplace_back(remap[u], remap[v]);
            weights.push_back(g.out_w[i]);
        }
    }
    detail::fill_csr(s, edges, weights);
    s.self_loop_drops = 0;
    return s;
}

inline SocialGraph induced_subgraph(const SocialGraph& g,
                                    const std::vector<UserId>& keep) {
    std::vector<NodeIndex> idx;
    idx.reserve(keep.size());
    for (const auto& id : keep) idx.push_back(g.at(id));
    return induced_subgraph(g, idx);
}

// One "u v w" line per edge, in (src, dst) id order.
inline void write_edge_list(const SocialGraph& g, std::ostream& out) {
    for (NodeIndex u = 0; u < g.order(); ++u)
        for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i)
            out << g.users[u] << ' ' << g.users[g.out_dst[i]] << ' '
                << g.out_w[i] << '\n';
}

} // namespace retnet
