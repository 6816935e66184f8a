// Influence perspective: three spectral influence measures (PageRank over
// the weighted retweet direction, HITS hubs/authorities, eigenvector
// centrality on the symmetrized weights) plus a per-group comparison of
// their means against the grand mean over categorized users.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "retnet/csv.hpp"
#include "retnet/errors.hpp"
#include "retnet/graph.hpp"
#include "retnet/grouping.hpp"
#include "retnet/verdicts.hpp"

namespace retnet {

struct PageRankOptions {
    double damping = 0.85;
    double tol = 1e-12;        // L1 change between sweeps
    std::size_t max_iters = 500;
    bool weighted = true;      // split rank by edge weight, not 1/out-degree
};

struct PageRankResult {
    std::vector<double> scores; // sums to 1
    std::size_t iterations = 0;
};

// Power iteration with uniform redistribution of dangling rank. A retweet
// u -> v passes rank from u to v: being retweeted is what makes a user
// central here.
inline PageRankResult pagerank(const SocialGraph& g,
                               PageRankOptions opts = {}) {
    const std::size_t n = g.order();
    if (n == 0) throw DataError("pagerank needs a non-empty graph");
    const double d = opts.damping;
    std::vector<double> x(n, 1.0 / static_cast<double>(n)), next(n);

    PageRankResult res;
    for (std::size_t it = 1; it <= opts.max_iters; ++it) {
        double dangling = 0.0;
        for (NodeIndex u = 0; u < n; ++u)
            if (g.deg_out(u) == 0) dangling += x[u];
        const double base = ((1.0 - d) + d * dangling) /
                            static_cast<double>(n);
        std::fill(next.begin(), next.end(), base);
        for (NodeIndex u = 0; u < n; ++u) {
            if (g.deg_out(u) == 0) continue;
            if (opts.weighted) {
                const double share = d * x[u] /
                                     static_cast<double>(g.str_out(u));
                for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i)
                    next[g.out_dst[i]] +=
                        share * static_cast<double>(g.out_w[i]);
            } else {
                const double share = d * x[u] /
                                     static_cast<double>(g.deg_out(u));
                for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i)
                    next[g.out_dst[i]] += share;
            }
        }
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - x[i]);
        x.swap(next);
        res.iterations = it;
        if (delta < opts.tol) {
            double sum = 0.0;
            for (double v : x) sum += v;
            for (double& v : x) v /= sum;
            res.scores = std::move(x);
            return res;
        }
    }
    throw ComputeError("pagerank did not converge within " +
                       std::to_string(opts.max_iters) + " iterations");
}

struct HitsResult {
    std::vector<double> hubs;        // unit L2
    std::vector<double> authorities; // unit L2
    std::size_t iterations = 0;
};

namespace detail {

inline void l2_normalize(std::vector<double>& v, const char* what) {
    double sq = 0.0;
    for (double x : v) sq += x * x;
    if (sq <= 0.0)
        throw ComputeError(std::string(what) + " scores collapsed to zero");
    const double inv = 1.0 / std::sqrt(sq);
    for (double& x : v) x *= inv;
}

} // namespace detail

// Weighted HITS: a good authority is retweeted by good hubs, a good hub
// retweets good authorities. Both vectors are L2-normalized every half-step.
// The default budget assumes the comfortable spectral gap of a real retweet
// network; graphs with nearly tied dominant singular values converge at the
// gap rate, so callers facing arbitrary inputs should raise max_iters.
inline HitsResult hits(const SocialGraph& g, double tol = 1e-10,
                       std::size_t max_iters = 200) {
    const std::size_t n = g.order();
    if (g.size() == 0)
        throw DataError("hits needs a graph with at least one edge");
    std::vector<double> h(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> a(n, 0.0), prev_h = h, prev_a = a;

    HitsResult res;
    for (std::size_t it = 1; it <= max_iters; ++it) {
        std::fill(a.begin(), a.end(), 0.0);
        for (NodeIndex u = 0; u < n; ++u)
            for (std::size_t i = g.in_off[u]; i < g.in_off[u + 1]; ++i)
                a[u] += static_cast<double>(g.in_w[i]) * h[g.in_src[i]];
        detail::l2_normalize(a, "authority");
        std::fill(h.begin(), h.end(), 0.0);
        for (NodeIndex u = 0; u < n; ++u)
            for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i)
                h[u] += static_cast<double>(g.out_w[i]) * a[g.out_dst[i]];
        detail::l2_normalize(h, "hub");

        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            delta = std::max(delta, std::max(std::abs(h[i] - prev_h[i]),
                                             std::abs(a[i] - prev_a[i])));
        prev_h = h;
        prev_a = a;
        res.iterations = it;
        if (delta < tol) {
            res.hubs = std::move(h);
            res.authorities = std::move(a);
            return res;
        }
    }
    throw ComputeError("hits did not converge within " +
                       std::to_string(max_iters) + " iterations");
}

struct EigenvectorResult {
    std::vector<double> scores; // unit L2
    std::size_t iterations = 0;
};

// Eigenvector centrality of the symmetrized weight matrix, by shifted power
// iteration ((I + W + W^T) x keeps the dominant eigenvector and defeats the
// sign flip-flop bipartite structures would otherwise cause).
inline EigenvectorResult eigenvector_centrality(const SocialGraph& g,
                                                double tol = 1e-10,
                                                std::size_t max_iters =
                                                    20000) {
    const std::size_t n = g.order();
    if (g.size() == 0)
        throw DataError("eigenvector centrality needs a graph with at least "
                        "one edge");
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))),
        next(n);

    EigenvectorResult res;
    for (std::size_t it = 1; it <= max_iters; ++it) {
        for (NodeIndex u = 0; u < n; ++u) {
            double acc = x[u]; // the +I shift
            for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i)
                acc += static_cast<double>(g.out_w[i]) * x[g.out_dst[i]];
            for (std::size_t i = g.in_off[u]; i < g.in_off[u + 1]; ++i)
                acc += static_cast<double>(g.in_w[i]) * x[g.in_src[i]];
            next[u] = acc;
        }
        detail::l2_normalize(next, "eigenvector");
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            delta = std::max(delta, std::abs(next[i] - x[i]));
        x.swap(next);
        res.iterations = it;
        if (delta < tol) {
            res.scores = std::move(x);
            return res;
        }
    }
    throw ComputeError("eigenvector centrality did not converge within " +
                       std::to_string(max_iters) + " iterations");
}

inline const std::array<std::string, 4>& influence_measure_names() {
    static const std::array<std::string, 4> names = {"pagerank", "hub",
                                                     "authority",
                                                     "eigenvector"};
    return names;
}

struct GroupInfluence {
    std::string group;
    std::size_t present = 0;
    std::map<std::string, double> mean;  // measure -> group mean
    std::vector<std::string> deviating;  // measures off the grand mean
    std::string verdict; // InfluenceSimilarly | InfluenceDifferently
};

struct InfluenceOptions {
    PageRankOptions pagerank{};
    double hits_tol = 1e-10;
    std::size_t hits_max_iters = 1000;
    double eigen_tol = 1e-10;
    std::size_t eigen_max_iters = 20000;
};

struct InfluenceBin {
    int bin = 0;                         // 1..10, labeled by upper edge
    std::size_t count = 0;
    std::map<std::string, double> means; // measure -> bin mean
};

struct InfluenceResult {
    std::vector<double> pagerank;    // per node, sums to 1
    std::vector<double> hubs;        // per node, unit L2
    std::vector<double> authorities; // per node, unit L2
    std::vector<double> eigenvector; // per node, unit L2
    std::size_t pagerank_iterations = 0;
    std::size_t hits_iterations = 0;
    std::size_t eigenvector_iterations = 0;
    std::map<std::string, double> grand_mean; // over categorized users
    std::vector<GroupInfluence> groups;
    std::vector<InfluenceBin> bins; // non-empty score-decile bins, ascending
    double epsilon = kDefaultEpsilon;
    std::string verdict; // InfluenceSimilarly | InfluenceDifferently
};

inline InfluenceResult influence_analysis(const SocialGraph& g,
                                          const GroupAssignment& a,
                                          double eps = kDefaultEpsilon,
                                          InfluenceOptions opts = {}) {
    if (a.group_count() == 0) throw ConfigError("no groups to analyze");

    InfluenceResult res;
    res.epsilon = eps;
    {
        auto pr = pagerank(g, opts.pagerank);
        res.pagerank = std::move(pr.scores);
        res.pagerank_iterations = pr.iterations;
    }
    {
        auto ha = hits(g, opts.hits_tol, opts.hits_max_iters);
        res.hubs = std::move(ha.hubs);
        res.authorities = std::move(ha.authorities);
        res.hits_iterations = ha.iterations;
    }
    {
        auto ev = eigenvector_centrality(g, opts.eigen_tol,
                                         opts.eigen_max_iters);
        res.eigenvector = std::move(ev.scores);
        res.eigenvector_iterations = ev.iterations;
    }

    const auto row = [&](NodeIndex u) {
        return std::array<double, 4>{res.pagerank[u], res.hubs[u],
                                     res.authorities[u], res.eigenvector[u]};
    };

    std::vector<std::vector<NodeIndex>> idx(a.group_count());
    std::array<double, 4> grand{};
    std::size_t grand_count = 0;
    for (std::size_t gi = 0; gi < a.group_count(); ++gi) {
        for (const auto& u : a.members[gi])
            if (g.contains(u)) idx[gi].push_back(g.at(u));
        if (idx[gi].empty())
            throw DataError("group '" + a.group_names[gi] +
                            "' has no members present in the graph");
        for (NodeIndex u : idx[gi]) {
            const auto r = row(u);
            for (std::size_t i = 0; i < r.size(); ++i) grand[i] += r[i];
        }
        grand_count += idx[gi].size();
    }
    for (std::size_t i = 0; i < grand.size(); ++i)
        res.grand_mean[influence_measure_names()[i]] =
            grand[i] / static_cast<double>(grand_count);

    bool all_similar = true;
    for (std::size_t gi = 0; gi < a.group_count(); ++gi) {
        GroupInfluence gr;
        gr.group = a.group_names[gi];
        gr.present = idx[gi].size();
        std::array<double, 4> sums{};
        for (NodeIndex u : idx[gi]) {
            const auto r = row(u);
            for (std::size_t i = 0; i < r.size(); ++i) sums[i] += r[i];
        }
        for (std::size_t i = 0; i < sums.size(); ++i) {
            const auto& name = influence_measure_names()[i];
            gr.mean[name] = sums[i] / static_cast<double>(gr.present);
            if (!within_rel(gr.mean[name], res.grand_mean.at(name), eps))
                gr.deviating.push_back(name);
        }
        gr.verdict = gr.deviating.empty() ? verdict::influence_similarly
                                          : verdict::influence_differently;
        all_similar = all_similar && gr.deviating.empty();
        res.groups.push_back(std::move(gr));
    }
    res.verdict = all_similar ? verdict::influence_similarly
                              : verdict::influence_differently;

    // Score-decile view of the same measures (label-only users carry no
    // score and stay out of the bins).
    std::map<int, std::pair<std::size_t, std::array<double, 4>>> bin_acc;
    for (std::size_t gi = 0; gi < a.group_count(); ++gi)
        for (NodeIndex u : idx[gi]) {
            const auto it = a.score_of.find(g.user(u));
            if (it == a.score_of.end()) continue;
            auto& [count, sums] = bin_acc[score_decile_bin(it->second)];
            ++count;
            const auto r = row(u);
            for (std::size_t i = 0; i < r.size(); ++i) sums[i] += r[i];
        }
    for (const auto& [bin, payload] : bin_acc) {
        InfluenceBin b;
        b.bin = bin;
        b.count = payload.first;
        for (std::size_t i = 0; i < payload.second.size(); ++i)
            b.means[influence_measure_names()[i]] =
                payload.second[i] / static_cast<double>(payload.first);
        res.bins.push_back(std::move(b));
    }
    return res;
}

// Per-node influence table; score_bin is the decile bin of the automation
// score (empty for users without one).
inline void write_influence_csv(std::ostream& out, const SocialGraph& g,
                                const GroupAssignment& a,
                                const InfluenceResult& r) {
    csv::write_record(
        out, {"user", "score_bin", "pagerank", "hub", "auth", "eigenvector"});
    for (NodeIndex u = 0; u < g.order(); ++u) {
        const auto& user = g.user(u);
        std::string bin;
        if (auto it = a.score_of.find(user); it != a.score_of.end())
            bin = std::to_string(score_decile_bin(it->second));
        csv::write_record(out, {user, bin, csv::decimal(r.pagerank[u]),
                                csv::decimal(r.hubs[u]),
                                csv::decimal(r.authorities[u]),
                                csv::decimal(r.eigenvector[u])});
    }
}

} // namespace retnet
