// Robustness perspective: remove each group progressively (most automated
// group first) and watch edges, weight and the giant component. Each group's
// five steps r = 0.2..1.0 are measured on the residual graph carried over
// from the groups already removed.
//
// Two comparison series are produced:
//  * the proportional baseline (1-r) * p_g * original metric, kept exactly
//    as the ecosystem model states it (steps where it is higher than what
//    the residual graph could possibly retain are flagged infeasible), and
//  * the expected proportional drop r * p_g * original metric, which the
//    verdict uses: a step is Destabilizing when the drop it actually caused
//    within its group's removal exceeds that expectation by more than the
//    relative tolerance. Only excess damage flags; dropping less than the
//    proportional share is not destabilizing.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "retnet/csv.hpp"
#include "retnet/errors.hpp"
#include "retnet/graph.hpp"
#include "retnet/grouping.hpp"
#include "retnet/verdicts.hpp"

namespace retnet {

enum class RemovalOrder { score_desc, random };

inline const std::vector<double>& removal_fractions() {
    static const std::vector<double> r{0.2, 0.4, 0.6, 0.8, 1.0};
    return r;
}

struct RemovalStep {
    std::string group;
    double r = 0.0;
    std::size_t removed_users = 0; // cumulative within the group

    std::size_t measured_edges = 0;
    std::uint64_t measured_weight = 0;
    std::size_t measured_giant = 0;

    double baseline_edges = 0.0, baseline_weight = 0.0, baseline_giant = 0.0;
    bool baseline_infeasible = false;

    double expected_drop_edges = 0.0, expected_drop_weight = 0.0,
           expected_drop_giant = 0.0;
    double drop_edges = 0.0, drop_weight = 0.0, drop_giant = 0.0;

    double pct_edges = 0.0, pct_weight = 0.0, pct_giant = 0.0; // % of original

    std::string verdict; // Destabilizing | NonDestabilizing
    std::vector<std::string> exceeded; // metrics whose drop broke the band
};

struct RobustnessResult {
    std::size_t original_order = 0;
    std::size_t original_edges = 0;
    std::uint64_t original_weight = 0;
    std::size_t original_giant = 0;
    std::vector<std::string> group_order;  // descending automation
    std::vector<double> group_fractions;   // p_g = present members / |N|
    std::vector<RemovalStep> steps;
    std::map<std::string, std::string> group_verdicts;
    RemovalOrder order = RemovalOrder::score_desc;
    std::uint64_t seed = 0;
    double epsilon = kDefaultEpsilon;
};

namespace detail {

struct ResidualMetrics {
    std::size_t edges = 0;
    std::uint64_t weight = 0;
    std::size_t giant = 0;
};

inline ResidualMetrics measure_residual(const SocialGraph& g,
                                        const std::vector<char>& alive) {
    ResidualMetrics m;
    const std::size_t n = g.order();
    for (NodeIndex u = 0; u < n; ++u) {
        if (!alive[u]) continue;
        for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i)
            if (alive[g.out_dst[i]]) {
                ++m.edges;
                m.weight += g.out_w[i];
            }
    }
    std::vector<char> seen(n, 0);
    std::vector<NodeIndex> stack;
    for (NodeIndex s = 0; s < n; ++s) {
        if (!alive[s] || seen[s]) continue;
        std::size_t count = 0;
        seen[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            const NodeIndex u = stack.back();
            stack.pop_back();
            ++count;
            for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i) {
                const NodeIndex v = g.out_dst[i];
                if (alive[v] && !seen[v]) { seen[v] = 1; stack.push_back(v); }
            }
            for (std::size_t i = g.in_off[u]; i < g.in_off[u + 1]; ++i) {
                const NodeIndex v = g.in_src[i];
                if (alive[v] && !seen[v]) { seen[v] = 1; stack.push_back(v); }
            }
        }
        m.giant = std::max(m.giant, count);
    }
    return m;
}

} // namespace detail

inline RobustnessResult
robustness_analysis(const SocialGraph& g, const GroupAssignment& a,
                    RemovalOrder order = RemovalOrder::score_desc,
                    std::uint64_t seed = 0, double eps = kDefaultEpsilon) {
    if (a.group_count() == 0) throw ConfigError("no groups to analyze");

    RobustnessResult res;
    res.order = order;
    res.seed = seed;
    res.epsilon = eps;
    res.original_order = g.order();
    res.original_edges = g.size();
    res.original_weight = g.total_weight;
    res.original_giant = giant_component_size(g);

    std::vector<char> alive(g.order(), 1);
    std::mt19937_64 rng(seed);

    // Most automated group first: reverse of the assignment's order.
    for (std::size_t gi = a.group_count(); gi-- > 0;) {
        std::vector<NodeIndex> members;
        for (const auto& u : a.members[gi])
            if (g.contains(u)) members.push_back(g.at(u));
        if (members.empty())
            throw DataError("group '" + a.group_names[gi] +
                            "' has no members present in the graph");

        if (order == RemovalOrder::score_desc) {
            std::sort(members.begin(), members.end(),
                      [&](NodeIndex x, NodeIndex y) {
                          const double sx = a.score_of.at(g.user(x));
                          const double sy = a.score_of.at(g.user(y));
                          if (sx != sy) return sx > sy;
                          return g.user(x) < g.user(y);
                      });
        } else {
            std::shuffle(members.begin(), members.end(), rng);
        }

        const double p_g = static_cast<double>(members.size()) /
                           static_cast<double>(g.order());
        res.group_order.push_back(a.group_names[gi]);
        res.group_fractions.push_back(p_g);

        const auto start = detail::measure_residual(g, alive);
        bool group_destabilizing = false;
        std::size_t removed = 0;
        for (const double r : removal_fractions()) {
            const auto target = static_cast<std::size_t>(
                std::ceil(r * static_cast<double>(members.size())));
            while (removed < target) alive[members[removed++]] = 0;
            const auto m = detail::measure_residual(g, alive);

            RemovalStep st;
            st.group = a.group_names[gi];
            st.r = r;
            st.removed_users = removed;
            st.measured_edges = m.edges;
            st.measured_weight = m.weight;
            st.measured_giant = m.giant;

            st.baseline_edges = (1.0 - r) * p_g * res.original_edges;
            st.baseline_weight =
                (1.0 - r) * p_g * static_cast<double>(res.original_weight);
            st.baseline_giant = (1.0 - r) * p_g * res.original_giant;
            st.baseline_infeasible =
                st.baseline_edges > static_cast<double>(start.edges) ||
                st.baseline_weight > static_cast<double>(start.weight) ||
                st.baseline_giant > static_cast<double>(start.giant);

            st.expected_drop_edges = r * p_g * res.original_edges;
            st.expected_drop_weight =
                r * p_g * static_cast<double>(res.original_weight);
            st.expected_drop_giant = r * p_g * res.original_giant;

            st.drop_edges = static_cast<double>(start.edges) -
                            static_cast<double>(m.edges);
            st.drop_weight = static_cast<double>(start.weight) -
                             static_cast<double>(m.weight);
            st.drop_giant = static_cast<double>(start.giant) -
                            static_cast<double>(m.giant);

            if (res.original_edges)
                st.pct_edges = 100.0 * m.edges / res.original_edges;
            if (res.original_weight)
                st.pct_weight =
                    100.0 * static_cast<double>(m.weight) /
                    static_cast<double>(res.original_weight);
            if (res.original_giant)
                st.pct_giant = 100.0 * m.giant / res.original_giant;

            if (st.drop_edges > st.expected_drop_edges * (1.0 + eps))
                st.exceeded.push_back("edges");
            if (st.drop_weight > st.expected_drop_weight * (1.0 + eps))
                st.exceeded.push_back("weight");
            if (st.drop_giant > st.expected_drop_giant * (1.0 + eps))
                st.exceeded.push_back("giant_component");
            st.verdict = st.exceeded.empty() ? verdict::non_destabilizing
                                             : verdict::destabilizing;
            group_destabilizing = group_destabilizing || !st.exceeded.empty();
            res.steps.push_back(std::move(st));
        }
        res.group_verdicts[a.group_names[gi]] =
            group_destabilizing ? verdict::destabilizing
                                : verdict::non_destabilizing;
    }
    return res;
}

// Removal curve: one row per step, remaining node/giant/edge/weight share of
// the original graph. Removals accumulate across groups, so the node count
// carries each finished group forward.
inline void write_robustness_csv(std::ostream& out,
                                 const RobustnessResult& r) {
    csv::write_record(out, {"order_mode", "group", "r", "nodes_remaining_pct",
                            "giant_pct", "edges_pct", "weight_pct",
                            "verdict"});
    const std::string mode =
        r.order == RemovalOrder::score_desc ? "score_desc" : "random";
    std::size_t carried = 0, group_last = 0;
    std::string current;
    for (const auto& s : r.steps) {
        if (s.group != current) {
            carried += group_last;
            current = s.group;
        }
        group_last = s.removed_users;
        const double remaining =
            100.0 *
            static_cast<double>(r.original_order - carried -
                                s.removed_users) /
            static_cast<double>(r.original_order);
        csv::write_record(out, {mode, s.group, csv::decimal(s.r),
                                csv::decimal(remaining),
                                csv::decimal(s.pct_giant),
                                csv::decimal(s.pct_edges),
                                csv::decimal(s.pct_weight), s.verdict});
    }
}

} // namespace retnet
