// Network composition perspectives.
//
// Global view: grow the graph by adding groups cumulatively (group 1, then
// 1+2, ...), each stage being the subgraph induced on the users added so
// far; a group "maintains" the ecosystem when its stage leaves the intensive
// properties (averages per node; density against a neutral-growth
// expectation) where the previous stage had them.
//
// Node view: per-group attribute profiles (mean/median/decile-binned means)
// computed on the full graph; groups "behave similarly" when every group
// mean sits within tolerance of the grand mean over categorized users.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "retnet/attributes.hpp"
#include "retnet/csv.hpp"
#include "retnet/errors.hpp"
#include "retnet/graph.hpp"
#include "retnet/grouping.hpp"
#include "retnet/verdicts.hpp"

namespace retnet {

// Attribute columns shared by both views, in emission order.
inline const std::array<std::string, 10>& attribute_names() {
    static const std::array<std::string, 10> names = {
        "deg_in",        "deg_out",     "str_in",
        "str_out",       "farness",     "reachable",
        "closeness",     "closeness_norm",
        "betweenness",   "betweenness_norm"};
    return names;
}

// Subset of attributes that drive Maintainer/Changer and
// BehaveSimilarly/Differently verdicts. Degrees and strengths are intensive
// already; closeness is compared in its size-free reciprocal-mean-distance
// form. Betweenness is compared raw (mean routed-pair count per node): when
// a graph grows by adding an equally-behaved population, per-node raw
// betweenness stays put, whereas the pair-normalized form shrinks with the
// square of the order and would flag every growth as a change.
inline const std::array<std::string, 6>& comparison_attribute_names() {
    static const std::array<std::string, 6> names = {
        "deg_in", "deg_out", "str_in", "str_out", "closeness",
        "betweenness"};
    return names;
}

namespace detail {

inline std::array<double, 10> attribute_row(const NodeAttributes& at,
                                            NodeIndex u) {
    return {static_cast<double>(at.deg_in[u]),
            static_cast<double>(at.deg_out[u]),
            static_cast<double>(at.str_in[u]),
            static_cast<double>(at.str_out[u]),
            at.farness[u],
            at.reachable[u],
            at.closeness_raw(u),
            at.closeness_norm(u),
            at.betweenness[u],
            at.betweenness_norm(u)};
}

// Members of groups [0, upto] that actually appear in the graph.
inline std::vector<UserId> present_members(const SocialGraph& g,
                                           const GroupAssignment& a,
                                           std::size_t upto) {
    std::vector<UserId> keep;
    for (std::size_t gi = 0; gi <= upto; ++gi)
        for (const auto& u : a.members[gi])
            if (g.contains(u)) keep.push_back(u);
    return keep;
}

} // namespace detail

struct CompositionStage {
    std::string added_group;
    GraphProperties props;
    std::map<std::string, double> avg;  // attribute name -> stage mean
    std::string verdict;                // Base | Maintainer | Changer
    std::vector<std::string> changed;   // which comparisons broke (Changer)
};

struct GlobalCompositionResult {
    std::vector<CompositionStage> stages;  // one per group, cumulative
    double epsilon = kDefaultEpsilon;
    std::string verdict; // EcosystemMaintainers | EcosystemChangers
};

// Cumulative-stage analysis. Groups must be in ascending automation order
// (as produced by assign_groups); every group needs at least one member
// present in the graph. Uncategorized users belong to no stage.
inline GlobalCompositionResult
global_composition(const SocialGraph& g, const GroupAssignment& a,
                   double eps = kDefaultEpsilon, BetweennessMode bmode = {}) {
    if (a.group_count() == 0) throw ConfigError("no groups to analyze");
    GlobalCompositionResult res;
    res.epsilon = eps;

    CompositionStage prev;
    for (std::size_t gi = 0; gi < a.group_count(); ++gi) {
        const auto keep = detail::present_members(g, a, gi);
        const std::size_t prev_order = gi ? res.stages.back().props.order : 0;
        if (keep.size() == prev_order)
            throw DataError("group '" + a.group_names[gi] +
                            "' has no members present in the graph");
        const auto stage_graph = induced_subgraph(g, keep);
        const auto at = node_attributes(stage_graph, bmode);

        CompositionStage st;
        st.added_group = a.group_names[gi];
        st.props = graph_properties(stage_graph);
        const double n = static_cast<double>(st.props.order);
        std::array<double, 10> sums{};
        for (NodeIndex u = 0; u < stage_graph.order(); ++u) {
            const auto row = detail::attribute_row(at, u);
            for (std::size_t i = 0; i < row.size(); ++i) sums[i] += row[i];
        }
        for (std::size_t i = 0; i < sums.size(); ++i)
            st.avg[attribute_names()[i]] = n > 0 ? sums[i] / n : 0.0;

        if (gi == 0) {
            st.verdict = verdict::base_group;
        } else {
            // Neutral growth keeps edges-per-node constant, so the expected
            // density at this order is prev edges-per-node / (order - 1).
            const double expected_density =
                st.props.order > 1
                    ? prev.avg.at("deg_out") /
                          static_cast<double>(st.props.order - 1)
                    : 0.0;
            if (!within_rel(st.props.density, expected_density, eps))
                st.changed.push_back("density");
            for (const auto& name : comparison_attribute_names())
                if (!within_rel(st.avg.at(name), prev.avg.at(name), eps))
                    st.changed.push_back(name);
            st.verdict =
                st.changed.empty() ? verdict::maintainer : verdict::changer;
        }
        prev = st;
        res.stages.push_back(std::move(st));
    }

    bool all_maintain = true;
    for (std::size_t gi = 1; gi < res.stages.size(); ++gi)
        all_maintain =
            all_maintain && res.stages[gi].verdict == verdict::maintainer;
    res.verdict = all_maintain ? verdict::ecosystem_maintainers
                               : verdict::ecosystem_changers;
    return res;
}

struct GroupProfile {
    std::string group;
    std::size_t present = 0; // members of the group found in the graph
    struct Summary { double mean = 0.0, median = 0.0; };
    std::map<std::string, Summary> attributes;
    struct Bin {
        int bin = 0;              // 1..10, labeled by upper edge bin/10
        std::size_t count = 0;
        std::map<std::string, double> means;
    };
    std::vector<Bin> bins;       // only non-empty score-decile bins
    std::string verdict;         // BehaveSimilarly | BehaveDifferently
    std::vector<std::string> deviating; // attributes off the grand mean
};

struct NodeCompositionResult {
    std::vector<GroupProfile> profiles;
    std::map<std::string, double> grand_means; // over categorized users
    double epsilon = kDefaultEpsilon;
    std::string verdict; // BehaveSimilarly | BehaveDifferently (overall)
};

// Per-group behavioral profiles over full-graph attributes. `at` must have
// been computed on `g` itself.
inline NodeCompositionResult
node_composition(const SocialGraph& g, const NodeAttributes& at,
                 const GroupAssignment& a, double eps = kDefaultEpsilon) {
    if (a.group_count() == 0) throw ConfigError("no groups to analyze");
    if (at.order() != g.order())
        throw ConfigError("attributes were not computed on this graph");

    NodeCompositionResult res;
    res.epsilon = eps;

    std::array<double, 10> grand_sums{};
    std::size_t grand_count = 0;
    std::vector<std::vector<NodeIndex>> idx(a.group_count());
    for (std::size_t gi = 0; gi < a.group_count(); ++gi) {
        for (const auto& u : a.members[gi])
            if (g.contains(u)) idx[gi].push_back(g.at(u));
        if (idx[gi].empty())
            throw DataError("group '" + a.group_names[gi] +
                            "' has no members present in the graph");
        for (NodeIndex u : idx[gi]) {
            const auto row = detail::attribute_row(at, u);
            for (std::size_t i = 0; i < row.size(); ++i)
                grand_sums[i] += row[i];
        }
        grand_count += idx[gi].size();
    }
    for (std::size_t i = 0; i < grand_sums.size(); ++i)
        res.grand_means[attribute_names()[i]] =
            grand_sums[i] / static_cast<double>(grand_count);

    bool all_similar = true;
    for (std::size_t gi = 0; gi < a.group_count(); ++gi) {
        GroupProfile p;
        p.group = a.group_names[gi];
        p.present = idx[gi].size();

        std::array<std::vector<double>, 10> cols;
        std::map<int, std::pair<std::size_t, std::array<double, 10>>> bins;
        for (NodeIndex u : idx[gi]) {
            const auto row = detail::attribute_row(at, u);
            for (std::size_t i = 0; i < row.size(); ++i)
                cols[i].push_back(row[i]);
            const auto score_it = a.score_of.find(g.user(u));
            if (score_it != a.score_of.end()) {
                auto& [count, sums] = bins[score_decile_bin(score_it->second)];
                ++count;
                for (std::size_t i = 0; i < row.size(); ++i)
                    sums[i] += row[i];
            }
        }
        for (std::size_t i = 0; i < cols.size(); ++i) {
            auto& col = cols[i];
            std::sort(col.begin(), col.end());
            GroupProfile::Summary s;
            for (double v : col) s.mean += v;
            s.mean /= static_cast<double>(col.size());
            const std::size_t mid = col.size() / 2;
            s.median = col.size() % 2 ? col[mid]
                                      : 0.5 * (col[mid - 1] + col[mid]);
            p.attributes[attribute_names()[i]] = s;
        }
        for (const auto& [bin, payload] : bins) {
            GroupProfile::Bin b;
            b.bin = bin;
            b.count = payload.first;
            for (std::size_t i = 0; i < payload.second.size(); ++i)
                b.means[attribute_names()[i]] =
                    payload.second[i] / static_cast<double>(payload.first);
            p.bins.push_back(std::move(b));
        }

        for (const auto& name : comparison_attribute_names())
            if (!within_rel(p.attributes.at(name).mean,
                            res.grand_means.at(name), eps))
                p.deviating.push_back(name);
        p.verdict = p.deviating.empty() ? verdict::behave_similarly
                                        : verdict::behave_differently;
        all_similar = all_similar && p.deviating.empty();
        res.profiles.push_back(std::move(p));
    }
    res.verdict = all_similar ? verdict::behave_similarly
                              : verdict::behave_differently;
    return res;
}

namespace detail {

inline const std::array<std::string, 9>& composition_csv_columns() {
    static const std::array<std::string, 9> cols = {
        "order",      "size",       "density",
        "avg_deg_in", "avg_deg_out", "avg_str_in",
        "avg_str_out", "avg_closeness_norm", "avg_betweenness_norm"};
    return cols;
}

} // namespace detail

/// Cumulative-stage table: one row per added group, graph shape plus
// per-node attribute means of that stage.
inline void write_composition_stages_csv(std::ostream& out,
                                         const GlobalCompositionResult& r) {
    std::vector<std::string> header{"stage"};
    for (const auto& c : detail::composition_csv_columns())
        header.push_back(c);
    csv::write_record(out, header);
    for (const auto& st : r.stages)
        csv::write_record(out, {st.added_group,
                                std::to_string(st.props.order),
                                std::to_string(st.props.size),
                                csv::decimal(st.props.density),
                                csv::decimal(st.avg.at("deg_in")),
                                csv::decimal(st.avg.at("deg_out")),
                                csv::decimal(st.avg.at("str_in")),
                                csv::decimal(st.avg.at("str_out")),
                                csv::decimal(st.avg.at("closeness_norm")),
                                csv::decimal(st.avg.at("betweenness_norm"))});
}

/// Node-view table: one row per group, the shape of the subgraph induced on
// the group's own members plus their full-graph attribute means.
inline void write_composition_groups_csv(std::ostream& out,
                                         const SocialGraph& g,
                                         const GroupAssignment& a,
                                         const NodeCompositionResult& r) {
    std::vector<std::string> header{"group"};
    for (const auto& c : detail::composition_csv_columns())
        header.push_back(c);
    csv::write_record(out, header);
    for (std::size_t gi = 0; gi < r.profiles.size(); ++gi) {
        const auto& p = r.profiles[gi];
        std::vector<UserId> keep;
        for (const auto& u : a.members[gi])
            if (g.contains(u)) keep.push_back(u);
        const auto props = graph_properties(induced_subgraph(g, keep));
        const auto mean = [&](const char* name) {
            return csv::decimal(p.attributes.at(name).mean);
        };
        csv::write_record(out, {p.group, std::to_string(props.order),
                                std::to_string(props.size),
                                csv::decimal(props.density), mean("deg_in"),
                                mean("deg_out"), mean("str_in"),
                                mean("str_out"), mean("closeness_norm"),
                                mean("betweenness_norm")});
    }
}

} // namespace retnet
