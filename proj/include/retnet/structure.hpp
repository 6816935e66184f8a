// Structure perspective: k-shell decomposition of the retweet graph viewed
// as a simple undirected graph (distinct neighbors in either direction), and
// a per-shell census of the groups. A group's structural verdict is taken at
// the innermost (highest-k) shell: that is where the graph's load-bearing
// core sits.
#pragma once

#include <algorithm>
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

// Core number per node, by the linear-time bucket peel. Edge weights and
// directions are ignored; parallel directions count as one neighbor.
inline std::vector<int> kshell(const SocialGraph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<NodeIndex>> nbr(n);
    for (NodeIndex u = 0; u < n; ++u) {
        nbr[u].reserve(g.deg_out(u) + g.deg_in(u));
        std::set_union(g.out_dst.begin() + static_cast<long>(g.out_off[u]),
                       g.out_dst.begin() + static_cast<long>(g.out_off[u + 1]),
                       g.in_src.begin() + static_cast<long>(g.in_off[u]),
                       g.in_src.begin() + static_cast<long>(g.in_off[u + 1]),
                       std::back_inserter(nbr[u]));
    }

    std::vector<int> deg(n);
    int max_deg = 0;
    for (NodeIndex u = 0; u < n; ++u) {
        deg[u] = static_cast<int>(nbr[u].size());
        max_deg = std::max(max_deg, deg[u]);
    }

    // Counting-sort nodes by degree, then peel in place: processing a node
    // fixes its shell at its current degree and pulls each higher-degree
    // neighbor one bucket down.
    std::vector<std::size_t> bin(static_cast<std::size_t>(max_deg) + 2, 0);
    for (NodeIndex u = 0; u < n; ++u) ++bin[static_cast<std::size_t>(deg[u])];
    std::size_t start = 0;
    for (std::size_t d = 0; d < bin.size(); ++d) {
        const std::size_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<NodeIndex> vert(n);
    std::vector<std::size_t> pos(n);
    {
        auto cursor = bin;
        for (NodeIndex u = 0; u < n; ++u) {
            pos[u] = cursor[static_cast<std::size_t>(deg[u])]++;
            vert[pos[u]] = u;
        }
    }

    std::vector<int> shell(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const NodeIndex v = vert[i];
        shell[v] = deg[v];
        for (const NodeIndex u : nbr[v]) {
            if (deg[u] <= deg[v]) continue;
            const auto du = static_cast<std::size_t>(deg[u]);
            const NodeIndex w = vert[bin[du]]; // first node of u's bucket
            if (u != w) {
                std::swap(vert[pos[u]], vert[bin[du]]);
                std::swap(pos[u], pos[w]);
            }
            ++bin[du];
            --deg[u];
        }
    }
    return shell;
}

struct ShellRow {
    int shell = 0;
    std::size_t size = 0;
    std::map<std::string, std::size_t> counts; // group -> members in shell
    std::map<std::string, double> shares;      // group -> share of shell
    std::map<std::string, std::string> verdicts;
};

struct StructureResult {
    std::map<UserId, int> shell_of; // users of the categorized subgraph
    std::vector<ShellRow> shells;   // non-empty shells, ascending k
    std::map<std::string, double> baseline; // group share of the subgraph
    std::map<std::string, std::string> group_verdicts; // at innermost shell
    int innermost = 0;
    std::size_t subgraph_order = 0;
    std::size_t subgraph_size = 0;
    double epsilon = kDefaultEpsilon;
};

// Shell census of the subgraph induced on categorized users. Uncategorized
// users carry no group and are left out entirely, so shells describe how
// the groups arrange themselves around each other.
inline StructureResult structure_analysis(const SocialGraph& g,
                                          const GroupAssignment& a,
                                          double eps = kDefaultEpsilon) {
    if (a.group_count() == 0) throw ConfigError("no groups to analyze");

    std::vector<UserId> keep;
    std::vector<std::size_t> present(a.group_count(), 0);
    for (std::size_t gi = 0; gi < a.group_count(); ++gi) {
        for (const auto& u : a.members[gi])
            if (g.contains(u)) {
                keep.push_back(u);
                ++present[gi];
            }
        if (!present[gi])
            throw DataError("group '" + a.group_names[gi] +
                            "' has no members present in the graph");
    }

    const auto sub = induced_subgraph(g, keep);
    const auto shell = kshell(sub);

    StructureResult res;
    res.epsilon = eps;
    res.subgraph_order = sub.order();
    res.subgraph_size = sub.size();
    for (std::size_t gi = 0; gi < a.group_count(); ++gi)
        res.baseline[a.group_names[gi]] =
            static_cast<double>(present[gi]) /
            static_cast<double>(sub.order());

    std::map<int, std::map<std::string, std::size_t>> tally;
    for (NodeIndex u = 0; u < sub.order(); ++u) {
        const auto& user = sub.user(u);
        res.shell_of[user] = shell[u];
        ++tally[shell[u]][a.group_names[static_cast<std::size_t>(
            a.group(user))]];
    }

    for (const auto& [k, counts] : tally) {
        ShellRow row;
        row.shell = k;
        for (const auto& [_, c] : counts) row.size += c;
        for (std::size_t gi = 0; gi < a.group_count(); ++gi) {
            const auto& name = a.group_names[gi];
            const auto it = counts.find(name);
            const std::size_t c = it == counts.end() ? 0 : it->second;
            const double share =
                static_cast<double>(c) / static_cast<double>(row.size);
            row.counts[name] = c;
            row.shares[name] = share;
            if (within_rel(share, res.baseline.at(name), eps))
                row.verdicts[name] = verdict::proportionate;
            else if (share > res.baseline.at(name))
                row.verdicts[name] = verdict::highly_populated;
            else
                row.verdicts[name] = verdict::depopulated;
        }
        res.shells.push_back(std::move(row));
    }

    res.innermost = res.shells.back().shell;
    res.group_verdicts = res.shells.back().verdicts;
    return res;
}

// Shell census: one row per non-empty shell, a share and verdict column per
// group (alphabetical, like the baseline map).
inline void write_shells_csv(std::ostream& out, const StructureResult& r) {
    std::vector<std::string> header{"k", "shell_size"};
    for (const auto& [group, share] : r.baseline)
        header.push_back("p_" + group);
    for (const auto& [group, share] : r.baseline)
        header.push_back("verdict_" + group);
    csv::write_record(out, header);
    for (const auto& s : r.shells) {
        std::vector<std::string> row{std::to_string(s.shell),
                                     std::to_string(s.size)};
        for (const auto& [group, share] : r.baseline)
            row.push_back(csv::decimal(s.shares.at(group)));
        for (const auto& [group, share] : r.baseline)
            row.push_back(s.verdicts.at(group));
        csv::write_record(out, row);
    }
}

} // namespace retnet
