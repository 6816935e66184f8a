// Statistical perspective: group sizes and shares, with a verdict on whether
// users are spread evenly across the groups.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "retnet/errors.hpp"
#include "retnet/grouping.hpp"
#include "retnet/verdicts.hpp"

namespace retnet {

struct DistributionReport {
    std::vector<std::string> group_names;
    std::vector<std::size_t> counts;
    std::vector<double> fractions;   // share of categorized users
    std::size_t uncategorized = 0;   // users outside every group
    double epsilon = kDefaultEpsilon;
    std::string verdict;             // EquallyDistributed | UnevenlyDistributed
};

// Groups are equally distributed when every share is within eps (relative)
// of the uniform share 1/n.
inline DistributionReport statistical_analysis(const GroupAssignment& a,
                                               double eps = kDefaultEpsilon) {
    if (a.group_count() == 0) throw ConfigError("no groups to analyze");
    if (a.categorized_count() == 0)
        throw DataError("statistical analysis needs at least one categorized "
                        "user");
    DistributionReport rep;
    rep.group_names = a.group_names;
    rep.epsilon = eps;
    rep.uncategorized = a.uncategorized.size();
    const double uniform = 1.0 / static_cast<double>(a.group_count());
    bool equal = true;
    for (std::size_t gi = 0; gi < a.group_count(); ++gi) {
        rep.counts.push_back(a.members[gi].size());
        rep.fractions.push_back(a.fractions[gi]);
        equal = equal && within_rel(a.fractions[gi], uniform, eps);
    }
    rep.verdict =
        equal ? verdict::equally_distributed : verdict::unevenly_distributed;
    return rep;
}

} // namespace retnet
