// Temporal perspective: bucket the interaction stream into UTC days (or
// hours) and compare each group's share of the bucket's categorized traffic
// against the group's membership share. A group emitting more than its
// membership share is overstimulated in that bucket; the per-group summary
// follows whichever side (over/under) dominates across buckets.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "retnet/csv.hpp"
#include "retnet/errors.hpp"
#include "retnet/grouping.hpp"
#include "retnet/interactions.hpp"
#include "retnet/time.hpp"
#include "retnet/verdicts.hpp"

namespace retnet {

enum class Granularity { day, hour };

// Dataset restricted to interactions with from <= timestamp <= to.
inline InteractionDataset window_subgraph(const InteractionDataset& ds,
                                          Timestamp from, Timestamp to) {
    if (from > to)
        throw ConfigError("time window is inverted: " +
                          timeutil::format_utc(from) + " > " +
                          timeutil::format_utc(to));
    InteractionDataset out;
    for (const auto& r : ds.rows)
        if (r.timestamp >= from && r.timestamp <= to) out.rows.push_back(r);
    if (out.rows.empty())
        throw DataError("time window " + timeutil::format_utc(from) + " .. " +
                        timeutil::format_utc(to) +
                        " contains no interactions");
    detail::finalize(out, ds.source_path);
    return out;
}

struct TemporalBucket {
    Timestamp start = 0;
    std::string label;                 // "2020-03-01" or "2020-03-01T13:00"
    std::uint64_t total = 0;           // categorized traffic in the bucket
    std::uint64_t uncategorized = 0;   // traffic without a group
    std::map<std::string, std::uint64_t> counts;
    std::map<std::string, double> shares;
    std::map<std::string, std::string> verdicts;
    bool empty = false;                // no categorized traffic at all
};

struct TemporalResult {
    Granularity granularity = Granularity::day;
    std::vector<TemporalBucket> buckets;   // contiguous, zero-filled
    std::map<std::string, double> baseline;       // membership shares
    std::map<std::string, double> traffic_share;  // share of total traffic
    std::map<std::string, std::size_t> over_buckets, under_buckets;
    std::map<std::string, std::string> group_verdicts;
    double epsilon = kDefaultEpsilon;
};

// Group shares of per-bucket traffic vs membership shares. The interaction's
// retweeter decides the group; rows by uncategorized users are counted but
// take part in no share. Buckets without categorized traffic get a Normal
// verdict for every group and an `empty` flag.
inline TemporalResult temporal_analysis(const InteractionDataset& ds,
                                        const GroupAssignment& a,
                                        Granularity gran = Granularity::day,
                                        double eps = kDefaultEpsilon) {
    if (a.group_count() == 0) throw ConfigError("no groups to analyze");
    if (ds.rows.empty()) throw DataError("dataset has no interactions");

    TemporalResult res;
    res.granularity = gran;
    res.epsilon = eps;
    for (std::size_t gi = 0; gi < a.group_count(); ++gi)
        res.baseline[a.group_names[gi]] = a.fractions[gi];

    const std::int64_t step = gran == Granularity::day
                                  ? timeutil::seconds_per_day
                                  : timeutil::seconds_per_hour;
    const auto floor_bucket = [&](Timestamp ts) {
        return gran == Granularity::day ? timeutil::floor_to_day(ts)
                                        : timeutil::floor_to_hour(ts);
    };
    const Timestamp first = floor_bucket(ds.window_start);
    const Timestamp last = floor_bucket(ds.window_end);
    const auto nbuckets = static_cast<std::size_t>((last - first) / step + 1);

    res.buckets.resize(nbuckets);
    for (std::size_t i = 0; i < nbuckets; ++i) {
        auto& b = res.buckets[i];
        b.start = first + static_cast<Timestamp>(i) * step;
        const auto iso = timeutil::format_utc(b.start);
        b.label = gran == Granularity::day ? iso.substr(0, 10)
                                           : iso.substr(0, 13) + ":00";
        for (const auto& name : a.group_names) b.counts[name] = 0;
    }

    std::uint64_t grand_total = 0;
    std::map<std::string, std::uint64_t> group_total;
    for (const auto& r : ds.rows) {
        const auto i = static_cast<std::size_t>(
            (floor_bucket(r.timestamp) - first) / step);
        auto& b = res.buckets[i];
        const int gi = a.group(r.retweeter);
        if (gi < 0) {
            ++b.uncategorized;
            continue;
        }
        ++b.counts[a.group_names[static_cast<std::size_t>(gi)]];
        ++b.total;
        ++group_total[a.group_names[static_cast<std::size_t>(gi)]];
        ++grand_total;
    }

    for (const auto& name : a.group_names) {
        res.traffic_share[name] =
            grand_total ? static_cast<double>(group_total[name]) /
                              static_cast<double>(grand_total)
                        : 0.0;
        res.over_buckets[name] = 0;
        res.under_buckets[name] = 0;
    }

    for (auto& b : res.buckets) {
        b.empty = b.total == 0;
        for (const auto& name : a.group_names) {
            if (b.empty) {
                b.shares[name] = 0.0;
                b.verdicts[name] = verdict::normal;
                continue;
            }
            const double share = static_cast<double>(b.counts[name]) /
                                 static_cast<double>(b.total);
            b.shares[name] = share;
            if (within_rel(share, res.baseline[name], eps)) {
                b.verdicts[name] = verdict::normal;
            } else if (share > res.baseline[name]) {
                b.verdicts[name] = verdict::overstimulated;
                ++res.over_buckets[name];
            } else {
                b.verdicts[name] = verdict::understimulated;
                ++res.under_buckets[name];
            }
        }
    }

    for (const auto& name : a.group_names) {
        const auto over = res.over_buckets[name];
        const auto under = res.under_buckets[name];
        if (over > under)
            res.group_verdicts[name] = verdict::overstimulated;
        else if (under > over)
            res.group_verdicts[name] = verdict::understimulated;
        else
            res.group_verdicts[name] = verdict::normal;
    }
    return res;
}

// Bucket table: one row per bucket, a count, share and verdict column per
// group (alphabetical, like the baseline map).
inline void write_temporal_csv(std::ostream& out, const TemporalResult& r) {
    std::vector<std::string> header{"date", "total"};
    for (const auto& [group, share] : r.baseline)
        header.push_back("count_" + group);
    for (const auto& [group, share] : r.baseline)
        header.push_back("p_" + group);
    for (const auto& [group, share] : r.baseline)
        header.push_back("verdict_" + group);
    csv::write_record(out, header);
    for (const auto& b : r.buckets) {
        std::vector<std::string> row{b.label, std::to_string(b.total)};
        for (const auto& [group, share] : r.baseline)
            row.push_back(std::to_string(b.counts.at(group)));
        for (const auto& [group, share] : r.baseline)
            row.push_back(csv::decimal(b.shares.at(group)));
        for (const auto& [group, share] : r.baseline)
            row.push_back(b.verdicts.at(group));
        csv::write_record(out, row);
    }
}

} // namespace retnet
