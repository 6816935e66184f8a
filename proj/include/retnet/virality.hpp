// Virality perspective: retweet cascades per tweet, their growth in unique
// retweeters, what topics each group's cascades carry, and three verdicts —
// whether the groups discuss the same things, which groups qualify as
// influencers (large cascades spreading within a day), and whether cascade
// size/duration is even across groups.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "retnet/csv.hpp"
#include "retnet/errors.hpp"
#include "retnet/grouping.hpp"
#include "retnet/interactions.hpp"
#include "retnet/verdicts.hpp"

namespace retnet {

// An influencer's cascade: at least this many retweets, fully spread within
// a day.
constexpr std::size_t kInfluencerMinSize = 50;
constexpr std::int64_t kInfluencerMaxDurationSeconds = 86400;
// Groups discuss similarly when their top-topic sets overlap at least this
// much on average (pairwise Jaccard).
constexpr double kTopicJaccardThreshold = 0.5;
constexpr std::size_t kTopTopics = 10;

struct Cascade {
    TweetId tweet;
    UserId author;                     // the retweeted user
    std::size_t size = 0;              // retweets in the cascade
    std::size_t unique_retweeters = 0;
    Timestamp first = 0, last = 0;
    std::vector<std::int64_t> offsets; // per retweet, seconds after the first
    std::vector<std::size_t> growth;   // distinct retweeters after k retweets
    std::set<Topic> topics;            // union over the cascade's rows

    std::int64_t duration() const { return last - first; }
};

// Group interactions into cascades by tweet id. Every row of a tweet must
// name the same retweeted user; cascades come back sorted by tweet id and
// their rows are ordered by time (ties by retweeter).
inline std::vector<Cascade> extract_cascades(const InteractionDataset& ds) {
    if (ds.rows.empty()) throw DataError("dataset has no interactions");
    std::unordered_map<TweetId, std::vector<const Interaction*>> by_tweet;
    for (const auto& r : ds.rows) by_tweet[r.tweet].push_back(&r);

    std::vector<Cascade> cascades;
    cascades.reserve(by_tweet.size());
    for (auto& [tweet, rows] : by_tweet) {
        std::sort(rows.begin(), rows.end(),
                  [](const Interaction* x, const Interaction* y) {
                      if (x->timestamp != y->timestamp)
                          return x->timestamp < y->timestamp;
                      return x->retweeter < y->retweeter;
                  });
        Cascade c;
        c.tweet = tweet;
        c.author = rows.front()->retweeted;
        c.first = rows.front()->timestamp;
        c.last = rows.back()->timestamp;
        std::set<UserId> seen;
        for (const Interaction* r : rows) {
            if (r->retweeted != c.author)
                throw DataError("tweet '" + tweet +
                                "' is attributed to both '" + c.author +
                                "' and '" + r->retweeted + "'");
            ++c.size;
            c.offsets.push_back(r->timestamp - c.first);
            seen.insert(r->retweeter);
            c.growth.push_back(seen.size());
            c.topics.insert(r->topics.begin(), r->topics.end());
        }
        c.unique_retweeters = seen.size();
        cascades.push_back(std::move(c));
    }
    std::sort(cascades.begin(), cascades.end(),
              [](const Cascade& x, const Cascade& y) {
                  return x.tweet < y.tweet;
              });
    return cascades;
}

struct GroupVirality {
    std::string group;
    std::size_t cascades = 0;
    double mean_size = 0.0;
    double mean_duration = 0.0;        // seconds
    double mean_unique = 0.0;
    std::vector<double> growth_curve;  // mean curve, cut at the group's
                                       // shortest cascade
    std::vector<double> offset_curve;  // mean seconds to the i-th retweet,
                                       // same cut
    std::vector<Topic> top_topics;     // by count desc, then name
    std::vector<std::size_t> top_topic_counts; // cascades behind each topic
    std::string influencer_verdict;    // Influencer | NonInfluencer
    std::vector<std::string> deviating; // "size" / "duration" off grand mean
};

struct ViralityResult {
    std::vector<Cascade> cascades;
    std::size_t uncategorized_cascades = 0; // author without a group
    std::vector<GroupVirality> groups;
    double grand_mean_size = 0.0;
    double grand_mean_duration = 0.0;
    double mean_topic_jaccard = 1.0;
    std::string topic_verdict; // DiscussSimilarly | DiscussDifferently
    std::string viral_verdict; // EquallyViral | UnevenlyViral
    double epsilon = kDefaultEpsilon;
};

inline ViralityResult virality_analysis(const InteractionDataset& ds,
                                        const GroupAssignment& a,
                                        double eps = kDefaultEpsilon) {
    if (a.group_count() == 0) throw ConfigError("no groups to analyze");

    ViralityResult res;
    res.epsilon = eps;
    res.cascades = extract_cascades(ds);

    std::vector<std::vector<const Cascade*>> per_group(a.group_count());
    double sum_size = 0.0, sum_dur = 0.0;
    std::size_t categorized = 0;
    bool any_topic = false;
    for (const auto& c : res.cascades) {
        any_topic = any_topic || !c.topics.empty();
        const int gi = a.group(c.author);
        if (gi < 0) {
            ++res.uncategorized_cascades;
            continue;
        }
        per_group[static_cast<std::size_t>(gi)].push_back(&c);
        sum_size += static_cast<double>(c.size);
        sum_dur += static_cast<double>(c.duration());
        ++categorized;
    }
    if (!categorized)
        throw DataError("no cascade has a categorized author");
    if (!any_topic)
        throw DataError("no interaction carries topics; the discussion "
                        "comparison is impossible");
    res.grand_mean_size = sum_size / static_cast<double>(categorized);
    res.grand_mean_duration = sum_dur / static_cast<double>(categorized);

    std::vector<std::set<Topic>> top_sets(a.group_count());
    bool all_even = true;
    for (std::size_t gi = 0; gi < a.group_count(); ++gi) {
        GroupVirality gv;
        gv.group = a.group_names[gi];
        gv.cascades = per_group[gi].size();

        std::map<Topic, std::size_t> topic_count;
        std::size_t shortest = 0;
        for (const Cascade* c : per_group[gi]) {
            gv.mean_size += static_cast<double>(c->size);
            gv.mean_duration += static_cast<double>(c->duration());
            gv.mean_unique += static_cast<double>(c->unique_retweeters);
            for (const auto& t : c->topics) ++topic_count[t];
            shortest = shortest == 0 ? c->growth.size()
                                     : std::min(shortest, c->growth.size());
        }
        if (gv.cascades) {
            const auto n = static_cast<double>(gv.cascades);
            gv.mean_size /= n;
            gv.mean_duration /= n;
            gv.mean_unique /= n;
            gv.growth_curve.assign(shortest, 0.0);
            gv.offset_curve.assign(shortest, 0.0);
            for (const Cascade* c : per_group[gi])
                for (std::size_t k = 0; k < shortest; ++k) {
                    gv.growth_curve[k] +=
                        static_cast<double>(c->growth[k]) / n;
                    gv.offset_curve[k] +=
                        static_cast<double>(c->offsets[k]) / n;
                }
        }

        std::vector<std::pair<Topic, std::size_t>> ranked(topic_count.begin(),
                                                          topic_count.end());
        std::sort(ranked.begin(), ranked.end(),
                  [](const auto& x, const auto& y) {
                      if (x.second != y.second) return x.second > y.second;
                      return x.first < y.first;
                  });
        for (std::size_t i = 0; i < ranked.size() && i < kTopTopics; ++i) {
            gv.top_topics.push_back(ranked[i].first);
            gv.top_topic_counts.push_back(ranked[i].second);
            top_sets[gi].insert(ranked[i].first);
        }

        gv.influencer_verdict =
            gv.cascades &&
                    gv.mean_size >= static_cast<double>(kInfluencerMinSize) &&
                    gv.mean_duration <=
                        static_cast<double>(kInfluencerMaxDurationSeconds)
                ? verdict::influencer
                : verdict::non_influencer;

        if (!within_rel(gv.mean_size, res.grand_mean_size, eps))
            gv.deviating.push_back("size");
        if (!within_rel(gv.mean_duration, res.grand_mean_duration, eps))
            gv.deviating.push_back("duration");
        all_even = all_even && gv.deviating.empty();
        res.groups.push_back(std::move(gv));
    }

    double jaccard_sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < top_sets.size(); ++i)
        for (std::size_t j = i + 1; j < top_sets.size(); ++j) {
            std::vector<Topic> common;
            std::set_intersection(top_sets[i].begin(), top_sets[i].end(),
                                  top_sets[j].begin(), top_sets[j].end(),
                                  std::back_inserter(common));
            const std::size_t uni =
                top_sets[i].size() + top_sets[j].size() - common.size();
            jaccard_sum += uni ? static_cast<double>(common.size()) /
                                     static_cast<double>(uni)
                               : 1.0;
            ++pairs;
        }
    res.mean_topic_jaccard = pairs ? jaccard_sum /
                                         static_cast<double>(pairs)
                                   : 1.0;
    res.topic_verdict = res.mean_topic_jaccard >= kTopicJaccardThreshold
                            ? verdict::discuss_similarly
                            : verdict::discuss_differently;
    res.viral_verdict =
        all_even ? verdict::equally_viral : verdict::unevenly_viral;
    return res;
}

// Cascade table: one row per cascade, author's group left empty when the
// author is uncategorized.
inline void write_cascades_csv(std::ostream& out, const GroupAssignment& a,
                               const ViralityResult& r) {
    csv::write_record(out, {"tweet", "author", "group", "size", "duration_s"});
    for (const auto& c : r.cascades) {
        const int gi = a.group(c.author);
        csv::write_record(out,
                          {c.tweet, c.author,
                           gi < 0 ? ""
                                  : a.group_names[static_cast<std::size_t>(gi)],
                           std::to_string(c.size),
                           std::to_string(c.duration())});
    }
}

/// Speed curves: mean seconds until the i-th retweet (0-based), per group,
// cut at the group's shortest cascade.
inline void write_cascade_curves_csv(std::ostream& out,
                                     const ViralityResult& r) {
    csv::write_record(out, {"group", "i", "mean_offset_s"});
    for (const auto& g : r.groups)
        for (std::size_t i = 0; i < g.offset_curve.size(); ++i)
            csv::write_record(out, {g.group, std::to_string(i),
                                    csv::decimal(g.offset_curve[i])});
}

// Top discussion topics per group, rank 1 first.
inline void write_topics_csv(std::ostream& out, const ViralityResult& r) {
    csv::write_record(out, {"group", "rank", "topic", "count"});
    for (const auto& g : r.groups)
        for (std::size_t i = 0; i < g.top_topics.size(); ++i)
            csv::write_record(out, {g.group, std::to_string(i + 1),
                                    g.top_topics[i],
                                    std::to_string(g.top_topic_counts[i])});
}

} // namespace retnet
