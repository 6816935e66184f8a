// Synthetic scenario generator. Each scenario is a fully deterministic
// dataset plus a score table and a ground-truth document listing the
// verdicts the pipeline must reproduce on it. Counts are planted exactly
// (integers by construction, never rounded rates), so the expected verdicts
// hold with wide margins at the default epsilon.
//
// Five scenarios share one population: 3500 "human" + 1000 "semibot" +
// 500 "bot" members (score bands keep the percentile split exactly on the
// group boundaries) plus 40 uncategorized "anchor" accounts that absorb
// most retweet traffic, the way a handful of celebrity accounts do in real
// retweet data:
//
//   null         uniform per-capita behavior in every group; every
//                perspective should report the all-similar verdict row.
//   heavy_weight bots author 40% of all traffic (30% recirculated inside
//                the bot group); composition/robustness/influence/
//                structure/temporal all flip.
//   core_biased  bots add a 1-weight ring among themselves (12 mutual
//                neighbors each); the innermost k-shell becomes pure bot
//                while degrees stay modest.
//   bursty_day   bots emit 1.8x their normal anchored traffic on one
//                planted day; only the temporal perspective flips.
//   fast_cascade bots run few large, fast cascades (size 99 inside an
//                hour); humans/semibots run small, slow ones.
//
// The sixth scenario, "uniform", is a single-group population with
// dispersed per-member emission used to validate removal proportionality:
// every edge has exactly one removable endpoint, so residual totals shrink
// linearly in the surviving fraction.
#pragma once

#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "retnet/errors.hpp"
#include "retnet/grouping.hpp"
#include "retnet/interactions.hpp"
#include "retnet/verdicts.hpp"

namespace retnet::synth {

struct Scenario {
    std::string name;
    InteractionDataset dataset;
    std::vector<CategorizationResult> scores;
    GroupSpec groups;
    nlohmann::ordered_json ground_truth;
};

namespace detail {

constexpr Timestamp kBase = 1583020800; // 2020-03-01T00:00:00Z
constexpr int kDays = 10;
constexpr std::size_t kAnchors = 40;

inline const std::vector<Topic>& vocab() {
    static const std::vector<Topic> v = {"campaign", "election", "memes",
                                         "news", "politics"};
    return v;
}

inline std::string padded(const char* prefix, std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%04zu", prefix, i);
    return buf;
}

inline std::string anchor_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "anchor%02zu", i);
    return buf;
}

struct Population {
    std::vector<std::size_t> sizes;
    std::vector<const char*> prefixes;
    std::vector<std::string> names;   // group-major member ids
    std::vector<std::size_t> offsets; // group start index in `names`

    std::size_t total() const { return names.size(); }
    const std::string& member(std::size_t g, std::size_t j) const {
        return names[offsets[g] + j];
    }
};

// Score bands are separated by gaps, so the rank-based percentile split
// lands exactly on the group boundaries, whatever the tie handling.
inline Population make_members(Scenario& s) {
    Population pop;
    pop.sizes = {3500, 1000, 500};
    pop.prefixes = {"h", "s", "b"};
    const double base[3] = {0.02, 0.20, 0.38};
    const double span[3] = {0.16, 0.16, 0.58};
    for (std::size_t g = 0; g < 3; ++g) {
        pop.offsets.push_back(pop.names.size());
        for (std::size_t j = 0; j < pop.sizes[g]; ++j) {
            pop.names.push_back(padded(pop.prefixes[g], j));
            const double score =
                base[g] + span[g] * static_cast<double>(j) /
                              static_cast<double>(pop.sizes[g]);
            s.scores.push_back({pop.names.back(), score, std::nullopt});
        }
    }
    s.groups.fractions = {0.7, 0.2, 0.1};
    s.groups.names = {"human", "semibot", "bot"};
    return pop;
}

inline void add_row(InteractionDataset& ds, std::string retweeter,
                    std::string retweeted, std::string tweet, Topic topic,
                    Timestamp ts) {
    ds.rows.push_back({std::move(retweeter), std::move(retweeted),
                       std::move(tweet), {std::move(topic)}, ts});
}

// One anchored retweet: member with global index `i`, emission slot `k`,
// landing on day `day`. Anchors rotate with the member index so every
// anchor receives the same load; slot offsets keep a member's slots on
// distinct anchors (needs slots <= kAnchors).
inline void anchored_row(InteractionDataset& ds, const Population& pop,
                         std::size_t g, std::size_t j, std::size_t k,
                         int day) {
    const std::size_t i = pop.offsets[g] + j;
    const std::size_t a = (i * 7 + k) % kAnchors;
    const Timestamp ts = kBase + static_cast<Timestamp>(day) * 86400 +
                         static_cast<Timestamp>((i * 131 + k * 7919) % 86400);
    add_row(ds, pop.member(g, j), anchor_name(a),
            "a" + std::to_string(a) + "_" + std::to_string(day),
            vocab()[(i + k) % vocab().size()], ts);
}

// In-group star cascades: the first 5% of each group author one cascade
// each and every other member retweets exactly one author, round-robin.
// Group sizes are chosen so every cascade has exactly 19 retweets; rows are
// spaced 1200s, so every cascade spans exactly 21600s. `day_of` and
// `second_of` place cascade k's first retweet.
template <class DayFn, class SecFn>
inline void star_cascades(InteractionDataset& ds, const Population& pop,
                          std::size_t g, DayFn day_of, SecFn second_of) {
    const std::size_t m = pop.sizes[g];
    const std::size_t authors = m / 20;
    for (std::size_t j = authors; j < m; ++j) {
        const std::size_t k = (j - authors) % authors; // cascade = author
        const std::size_t rank = (j - authors) / authors;
        const Timestamp ts = kBase +
                             static_cast<Timestamp>(day_of(k)) * 86400 +
                             static_cast<Timestamp>(second_of(k)) +
                             static_cast<Timestamp>(rank) * 1200;
        add_row(ds, pop.member(g, j), pop.member(g, k),
                std::string("m") + pop.prefixes[g] + std::to_string(k),
                vocab()[k % vocab().size()], ts);
    }
}

inline void star_cascades(InteractionDataset& ds, const Population& pop,
                          std::size_t g) {
    star_cascades(ds, pop, g, [](std::size_t k) { return k % kDays; },
                  [](std::size_t k) { return (k / kDays) * 1800; });
}

inline void finish(Scenario& s) {
    canonical_sort(s.dataset);
    retnet::detail::finalize(s.dataset, "synth:" + s.name);
}

inline nlohmann::ordered_json& expected(Scenario& s) {
    s.ground_truth["scenario"] = s.name;
    s.ground_truth["epsilon"] = kDefaultEpsilon;
    return s.ground_truth["expected"];
}

inline nlohmann::ordered_json
all_groups(const Scenario& s, const std::string& v) {
    nlohmann::ordered_json j;
    for (const auto& g : s.groups.names) j[g] = v;
    return j;
}

} // namespace detail

// Every group behaves identically per capita: 19 anchored retweets per
// member spread over ten days, plus one in-group star retweet per
// non-author. All eight perspectives should land on the "similar" verdict,
// except the head-count distribution itself (70/20/10 is uneven).
inline Scenario null_scenario() {
    using namespace detail;
    Scenario s;
    s.name = "null";
    Population pop = make_members(s);
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t j = 0; j < pop.sizes[g]; ++j)
            for (std::size_t k = 0; k < 19; ++k)
                anchored_row(s.dataset, pop, g, j, k,
                             static_cast<int>(k * kDays / 19));
    for (std::size_t g = 0; g < 3; ++g) star_cascades(s.dataset, pop, g);
    finish(s);

    auto& e = expected(s);
    e["statistical"]["verdict"] = verdict::unevenly_distributed;
    e["composition_global"]["verdict"] = verdict::ecosystem_maintainers;
    e["composition_global"]["stage_verdicts"] = {
        {"human", verdict::base_group},
        {"semibot", verdict::maintainer},
        {"bot", verdict::maintainer}};
    e["composition_nodes"]["verdict"] = verdict::behave_similarly;
    e["composition_nodes"]["group_verdicts"] =
        all_groups(s, verdict::behave_similarly);
    e["robustness"]["group_verdicts"] =
        all_groups(s, verdict::non_destabilizing);
    e["influence"]["verdict"] = verdict::influence_similarly;
    e["influence"]["group_verdicts"] =
        all_groups(s, verdict::influence_similarly);
    e["structure"]["innermost"] = 1;
    e["structure"]["group_verdicts"] = all_groups(s, verdict::proportionate);
    e["temporal"]["group_verdicts"] = all_groups(s, verdict::normal);
    e["virality"]["viral_verdict"] = verdict::equally_viral;
    e["virality"]["topic_verdict"] = verdict::discuss_similarly;
    e["virality"]["influencer_verdicts"] =
        all_groups(s, verdict::non_influencer);
    return s;
}

// Bots author 40000 of the 100000 interactions: 28500 recirculated onto
// bot authors (every non-author bot hits all 25 of them, which welds the
// group into a 25-shell) and 11500 anchored. Humans and semibots emit a
// light per-capita load. Since nobody outside the group retweets a bot,
// removing the group must drop exactly 40% of the total weight.
inline Scenario heavy_weight_scenario() {
    using namespace detail;
    Scenario s;
    s.name = "heavy_weight";
    Population pop = make_members(s);
    // human/semibot anchored: 12 per member, plus one extra for the first
    // 1725 humans to land the global total exactly on 100000.
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t j = 0; j < pop.sizes[g]; ++j)
            for (std::size_t k = 0; k < 12; ++k)
                anchored_row(s.dataset, pop, g, j, k,
                             static_cast<int>(k * kDays / 12));
    for (std::size_t j = 0; j < 1725; ++j)
        anchored_row(s.dataset, pop, 0, j, 12, static_cast<int>(j % kDays));
    // bot anchored: 23 per member.
    for (std::size_t j = 0; j < pop.sizes[2]; ++j)
        for (std::size_t k = 0; k < 23; ++k)
            anchored_row(s.dataset, pop, 2, j, k,
                         static_cast<int>(k * kDays / 23));
    star_cascades(s.dataset, pop, 0);
    star_cascades(s.dataset, pop, 1);
    // bot-internal flood: every non-author bot sends 60 retweets rotating
    // over all 25 bot authors, 6 per day.
    for (std::size_t j = 25; j < 500; ++j)
        for (std::size_t t = 0; t < 60; ++t) {
            const std::size_t author = (j + t) % 25;
            const Timestamp ts =
                kBase + static_cast<Timestamp>(t % kDays) * 86400 +
                static_cast<Timestamp>(((j * 60 + t) * 13) % 86400);
            add_row(s.dataset, pop.member(2, j), pop.member(2, author),
                    "bint" + std::to_string(author),
                    vocab()[(j + t) % vocab().size()], ts);
        }
    finish(s);

    auto& e = expected(s);
    e["statistical"]["verdict"] = verdict::unevenly_distributed;
    e["composition_global"]["verdict"] = verdict::ecosystem_changers;
    e["composition_global"]["stage_verdicts"] = {
        {"human", verdict::base_group},
        {"semibot", verdict::maintainer},
        {"bot", verdict::changer}};
    e["composition_nodes"]["verdict"] = verdict::behave_differently;
    e["composition_nodes"]["group_verdicts"]["bot"] =
        verdict::behave_differently;
    e["robustness"]["group_verdicts"] = {
        {"human", verdict::non_destabilizing},
        {"semibot", verdict::non_destabilizing},
        {"bot", verdict::destabilizing}};
    e["influence"]["verdict"] = verdict::influence_differently;
    e["influence"]["group_verdicts"]["bot"] = verdict::influence_differently;
    e["structure"]["innermost"] = 25;
    e["structure"]["group_verdicts"] = {{"human", verdict::depopulated},
                                        {"semibot", verdict::depopulated},
                                        {"bot", verdict::highly_populated}};
    e["temporal"]["group_verdicts"] = {{"human", verdict::understimulated},
                                       {"semibot", verdict::understimulated},
                                       {"bot", verdict::overstimulated}};
    e["virality"]["viral_verdict"] = verdict::unevenly_viral;
    e["virality"]["topic_verdict"] = verdict::discuss_similarly;
    e["virality"]["influencer_verdicts"] =
        all_groups(s, verdict::non_influencer);
    return s;
}

// Null behavior plus a weight-1 ring inside the bot group: each bot
// retweets its next six neighbors once, giving all 500 bots twelve mutual
// neighbors. With the one star edge on top every bot sits in the 13-shell
// while everyone else stays in the 1-shell, so the innermost shell is
// purely bot without any heavy weights.
inline Scenario core_biased_scenario() {
    using namespace detail;
    Scenario s;
    s.name = "core_biased";
    Population pop = make_members(s);
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t j = 0; j < pop.sizes[g]; ++j)
            for (std::size_t k = 0; k < 19; ++k)
                anchored_row(s.dataset, pop, g, j, k,
                             static_cast<int>(k * kDays / 19));
    for (std::size_t g = 0; g < 3; ++g) star_cascades(s.dataset, pop, g);
    for (std::size_t i = 0; i < 500; ++i)
        for (std::size_t k = 1; k <= 6; ++k) {
            const std::size_t dst = (i + k) % 500;
            const Timestamp ts =
                kBase + static_cast<Timestamp>((i + k) % kDays) * 86400 +
                static_cast<Timestamp>((i * 57 + k * 8111) % 86400);
            add_row(s.dataset, pop.member(2, i), pop.member(2, dst),
                    "ring" + std::to_string(i) + "_" + std::to_string(k),
                    vocab()[(i + k) % vocab().size()], ts);
        }
    finish(s);

    auto& e = expected(s);
    e["statistical"]["verdict"] = verdict::unevenly_distributed;
    e["composition_global"]["verdict"] = verdict::ecosystem_changers;
    e["composition_global"]["stage_verdicts"] = {
        {"human", verdict::base_group},
        {"semibot", verdict::maintainer},
        {"bot", verdict::changer}};
    e["composition_nodes"]["verdict"] = verdict::behave_differently;
    e["composition_nodes"]["group_verdicts"]["bot"] =
        verdict::behave_differently;
    e["robustness"]["group_verdicts"] = {
        {"human", verdict::non_destabilizing},
        {"semibot", verdict::non_destabilizing},
        {"bot", verdict::destabilizing}};
    e["influence"]["verdict"] = verdict::influence_differently;
    e["influence"]["group_verdicts"]["bot"] = verdict::influence_differently;
    e["structure"]["innermost"] = 13;
    e["structure"]["group_verdicts"] = {{"human", verdict::depopulated},
                                        {"semibot", verdict::depopulated},
                                        {"bot", verdict::highly_populated}};
    e["temporal"]["group_verdicts"] = {{"human", verdict::normal},
                                       {"semibot", verdict::normal},
                                       {"bot", verdict::overstimulated}};
    e["virality"]["viral_verdict"] = verdict::unevenly_viral;
    e["virality"]["topic_verdict"] = verdict::discuss_similarly;
    e["virality"]["influencer_verdicts"] =
        all_groups(s, verdict::non_influencer);
    return s;
}

// Regular anchored emission (2 per member per day) except one planted day
// on which bots emit 1.8x their normal volume. Star cascades all run on
// day 0 where shares stay exactly proportional. Only the bot row of the
// temporal perspective should flip, and only on the planted day.
inline Scenario bursty_day_scenario() {
    using namespace detail;
    constexpr int kPlantedDay = 5;
    Scenario s;
    s.name = "bursty_day";
    Population pop = make_members(s);
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t j = 0; j < pop.sizes[g]; ++j)
            for (std::size_t k = 0; k < 20; ++k)
                anchored_row(s.dataset, pop, g, j, k,
                             static_cast<int>(k / 2));
    // Planted burst: 800 extra bot rows on one day (300 members emit two
    // extras, 200 emit one), lifting the bot day total from 1000 to 1800.
    for (std::size_t j = 0; j < 500; ++j) {
        anchored_row(s.dataset, pop, 2, j, 20, kPlantedDay);
        if (j < 300) anchored_row(s.dataset, pop, 2, j, 21, kPlantedDay);
    }
    for (std::size_t g = 0; g < 3; ++g)
        star_cascades(s.dataset, pop, g, [](std::size_t) { return 0; },
                      [](std::size_t k) { return k * 370; });
    finish(s);

    auto& e = expected(s);
    e["statistical"]["verdict"] = verdict::unevenly_distributed;
    e["composition_global"]["verdict"] = verdict::ecosystem_maintainers;
    e["composition_global"]["stage_verdicts"] = {
        {"human", verdict::base_group},
        {"semibot", verdict::maintainer},
        {"bot", verdict::maintainer}};
    e["robustness"]["group_verdicts"] =
        all_groups(s, verdict::non_destabilizing);
    e["structure"]["innermost"] = 1;
    e["structure"]["group_verdicts"] = all_groups(s, verdict::proportionate);
    e["temporal"]["group_verdicts"] = {{"human", verdict::normal},
                                       {"semibot", verdict::normal},
                                       {"bot", verdict::overstimulated}};
    e["virality"]["viral_verdict"] = verdict::equally_viral;
    e["virality"]["topic_verdict"] = verdict::discuss_similarly;
    e["virality"]["influencer_verdicts"] =
        all_groups(s, verdict::non_influencer);
    return s;
}

// Cascade shapes differ: bots run 5 cascades of size 99 inside an hour
// (influencer behavior), humans and semibots run small 5-retweet cascades
// spread over three days. Every retweeter appears in exactly one cascade,
// so the categorized subgraph stays a forest.
inline Scenario fast_cascade_scenario() {
    using namespace detail;
    Scenario s;
    s.name = "fast_cascade";
    Population pop = make_members(s);
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t j = 0; j < pop.sizes[g]; ++j)
            for (std::size_t k = 0; k < 19; ++k)
                anchored_row(s.dataset, pop, g, j, k,
                             static_cast<int>(k * kDays / 19));
    // bot cascades: 5 authors, 99 distinct retweeters each, 36s spacing.
    for (std::size_t c = 0; c < 5; ++c)
        for (std::size_t t = 0; t < 99; ++t) {
            const Timestamp ts = kBase +
                                 static_cast<Timestamp>(2 * c) * 86400 +
                                 3600 + static_cast<Timestamp>(t) * 36;
            add_row(s.dataset, pop.member(2, 5 + 99 * c + t),
                    pop.member(2, c), "fb" + std::to_string(c),
                    vocab()[c % vocab().size()], ts);
        }
    // human/semibot cascades: 5 retweets spaced 64800s (72h span).
    for (std::size_t c = 0; c < 35; ++c)
        for (std::size_t t = 0; t < 5; ++t) {
            const Timestamp ts =
                kBase + static_cast<Timestamp>(c % kDays) * 86400 +
                static_cast<Timestamp>(c / kDays) * 3600 +
                static_cast<Timestamp>(t) * 64800;
            add_row(s.dataset, pop.member(0, 35 + 5 * c + t),
                    pop.member(0, c), "fh" + std::to_string(c),
                    vocab()[c % vocab().size()], ts);
        }
    for (std::size_t c = 0; c < 10; ++c)
        for (std::size_t t = 0; t < 5; ++t) {
            const Timestamp ts = kBase +
                                 static_cast<Timestamp>(c) * 86400 +
                                 static_cast<Timestamp>(t) * 64800;
            add_row(s.dataset, pop.member(1, 10 + 5 * c + t),
                    pop.member(1, c), "fs" + std::to_string(c),
                    vocab()[c % vocab().size()], ts);
        }
    finish(s);

    auto& e = expected(s);
    e["statistical"]["verdict"] = verdict::unevenly_distributed;
    e["composition_global"]["verdict"] = verdict::ecosystem_changers;
    e["composition_global"]["stage_verdicts"] = {
        {"human", verdict::base_group},
        {"semibot", verdict::maintainer},
        {"bot", verdict::changer}};
    e["composition_nodes"]["verdict"] = verdict::behave_differently;
    e["composition_nodes"]["group_verdicts"]["bot"] =
        verdict::behave_differently;
    e["robustness"]["group_verdicts"] =
        all_groups(s, verdict::non_destabilizing);
    e["influence"]["verdict"] = verdict::influence_differently;
    e["influence"]["group_verdicts"]["bot"] = verdict::influence_differently;
    // Most humans/semibots never join a cascade, so they sit isolated in
    // the 0-shell while all 500 bots populate the engaged 1-shell.
    e["structure"]["innermost"] = 1;
    e["structure"]["group_verdicts"] = {{"human", verdict::depopulated},
                                        {"semibot", verdict::depopulated},
                                        {"bot", verdict::highly_populated}};
    e["virality"]["viral_verdict"] = verdict::unevenly_viral;
    e["virality"]["topic_verdict"] = verdict::discuss_similarly;
    e["virality"]["influencer_verdicts"] = {
        {"human", verdict::non_influencer},
        {"semibot", verdict::non_influencer},
        {"bot", verdict::influencer}};
    return s;
}

// Single-group scenario for removal proportionality: member i emits
// 5 + (17i mod 41) anchored retweets (mean 25, variance ~140) and nothing
// else, so every edge dies exactly when its member is removed and the
// surviving totals shrink linearly in the surviving fraction. Only five
// anchors, so the unremovable share of the node count stays negligible
// and every member touches every anchor (degree exactly five). A single
// 3-retweet star keeps the cascade perspective well-defined.
inline Scenario uniform_scenario() {
    using namespace detail;
    Scenario s;
    s.name = "uniform";
    constexpr std::size_t kMembers = 2000, kUniformAnchors = 5;
    Population pop;
    pop.sizes = {kMembers};
    pop.prefixes = {"u"};
    pop.offsets = {0};
    for (std::size_t i = 0; i < kMembers; ++i) {
        pop.names.push_back(padded("u", i));
        s.scores.push_back({pop.names.back(),
                            0.30 + 0.40 * static_cast<double>(i) /
                                       static_cast<double>(kMembers),
                            std::nullopt});
    }
    s.groups.fractions = {1.0};
    s.groups.names = {"all"};

    for (std::size_t i = 0; i < kMembers; ++i) {
        const std::size_t w = 5 + (i * 17) % 41;
        for (std::size_t k = 0; k < w; ++k) {
            const std::size_t a = (i + k) % kUniformAnchors;
            const int day = static_cast<int>(k % kDays);
            const Timestamp ts =
                kBase + static_cast<Timestamp>(day) * 86400 +
                static_cast<Timestamp>((i * 409 + k * 73) % 86400);
            add_row(s.dataset, pop.names[i], anchor_name(a),
                    "a" + std::to_string(a) + "_" + std::to_string(day),
                    vocab()[(i + k) % vocab().size()], ts);
        }
    }
    for (std::size_t t = 1; t <= 3; ++t)
        add_row(s.dataset, pop.names[t], pop.names[0], "m0", vocab()[0],
                kBase + 3600 + static_cast<Timestamp>(t) * 60);
    finish(s);

    auto& e = expected(s);
    e["statistical"]["verdict"] = verdict::equally_distributed;
    e["composition_global"]["verdict"] = verdict::ecosystem_maintainers;
    e["composition_global"]["stage_verdicts"] = {{"all", verdict::base_group}};
    e["composition_nodes"]["verdict"] = verdict::behave_similarly;
    e["robustness"]["group_verdicts"] = {{"all", verdict::non_destabilizing}};
    e["influence"]["verdict"] = verdict::influence_similarly;
    e["structure"]["innermost"] = 1;
    e["structure"]["group_verdicts"] = {{"all", verdict::proportionate}};
    e["temporal"]["group_verdicts"] = {{"all", verdict::normal}};
    e["virality"]["viral_verdict"] = verdict::equally_viral;
    e["virality"]["topic_verdict"] = verdict::discuss_similarly;
    e["virality"]["influencer_verdicts"] = {{"all", verdict::non_influencer}};
    return s;
}

inline const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {
        "uniform",     "null",       "heavy_weight",
        "core_biased", "bursty_day", "fast_cascade"};
    return names;
}

inline Scenario make_scenario(const std::string& name) {
    if (name == "uniform") return uniform_scenario();
    if (name == "null") return null_scenario();
    if (name == "heavy_weight") return heavy_weight_scenario();
    if (name == "core_biased") return core_biased_scenario();
    if (name == "bursty_day") return bursty_day_scenario();
    if (name == "fast_cascade") return fast_cascade_scenario();
    std::string known;
    for (const auto& n : scenario_names())
        known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown scenario '" + name + "' (known: " + known +
                      ")");
}

} // namespace retnet::synth
