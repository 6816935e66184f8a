#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "retnet/influence.hpp"

using namespace retnet;

namespace {

InteractionDataset cycle(int n) {
    InteractionDataset ds;
    for (int i = 0; i < n; ++i)
        ds.rows.push_back({"u" + std::to_string(i),
                           "u" + std::to_string((i + 1) % n),
                           "t" + std::to_string(i), {}, 1000 + i});
    return ds;
}

InteractionDataset star(int leaves, int first_weight = 1) {
    InteractionDataset ds;
    int tweet = 0;
    for (int i = 0; i < leaves; ++i) {
        const int w = i == 0 ? first_weight : 1;
        for (int k = 0; k < w; ++k)
            ds.rows.push_back({"m" + std::to_string(i), "center",
                               "t" + std::to_string(tweet++), {}, 1000 + i});
    }
    return ds;
}

} // namespace

TEST_CASE("pagerank on a directed cycle is uniform") {
    const auto g = build_graph(cycle(8));
    const auto pr = pagerank(g);
    double sum = 0.0;
    for (const double v : pr.scores) {
        CHECK(v == Catch::Approx(1.0 / 8).margin(1e-14));
        sum += v;
    }
    CHECK(sum == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("pagerank matches the dense oracle on random graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::size_t n = 10 + seed % 31;
        const auto g = oracle::random_graph(n, 3 * n, seed);
        for (const bool weighted : {true, false}) {
            PageRankOptions opts;
            opts.weighted = weighted;
            const auto mine = pagerank(g, opts);
            const auto ref = oracle::pagerank(g, opts.damping, weighted);
            double max_diff = 0.0;
            for (std::size_t i = 0; i < mine.scores.size(); ++i)
                max_diff = std::max(max_diff,
                                    std::abs(mine.scores[i] - ref[i]));
            INFO("seed " << seed << " weighted " << weighted);
            CHECK(max_diff <= 1e-8);
        }
    }
}

TEST_CASE("dangling rank is redistributed and the total stays one") {
    const auto g = build_graph(star(5)); // the center never retweets
    const auto pr = pagerank(g);
    double sum = 0.0;
    for (const double v : pr.scores) sum += v;
    CHECK(sum == Catch::Approx(1.0).margin(1e-12));
    CHECK(pr.scores[g.at("center")] > pr.scores[g.at("m0")]);
}

TEST_CASE("weighted pagerank splits rank by retweet volume") {
    InteractionDataset ds;
    for (int i = 0; i < 9; ++i)
        ds.rows.push_back({"a", "b", "t" + std::to_string(i), {}, 1000 + i});
    ds.rows.push_back({"a", "c", "t9", {}, 2000});
    const auto g = build_graph(ds);

    const auto weighted = pagerank(g);
    CHECK(weighted.scores[g.at("b")] > weighted.scores[g.at("c")]);

    PageRankOptions classic;
    classic.weighted = false;
    const auto even = pagerank(g, classic);
    CHECK(even.scores[g.at("b")] ==
          Catch::Approx(even.scores[g.at("c")]).margin(1e-12));
}

TEST_CASE("pagerank without edges degenerates to uniform") {
    InteractionDataset ds;
    ds.rows.push_back({"a", "a", "t", {}, 1});
    ds.rows.push_back({"b", "b", "t2", {}, 2});
    const auto g = build_graph(ds);
    REQUIRE(g.size() == 0);
    const auto pr = pagerank(g);
    CHECK(pr.scores[0] == Catch::Approx(0.5).margin(1e-12));
    CHECK(pr.scores[1] == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("iteration caps raise a compute error") {
    const auto g = build_graph(star(5));
    PageRankOptions opts;
    opts.max_iters = 1;
    CHECK_THROWS_AS(pagerank(g, opts), ComputeError);
    CHECK_THROWS_AS(hits(g, 1e-12, 1), ComputeError);
}

TEST_CASE("hits concentrates authority on the star center") {
    const auto g = build_graph(star(5));
    const auto ha = hits(g);
    CHECK(ha.authorities[g.at("center")] == Catch::Approx(1.0).margin(1e-12));
    for (int i = 0; i < 5; ++i) {
        CHECK(ha.authorities[g.at("m" + std::to_string(i))] ==
              Catch::Approx(0.0).margin(1e-12));
        CHECK(ha.hubs[g.at("m" + std::to_string(i))] ==
              Catch::Approx(1.0 / std::sqrt(5.0)).margin(1e-12));
    }
    CHECK(ha.hubs[g.at("center")] == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("hits weights hubs by retweet volume") {
    const auto g = build_graph(star(5, 3)); // m0 retweeted the center thrice
    const auto ha = hits(g);
    // Hub scores are proportional to edge weight: (3,1,1,1,1)/sqrt(13).
    CHECK(ha.hubs[g.at("m0")] ==
          Catch::Approx(3.0 / std::sqrt(13.0)).margin(1e-12));
    CHECK(ha.hubs[g.at("m1")] ==
          Catch::Approx(1.0 / std::sqrt(13.0)).margin(1e-12));
}

TEST_CASE("eigenvector centrality is uniform on a symmetrized triangle") {
    const auto g = build_graph(cycle(3));
    const auto ev = eigenvector_centrality(g);
    for (const double v : ev.scores)
        CHECK(v == Catch::Approx(1.0 / std::sqrt(3.0)).margin(1e-12));
}

TEST_CASE("eigenvector centrality handles bipartite structures") {
    // Two leaves pointing at one hub is bipartite; the shifted iteration
    // still converges and ranks the hub highest.
    const auto g = build_graph(star(2));
    const auto ev = eigenvector_centrality(g);
    CHECK(ev.scores[g.at("center")] > ev.scores[g.at("m0")]);
    CHECK(ev.scores[g.at("m0")] ==
          Catch::Approx(ev.scores[g.at("m1")]).margin(1e-12));
}

TEST_CASE("eigenvector centrality favors the dense clique over a pendant") {
    InteractionDataset ds;
    int tweet = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j)
                ds.rows.push_back({"k" + std::to_string(i),
                                   "k" + std::to_string(j),
                                   "t" + std::to_string(tweet++), {}, 1000});
    ds.rows.push_back({"pendant", "k0", "tp", {}, 2000});
    const auto g = build_graph(ds);
    const auto ev = eigenvector_centrality(g);
    for (int i = 0; i < 4; ++i)
        CHECK(ev.scores[g.at("k" + std::to_string(i))] >
              ev.scores[g.at("pendant")]);
}

TEST_CASE("spectral scores keep their normalization on random graphs") {
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        const auto g = oracle::random_graph(25 + seed % 20, 150, seed);
        const auto pr = pagerank(g);
        double sum = 0.0;
        for (const double v : pr.scores) sum += v;
        CHECK(sum == Catch::Approx(1.0).margin(1e-12));

        const auto ha = hits(g);
        const auto ev = eigenvector_centrality(g);
        double h2 = 0.0, a2 = 0.0, e2 = 0.0;
        for (const double v : ha.hubs) h2 += v * v;
        for (const double v : ha.authorities) a2 += v * v;
        for (const double v : ev.scores) e2 += v * v;
        CHECK(h2 == Catch::Approx(1.0).margin(1e-12));
        CHECK(a2 == Catch::Approx(1.0).margin(1e-12));
        CHECK(e2 == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("hits and eigenvector centrality reject edgeless graphs") {
    InteractionDataset ds;
    ds.rows.push_back({"a", "a", "t", {}, 1});
    const auto g = build_graph(ds);
    CHECK_THROWS_AS(hits(g), DataError);
    CHECK_THROWS_AS(eigenvector_centrality(g), DataError);
}

namespace {

GroupAssignment three_cycle_groups() {
    std::vector<CategorizationResult> rows;
    for (int i = 0; i < 10; ++i)
        rows.push_back({"a" + std::to_string(i), 0.02, std::nullopt});
    for (int i = 0; i < 10; ++i)
        rows.push_back({"b" + std::to_string(i), 0.5, std::nullopt});
    for (int i = 0; i < 10; ++i)
        rows.push_back({"c" + std::to_string(i), 0.9, std::nullopt});
    return assign_groups(rows,
                         {{1.0 / 3, 1.0 / 3, 1.0 / 3}, {"h", "s", "b"}});
}

InteractionDataset three_cycles() {
    InteractionDataset ds;
    int tweet = 0;
    for (const char p : {'a', 'b', 'c'})
        for (int i = 0; i < 10; ++i)
            ds.rows.push_back({p + std::to_string(i),
                               p + std::to_string((i + 1) % 10),
                               "t" + std::to_string(tweet++), {}, 1000});
    return ds;
}

} // namespace

TEST_CASE("symmetric groups influence similarly") {
    const auto g = build_graph(three_cycles());
    const auto res = influence_analysis(g, three_cycle_groups());
    CHECK(res.verdict == verdict::influence_similarly);
    for (const auto& gr : res.groups) {
        CHECK(gr.verdict == verdict::influence_similarly);
        CHECK(gr.deviating.empty());
        CHECK(gr.present == 10);
    }
    CHECK(res.grand_mean.at("pagerank") ==
          Catch::Approx(1.0 / 30).margin(1e-12));
}

TEST_CASE("a heavily retweeted group influences differently") {
    auto ds = three_cycles();
    int tweet = 1000;
    for (int i = 0; i < 10; ++i)
        for (int k = 0; k < 5; ++k)
            ds.rows.push_back({"a" + std::to_string(i),
                               "c" + std::to_string(i),
                               "x" + std::to_string(tweet++), {}, 2000});
    const auto g = build_graph(ds);
    const auto res = influence_analysis(g, three_cycle_groups());
    CHECK(res.verdict == verdict::influence_differently);
    const auto& c = res.groups[2];
    REQUIRE(c.group == "b");
    CHECK_FALSE(c.deviating.empty());
    CHECK(c.mean.at("pagerank") > res.grand_mean.at("pagerank"));
    CHECK(c.mean.at("authority") > res.grand_mean.at("authority"));
}

TEST_CASE("score bins partition present users by score decile") {
    const auto g = build_graph(three_cycles());
    const auto res = influence_analysis(g, three_cycle_groups());
    // Scores 0.02, 0.5 and 0.9 land in the bins labeled by their upper
    // decile edge; each cycle contributes all ten members.
    REQUIRE(res.bins.size() == 3);
    CHECK(res.bins[0].bin == 1);
    CHECK(res.bins[1].bin == 5);
    CHECK(res.bins[2].bin == 9);
    for (const auto& b : res.bins) {
        CHECK(b.count == 10);
        CHECK(b.means.at("pagerank") == Catch::Approx(1.0 / 30).margin(1e-12));
        // The three cycles are isomorphic, so every spectral mean matches
        // the first bin's.
        for (const auto& name : influence_measure_names())
            CHECK(b.means.at(name) ==
                  Catch::Approx(res.bins[0].means.at(name)).margin(1e-9));
    }
}

TEST_CASE("per-user influence table carries bins and all four measures") {
    const auto g = build_graph(three_cycles());
    const auto a = three_cycle_groups();
    const auto res = influence_analysis(g, a);

    std::stringstream out;
    write_influence_csv(out, g, a, res);

    std::vector<std::string> fields;
    REQUIRE(csv::read_record(out, fields));
    CHECK(fields == std::vector<std::string>{"user", "score_bin", "pagerank",
                                             "hub", "auth", "eigenvector"});
    std::size_t rows = 0;
    while (csv::read_record(out, fields)) {
        REQUIRE(fields.size() == 6);
        CHECK(fields[0] == g.user(rows));
        const char prefix = fields[0][0];
        CHECK(fields[1] == (prefix == 'a' ? "1" : prefix == 'b' ? "5" : "9"));
        CHECK(std::stod(fields[2]) == Catch::Approx(1.0 / 30).margin(1e-12));
        ++rows;
    }
    CHECK(rows == g.order());
}
