// Acceptance gate for the analysis pipeline. Each check prints exactly one
// [PASS]/[FAIL] line; the process exits non-zero if any check failed.
// Tolerances are pinned here on purpose — do not loosen them to make a
// failing build green.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/resource.h>
#include <sys/wait.h>
#include <vector>

#include "retnet/attributes.hpp"
#include "retnet/graph.hpp"
#include "retnet/grouping.hpp"
#include "retnet/influence.hpp"
#include "retnet/interactions.hpp"
#include "retnet/report.hpp"
#include "retnet/robustness.hpp"
#include "retnet/structure.hpp"
#include "retnet/synth.hpp"

using namespace retnet;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct CheckResult {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.tellp() > 0) detail << "; ";
        detail << why;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Random small digraphs, built through the regular ingestion path.

InteractionDataset random_dataset(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> n_pick(2, 50);
    const std::size_t n = n_pick(rng);
    std::uniform_int_distribution<std::size_t> m_pick(1, 3 * n);
    const std::size_t m = m_pick(rng);
    std::uniform_int_distribution<std::size_t> node(0, n - 1);
    std::uniform_int_distribution<int> mult(1, 3);

    InteractionDataset ds;
    for (std::size_t e = 0; e < m; ++e) {
        std::size_t u = node(rng), v = node(rng);
        if (e == 0 && u == v) v = (v + 1) % n; // at least one real edge
        const int w = mult(rng);
        for (int c = 0; c < w; ++c)
            ds.rows.push_back({"u" + std::to_string(u),
                               "u" + std::to_string(v),
                               "t" + std::to_string(e),
                               {},
                               static_cast<Timestamp>(e)});
    }
    return ds;
}

// All-pairs BFS with shortest-path counts; the betweenness oracle sums the
// definitional pair-dependency sigma(s,v)*sigma(v,t)/sigma(s,t) directly
// instead of using dependency accumulation.
void bfs_counts(const SocialGraph& g, NodeIndex s, std::vector<int>& dist,
                std::vector<double>& sigma) {
    const std::size_t n = g.order();
    dist.assign(n, -1);
    sigma.assign(n, 0.0);
    dist[s] = 0;
    sigma[s] = 1.0;
    std::deque<NodeIndex> q{s};
    while (!q.empty()) {
        const NodeIndex u = q.front();
        q.pop_front();
        for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i) {
            const NodeIndex v = g.out_dst[i];
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
            if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
        }
    }
}

std::vector<double> oracle_betweenness(const SocialGraph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<int>> dist(n);
    std::vector<std::vector<double>> sigma(n);
    for (NodeIndex s = 0; s < n; ++s) bfs_counts(g, s, dist[s], sigma[s]);

    std::vector<double> bc(n, 0.0);
    for (NodeIndex v = 0; v < n; ++v)
        for (NodeIndex s = 0; s < n; ++s) {
            if (s == v || dist[s][v] < 0) continue;
            for (NodeIndex t = 0; t < n; ++t) {
                if (t == s || t == v || dist[s][t] < 0 || dist[v][t] < 0)
                    continue;
                if (dist[s][v] + dist[v][t] == dist[s][t])
                    bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
            }
        }
    return bc;
}

// Definitional k-core oracle: for ascending k, repeatedly strip nodes of
// undirected simple degree < k; survivors of the k-th peel have core >= k.
std::vector<int> oracle_kshell(const SocialGraph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<NodeIndex>> nbr(n);
    for (NodeIndex u = 0; u < n; ++u) {
        for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i)
            nbr[u].push_back(g.out_dst[i]);
        for (std::size_t i = g.in_off[u]; i < g.in_off[u + 1]; ++i)
            nbr[u].push_back(g.in_src[i]);
        std::sort(nbr[u].begin(), nbr[u].end());
        nbr[u].erase(std::unique(nbr[u].begin(), nbr[u].end()),
                     nbr[u].end());
    }

    std::vector<int> core(n, 0);
    for (int k = 1;; ++k) {
        std::vector<char> alive(n, 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeIndex u = 0; u < n; ++u) {
                if (!alive[u]) continue;
                int d = 0;
                for (const NodeIndex v : nbr[u]) d += alive[v];
                if (d < k) {
                    alive[u] = 0;
                    changed = true;
                }
            }
        }
        bool any = false;
        for (NodeIndex u = 0; u < n; ++u)
            if (alive[u]) {
                core[u] = k;
                any = true;
            }
        if (!any) break;
    }
    return core;
}

// Dense power-iteration PageRank with weighted rank splitting and uniform
// dangling redistribution, independent of the sparse push implementation.
std::vector<double> oracle_pagerank(const SocialGraph& g, double damping) {
    const std::size_t n = g.order();
    std::vector<std::vector<double>> P(n, std::vector<double>(n, 0.0));
    std::vector<char> dangling(n, 0);
    for (NodeIndex u = 0; u < n; ++u) {
        const double out = static_cast<double>(g.str_out(u));
        if (out == 0.0) {
            dangling[u] = 1;
            continue;
        }
        for (std::size_t i = g.out_off[u]; i < g.out_off[u + 1]; ++i)
            P[u][g.out_dst[i]] += static_cast<double>(g.out_w[i]) / out;
    }

    std::vector<double> x(n, 1.0 / static_cast<double>(n)), next(n);
    for (int it = 0; it < 100000; ++it) {
        double dangling_mass = 0.0;
        for (NodeIndex u = 0; u < n; ++u)
            if (dangling[u]) dangling_mass += x[u];
        const double base =
            (1.0 - damping + damping * dangling_mass) /
            static_cast<double>(n);
        std::fill(next.begin(), next.end(), base);
        for (NodeIndex u = 0; u < n; ++u) {
            if (dangling[u]) continue;
            for (NodeIndex v = 0; v < n; ++v)
                if (P[u][v] > 0.0) next[v] += damping * x[u] * P[u][v];
        }
        double delta = 0.0;
        for (NodeIndex v = 0; v < n; ++v) delta += std::fabs(next[v] - x[v]);
        x.swap(next);
        if (delta < 1e-14) break;
    }
    return x;
}

// ---------------------------------------------------------------------------

CheckResult check_oracle_equivalence() {
    CheckResult res;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20260825);
    constexpr int kGraphs = 220;
    double max_bc = 0.0, max_pr = 0.0;
    for (int i = 0; i < kGraphs && res.pass; ++i) {
        const SocialGraph g = build_graph(random_dataset(rng));

        const NodeAttributes at = node_attributes(g, BetweennessMode::exact());
        const auto bc = oracle_betweenness(g);
        for (NodeIndex u = 0; u < g.order(); ++u) {
            const double d = std::fabs(at.betweenness[u] - bc[u]);
            max_bc = std::max(max_bc, d);
            if (d > 1e-9)
                res.fail("graph " + std::to_string(i) + ": betweenness off by " +
                         std::to_string(d));
        }

        const auto shells = kshell(g);
        const auto core = oracle_kshell(g);
        for (NodeIndex u = 0; u < g.order(); ++u)
            if (shells[u] != core[u]) {
                res.fail("graph " + std::to_string(i) + ": node " +
                         std::to_string(u) + " shell " +
                         std::to_string(shells[u]) + " vs core " +
                         std::to_string(core[u]));
                break;
            }

        const auto pr = pagerank(g);
        const auto pro = oracle_pagerank(g, PageRankOptions{}.damping);
        for (NodeIndex u = 0; u < g.order(); ++u) {
            const double d = std::fabs(pr.scores[u] - pro[u]);
            max_pr = std::max(max_pr, d);
            if (d > 1e-8)
                res.fail("graph " + std::to_string(i) + ": pagerank off by " +
                         std::to_string(d));
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) res.fail("took " + std::to_string(dt) + "s (limit 60)");
    if (res.pass)
        res.detail << kGraphs << " graphs, max |d_bc| " << max_bc
                   << ", max |d_pr| " << max_pr << ", " << dt << "s";
    return res;
}

CheckResult check_conservation() {
    CheckResult res;
    std::mt19937_64 rng(20260825); // same graphs as the oracle check
    for (int i = 0; i < 220 && res.pass; ++i) {
        const SocialGraph g = build_graph(random_dataset(rng));
        const std::string tag = "graph " + std::to_string(i) + ": ";

        const auto pr = pagerank(g);
        double sum = 0.0;
        for (const double v : pr.scores) sum += v;
        if (std::fabs(sum - 1.0) > 1e-9)
            res.fail(tag + "pagerank sums to " + std::to_string(sum));

        const auto l2 = [](const std::vector<double>& v) {
            double s = 0.0;
            for (const double x : v) s += x * x;
            return std::sqrt(s);
        };
        // Random digraphs can have nearly tied dominant singular values, so
        // power iteration contracts at the (tiny) gap rate; the worst graph
        // in this seeded suite needs ~6.3k iterations for 1e-10. A generous
        // budget keeps the norm invariants checked on every graph.
        const auto ha = hits(g, 1e-10, 200000);
        const auto ev = eigenvector_centrality(g, 1e-10, 200000);
        if (std::fabs(l2(ha.hubs) - 1.0) > 1e-9)
            res.fail(tag + "hub norm " + std::to_string(l2(ha.hubs)));
        if (std::fabs(l2(ha.authorities) - 1.0) > 1e-9)
            res.fail(tag + "authority norm " +
                     std::to_string(l2(ha.authorities)));
        if (std::fabs(l2(ev.scores) - 1.0) > 1e-9)
            res.fail(tag + "eigenvector norm " +
                     std::to_string(l2(ev.scores)));

        std::uint64_t din = 0, dout = 0, sin = 0, sout = 0;
        for (NodeIndex u = 0; u < g.order(); ++u) {
            din += g.deg_in(u);
            dout += g.deg_out(u);
            sin += g.str_in(u);
            sout += g.str_out(u);
        }
        if (din != g.size() || dout != g.size())
            res.fail(tag + "degree sums " + std::to_string(din) + "/" +
                     std::to_string(dout) + " vs |E| " +
                     std::to_string(g.size()));
        if (sin != g.total_weight || sout != g.total_weight)
            res.fail(tag + "strength sums " + std::to_string(sin) + "/" +
                     std::to_string(sout) + " vs weight " +
                     std::to_string(g.total_weight));
    }
    if (res.pass)
        res.detail << "220 graphs: rank mass, unit norms, degree/strength "
                      "sums all conserved";
    return res;
}

CheckResult check_symmetry() {
    CheckResult res;

    for (std::size_t k = 2; k <= 10; ++k) {
        InteractionDataset ds;
        for (std::size_t i = 0; i < k; ++i)
            ds.rows.push_back({"u" + std::to_string(i),
                               "u" + std::to_string((i + 1) % k),
                               "t" + std::to_string(i),
                               {},
                               0});
        const auto pr = pagerank(build_graph(ds));
        for (const double v : pr.scores)
            if (std::fabs(v - 1.0 / static_cast<double>(k)) > 1e-9)
                res.fail(std::to_string(k) + "-cycle pagerank " +
                         std::to_string(v) + " != 1/" + std::to_string(k));
    }

    {
        InteractionDataset ds; // triangle, both directions
        const char* u[3] = {"a", "b", "c"};
        int t = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                ds.rows.push_back({u[i], u[j], "t" + std::to_string(t++),
                                   {}, 0});
            }
        const auto ev = eigenvector_centrality(build_graph(ds));
        const double expect = 1.0 / std::sqrt(3.0);
        for (const double v : ev.scores)
            if (std::fabs(v - expect) > 1e-9)
                res.fail("triangle eigenvector " + std::to_string(v) +
                         " != 1/sqrt(3)");
    }

    {
        InteractionDataset ds; // path a -> b -> c: 2 edges over 3 nodes
        ds.rows.push_back({"a", "b", "t0", {}, 0});
        ds.rows.push_back({"b", "c", "t1", {}, 0});
        const GraphProperties p = graph_properties(build_graph(ds));
        if (p.density != 1.0 / 3.0)
            res.fail("2-edge/3-node density " + std::to_string(p.density) +
                     " != 1/3");
    }

    if (res.pass)
        res.detail << "cycles 2..10 uniform rank, symmetric triangle uniform "
                      "eigenvector, path density exactly 1/3";
    return res;
}

GroupAssignment scenario_groups(const synth::Scenario& s,
                                const SocialGraph& g) {
    std::unordered_map<UserId, double> table;
    for (const auto& r : s.scores) table[r.user] = *r.score;
    std::vector<CategorizationResult> results;
    results.reserve(g.order());
    for (const auto& u : g.users) {
        CategorizationResult r;
        r.user = u;
        if (auto it = table.find(u); it != table.end()) r.score = it->second;
        results.push_back(std::move(r));
    }
    return assign_groups(results, s.groups);
}

CheckResult check_removal_proportionality() {
    CheckResult res;

    // Uniform one-group scenario under random removal order: across 20
    // seeds the mean measured series must track the proportional baseline
    // within 3 sample standard deviations, floored at 0.5% of the original
    // metric (the floor covers series that are deterministic by design).
    {
        const synth::Scenario s = synth::make_scenario("uniform");
        const SocialGraph g = build_graph(s.dataset);
        const GroupAssignment a = scenario_groups(s, g);

        constexpr int kSeeds = 20;
        std::vector<RobustnessResult> runs;
        for (int seed = 1; seed <= kSeeds; ++seed)
            runs.push_back(robustness_analysis(
                g, a, RemovalOrder::random, static_cast<std::uint64_t>(seed)));

        const std::size_t steps = runs[0].steps.size();
        for (std::size_t si = 0; si < steps; ++si) {
            const auto& ref = runs[0].steps[si];
            const double original[3] = {
                static_cast<double>(runs[0].original_edges),
                static_cast<double>(runs[0].original_weight),
                static_cast<double>(runs[0].original_giant)};
            const double baseline[3] = {ref.baseline_edges,
                                        ref.baseline_weight,
                                        ref.baseline_giant};
            const char* metric[3] = {"edges", "weight", "giant"};
            for (int mi = 0; mi < 3; ++mi) {
                double mean = 0.0;
                std::vector<double> vals;
                for (const auto& run : runs) {
                    const auto& st = run.steps[si];
                    const double v =
                        mi == 0   ? static_cast<double>(st.measured_edges)
                        : mi == 1 ? static_cast<double>(st.measured_weight)
                                  : static_cast<double>(st.measured_giant);
                    vals.push_back(v);
                    mean += v;
                }
                mean /= vals.size();
                double var = 0.0;
                for (const double v : vals) var += (v - mean) * (v - mean);
                const double sd =
                    std::sqrt(var / static_cast<double>(vals.size() - 1));
                const double tol = std::max(3.0 * sd, 0.005 * original[mi]);
                if (std::fabs(mean - baseline[mi]) > tol)
                    res.fail("uniform r=" + std::to_string(ref.r) + " " +
                             metric[mi] + ": mean " + std::to_string(mean) +
                             " vs baseline " + std::to_string(baseline[mi]) +
                             " (tol " + std::to_string(tol) + ")");
            }
        }
    }

    // Planted 10%-of-users / 40%-of-weight group: removing it must be
    // flagged Destabilizing with a measured weight drop of 40% +/- 2%.
    {
        const synth::Scenario s = synth::make_scenario("heavy_weight");
        const SocialGraph g = build_graph(s.dataset);
        const GroupAssignment a = scenario_groups(s, g);
        const RobustnessResult r = robustness_analysis(g, a);

        bool found = false;
        for (const auto& st : r.steps) {
            if (st.group != "bot" || st.r != 1.0) continue;
            found = true;
            const double pct =
                100.0 * st.drop_weight /
                static_cast<double>(r.original_weight);
            if (std::fabs(pct - 40.0) > 2.0)
                res.fail("planted drop " + std::to_string(pct) +
                         "% not within 40% +/- 2%");
            if (st.verdict != verdict::destabilizing)
                res.fail("planted removal verdict " + st.verdict);
            res.detail << "planted group drop " << pct << "% of weight";
        }
        if (!found) res.fail("no full-removal step for the planted group");
        if (r.group_verdicts.at("bot") != verdict::destabilizing)
            res.fail("planted group verdict " + r.group_verdicts.at("bot"));
    }

    if (res.pass) {
        std::ostringstream out;
        out << "20-seed random removal within 3 sigma of proportional; "
            << res.detail.str();
        res.detail.str(out.str());
    }
    return res;
}

CheckResult check_scenario_verdicts(const std::string& cli,
                                    const fs::path& scratch) {
    CheckResult res;
    const std::vector<std::string> scenarios = {
        "null", "heavy_weight", "core_biased", "bursty_day", "fast_cascade"};
    double worst = 0.0;
    for (const auto& name : scenarios) {
        const fs::path dir = scratch / name;
        fs::create_directories(dir);
        const std::string synth_cmd = cli + " synth -s " + name + " -o " +
                                      dir.string() + " >/dev/null 2>&1";
        if (std::system(synth_cmd.c_str()) != 0) {
            res.fail(name + ": synth failed");
            continue;
        }
        const auto t0 = Clock::now();
        const std::string all_cmd = cli + " all -c " +
                                    (dir / "config.ini").string() + " -o " +
                                    (dir / "out").string() +
                                    " >/dev/null 2>&1";
        if (std::system(all_cmd.c_str()) != 0) {
            res.fail(name + ": pipeline failed");
            continue;
        }
        const double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        if (dt >= 120.0)
            res.fail(name + ": took " + std::to_string(dt) + "s (limit 120)");

        std::ifstream gt_in(dir / "groundtruth.json");
        const auto gt = nlohmann::ordered_json::parse(gt_in);
        const Report rep = Report::load((dir / "out/report.json").string());
        std::vector<std::string> diffs;
        json_subset_diff(gt.at("expected"), rep.perspectives(), "", diffs);
        for (const auto& d : diffs) res.fail(name + d);
    }
    if (res.pass)
        res.detail << scenarios.size()
                   << " scenarios reproduce every expected verdict; slowest "
                   << worst << "s";
    return res;
}

CheckResult check_split_fidelity() {
    CheckResult res;
    std::mt19937_64 rng(77);
    const GroupSpec spec{{0.7, 0.2, 0.1}, {"low", "mid", "high"}};
    for (int trial = 0; trial < 300 && res.pass; ++trial) {
        std::uniform_int_distribution<std::size_t> n_pick(1, 500);
        const std::size_t n = n_pick(rng);
        std::vector<CategorizationResult> results;
        std::uniform_real_distribution<double> score(0.0, 1.0);
        std::uniform_int_distribution<int> style(0, 3);
        const int mode = style(rng);
        for (std::size_t i = 0; i < n; ++i) {
            CategorizationResult r;
            r.user = "u" + std::to_string(i);
            if (mode == 0) r.score = score(rng);
            else if (mode == 1) r.score = 0.5;                 // all tied
            else if (mode == 2) r.score = (i % 7) / 10.0;      // few values
            else r.score = static_cast<double>(i) / n;         // distinct
            results.push_back(std::move(r));
        }
        const GroupAssignment a = assign_groups(results, spec);

        for (std::size_t gi = 0; gi < 3; ++gi) {
            const double want = spec.fractions[gi] * static_cast<double>(n);
            const double got = static_cast<double>(a.members[gi].size());
            if (std::fabs(got - want) > 1.0)
                res.fail("trial " + std::to_string(trial) + ": group " +
                         std::to_string(gi) + " size " + std::to_string(got) +
                         " vs " + std::to_string(want));
        }
        for (std::size_t gi = 0; gi + 1 < 3; ++gi) {
            double hi = -1.0, lo = 2.0;
            for (const auto& u : a.members[gi])
                hi = std::max(hi, a.score_of.at(u));
            for (const auto& u : a.members[gi + 1])
                lo = std::min(lo, a.score_of.at(u));
            if (!a.members[gi].empty() && !a.members[gi + 1].empty() &&
                hi > lo)
                res.fail("trial " + std::to_string(trial) +
                         ": non-monotone split (" + std::to_string(hi) +
                         " above " + std::to_string(lo) + ")");
        }
    }
    if (res.pass)
        res.detail << "300 multisets: sizes within 1 of 70/20/10 and "
                      "monotone";
    return res;
}

CheckResult check_artifact_determinism(const std::string& cli,
                                       const fs::path& scratch) {
    CheckResult res;
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    };

    const fs::path d1 = scratch / "det1", d2 = scratch / "det2";
    for (const auto& d : {d1, d2}) {
        fs::create_directories(d);
        const std::string cmd = cli + " synth -s heavy_weight -o " +
                                d.string() + " >/dev/null 2>&1";
        if (std::system(cmd.c_str()) != 0) res.fail("synth failed");
    }
    for (const char* f :
         {"dataset.ndjson", "scores.csv", "groundtruth.json", "config.ini"})
        if (slurp(d1 / f) != slurp(d2 / f))
            res.fail(std::string("bundle file ") + f + " differs");

    const std::string cfg = (d1 / "config.ini").string();
    for (const char* out : {"out1", "out2"}) {
        const std::string cmd = cli + " all -c " + cfg + " -o " +
                                (d1 / out).string() + " --seed 42" +
                                " >/dev/null 2>&1";
        if (std::system(cmd.c_str()) != 0) res.fail("pipeline failed");
    }
    for (const char* f : {"report.json", "report.txt", "groups.csv",
                          "attributes.csv", "edges.txt"})
        if (slurp(d1 / "out1" / f) != slurp(d1 / "out2" / f))
            res.fail(std::string("artifact ") + f + " differs");

    if (res.pass)
        res.detail << "bundle and all run artifacts byte-identical across "
                      "repeat runs";
    return res;
}

CheckResult check_scale_envelope() {
    CheckResult res;
    const auto t0 = Clock::now();

    constexpr std::size_t n = 1'000'000;
    constexpr std::size_t strides[4] = {1, 7919, 104729, 999983};
    InteractionDataset ds;
    ds.rows.reserve(4 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (const std::size_t s : strides)
            ds.rows.push_back({"u" + std::to_string(i),
                               "u" + std::to_string((i + s) % n),
                               "t",
                               {},
                               static_cast<Timestamp>(i % 86400)});

    const SocialGraph g = build_graph(ds);
    ds.rows.clear();
    ds.rows.shrink_to_fit();
    const double t_build = seconds_since(t0);
    if (g.order() != n)
        res.fail("order " + std::to_string(g.order()));
    if (g.size() != 4 * n)
        res.fail("size " + std::to_string(g.size()));

    const auto t1 = Clock::now();
    const NodeAttributes at =
        node_attributes(g, BetweennessMode::sampled(256, 1));
    const double t_attr = seconds_since(t1);
    if (!at.sampled || at.pivots_used != 256)
        res.fail("betweenness was not 256-pivot sampled");

    const auto t2 = Clock::now();
    const auto pr = pagerank(g);
    double mass = 0.0;
    for (const double v : pr.scores) mass += v;
    if (std::fabs(mass - 1.0) > 1e-9)
        res.fail("pagerank mass " + std::to_string(mass));
    const double t_pr = seconds_since(t2);

    const auto t3 = Clock::now();
    const auto shells = kshell(g);
    if (shells.size() != n) res.fail("kshell size mismatch");
    const double t_shell = seconds_since(t3);

    const double dt = seconds_since(t0);
    struct rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    const double gb =
        static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);

    if (dt >= 600.0) res.fail("took " + std::to_string(dt) + "s (limit 600)");
    if (gb >= 8.0) res.fail("peak rss " + std::to_string(gb) + " GB");
    if (res.pass)
        res.detail << "1M nodes / 4M edges: build " << t_build
                   << "s, attributes " << t_attr << "s, pagerank " << t_pr
                   << "s (" << pr.iterations << " it), k-shell " << t_shell
                   << "s, total " << dt << "s, peak rss " << gb << " GB";
    return res;
}

} // namespace

int main() {
    const std::string cli = RETNET_CLI_PATH;
    const fs::path scratch = fs::temp_directory_path() / "retnet_acceptance";
    fs::remove_all(scratch);
    fs::create_directories(scratch);

    using Check = std::function<CheckResult()>;
    const std::vector<std::pair<std::string, Check>> checks = {
        {"centrality oracle equivalence", check_oracle_equivalence},
        {"conservation invariants", check_conservation},
        {"closed-form symmetry cases", check_symmetry},
        {"removal proportionality", check_removal_proportionality},
        {"scenario verdict recovery",
         [&] { return check_scenario_verdicts(cli, scratch); }},
        {"percentile split fidelity", check_split_fidelity},
        {"artifact determinism",
         [&] { return check_artifact_determinism(cli, scratch); }},
        {"scale envelope", check_scale_envelope},
    };

    int failures = 0;
    for (const auto& [name, fn] : checks) {
        CheckResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail.str(std::string("exception: ") + e.what());
        }
        if (!r.pass) ++failures;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << name << " — "
                  << r.detail.str() << "\n"
                  << std::flush;
    }

    fs::remove_all(scratch);
    if (failures)
        std::cout << failures << " of " << checks.size()
                  << " acceptance checks failed\n";
    else
        std::cout << "all " << checks.size() << " acceptance checks passed\n";
    return failures == 0 ? 0 : 1;
}
