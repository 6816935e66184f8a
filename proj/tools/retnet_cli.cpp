// retnet: builds a weighted retweet graph from an interaction dataset,
// splits users into groups by external automation scores, and compares the
// groups from eight analysis perspectives. Each perspective subcommand
// updates out/report.json; `all` runs the whole pipeline in one go.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "retnet/composition.hpp"
#include "retnet/config.hpp"
#include "retnet/csv.hpp"
#include "retnet/graph.hpp"
#include "retnet/grouping.hpp"
#include "retnet/influence.hpp"
#include "retnet/interactions.hpp"
#include "retnet/report.hpp"
#include "retnet/robustness.hpp"
#include "retnet/stats.hpp"
#include "retnet/structure.hpp"
#include "retnet/synth.hpp"
#include "retnet/temporal.hpp"
#include "retnet/virality.hpp"

namespace {

using namespace retnet;

// Perspectives selected via --perspective on `all`; empty means "run every
// perspective".
std::vector<std::string> selected_perspectives;

struct CommonArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::optional<double> epsilon;        // overrides [analysis] epsilon
    std::optional<std::uint64_t> seed;    // overrides [robustness] seed
};

// Everything the perspective commands need, built once per invocation.
struct Pipeline {
    Config cfg;
    std::string out_dir;
    InteractionDataset dataset;
    SocialGraph graph;
    GroupAssignment groups;
    Report report;

    Pipeline(const CommonArgs& args) : report(kDefaultEpsilon) {
        cfg = load_config(args.config_path);
        if (args.epsilon) {
            if (!(*args.epsilon > 0.0 && *args.epsilon < 1.0))
                throw ConfigError("--epsilon must be in (0,1)");
            cfg.epsilon = *args.epsilon;
        }
        if (args.seed) cfg.removal_seed = *args.seed;
        if (cfg.dataset_path.empty())
            throw ConfigError(args.config_path +
                              ": [input] dataset is required");
        out_dir = args.out_dir;
        std::filesystem::create_directories(out_dir);

        dataset = load_dataset(cfg.resolve(cfg.dataset_path));
        if (cfg.sample_fraction < 1.0)
            dataset = sample_dataset(dataset, cfg.sample_fraction,
                                     cfg.sample_seed);
        graph = build_graph(dataset);

        auto source = make_score_source(cfg);
        const auto results = source->fetch(graph.users);
        groups = cfg.label_mode ? assign_groups_by_label(results)
                                : assign_groups(results, cfg.groups);

        // Continue a previous run's report when one exists.
        const std::string report_path = out_dir + "/report.json";
        if (std::filesystem::exists(report_path))
            report = Report::load(report_path);
        else
            report = Report(cfg.epsilon);
        report.set_epsilon(cfg.epsilon);
        report.set_dataset(dataset);
        report.set_graph(graph);
        report.set_grouping(groups);
    }

    void save_report() {
        report.save(out_dir + "/report.json");
        std::ofstream txt(out_dir + "/report.txt", std::ios::binary);
        txt << report.text_table();
    }

    std::ofstream open_out(const std::string& name) const {
        std::ofstream out(out_dir + "/" + name, std::ios::binary);
        if (!out) throw DataError("cannot write " + out_dir + "/" + name);
        return out;
    }

    void write_groups_csv() const {
        std::ofstream out(out_dir + "/groups.csv", std::ios::binary);
        if (!out) throw DataError("cannot write " + out_dir + "/groups.csv");
        csv::write_record(out, {"user", "score", "group"});
        for (const auto& u : graph.users) {
            const int gi = groups.group(u);
            std::string score;
            if (auto it = groups.score_of.find(u);
                it != groups.score_of.end())
                score = csv::decimal(it->second);
            csv::write_record(
                out, {u, score, gi < 0 ? "" : groups.group_names[gi]});
        }
    }

    void write_attributes_csv(const NodeAttributes& at) const {
        std::ofstream out(out_dir + "/attributes.csv", std::ios::binary);
        if (!out)
            throw DataError("cannot write " + out_dir + "/attributes.csv");
        std::vector<std::string> header{"user", "group"};
        for (const auto& name : attribute_names()) header.push_back(name);
        csv::write_record(out, header);
        for (NodeIndex u = 0; u < graph.order(); ++u) {
            const int gi = groups.group(graph.user(u));
            std::vector<std::string> row{
                graph.user(u), gi < 0 ? "" : groups.group_names[gi]};
            row.push_back(std::to_string(at.deg_in[u]));
            row.push_back(std::to_string(at.deg_out[u]));
            row.push_back(std::to_string(at.str_in[u]));
            row.push_back(std::to_string(at.str_out[u]));
            row.push_back(csv::decimal(at.farness[u]));
            row.push_back(csv::decimal(at.reachable[u]));
            row.push_back(csv::decimal(at.closeness_raw(u)));
            row.push_back(csv::decimal(at.closeness_norm(u)));
            row.push_back(csv::decimal(at.betweenness[u]));
            row.push_back(csv::decimal(at.betweenness_norm(u)));
            csv::write_record(out, row);
        }
    }
};

void cmd_ingest(Pipeline& p) {
    std::ofstream edges(p.out_dir + "/edges.txt", std::ios::binary);
    if (!edges) throw DataError("cannot write " + p.out_dir + "/edges.txt");
    write_edge_list(p.graph, edges);
    p.save_report();
    const GraphProperties props = graph_properties(p.graph);
    std::cout << "graph: " << props.order << " users, " << props.size
              << " edges, total weight " << p.graph.total_weight
              << ", giant component " << props.giant_component << "\n";
}

void cmd_groups(Pipeline& p) {
    p.write_groups_csv();
    p.save_report();
    std::cout << "groups:";
    for (std::size_t gi = 0; gi < p.groups.group_count(); ++gi)
        std::cout << " " << p.groups.group_names[gi] << "="
                  << p.groups.members[gi].size();
    std::cout << " uncategorized=" << p.groups.uncategorized.size() << "\n";
}

void cmd_stats(Pipeline& p) {
    const auto r = statistical_analysis(p.groups, p.cfg.epsilon);
    p.report.add(r);
    p.save_report();
    std::cout << "statistical: " << r.verdict << "\n";
}

void cmd_network(Pipeline& p) {
    const auto at = node_attributes(p.graph, p.cfg.betweenness);
    const auto global =
        global_composition(p.graph, p.groups, p.cfg.epsilon,
                           p.cfg.betweenness);
    const auto nodes = node_composition(p.graph, at, p.groups, p.cfg.epsilon);
    p.report.add(global);
    p.report.add(nodes);
    p.write_attributes_csv(at);
    {
        auto out = p.open_out("composition_stages.csv");
        write_composition_stages_csv(out, global);
    }
    {
        auto out = p.open_out("composition_groups.csv");
        write_composition_groups_csv(out, p.graph, p.groups, nodes);
    }
    p.report.set_tables("composition_global", {"composition_stages.csv"});
    p.report.set_tables("composition_nodes",
                        {"composition_groups.csv", "attributes.csv"});
    p.save_report();
    std::cout << "composition: " << global.verdict << " / " << nodes.verdict
              << "\n";
}

void cmd_robustness(Pipeline& p) {
    const auto r = robustness_analysis(p.graph, p.groups, p.cfg.removal_order,
                                       p.cfg.removal_seed, p.cfg.epsilon);
    p.report.add(r);
    {
        auto out = p.open_out("robustness.csv");
        write_robustness_csv(out, r);
    }
    p.report.set_tables("robustness", {"robustness.csv"});
    p.save_report();
    std::cout << "robustness:";
    for (const auto& g : r.group_order)
        std::cout << " " << g << "=" << r.group_verdicts.at(g);
    std::cout << "\n";
}

void cmd_influence(Pipeline& p) {
    InfluenceOptions opts;
    opts.pagerank = p.cfg.pagerank;
    const auto r =
        influence_analysis(p.graph, p.groups, p.cfg.epsilon, opts);
    p.report.add(r);
    {
        auto out = p.open_out("influence.csv");
        write_influence_csv(out, p.graph, p.groups, r);
    }
    p.report.set_tables("influence", {"influence.csv"});
    p.save_report();
    std::cout << "influence: " << r.verdict << "\n";
}

void cmd_structure(Pipeline& p) {
    const auto r = structure_analysis(p.graph, p.groups, p.cfg.epsilon);
    p.report.add(r);
    {
        auto out = p.open_out("shells.csv");
        write_shells_csv(out, r);
    }
    p.report.set_tables("structure", {"shells.csv"});
    p.save_report();
    std::cout << "structure: innermost shell " << r.innermost << "\n";
}

void cmd_temporal(Pipeline& p) {
    const auto r = temporal_analysis(p.dataset, p.groups, p.cfg.granularity,
                                     p.cfg.epsilon);
    p.report.add(r);
    {
        auto out = p.open_out("temporal.csv");
        write_temporal_csv(out, r);
    }
    p.report.set_tables("temporal", {"temporal.csv"});
    p.save_report();
    std::cout << "temporal:";
    for (const auto& [g, v] : r.group_verdicts) std::cout << " " << g << "="
                                                          << v;
    std::cout << "\n";
}

void cmd_virality(Pipeline& p) {
    const auto r = virality_analysis(p.dataset, p.groups, p.cfg.epsilon);
    p.report.add(r);
    {
        auto out = p.open_out("cascades.csv");
        write_cascades_csv(out, p.groups, r);
    }
    {
        auto out = p.open_out("cascade_curves.csv");
        write_cascade_curves_csv(out, r);
    }
    {
        auto out = p.open_out("topics.csv");
        write_topics_csv(out, r);
    }
    p.report.set_tables("virality",
                        {"cascades.csv", "cascade_curves.csv", "topics.csv"});
    p.save_report();
    std::cout << "virality: " << r.viral_verdict << " / " << r.topic_verdict
              << "\n";
}

void cmd_all(Pipeline& p) {
    cmd_ingest(p);
    cmd_groups(p);
    const auto want = [](const char* name) {
        return selected_perspectives.empty() ||
               std::find(selected_perspectives.begin(),
                         selected_perspectives.end(),
                         name) != selected_perspectives.end();
    };
    if (want("statistical")) cmd_stats(p);
    if (want("composition_global") || want("composition_nodes"))
        cmd_network(p);
    if (want("robustness")) cmd_robustness(p);
    if (want("influence")) cmd_influence(p);
    if (want("structure")) cmd_structure(p);
    if (want("temporal")) cmd_temporal(p);
    if (want("virality")) cmd_virality(p);
    std::cout << "\n" << p.report.text_table();
}

void cmd_synth(const std::string& scenario, const std::string& out_dir) {
    const synth::Scenario s = synth::make_scenario(scenario);
    std::filesystem::create_directories(out_dir);

    save_ndjson(s.dataset, out_dir + "/dataset.ndjson");

    std::ofstream scores(out_dir + "/scores.csv", std::ios::binary);
    if (!scores) throw DataError("cannot write " + out_dir + "/scores.csv");
    csv::write_record(scores, {"user", "score"});
    for (const auto& r : s.scores)
        csv::write_record(scores, {r.user, csv::decimal(*r.score)});
    scores.close();

    std::ofstream gt(out_dir + "/groundtruth.json", std::ios::binary);
    if (!gt)
        throw DataError("cannot write " + out_dir + "/groundtruth.json");
    gt << s.ground_truth.dump(2) << "\n";
    gt.close();

    // Paths relative to the config's directory keep the bundle relocatable.
    Config cfg;
    cfg.dataset_path = "dataset.ndjson";
    cfg.scores_path = "scores.csv";
    cfg.groups = s.groups;
    save_config(cfg, out_dir + "/config.ini");

    std::cout << "scenario " << s.name << ": " << s.dataset.rows.size()
              << " interactions, " << s.scores.size() << " scored users -> "
              << out_dir << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"retweet-network group analysis"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string scenario;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", args.config_path, "run configuration")
            ->required();
        cmd->add_option("-o,--out", args.out_dir,
                        "output directory (default: out)");
        cmd->add_option("--epsilon", args.epsilon,
                        "relative tolerance override, in (0,1)");
        cmd->add_option("--seed", args.seed, "removal-order seed override");
        return cmd;
    };

    std::map<std::string, void (*)(Pipeline&)> commands;
    const auto add_cmd = [&](const char* name, const char* help,
                             void (*fn)(Pipeline&)) {
        CLI::App* cmd = add_common(app.add_subcommand(name, help));
        commands[name] = fn;
        return cmd;
    };
    add_cmd("ingest", "build the retweet graph and write the edge list",
            cmd_ingest);
    add_cmd("groups", "categorize users by score and write groups.csv",
            cmd_groups);
    add_cmd("stats", "group share distribution verdict", cmd_stats);
    add_cmd("network",
            "cumulative-stage and per-node composition comparison",
            cmd_network);
    add_cmd("robustness", "progressive group removal simulation",
            cmd_robustness);
    add_cmd("influence", "PageRank/HITS/eigenvector group comparison",
            cmd_influence);
    add_cmd("structure", "k-shell census of the categorized subgraph",
            cmd_structure);
    add_cmd("temporal", "per-bucket traffic share comparison", cmd_temporal);
    add_cmd("virality", "cascade size/speed/topic comparison", cmd_virality);
    add_cmd("all", "run every step of the pipeline", cmd_all)
        ->add_option("--perspective", selected_perspectives,
                     "restrict to the named perspectives (repeatable)")
        ->check(CLI::IsMember(perspective_names()));

    CLI::App* synth_cmd =
        app.add_subcommand("synth", "generate a synthetic scenario bundle");
    std::string names;
    for (const auto& n : retnet::synth::scenario_names())
        names += (names.empty() ? "" : ", ") + n;
    synth_cmd->add_option("-s,--scenario", scenario, "one of: " + names)
        ->required();
    synth_cmd->add_option("-o,--out", args.out_dir,
                          "output directory (default: out)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0
                   ? 0
                   : static_cast<int>(retnet::ExitCode::config_error);
    }

    try {
        if (synth_cmd->parsed()) {
            cmd_synth(scenario, args.out_dir);
            return static_cast<int>(retnet::ExitCode::ok);
        }
        for (const auto& [name, fn] : commands)
            if (app.get_subcommand(name)->parsed()) {
                Pipeline p(args);
                fn(p);
                return static_cast<int>(retnet::ExitCode::ok);
            }
        throw retnet::ConfigError("no subcommand given");
    } catch (const retnet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.exit_code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(retnet::ExitCode::compute_error);
    }
}
