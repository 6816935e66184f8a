// Canonical JSON report assembled from analysis results, plus a plain-text
// verdict table. The JSON layout is stable and timestamp-free so two runs
// over the same input produce byte-identical files.
#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "retnet/composition.hpp"
#include "retnet/errors.hpp"
#include "retnet/graph.hpp"
#include "retnet/grouping.hpp"
#include "retnet/influence.hpp"
#include "retnet/interactions.hpp"
#include "retnet/robustness.hpp"
#include "retnet/stats.hpp"
#include "retnet/structure.hpp"
#include "retnet/temporal.hpp"
#include "retnet/time.hpp"
#include "retnet/virality.hpp"

namespace retnet {

constexpr int kReportSchemaVersion = 1;

inline const std::vector<std::string>& perspective_names() {
    static const std::vector<std::string> names = {
        "statistical",    "composition_global", "composition_nodes",
        "robustness",     "influence",          "structure",
        "temporal",       "virality"};
    return names;
}

// True when every value in `expected` appears identically in `actual`
// (objects are compared as subsets, arrays and scalars exactly).
inline bool json_subset(const nlohmann::ordered_json& expected,
                        const nlohmann::ordered_json& actual) {
    if (expected.is_object()) {
        if (!actual.is_object()) return false;
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (!actual.contains(it.key())) return false;
            if (!json_subset(it.value(), actual.at(it.key()))) return false;
        }
        return true;
    }
    if (expected.is_array()) {
        if (!actual.is_array() || expected.size() != actual.size())
            return false;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!json_subset(expected[i], actual[i])) return false;
        return true;
    }
    return expected == actual;
}

// Lists the paths in `expected` whose values are missing from or different
// in `actual`; used to explain a failed json_subset check.
inline void json_subset_diff(const nlohmann::ordered_json& expected,
                             const nlohmann::ordered_json& actual,
                             const std::string& path,
                             std::vector<std::string>& out) {
    if (expected.is_object() && actual.is_object()) {
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            const std::string sub = path + "/" + it.key();
            if (!actual.contains(it.key()))
                out.push_back(sub + ": missing");
            else
                json_subset_diff(it.value(), actual.at(it.key()), sub, out);
        }
        return;
    }
    if (!json_subset(expected, actual))
        out.push_back(path + ": expected " + expected.dump() + ", got " +
                      actual.dump());
}

class Report {
public:
    explicit Report(double epsilon = kDefaultEpsilon) {
        doc_["schema_version"] = kReportSchemaVersion;
        doc_["epsilon"] = epsilon;
        doc_["perspectives"] = nlohmann::ordered_json::object();
    }

    static Report load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DataError("cannot open report: " + path);
        Report r(0.0);
        try {
            r.doc_ = nlohmann::ordered_json::parse(in);
        } catch (const std::exception& e) {
            throw DataError(path + ": " + e.what());
        }
        r.validate(path);
        return r;
    }

    void set_epsilon(double epsilon) { doc_["epsilon"] = epsilon; }

    void set_dataset(const InteractionDataset& ds) {
        auto& d = doc_["dataset"];
        d["path"] = ds.source_path;
        d["rows"] = ds.rows.size();
        d["dropped_rows"] = ds.dropped_rows;
        d["window"] = {{"from", ds.window_start},
                       {"to", ds.window_end},
                       {"from_utc", timeutil::format_utc(ds.window_start)},
                       {"to_utc", timeutil::format_utc(ds.window_end)}};
    }

    void set_graph(const SocialGraph& g) {
        const GraphProperties p = graph_properties(g);
        auto& gj = doc_["graph"];
        gj["order"] = p.order;
        gj["size"] = p.size;
        gj["density"] = p.density;
        gj["total_weight"] = p.total_weight;
        gj["giant_component"] = p.giant_component;
        gj["component_count"] = p.component_count;
        gj["self_loop_drops"] = g.self_loop_drops;
    }

    void set_grouping(const GroupAssignment& a) {
        auto& gj = doc_["grouping"];
        gj["groups"] = a.group_names;
        nlohmann::ordered_json counts = nlohmann::ordered_json::array();
        for (const auto& m : a.members) counts.push_back(m.size());
        gj["counts"] = std::move(counts);
        gj["fractions"] = a.fractions;
        gj["thresholds"] = a.thresholds;
        gj["uncategorized"] = a.uncategorized.size();
    }

    void add(const DistributionReport& r) {
        auto& p = doc_["perspectives"]["statistical"];
        p["verdict"] = r.verdict;
        p["groups"] = r.group_names;
        p["counts"] = r.counts;
        p["fractions"] = r.fractions;
        p["uncategorized"] = r.uncategorized;
    }

    void add(const GlobalCompositionResult& r) {
        auto& p = doc_["perspectives"]["composition_global"];
        p["verdict"] = r.verdict;
        auto& sv = p["stage_verdicts"];
        sv = nlohmann::ordered_json::object();
        for (const auto& s : r.stages) sv[s.added_group] = s.verdict;
        auto& stages = p["stages"];
        stages = nlohmann::ordered_json::array();
        for (const auto& s : r.stages) {
            nlohmann::ordered_json sj;
            sj["group"] = s.added_group;
            sj["verdict"] = s.verdict;
            sj["changed"] = s.changed;
            sj["order"] = s.props.order;
            sj["size"] = s.props.size;
            sj["density"] = s.props.density;
            sj["total_weight"] = s.props.total_weight;
            sj["giant_component"] = s.props.giant_component;
            sj["avg"] = s.avg;
            stages.push_back(std::move(sj));
        }
    }

    void add(const NodeCompositionResult& r) {
        auto& p = doc_["perspectives"]["composition_nodes"];
        p["verdict"] = r.verdict;
        auto& gv = p["group_verdicts"];
        gv = nlohmann::ordered_json::object();
        for (const auto& g : r.profiles) gv[g.group] = g.verdict;
        p["grand_means"] = r.grand_means;
        auto& groups = p["groups"];
        groups = nlohmann::ordered_json::object();
        for (const auto& g : r.profiles) {
            nlohmann::ordered_json gj;
            gj["present"] = g.present;
            gj["verdict"] = g.verdict;
            gj["deviating"] = g.deviating;
            nlohmann::ordered_json mean, median;
            for (const auto& [name, s] : g.attributes) {
                mean[name] = s.mean;
                median[name] = s.median;
            }
            gj["mean"] = std::move(mean);
            gj["median"] = std::move(median);
            auto& bins = gj["score_bins"];
            bins = nlohmann::ordered_json::array();
            for (const auto& b : g.bins)
                bins.push_back({{"bin", b.bin},
                                {"count", b.count},
                                {"means", b.means}});
            groups[g.group] = std::move(gj);
        }
    }

    void add(const RobustnessResult& r) {
        auto& p = doc_["perspectives"]["robustness"];
        p["order"] =
            r.order == RemovalOrder::score_desc ? "score_desc" : "random";
        if (r.order == RemovalOrder::random) p["seed"] = r.seed;
        p["group_verdicts"] = r.group_verdicts;
        p["original"] = {{"order", r.original_order},
                         {"edges", r.original_edges},
                         {"weight", r.original_weight},
                         {"giant_component", r.original_giant}};
        p["group_order"] = r.group_order;
        p["group_fractions"] = r.group_fractions;
        auto& steps = p["steps"];
        steps = nlohmann::ordered_json::array();
        for (const auto& s : r.steps) {
            nlohmann::ordered_json sj;
            sj["group"] = s.group;
            sj["r"] = s.r;
            sj["removed_users"] = s.removed_users;
            sj["verdict"] = s.verdict;
            sj["exceeded"] = s.exceeded;
            sj["measured"] = {{"edges", s.measured_edges},
                              {"weight", s.measured_weight},
                              {"giant_component", s.measured_giant}};
            sj["baseline"] = {{"edges", s.baseline_edges},
                              {"weight", s.baseline_weight},
                              {"giant_component", s.baseline_giant},
                              {"infeasible", s.baseline_infeasible}};
            sj["drop"] = {{"edges", s.drop_edges},
                          {"weight", s.drop_weight},
                          {"giant_component", s.drop_giant}};
            sj["expected_drop"] = {{"edges", s.expected_drop_edges},
                                   {"weight", s.expected_drop_weight},
                                   {"giant_component", s.expected_drop_giant}};
            sj["pct_of_original"] = {{"edges", s.pct_edges},
                                     {"weight", s.pct_weight},
                                     {"giant_component", s.pct_giant}};
            steps.push_back(std::move(sj));
        }
    }

    void add(const InfluenceResult& r) {
        auto& p = doc_["perspectives"]["influence"];
        p["verdict"] = r.verdict;
        auto& gv = p["group_verdicts"];
        gv = nlohmann::ordered_json::object();
        for (const auto& g : r.groups) gv[g.group] = g.verdict;
        p["grand_mean"] = r.grand_mean;
        p["iterations"] = {{"pagerank", r.pagerank_iterations},
                           {"hits", r.hits_iterations},
                           {"eigenvector", r.eigenvector_iterations}};
        auto& groups = p["groups"];
        groups = nlohmann::ordered_json::object();
        for (const auto& g : r.groups)
            groups[g.group] = {{"present", g.present},
                               {"verdict", g.verdict},
                               {"deviating", g.deviating},
                               {"mean", g.mean}};
        auto& bins = p["bins"];
        bins = nlohmann::ordered_json::array();
        for (const auto& b : r.bins)
            bins.push_back({{"bin", b.bin},
                            {"count", b.count},
                            {"means", b.means}});
    }

    void add(const StructureResult& r) {
        auto& p = doc_["perspectives"]["structure"];
        p["innermost"] = r.innermost;
        p["group_verdicts"] = r.group_verdicts;
        p["baseline"] = r.baseline;
        p["subgraph"] = {{"order", r.subgraph_order},
                         {"size", r.subgraph_size}};
        auto& shells = p["shells"];
        shells = nlohmann::ordered_json::array();
        for (const auto& s : r.shells)
            shells.push_back({{"shell", s.shell},
                              {"size", s.size},
                              {"counts", s.counts},
                              {"shares", s.shares},
                              {"verdicts", s.verdicts}});
    }

    void add(const TemporalResult& r) {
        auto& p = doc_["perspectives"]["temporal"];
        p["granularity"] =
            r.granularity == Granularity::day ? "day" : "hour";
        p["group_verdicts"] = r.group_verdicts;
        p["baseline"] = r.baseline;
        p["traffic_share"] = r.traffic_share;
        p["over_buckets"] = r.over_buckets;
        p["under_buckets"] = r.under_buckets;
        auto& buckets = p["buckets"];
        buckets = nlohmann::ordered_json::array();
        for (const auto& b : r.buckets) {
            nlohmann::ordered_json bj;
            bj["label"] = b.label;
            bj["start"] = b.start;
            bj["total"] = b.total;
            bj["uncategorized"] = b.uncategorized;
            bj["counts"] = b.counts;
            bj["shares"] = b.shares;
            bj["verdicts"] = b.verdicts;
            bj["empty"] = b.empty;
            buckets.push_back(std::move(bj));
        }
    }

    void add(const ViralityResult& r) {
        auto& p = doc_["perspectives"]["virality"];
        p["viral_verdict"] = r.viral_verdict;
        p["topic_verdict"] = r.topic_verdict;
        auto& iv = p["influencer_verdicts"];
        iv = nlohmann::ordered_json::object();
        for (const auto& g : r.groups) iv[g.group] = g.influencer_verdict;
        p["mean_topic_jaccard"] = r.mean_topic_jaccard;
        p["grand_mean_size"] = r.grand_mean_size;
        p["grand_mean_duration"] = r.grand_mean_duration;
        p["cascades"] = r.cascades.size();
        p["uncategorized_cascades"] = r.uncategorized_cascades;
        auto& groups = p["groups"];
        groups = nlohmann::ordered_json::object();
        for (const auto& g : r.groups) {
            nlohmann::ordered_json gj;
            gj["cascades"] = g.cascades;
            gj["mean_size"] = g.mean_size;
            gj["mean_duration"] = g.mean_duration;
            gj["mean_unique"] = g.mean_unique;
            gj["influencer_verdict"] = g.influencer_verdict;
            gj["deviating"] = g.deviating;
            gj["top_topics"] = g.top_topics;
            gj["top_topic_counts"] = g.top_topic_counts;
            gj["growth_curve"] = g.growth_curve;
            gj["offset_curve"] = g.offset_curve;
            groups[g.group] = std::move(gj);
        }
    }

    // Names of the CSV side-tables a perspective's run produced, relative to
    // the report's directory. Replaces any previous list, so re-runs stay
    // idempotent.
    void set_tables(const std::string& perspective,
                    const std::vector<std::string>& filenames) {
        if (!doc_["perspectives"].contains(perspective))
            throw DataError("perspective '" + perspective +
                            "' has no results to attach tables to");
        doc_["perspectives"][perspective]["tables"] = filenames;
    }

    const nlohmann::ordered_json& json() const { return doc_; }
    const nlohmann::ordered_json& perspectives() const {
        return doc_.at("perspectives");
    }

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw DataError("cannot write report: " + path);
        out << doc_.dump(2) << "\n";
        if (!out) throw DataError("failed writing report: " + path);
    }

    // One row per perspective, one verdict column per group plus an overall
    // column. Perspectives that were not run get a "not run" row.
    std::string text_table() const {
        std::vector<std::string> groups;
        if (doc_.contains("grouping"))
            for (const auto& g : doc_["grouping"]["groups"])
                groups.push_back(g.get<std::string>());
        const auto& ps = doc_["perspectives"];

        std::vector<std::vector<std::string>> rows;
        rows.push_back({"perspective", "overall"});
        for (const auto& g : groups) rows.back().push_back(g);
        for (const auto& name : perspective_names()) {
            std::vector<std::string> row{name};
            if (ps.contains(name)) {
                const auto& p = ps[name];
                row.push_back(overall_verdict(name, p));
                for (const auto& g : groups)
                    row.push_back(group_verdict(name, p, g));
            } else {
                row.push_back("not run");
                for (std::size_t c = 0; c < groups.size(); ++c)
                    row.push_back("-");
            }
            rows.push_back(std::move(row));
        }

        std::vector<std::size_t> width(rows[0].size(), 0);
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        std::ostringstream out;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                out << std::left << std::setw(static_cast<int>(width[c]))
                    << rows[r][c];
                out << (c + 1 < rows[r].size() ? "  " : "");
            }
            out << "\n";
            if (r == 0) {
                for (std::size_t c = 0; c < width.size(); ++c)
                    out << std::string(width[c], '-')
                        << (c + 1 < width.size() ? "  " : "");
                out << "\n";
            }
        }
        return out.str();
    }

private:
    void validate(const std::string& path) const {
        if (!doc_.is_object() || !doc_.contains("schema_version") ||
            !doc_["schema_version"].is_number_integer())
            throw DataError(path + ": not a report (missing schema_version)");
        if (doc_["schema_version"].get<int>() != kReportSchemaVersion)
            throw DataError(path + ": unsupported schema_version " +
                            doc_["schema_version"].dump());
        static const std::vector<std::string> top = {
            "schema_version", "epsilon", "dataset",
            "graph",          "grouping", "perspectives"};
        for (auto it = doc_.begin(); it != doc_.end(); ++it)
            if (std::find(top.begin(), top.end(), it.key()) == top.end())
                throw DataError(path + ": unknown report section '" +
                                it.key() + "'");
        if (!doc_.contains("perspectives") ||
            !doc_["perspectives"].is_object())
            throw DataError(path + ": missing perspectives object");
        const auto& known = perspective_names();
        for (auto it = doc_["perspectives"].begin();
             it != doc_["perspectives"].end(); ++it)
            if (std::find(known.begin(), known.end(), it.key()) == known.end())
                throw DataError(path + ": unknown perspective '" + it.key() +
                                "'");
    }

    static std::string overall_verdict(const std::string& name,
                                       const nlohmann::ordered_json& p) {
        if (name == "robustness") {
            // Derived for display: any destabilizing group taints the run.
            for (const auto& [g, v] : p["group_verdicts"].items())
                if (v.get<std::string>() == verdict::destabilizing)
                    return verdict::destabilizing;
            return verdict::non_destabilizing;
        }
        if (name == "virality") return p["viral_verdict"].get<std::string>();
        if (p.contains("verdict")) return p["verdict"].get<std::string>();
        return "-";
    }

    static std::string group_verdict(const std::string& name,
                                     const nlohmann::ordered_json& p,
                                     const std::string& group) {
        const char* key = name == "composition_global" ? "stage_verdicts"
                          : name == "virality"         ? "influencer_verdicts"
                                                       : "group_verdicts";
        if (!p.contains(key) || !p[key].contains(group)) return "-";
        return p[key][group].get<std::string>();
    }

    nlohmann::ordered_json doc_;
};

} // namespace retnet
