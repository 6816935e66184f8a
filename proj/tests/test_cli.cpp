#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "retnet/report.hpp"

using namespace retnet;
namespace fs = std::filesystem;

namespace {

const std::string cli = RETNET_CLI_PATH;

int run(const std::string& args) {
    const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::size_t line_count(const fs::path& p) {
    const std::string s = slurp(p);
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

struct ScratchDir {
    fs::path path;
    explicit ScratchDir(const std::string& name) {
        path = fs::temp_directory_path() / name;
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~ScratchDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

} // namespace

TEST_CASE("synth writes a complete, byte-stable bundle") {
    ScratchDir d1("retnet_cli_synth1"), d2("retnet_cli_synth2");
    REQUIRE(run("synth -s uniform -o " + d1.str()) == 0);
    REQUIRE(run("synth -s uniform -o " + d2.str()) == 0);
    for (const char* f :
         {"dataset.ndjson", "scores.csv", "groundtruth.json", "config.ini"}) {
        INFO("file " << f);
        REQUIRE(fs::exists(d1.path / f));
        const std::string a = slurp(d1.path / f), b = slurp(d2.path / f);
        CHECK_FALSE(a.empty());
        CHECK(a == b);
    }
}

TEST_CASE("all reproduces the bundled ground truth end to end") {
    ScratchDir d("retnet_cli_e2e");
    REQUIRE(run("synth -s uniform -o " + d.str()) == 0);
    REQUIRE(run("all -c " + d.str() + "/config.ini -o " + d.str() + "/out") ==
            0);

    const Report rep = Report::load((d.path / "out/report.json").string());
    const auto gt =
        nlohmann::ordered_json::parse(slurp(d.path / "groundtruth.json"));
    std::vector<std::string> diffs;
    json_subset_diff(gt.at("expected"), rep.perspectives(), "", diffs);
    for (const auto& diff : diffs) UNSCOPED_INFO(diff);
    CHECK(json_subset(gt.at("expected"), rep.perspectives()));

    // 2000 members + 5 uncategorized anchors + header.
    CHECK(line_count(d.path / "out/groups.csv") == 2006);
    CHECK(line_count(d.path / "out/attributes.csv") == 2006);
    CHECK(line_count(d.path / "out/influence.csv") == 2006);
    const std::string table = slurp(d.path / "out/report.txt");
    for (const auto& name : perspective_names())
        CHECK(table.find(name) != std::string::npos);
    CHECK(table.find("not run") == std::string::npos);

    // Every perspective CSV named in the report exists and is non-trivial.
    for (const char* f :
         {"composition_stages.csv", "composition_groups.csv",
          "robustness.csv", "influence.csv", "shells.csv", "temporal.csv",
          "cascades.csv", "cascade_curves.csv", "topics.csv"}) {
        INFO("table " << f);
        CHECK(line_count(d.path / "out" / f) >= 2);
    }
    CHECK(rep.perspectives()["robustness"]["tables"] ==
          nlohmann::ordered_json({"robustness.csv"}));
    CHECK(rep.perspectives()["virality"]["tables"] ==
          nlohmann::ordered_json(
              {"cascades.csv", "cascade_curves.csv", "topics.csv"}));
}

TEST_CASE("identical runs produce byte-identical artifacts") {
    ScratchDir d("retnet_cli_det");
    REQUIRE(run("synth -s uniform -o " + d.str()) == 0);
    const std::string cfg = d.str() + "/config.ini";
    REQUIRE(run("all -c " + cfg + " -o " + d.str() + "/out1") == 0);
    REQUIRE(run("all -c " + cfg + " -o " + d.str() + "/out2") == 0);
    for (const char* f :
         {"report.json", "report.txt", "groups.csv", "attributes.csv",
          "edges.txt", "composition_stages.csv", "composition_groups.csv",
          "robustness.csv", "influence.csv", "shells.csv", "temporal.csv",
          "cascades.csv", "cascade_curves.csv", "topics.csv"}) {
        INFO("artifact " << f);
        CHECK(slurp(d.path / "out1" / f) == slurp(d.path / "out2" / f));
    }
}

TEST_CASE("perspective commands merge into one report") {
    ScratchDir d("retnet_cli_merge");
    REQUIRE(run("synth -s uniform -o " + d.str()) == 0);
    const std::string cfg = d.str() + "/config.ini";
    const std::string out = d.str() + "/out";

    REQUIRE(run("stats -c " + cfg + " -o " + out) == 0);
    {
        const Report rep = Report::load(out + "/report.json");
        CHECK(rep.perspectives().contains("statistical"));
        CHECK_FALSE(rep.perspectives().contains("temporal"));
    }
    REQUIRE(run("temporal -c " + cfg + " -o " + out + " --epsilon 0.2") == 0);
    {
        const Report rep = Report::load(out + "/report.json");
        CHECK(rep.perspectives().contains("statistical"));
        CHECK(rep.perspectives().contains("temporal"));
        CHECK(rep.json()["epsilon"] == 0.2);
    }
}

TEST_CASE("all --perspective restricts which perspectives run") {
    ScratchDir d("retnet_cli_select");
    REQUIRE(run("synth -s uniform -o " + d.str()) == 0);
    const std::string cfg = d.str() + "/config.ini";
    const std::string out = d.str() + "/out";
    REQUIRE(run("all -c " + cfg + " -o " + out +
                " --perspective statistical --perspective structure") == 0);

    const Report rep = Report::load(out + "/report.json");
    CHECK(rep.perspectives().contains("statistical"));
    CHECK(rep.perspectives().contains("structure"));
    CHECK_FALSE(rep.perspectives().contains("influence"));
    CHECK_FALSE(rep.perspectives().contains("virality"));
    // The graph and grouping artifacts always appear; skipped perspectives
    // leave no tables and are marked in the text summary.
    CHECK(fs::exists(d.path / "out/edges.txt"));
    CHECK(fs::exists(d.path / "out/groups.csv"));
    CHECK(fs::exists(d.path / "out/shells.csv"));
    CHECK_FALSE(fs::exists(d.path / "out/influence.csv"));
    const std::string table = slurp(d.path / "out/report.txt");
    CHECK(table.find("not run") != std::string::npos);

    CHECK(run("all -c " + cfg + " -o " + out + " --perspective nosuch") == 1);
}

TEST_CASE("failures map to the documented exit codes") {
    ScratchDir d("retnet_cli_err");
    CHECK(run("") == 1);                          // no subcommand
    CHECK(run("frobnicate") == 1);                // unknown subcommand
    CHECK(run("synth -s nosuch -o " + d.str()) == 1);
    CHECK(run("stats -c " + d.str() + "/absent.ini -o " + d.str()) == 1);
    CHECK(run("--help") == 0);
    CHECK(run("all --help") == 0);

    {
        std::ofstream ini(d.path / "bad_key.ini");
        ini << "[input]\ndataset = x.ndjson\nturbo = yes\n";
    }
    CHECK(run("stats -c " + d.str() + "/bad_key.ini -o " + d.str()) == 1);

    {
        std::ofstream ini(d.path / "missing_data.ini");
        ini << "[input]\ndataset = nope.ndjson\n"
               "[scores]\npath = nope.csv\n";
    }
    CHECK(run("stats -c " + d.str() + "/missing_data.ini -o " + d.str()) ==
          2);

    REQUIRE(run("synth -s uniform -o " + d.str()) == 0);
    CHECK(run("stats -c " + d.str() + "/config.ini -o " + d.str() +
              "/out --epsilon 1.5") == 1);
}
