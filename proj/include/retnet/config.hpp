// Run configuration: a small INI file mapped onto the option structs the
// library already uses. Parsing is strict — unknown sections or keys are
// rejected so a typo cannot silently fall back to a default.
//
//   [input]
//   dataset = data/retweets.ndjson
//   sample_fraction = 1.0
//   sample_seed = 1
//
//   [scores]
//   source = file            ; file | http | constant
//   path = scores.csv        ; file source
//   url = http://host/score  ; http source
//   cache_dir = cache
//   token_env = RETNET_TOKEN
//   retries = 3
//   backoff_ms = 100
//   parallelism = 1
//   constant = 0.5           ; constant source
//
//   [groups]
//   fractions = 0.7,0.2,0.1
//   names = human,semibot,bot
//   mode = score             ; score | label
//
//   [analysis]
//   epsilon = 0.1
//   betweenness = auto       ; auto | exact | sampled
//   pivots = 256
//   betweenness_seed = 1
//   granularity = day        ; day | hour
//   pagerank_damping = 0.85
//   pagerank_weighted = true
//
//   [robustness]
//   order = score_desc       ; score_desc | random
//   seed = 1
//
// Relative paths are resolved against the directory containing the config
// file, so a config can travel with its data.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "retnet/attributes.hpp"
#include "retnet/errors.hpp"
#include "retnet/grouping.hpp"
#include "retnet/influence.hpp"
#include "retnet/robustness.hpp"
#include "retnet/temporal.hpp"
#include "retnet/verdicts.hpp"

namespace retnet {

struct Config {
    // [input]
    std::string dataset_path;
    double sample_fraction = 1.0;
    std::uint64_t sample_seed = 1;

    // [scores]
    enum class ScoreMode { file, http, constant };
    ScoreMode score_mode = ScoreMode::file;
    std::string scores_path;
    HttpScoreSource::Options http; // url/cache/token/retries/backoff/parallel
    double constant_score = 0.5;

    // [groups]
    GroupSpec groups{{0.7, 0.2, 0.1}, {"human", "semibot", "bot"}};
    bool label_mode = false;

    // [analysis]
    double epsilon = kDefaultEpsilon;
    BetweennessMode betweenness = BetweennessMode::automatic();
    Granularity granularity = Granularity::day;
    PageRankOptions pagerank;

    // [robustness]
    RemovalOrder removal_order = RemovalOrder::score_desc;
    std::uint64_t removal_seed = 1;

    // Directory of the config file; "" means paths are used as given.
    std::string base_dir;

    std::string resolve(const std::string& path) const {
        if (path.empty() || path.front() == '/' || base_dir.empty())
            return path;
        return base_dir + "/" + path;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
        --e;
    return s.substr(b, e - b);
}

inline double config_double(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a number, got '" + value + "'");
    }
}

inline std::uint64_t config_uint(const std::string& value,
                                 const std::string& key) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(value, &used);
        if (used != value.size() || (!value.empty() && value[0] == '-'))
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a non-negative integer, got '" +
                          value + "'");
    }
}

inline bool config_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

inline std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(value);
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    if (!value.empty() && value.back() == ',') out.push_back("");
    return out;
}

inline std::string dirname_of(const std::string& path) {
    const auto slash = path.rfind('/');
    if (slash == std::string::npos) return "";
    return path.substr(0, slash);
}

} // namespace detail

inline Config load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);

    Config cfg;
    cfg.base_dir = detail::dirname_of(path);
    bool fractions_set = false, names_set = false;

    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == ';' || t[0] == '#') continue;
        const std::string where = path + ":" + std::to_string(lineno);

        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError(where + ": malformed section header");
            section = t.substr(1, t.size() - 2);
            if (section != "input" && section != "scores" &&
                section != "groups" && section != "analysis" &&
                section != "robustness")
                throw ConfigError(where + ": unknown section [" + section +
                                  "]");
            continue;
        }

        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value'");
        const std::string key = detail::trim(t.substr(0, eq));
        const std::string value = detail::trim(t.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": empty key");
        const std::string qual = "[" + section + "] " + key;

        if (section == "input") {
            if (key == "dataset") cfg.dataset_path = value;
            else if (key == "sample_fraction")
                cfg.sample_fraction = detail::config_double(value, qual);
            else if (key == "sample_seed")
                cfg.sample_seed = detail::config_uint(value, qual);
            else throw ConfigError(where + ": unknown key '" + key + "'");
        } else if (section == "scores") {
            if (key == "source") {
                if (value == "file") cfg.score_mode = Config::ScoreMode::file;
                else if (value == "http")
                    cfg.score_mode = Config::ScoreMode::http;
                else if (value == "constant")
                    cfg.score_mode = Config::ScoreMode::constant;
                else
                    throw ConfigError(qual + ": expected file/http/constant, "
                                             "got '" + value + "'");
            } else if (key == "path") cfg.scores_path = value;
            else if (key == "url") cfg.http.base_url = value;
            else if (key == "cache_dir") cfg.http.cache_dir = value;
            else if (key == "token_env") cfg.http.token_env = value;
            else if (key == "retries")
                cfg.http.retries =
                    static_cast<int>(detail::config_uint(value, qual));
            else if (key == "backoff_ms")
                cfg.http.backoff_ms =
                    static_cast<int>(detail::config_uint(value, qual));
            else if (key == "parallelism")
                cfg.http.parallelism =
                    static_cast<int>(detail::config_uint(value, qual));
            else if (key == "constant")
                cfg.constant_score = detail::config_double(value, qual);
            else throw ConfigError(where + ": unknown key '" + key + "'");
        } else if (section == "groups") {
            if (key == "fractions") {
                cfg.groups.fractions.clear();
                for (const auto& f : detail::split_list(value))
                    cfg.groups.fractions.push_back(
                        detail::config_double(f, qual));
                fractions_set = true;
            } else if (key == "names") {
                cfg.groups.names = detail::split_list(value);
                names_set = true;
            } else if (key == "mode") {
                if (value == "score") cfg.label_mode = false;
                else if (value == "label") cfg.label_mode = true;
                else
                    throw ConfigError(qual + ": expected score/label, got '" +
                                      value + "'");
            } else throw ConfigError(where + ": unknown key '" + key + "'");
        } else if (section == "analysis") {
            if (key == "epsilon")
                cfg.epsilon = detail::config_double(value, qual);
            else if (key == "betweenness") {
                if (value == "auto")
                    cfg.betweenness.kind = BetweennessMode::Kind::automatic;
                else if (value == "exact")
                    cfg.betweenness.kind = BetweennessMode::Kind::exact;
                else if (value == "sampled")
                    cfg.betweenness.kind = BetweennessMode::Kind::sampled;
                else
                    throw ConfigError(qual + ": expected auto/exact/sampled, "
                                             "got '" + value + "'");
            } else if (key == "pivots")
                cfg.betweenness.pivots =
                    static_cast<std::size_t>(detail::config_uint(value, qual));
            else if (key == "betweenness_seed")
                cfg.betweenness.seed = detail::config_uint(value, qual);
            else if (key == "granularity") {
                if (value == "day") cfg.granularity = Granularity::day;
                else if (value == "hour") cfg.granularity = Granularity::hour;
                else
                    throw ConfigError(qual + ": expected day/hour, got '" +
                                      value + "'");
            } else if (key == "pagerank_damping")
                cfg.pagerank.damping = detail::config_double(value, qual);
            else if (key == "pagerank_weighted")
                cfg.pagerank.weighted = detail::config_bool(value, qual);
            else throw ConfigError(where + ": unknown key '" + key + "'");
        } else if (section == "robustness") {
            if (key == "order") {
                if (value == "score_desc")
                    cfg.removal_order = RemovalOrder::score_desc;
                else if (value == "random")
                    cfg.removal_order = RemovalOrder::random;
                else
                    throw ConfigError(qual + ": expected score_desc/random, "
                                             "got '" + value + "'");
            } else if (key == "seed")
                cfg.removal_seed = detail::config_uint(value, qual);
            else throw ConfigError(where + ": unknown key '" + key + "'");
        } else {
            throw ConfigError(where + ": key outside any section");
        }
    }

    // A freshly supplied fractions list invalidates the default names (and
    // vice versa) unless both line up.
    if ((fractions_set || names_set) && !cfg.groups.names.empty() &&
        cfg.groups.names.size() != cfg.groups.fractions.size()) {
        if (fractions_set && !names_set) cfg.groups.names.clear();
        else
            throw ConfigError(path + ": [groups] fractions and names must "
                                     "have the same length");
    }
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
        throw ConfigError(path + ": [analysis] epsilon must be in (0,1)");
    if (!(cfg.sample_fraction > 0.0 && cfg.sample_fraction <= 1.0))
        throw ConfigError(path +
                          ": [input] sample_fraction must be in (0,1]");
    return cfg;
}

// Writes a config in the same format load_config reads. Paths are emitted
// as given (the generator uses paths relative to the config's directory).
inline void save_config(const Config& cfg, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write config file: " + path);
    out << "[input]\n";
    out << "dataset = " << cfg.dataset_path << "\n";
    out << "sample_fraction = " << cfg.sample_fraction << "\n";
    out << "sample_seed = " << cfg.sample_seed << "\n\n";

    out << "[scores]\n";
    const char* mode = cfg.score_mode == Config::ScoreMode::file ? "file"
                       : cfg.score_mode == Config::ScoreMode::http
                           ? "http"
                           : "constant";
    out << "source = " << mode << "\n";
    if (cfg.score_mode == Config::ScoreMode::file)
        out << "path = " << cfg.scores_path << "\n";
    if (cfg.score_mode == Config::ScoreMode::http) {
        out << "url = " << cfg.http.base_url << "\n";
        if (!cfg.http.cache_dir.empty())
            out << "cache_dir = " << cfg.http.cache_dir << "\n";
    }
    if (cfg.score_mode == Config::ScoreMode::constant)
        out << "constant = " << cfg.constant_score << "\n";
    out << "\n[groups]\n";
    out << "fractions = ";
    for (std::size_t i = 0; i < cfg.groups.fractions.size(); ++i)
        out << (i ? "," : "") << cfg.groups.fractions[i];
    out << "\nnames = ";
    for (std::size_t i = 0; i < cfg.groups.names.size(); ++i)
        out << (i ? "," : "") << cfg.groups.names[i];
    out << "\nmode = " << (cfg.label_mode ? "label" : "score") << "\n";

    out << "\n[analysis]\n";
    out << "epsilon = " << cfg.epsilon << "\n";
    const char* bw = cfg.betweenness.kind == BetweennessMode::Kind::automatic
                         ? "auto"
                     : cfg.betweenness.kind == BetweennessMode::Kind::exact
                         ? "exact"
                         : "sampled";
    out << "betweenness = " << bw << "\n";
    out << "pivots = " << cfg.betweenness.pivots << "\n";
    out << "betweenness_seed = " << cfg.betweenness.seed << "\n";
    out << "granularity = "
        << (cfg.granularity == Granularity::day ? "day" : "hour") << "\n";
    out << "pagerank_damping = " << cfg.pagerank.damping << "\n";
    out << "pagerank_weighted = " << (cfg.pagerank.weighted ? "true" : "false")
        << "\n";

    out << "\n[robustness]\n";
    out << "order = "
        << (cfg.removal_order == RemovalOrder::score_desc ? "score_desc"
                                                          : "random")
        << "\n";
    out << "seed = " << cfg.removal_seed << "\n";
    if (!out) throw ConfigError("failed writing config file: " + path);
}

// Builds the score source the config describes. File paths resolve relative
// to the config's directory.
inline std::unique_ptr<ScoreSource> make_score_source(const Config& cfg) {
    switch (cfg.score_mode) {
    case Config::ScoreMode::file:
        if (cfg.scores_path.empty())
            throw ConfigError("[scores] source = file needs 'path'");
        return std::make_unique<FileScoreSource>(cfg.resolve(cfg.scores_path));
    case Config::ScoreMode::http: {
        auto opt = cfg.http;
        if (!opt.cache_dir.empty()) opt.cache_dir = cfg.resolve(opt.cache_dir);
        return std::make_unique<HttpScoreSource>(std::move(opt));
    }
    case Config::ScoreMode::constant:
        return std::make_unique<ConstantScoreSource>(cfg.constant_score);
    }
    throw ConfigError("unreachable score mode");
}

} // namespace retnet
