// User categorization: pull automation scores from a source (file, HTTP
// service, or a constant), then partition users into ordered groups either by
// percentile split over scores or by explicit labels. Scores live in [0,1],
// higher = more automated. Group order is always ascending automation.
#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "retnet/csv.hpp"
#include "retnet/errors.hpp"
#include "retnet/interactions.hpp"

namespace retnet {

struct CategorizationResult {
    UserId user;
    std::optional<double> score; // [0,1]; empty = user not covered by source
    std::optional<std::string> label; // explicit-label sources only
};

class ScoreSource {
public:
    virtual ~ScoreSource() = default;
    // Returns one result per requested user, in request order.
    virtual std::vector<CategorizationResult>
    fetch(const std::vector<UserId>& users) = 0;
};

// --------------------------------------------------------------------------
// File source: CSV with header "user,score" (or "user,label"), or NDJSON
// rows {"user": ..., "score": ...} / {"user": ..., "label": ...}.
class FileScoreSource : public ScoreSource {
public:
    explicit FileScoreSource(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DataError("cannot open score file: " + path);
        const auto dot = path.rfind('.');
        const std::string ext =
            dot == std::string::npos ? "" : path.substr(dot + 1);
        if (ext == "csv") load_csv_file(in, path);
        else load_ndjson_file(in, path);
    }

    std::vector<CategorizationResult>
    fetch(const std::vector<UserId>& users) override {
        std::vector<CategorizationResult> out;
        out.reserve(users.size());
        for (const auto& u : users) {
            CategorizationResult r;
            r.user = u;
            if (auto it = scores_.find(u); it != scores_.end())
                r.score = it->second;
            else if (auto jt = labels_.find(u); jt != labels_.end())
                r.label = jt->second;
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    void add_score(const std::string& user, const std::string& value,
                   const std::string& where) {
        try {
            std::size_t used = 0;
            const double s = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            scores_[user] = s;
        } catch (const std::exception&) {
            throw DataError(where + ": malformed score '" + value + "'");
        }
    }

    void load_csv_file(std::istream& in, const std::string& path) {
        std::vector<std::string> header;
        if (!csv::read_record(in, header) || header.empty() ||
            header[0] != "user" ||
            (header.size() != 2 ||
             (header[1] != "score" && header[1] != "label")))
            throw DataError(path + ": expected header 'user,score' or "
                                   "'user,label'");
        const bool labeled = header[1] == "label";
        std::vector<std::string> fields;
        std::size_t lineno = 1;
        while (csv::read_record(in, fields)) {
            ++lineno;
            if (fields.size() == 1 && fields[0].empty()) continue;
            if (fields.size() != 2 || fields[0].empty())
                throw DataError(path + ":" + std::to_string(lineno) +
                                ": malformed row");
            if (labeled) labels_[fields[0]] = fields[1];
            else add_score(fields[0], fields[1],
                           path + ":" + std::to_string(lineno));
        }
    }

    void load_ndjson_file(std::istream& in, const std::string& path) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            const std::string where = path + ":" + std::to_string(lineno);
            try {
                const auto j = nlohmann::json::parse(line);
                const std::string user = j.at("user").get<std::string>();
                if (j.contains("score"))
                    scores_[user] = j.at("score").get<double>();
                else if (j.contains("label"))
                    labels_[user] = j.at("label").get<std::string>();
                else
                    throw DataError("row lacks score/label");
            } catch (const std::exception& e) {
                throw DataError(where + ": " + e.what());
            }
        }
    }

    std::unordered_map<UserId, double> scores_;
    std::unordered_map<UserId, std::string> labels_;
};

// --------------------------------------------------------------------------
// HTTP source: GET {base_url}/{user} expecting {"score": x}. 404 means "no
// score for this user" (not an error). Transient failures are retried with
// exponential backoff; responses (including misses) are cached on disk keyed
// by user so re-runs never re-fetch.
class HttpScoreSource : public ScoreSource {
public:
    struct Options {
        std::string base_url;          // e.g. http://host:port/scores
        std::string cache_dir;         // empty = no cache
        std::string token_env;         // env var holding a bearer token
        int retries = 3;               // attempts per user
        int backoff_ms = 100;          // doubled after each failed attempt
        int parallelism = 1;           // concurrent fetch workers
    };

    explicit HttpScoreSource(Options opt) : opt_(std::move(opt)) {
        if (opt_.base_url.empty())
            throw ConfigError("http score source needs a base_url");
        if (opt_.retries < 1 || opt_.parallelism < 1)
            throw ConfigError("http score source: retries and parallelism "
                              "must be >= 1");
        split_base_url();
        if (!opt_.cache_dir.empty())
            std::filesystem::create_directories(opt_.cache_dir);
    }

    std::vector<CategorizationResult>
    fetch(const std::vector<UserId>& users) override {
        std::vector<CategorizationResult> out(users.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::string first_error;
        std::mutex err_mu;

        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= users.size() || failed.load()) break;
                try {
                    out[i] = fetch_one(users[i]);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!failed.exchange(true)) first_error = e.what();
                }
            }
        };
        const int nthreads =
            std::min<std::size_t>(opt_.parallelism, std::max<std::size_t>(users.size(), 1));
        std::vector<std::thread> pool;
        for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        if (failed.load()) throw DataError(first_error);
        return out;
    }

private:
    void split_base_url() {
        // Split "http://host:port/prefix" into client target and path prefix.
        auto pos = opt_.base_url.find("://");
        if (pos == std::string::npos)
            throw ConfigError("base_url must start with http://");
        auto path_pos = opt_.base_url.find('/', pos + 3);
        host_ = opt_.base_url.substr(0, path_pos);
        prefix_ = path_pos == std::string::npos
                      ? ""
                      : opt_.base_url.substr(path_pos);
        while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
    }

    static std::string url_encode(const std::string& s) {
        static const char* hex = "0123456789ABCDEF";
        std::string out;
        for (unsigned char c : s) {
            if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~')
                out += static_cast<char>(c);
            else {
                out += '%';
                out += hex[c >> 4];
                out += hex[c & 15];
            }
        }
        return out;
    }

    static std::uint64_t fnv1a(const std::string& s) {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return h;
    }

    std::filesystem::path cache_path(const UserId& user, int probe) const {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(fnv1a(user)));
        std::string name = buf;
        if (probe) name += "_" + std::to_string(probe);
        return std::filesystem::path(opt_.cache_dir) / (name + ".json");
    }

    // Looks the user up in the cache; hash collisions fall through to probed
    // file names (the stored user id is always verified).
    std::optional<CategorizationResult> cache_get(const UserId& user,
                                                  int& free_probe) const {
        for (int probe = 0; probe < 8; ++probe) {
            const auto p = cache_path(user, probe);
            std::ifstream in(p, std::ios::binary);
            if (!in) { free_probe = probe; return std::nullopt; }
            try {
                const auto j = nlohmann::json::parse(in);
                if (j.at("user").get<std::string>() != user) continue;
                CategorizationResult r;
                r.user = user;
                if (!j.at("score").is_null())
                    r.score = j.at("score").get<double>();
                return r;
            } catch (const std::exception&) {
                continue; // unreadable entry: retry over the network
            }
        }
        free_probe = -1;
        return std::nullopt;
    }

    void cache_put(const CategorizationResult& r, int probe) const {
        if (probe < 0) return;
        nlohmann::ordered_json j;
        j["user"] = r.user;
        if (r.score) j["score"] = *r.score;
        else j["score"] = nullptr;
        std::ofstream out(cache_path(r.user, probe), std::ios::binary);
        out << j.dump() << '\n';
    }

    CategorizationResult fetch_one(const UserId& user) {
        int free_probe = 0;
        if (!opt_.cache_dir.empty()) {
            if (auto hit = cache_get(user, free_probe)) return *hit;
        }

        httplib::Client client(host_);
        client.set_connection_timeout(5, 0);
        client.set_read_timeout(10, 0);
        httplib::Headers headers;
        if (!opt_.token_env.empty()) {
            if (const char* tok = std::getenv(opt_.token_env.c_str()))
                headers.emplace("Authorization", std::string("Bearer ") + tok);
        }

        const std::string path = prefix_ + "/" + url_encode(user);
        std::string last_error = "no attempt made";
        int backoff = opt_.backoff_ms;
        for (int attempt = 0; attempt < opt_.retries; ++attempt) {
            if (attempt > 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
                backoff *= 2;
            }
            auto res = client.Get(path, headers);
            if (!res) {
                last_error = "transport error: " + httplib::to_string(res.error());
                continue;
            }
            if (res->status == 404) {
                CategorizationResult r;
                r.user = user;
                if (!opt_.cache_dir.empty()) cache_put(r, free_probe);
                return r;
            }
            if (res->status != 200) {
                last_error = "HTTP " + std::to_string(res->status);
                continue;
            }
            try {
                const auto j = nlohmann::json::parse(res->body);
                CategorizationResult r;
                r.user = user;
                if (!j.at("score").is_null())
                    r.score = j.at("score").get<double>();
                if (!opt_.cache_dir.empty()) cache_put(r, free_probe);
                return r;
            } catch (const std::exception& e) {
                last_error = std::string("bad response body: ") + e.what();
            }
        }
        throw DataError("score fetch failed for user '" + user + "': " +
                        last_error);
    }

    Options opt_;
    std::string host_, prefix_;
};

// --------------------------------------------------------------------------
// Constant source, mostly for wiring tests and dry runs.
class ConstantScoreSource : public ScoreSource {
public:
    explicit ConstantScoreSource(double value) : value_(value) {}
    std::vector<CategorizationResult>
    fetch(const std::vector<UserId>& users) override {
        std::vector<CategorizationResult> out;
        out.reserve(users.size());
        for (const auto& u : users) out.push_back({u, value_, std::nullopt});
        return out;
    }

private:
    double value_;
};

// --------------------------------------------------------------------------

struct GroupSpec {
    std::vector<double> fractions;       // must sum to 1, each > 0
    std::vector<std::string> names;      // optional; defaults to group_1..n
};

struct GroupAssignment {
    std::vector<std::string> group_names;        // ascending automation
    std::vector<std::vector<UserId>> members;    // per group, sorted ids
    std::unordered_map<UserId, int> group_of;    // categorized users only
    std::unordered_map<UserId, double> score_of; // raw scores (score mode)
    std::vector<double> fractions;               // |N_g| / categorized total
    std::vector<double> thresholds; // n-1 cut points: min score of group g+1
    std::vector<UserId> uncategorized;           // requested, no score/label

    std::size_t group_count() const { return group_names.size(); }
    std::size_t categorized_count() const { return group_of.size(); }

    // Group index for a user, or -1 when uncategorized.
    int group(const UserId& u) const {
        auto it = group_of.find(u);
        return it == group_of.end() ? -1 : it->second;
    }
};

// Decile bin of a raw score: nearest upper decile, bins 1..10 labeled by
// their upper edge (0.0 falls into bin 1, i.e. "0.1").
inline int score_decile_bin(double score) {
    const int b = static_cast<int>(std::ceil(score * 10.0 - 1e-9));
    return std::clamp(b, 1, 10);
}

namespace detail {

inline void validate_spec(const GroupSpec& spec) {
    if (spec.fractions.empty())
        throw ConfigError("group split needs at least one fraction");
    double sum = 0.0;
    for (double f : spec.fractions) {
        if (!(f > 0.0 && f <= 1.0))
            throw ConfigError("group fractions must be in (0,1]");
        sum += f;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("group fractions must sum to 1");
    if (!spec.names.empty() && spec.names.size() != spec.fractions.size())
        throw ConfigError("group names count does not match fractions");
}

inline std::vector<std::string> group_names(const GroupSpec& spec) {
    if (!spec.names.empty()) return spec.names;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < spec.fractions.size(); ++i)
        names.push_back("group_" + std::to_string(i + 1));
    return names;
}

} // namespace detail

// Percentile split. Users are ranked by (score, id) ascending and cut at
// nearest-rank boundaries round(cum_fraction * m), which keeps every group
// within one user of its target size for any score multiset. Assignment is
// monotone: score(u) < score(v) implies group(u) <= group(v); users tied at
// a boundary score may split across adjacent groups by id order. Scores
// outside [0,1] are rejected. Users without a score become `uncategorized`.
inline GroupAssignment
assign_groups(const std::vector<CategorizationResult>& results,
              const GroupSpec& spec) {
    detail::validate_spec(spec);
    GroupAssignment a;
    a.group_names = detail::group_names(spec);
    const std::size_t n_groups = spec.fractions.size();
    a.members.resize(n_groups);

    std::vector<std::pair<double, UserId>> ranked;
    ranked.reserve(results.size());
    for (const auto& r : results) {
        if (!r.score) {
            a.uncategorized.push_back(r.user);
            continue;
        }
        if (!(*r.score >= 0.0 && *r.score <= 1.0))
            throw DataError("malformed score for user '" + r.user + "': " +
                            std::to_string(*r.score) + " not in [0,1]");
        ranked.emplace_back(*r.score, r.user);
    }
    std::sort(ranked.begin(), ranked.end());
    std::sort(a.uncategorized.begin(), a.uncategorized.end());

    const std::size_t m = ranked.size();
    std::vector<std::size_t> bounds(n_groups + 1, 0);
    double cum = 0.0;
    for (std::size_t gi = 0; gi < n_groups; ++gi) {
        cum += spec.fractions[gi];
        bounds[gi + 1] = static_cast<std::size_t>(
            std::llround(cum * static_cast<double>(m)));
    }
    bounds[n_groups] = m; // guard against accumulated rounding

    a.fractions.resize(n_groups, 0.0);
    for (std::size_t gi = 0; gi < n_groups; ++gi) {
        for (std::size_t i = bounds[gi]; i < bounds[gi + 1]; ++i) {
            a.members[gi].push_back(ranked[i].second);
            a.group_of.emplace(ranked[i].second, static_cast<int>(gi));
            a.score_of.emplace(ranked[i].second, ranked[i].first);
        }
        std::sort(a.members[gi].begin(), a.members[gi].end());
        if (m > 0)
            a.fractions[gi] =
                static_cast<double>(a.members[gi].size()) / static_cast<double>(m);
    }
    for (std::size_t gi = 0; gi + 1 < n_groups; ++gi)
        a.thresholds.push_back(bounds[gi + 1] < m ? ranked[bounds[gi + 1]].first
                                                  : 1.0);
    return a;
}

// Explicit-label mode: each distinct label is a group; groups are ordered by
// label lexicographically.
inline GroupAssignment
assign_groups_by_label(const std::vector<CategorizationResult>& results) {
    GroupAssignment a;
    std::map<std::string, std::vector<UserId>> by_label;
    for (const auto& r : results) {
        if (r.label) by_label[*r.label].push_back(r.user);
        else a.uncategorized.push_back(r.user);
    }
    if (by_label.empty()) throw DataError("label assignment found no labels");
    std::sort(a.uncategorized.begin(), a.uncategorized.end());
    std::size_t total = 0;
    for (auto& [label, users] : by_label) total += users.size();
    int gi = 0;
    for (auto& [label, users] : by_label) {
        std::sort(users.begin(), users.end());
        for (const auto& u : users) a.group_of.emplace(u, gi);
        a.fractions.push_back(static_cast<double>(users.size()) /
                              static_cast<double>(total));
        a.group_names.push_back(label);
        a.members.push_back(std::move(users));
        ++gi;
    }
    return a;
}

} // namespace retnet
