// Interaction datasets: loading (NDJSON / CSV), normalization, canonical
// ordering and seeded down-sampling. One record = one retweet event.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "retnet/csv.hpp"
#include "retnet/errors.hpp"
#include "retnet/time.hpp"

namespace retnet {

using UserId = std::string;
using TweetId = std::string;
using Topic = std::string;

struct Interaction {
    UserId retweeter;           // who pressed retweet
    UserId retweeted;           // author of the original tweet
    TweetId tweet;              // id of the original tweet
    std::vector<Topic> topics;  // normalized: lowercase, no leading '#', deduped
    Timestamp timestamp = 0;    // epoch seconds UTC
};

struct InteractionDataset {
    std::vector<Interaction> rows;
    Timestamp window_start = 0; // <= min timestamp over rows
    Timestamp window_end = 0;   // >= max timestamp over rows
    std::string source_path;
    std::size_t dropped_rows = 0; // malformed rows skipped while loading
};

enum class OnError { skip, fail };

namespace detail {

inline std::string lowercase(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

// Lowercases, strips one leading '#', drops empties, removes duplicates while
// keeping first-occurrence order.
inline std::vector<Topic> normalize_topics(std::vector<Topic> raw) {
    std::vector<Topic> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        std::string s = lowercase(std::move(t));
        if (!s.empty() && s.front() == '#') s.erase(s.begin());
        if (s.empty()) continue;
        if (std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<Topic> split_topics(const std::string& joined) {
    std::vector<Topic> out;
    std::size_t start = 0;
    while (start <= joined.size()) {
        std::size_t sep = joined.find(';', start);
        if (sep == std::string::npos) sep = joined.size();
        if (sep > start) out.push_back(joined.substr(start, sep - start));
        start = sep + 1;
    }
    return out;
}

inline void finalize(InteractionDataset& ds, const std::string& path) {
    ds.source_path = path;
    if (ds.rows.empty())
        throw DataError("empty dataset: " + path +
                        (ds.dropped_rows ? " (all rows malformed)" : ""));
    Timestamp lo = ds.rows.front().timestamp, hi = lo;
    for (const auto& r : ds.rows) {
        lo = std::min(lo, r.timestamp);
        hi = std::max(hi, r.timestamp);
    }
    ds.window_start = lo;
    ds.window_end = hi;
}

} // namespace detail

// NDJSON rows must carry exactly the keys
// {"retweeter","retweeted","tweet","topics","timestamp"}; "topics" is an
// array of strings, "timestamp" an ISO-8601 string or epoch-second number.
inline InteractionDataset load_ndjson(const std::string& path,
                                      OnError on_error = OnError::skip) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    InteractionDataset ds;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            if (!j.is_object() || j.size() != 5 || !j.contains("retweeter") ||
                !j.contains("retweeted") || !j.contains("tweet") ||
                !j.contains("topics") || !j.contains("timestamp"))
                throw DataError("row keys must be exactly "
                                "{retweeter,retweeted,tweet,topics,timestamp}");
            Interaction r;
            r.retweeter = j.at("retweeter").get<std::string>();
            r.retweeted = j.at("retweeted").get<std::string>();
            r.tweet = j.at("tweet").get<std::string>();
            if (r.retweeter.empty() || r.retweeted.empty() || r.tweet.empty())
                throw DataError("empty id field");
            r.topics = detail::normalize_topics(
                j.at("topics").get<std::vector<std::string>>());
            const auto& ts = j.at("timestamp");
            if (ts.is_number_integer())
                r.timestamp = ts.get<std::int64_t>();
            else if (ts.is_string())
                r.timestamp = timeutil::parse_timestamp(ts.get<std::string>());
            else
                throw DataError("timestamp must be a string or an integer");
            ds.rows.push_back(std::move(r));
        } catch (const std::exception& e) {
            if (on_error == OnError::fail)
                throw DataError(path + ":" + std::to_string(lineno) + ": " +
                                e.what());
            ++ds.dropped_rows;
        }
    }
    detail::finalize(ds, path);
    return ds;
}

// CSV with a header row naming the same five fields in any column order;
// topics are ';'-separated inside one (possibly quoted) field.
inline InteractionDataset load_csv(const std::string& path,
                                   OnError on_error = OnError::skip) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<std::string> header;
    if (!csv::read_record(in, header))
        throw DataError("empty dataset: " + path);
    int col[5] = {-1, -1, -1, -1, -1}; // retweeter, retweeted, tweet, topics, timestamp
    static const char* names[5] = {"retweeter", "retweeted", "tweet", "topics",
                                   "timestamp"};
    for (std::size_t i = 0; i < header.size(); ++i)
        for (int k = 0; k < 5; ++k)
            if (header[i] == names[k]) col[k] = static_cast<int>(i);
    for (int k = 0; k < 5; ++k)
        if (col[k] < 0)
            throw DataError(path + ": missing column '" + names[k] + "'");

    InteractionDataset ds;
    std::vector<std::string> fields;
    std::size_t lineno = 1;
    while (csv::read_record(in, fields)) {
        ++lineno;
        if (fields.size() == 1 && fields[0].empty()) continue;
        try {
            if (fields.size() < header.size())
                throw DataError("short row");
            Interaction r;
            r.retweeter = fields[col[0]];
            r.retweeted = fields[col[1]];
            r.tweet = fields[col[2]];
            if (r.retweeter.empty() || r.retweeted.empty() || r.tweet.empty())
                throw DataError("empty id field");
            r.topics = detail::normalize_topics(detail::split_topics(fields[col[3]]));
            r.timestamp = timeutil::parse_timestamp(fields[col[4]]);
            ds.rows.push_back(std::move(r));
        } catch (const std::exception& e) {
            if (on_error == OnError::fail)
                throw DataError(path + ":" + std::to_string(lineno) + ": " +
                                e.what());
            ++ds.dropped_rows;
        }
    }
    detail::finalize(ds, path);
    return ds;
}

// Picks the loader from the file extension (.csv vs anything else = NDJSON).
inline InteractionDataset load_dataset(const std::string& path,
                                       OnError on_error = OnError::skip) {
    const auto dot = path.rfind('.');
    const std::string ext =
        dot == std::string::npos ? "" : detail::lowercase(path.substr(dot + 1));
    if (ext == "csv") return load_csv(path, on_error);
    return load_ndjson(path, on_error);
}

inline void save_ndjson(const InteractionDataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path);
    for (const auto& r : ds.rows) {
        nlohmann::ordered_json j;
        j["retweeter"] = r.retweeter;
        j["retweeted"] = r.retweeted;
        j["tweet"] = r.tweet;
        j["topics"] = r.topics;
        j["timestamp"] = r.timestamp;
        out << j.dump() << '\n';
    }
}

inline void save_csv(const InteractionDataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path);
    csv::write_record(out, {"retweeter", "retweeted", "tweet", "topics",
                            "timestamp"});
    for (const auto& r : ds.rows) {
        std::string topics;
        for (std::size_t i = 0; i < r.topics.size(); ++i) {
            if (i) topics += ';';
            topics += r.topics[i];
        }
        csv::write_record(out, {r.retweeter, r.retweeted, r.tweet, topics,
                                std::to_string(r.timestamp)});
    }
}

// Canonical order used before any seeded draw: (timestamp, tweet, retweeter).
inline bool canonical_less(const Interaction& a, const Interaction& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    if (a.tweet != b.tweet) return a.tweet < b.tweet;
    return a.retweeter < b.retweeter;
}

inline void canonical_sort(InteractionDataset& ds) {
    std::stable_sort(ds.rows.begin(), ds.rows.end(), canonical_less);
}

// Uniform down-sampling without replacement: keeps floor(fraction * n) rows.
// The dataset is put in canonical order first so the draw depends only on
// (content, seed), never on file row order; the result stays in canonical
// order. fraction == 1 returns the dataset unchanged.
inline InteractionDataset sample_dataset(const InteractionDataset& ds,
                                         double fraction, std::uint64_t seed) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw ConfigError("sample fraction must be in [0,1], got " +
                          std::to_string(fraction));
    if (fraction == 1.0) return ds;

    InteractionDataset out = ds;
    canonical_sort(out);
    const std::size_t n = out.rows.size();
    const std::size_t k = static_cast<std::size_t>(fraction * static_cast<double>(n));

    // Partial Fisher-Yates over an index array; then restore canonical order
    // by sorting the chosen indices.
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(idx[i], idx[pick(rng)]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());

    std::vector<Interaction> kept;
    kept.reserve(k);
    for (std::size_t i : idx) kept.push_back(out.rows[i]);
    out.rows = std::move(kept);
    out.dropped_rows = ds.dropped_rows;
    return out; // window kept from the source dataset (still a valid bound)
}

} // namespace retnet
