// Minimal RFC-4180 CSV reading and writing: quoted fields, embedded commas,
// quotes and newlines, CRLF tolerance. Nothing clever.
#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace retnet {
namespace csv {

// Shortest decimal form that parses back to the same double.
inline std::string decimal(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// Reads one CSV record (which may span physical lines when fields are
// quoted). Returns false on end of input. Partial trailing records without a
// final newline are returned.
inline bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool saw_any = false;
    int c;
    while ((c = in.get()) != EOF) {
        saw_any = true;
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in.peek() == '"') { field += '"'; in.get(); }
                else in_quotes = false;
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            in_quotes = true;
        } else if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else if (ch == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            fields.push_back(field);
            return true;
        } else {
            field += ch;
        }
    }
    if (!saw_any) return false;
    if (!field.empty() && field.back() == '\r') field.pop_back();
    fields.push_back(field);
    return true;
}

inline bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\r\n") != std::string::npos;
}

inline void write_field(std::ostream& out, const std::string& s) {
    if (!needs_quoting(s)) { out << s; return; }
    out << '"';
    for (char ch : s) {
        if (ch == '"') out << "\"\"";
        else out << ch;
    }
    out << '"';
}

inline void write_record(std::ostream& out, const std::vector<std::string>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out << ',';
        write_field(out, f[i]);
    }
    out << '\n';
}

} // namespace csv
} // namespace retnet
