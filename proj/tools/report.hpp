#pragma once

// Report emission helpers for the command line tool: exact values to JSON
// (rationals as "p/q" strings, integers as numbers only inside the 53-bit
// safe range), CSV and markdown table writers.

#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "scrollar/numeric.hpp"

namespace scrollar::report {

using nlohmann::json;

inline json exact(const Int& v) {
    static const Int kSafeMax = (Int(1) << 53) - 1;
    if (v <= kSafeMax && v >= -kSafeMax) return json(v.get_si());
    return json(v.get_str());
}

inline json exact(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return exact(Int(c.get_num()));
    return json(to_string(c));
}

inline json exact(long v) { return json(v); }

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline void write_markdown(std::ostream& os, const Table& t) {
    os << "|";
    for (const auto& h : t.header) os << " " << h << " |";
    os << "\n|";
    for (size_t i = 0; i < t.header.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : t.rows) {
        os << "|";
        for (const auto& cell : row) os << " " << cell << " |";
        os << "\n";
    }
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_csv(std::ostream& os, const Table& t) {
    for (size_t i = 0; i < t.header.size(); ++i)
        os << (i ? "," : "") << csv_escape(t.header[i]);
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
        os << "\n";
    }
}

inline std::string t_power(const Int& exponent) {
    if (exponent == 0) return "1";
    if (exponent == 1) return "t";
    return "t^" + exponent.get_str();
}

inline std::string t_power(long exponent) { return t_power(Int(exponent)); }

}  // namespace scrollar::report
