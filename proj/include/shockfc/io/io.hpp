#ifndef SHOCKFC_IO_IO_HPP
#define SHOCKFC_IO_IO_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shockfc/equations/state.hpp"
#include "shockfc/grid.hpp"

namespace shockfc {

// FNV-1a 64-bit content hash, used to pin assets and weights in manifests.
inline std::uint64_t fnv64_bytes(const void* data, std::size_t n) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("fnv64_file: cannot open " + path);
    std::vector<char> buf((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
    return fnv64_bytes(buf.data(), buf.size());
}

// 17 significant digits: lossless float64 round trip.
inline std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Short time tag for snapshot file names, e.g. u_t0.25.csv.
inline std::string format_time_tag(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

inline void write_csv_1d(const std::string& path, const Grid1D& g,
                         const std::vector<double>& v) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv_1d: cannot open " + path);
    out << "x,value\n";
    for (int i = 0; i < g.N; ++i)
        out << format_g17(g.x(i)) << ',' << format_g17(v[i]) << '\n';
}

// Masked points are omitted.
inline void write_csv_2d(const std::string& path, const Grid2D& g,
                         const std::vector<double>& v) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv_2d: cannot open " + path);
    out << "x,y,value\n";
    for (int j = 0; j < g.Ny; ++j) {
        auto [i0, i1] = g.row_span[j];
        for (int i = i0; i <= i1; ++i)
            out << format_g17(g.x(i)) << ',' << format_g17(g.y(j)) << ','
                << format_g17(v[g.idx(i, j)]) << '\n';
    }
}

// Flat key=value run configuration with optional [section] headers.
// Unknown keys are rejected (strict mode).
inline std::map<std::string, std::string> parse_config_file(
    const std::string& path, const std::vector<std::string>& known_keys) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("parse_config_file: cannot open " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            std::size_t e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[' && t.back() == ']') continue;  // section header
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
        bool ok = false;
        for (const auto& k : known_keys)
            if (k == key) { ok = true; break; }
        if (!ok)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
        kv[key] = val;
    }
    return kv;
}

}  // namespace shockfc

#endif
