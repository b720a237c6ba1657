#include "dilatelab/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dilatelab {

namespace {

// Strips comments and whitespace; returns the data fields of one line.
std::vector<std::string> line_fields(std::string line) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    std::vector<std::string> fields;
    std::string cur;
    const auto flush = [&] {
        std::size_t a = 0, b = cur.size();
        while (a < b && std::isspace(static_cast<unsigned char>(cur[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(cur[b - 1]))) --b;
        cur = cur.substr(a, b - a);
        if (!cur.empty()) fields.push_back(cur);
        cur.clear();
    };
    for (char c : line) {
        if (c == ',') {
            flush();
            continue;
        }
        cur.push_back(c);
    }
    flush();
    return fields;
}

Coord parse_coord(const std::string& s, const std::string& path, std::size_t lineno) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size())
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": expected an integer, got '" + s + "'");
    return static_cast<Coord>(v);
}

double parse_weight(const std::string& s, const std::string& path, std::size_t lineno) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size())
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": expected a weight, got '" + s + "'");
    return v;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

}  // namespace

std::string_view version() { return "0.1.0"; }

IntSet read_set(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<Point> points;
    std::string line;
    std::size_t lineno = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto fields = line_fields(std::move(line));
        if (fields.empty()) continue;
        Point p;
        p.reserve(fields.size());
        for (const auto& f : fields) p.push_back(parse_coord(f, path, lineno));
        if (points.empty())
            dim = p.size();
        else if (p.size() != dim)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": dimension " + std::to_string(p.size()) +
                                        " differs from first point's " +
                                        std::to_string(dim));
        points.push_back(std::move(p));
    }
    if (points.empty()) throw std::invalid_argument(path + ": no points");
    return IntSet(static_cast<int>(dim), std::move(points));
}

void write_set(const IntSet& S, const std::string& path) {
    std::ofstream out = open_output(path);
    for (const Point& p : S.elements()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ',';
            out << p[i];
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("short write to " + path);
}

FractionalDilate read_dilate(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<std::pair<Point, double>> entries;
    std::string line;
    std::size_t lineno = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto fields = line_fields(std::move(line));
        if (fields.empty()) continue;
        if (fields.size() < 2)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": need at least one coordinate and a weight");
        Point p;
        p.reserve(fields.size() - 1);
        for (std::size_t i = 0; i + 1 < fields.size(); ++i)
            p.push_back(parse_coord(fields[i], path, lineno));
        const double w = parse_weight(fields.back(), path, lineno);
        if (entries.empty())
            dim = p.size();
        else if (p.size() != dim)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": dimension " + std::to_string(p.size()) +
                                        " differs from first point's " +
                                        std::to_string(dim));
        entries.emplace_back(std::move(p), w);
    }
    if (entries.empty()) throw std::invalid_argument(path + ": no entries");
    return FractionalDilate(static_cast<int>(dim), std::move(entries));
}

void write_dilate(const FractionalDilate& gamma, const std::string& path) {
    std::ofstream out = open_output(path);
    for (const auto& [p, w] : gamma.entries()) {
        for (Coord c : p) out << c << ',';
        out << format_g12(w) << '\n';
    }
    if (!out) throw std::runtime_error("short write to " + path);
}

std::string format_g12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for hashing");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string data = buf.str();
    return fnv1a64(data);
}

std::string manifest_to_json(const RunManifest& m) {
    nlohmann::json j;
    j["command"] = m.command;
    j["version"] = m.version;
    if (m.seed_used) j["seed"] = m.seed;
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [path, digest] : m.input_digests) inputs[path] = digest;
    j["input_digests"] = inputs;
    j["outputs"] = m.outputs;
    j["wall_seconds"] = m.wall_seconds;
    return j.dump(2);
}

std::string hex_digest(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace dilatelab
