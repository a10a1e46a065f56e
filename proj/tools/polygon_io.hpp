#pragma once

// Polygon documents: {"name": str, "vertices": [[x, y], ...]}.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rotokernel/polygon.hpp"

namespace rotokernel::cli {

using json = nlohmann::ordered_json;

/// Malformed or unreadable input; the front end maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PolygonDocument {
    std::string name;
    std::vector<Point> vertices;

    friend bool operator==(const PolygonDocument&, const PolygonDocument&) = default;
};

inline PolygonDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("document must be a JSON object");
    PolygonDocument d;
    if (auto it = j.find("name"); it != j.end()) {
        if (!it->is_string()) throw InputError("\"name\" must be a string");
        d.name = it->get<std::string>();
    }
    const auto it = j.find("vertices");
    if (it == j.end() || !it->is_array()) throw InputError("missing \"vertices\" array");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& v = (*it)[i];
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw InputError("vertex " + std::to_string(i) + " is not an [x, y] pair");
        d.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return d;
}

inline json to_json(const PolygonDocument& d) {
    json verts = json::array();
    for (const Point& p : d.vertices) verts.push_back({p.x, p.y});
    return json{{"name", d.name}, {"vertices", std::move(verts)}};
}

inline std::string write_document(const PolygonDocument& d) { return to_json(d).dump() + "\n"; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write " + path);
}

/// Counterclockwise polygon of a document; `reversed` reports a clockwise input.
inline SimplePolygon to_polygon(const PolygonDocument& d, bool* reversed = nullptr) {
    try {
        return SimplePolygon::any_orientation(d.vertices, reversed);
    } catch (const InvalidPolygon& e) {
        throw InputError(e.what());
    }
}

inline PolygonDocument to_document(const SimplePolygon& p, std::string name) {
    return {std::move(name), {p.vertices().begin(), p.vertices().end()}};
}

/// 64-bit FNV-1a digest as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace rotokernel::cli
