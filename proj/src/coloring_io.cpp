#include "hyperpath/coloring_io.hpp"

#include "hyperpath/errors.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace hyperpath {

using nlohmann::json;

json point_json(const GridPoint& x) { return json(x.coords()); }

json downset_json(const DownSet& s) {
    json out = json::array();
    for (const auto& m : s.members()) out.push_back(point_json(m));
    return out;
}

json partition_json(const HyperPartition& a) {
    const auto extents = a.index_extents();
    if (extents.empty()) return a.at(0);
    std::size_t flat = 0;
    auto rec = [&](auto&& self, std::size_t axis) -> json {
        json arr = json::array();
        for (int i = 0; i < extents[axis]; ++i) {
            if (axis + 1 == extents.size())
                arr.push_back(a.at(flat++));
            else
                arr.push_back(self(self, axis + 1));
        }
        return arr;
    };
    return rec(rec, 0);
}

json universe_json(const Universe& u, int level) {
    json out = json::array();
    for (std::size_t i = 0; i < u.size(level); ++i) {
        if (level == 2) {
            out.push_back(point_json(u.point(i)));
        } else {
            json members = json::array();
            for (auto m : u.members(level, i).indices()) members.push_back(m + 1);
            out.push_back(std::move(members));
        }
    }
    return out;
}

json coloring_to_json(const EdgeColoring& c) {
    json j;
    j["k"] = c.k();
    j["q"] = c.q();
    j["N"] = c.N();
    j["encoding"] = "colex-rank-array";
    json colors = json::array();
    for (auto v : c.colors()) colors.push_back(static_cast<int>(v));
    j["colors"] = std::move(colors);
    if (c.labels()) j["labels"] = *c.labels();
    return j;
}

namespace {

// Validates the header fields of a coloring object and attaches the colors.
EdgeColoring assemble(const json& j, const std::vector<int>& values) {
    if (!j.is_object()) throw InputError("coloring file must hold a JSON object");
    if (j.value("encoding", std::string{}) != "colex-rank-array") throw InputError("unsupported coloring encoding");
    const int k = j.at("k").get<int>();
    const int q = j.at("q").get<int>();
    const int N = j.at("N").get<int>();
    std::vector<std::uint8_t> colors;
    colors.reserve(values.size());
    for (int x : values) {
        if (x < 1 || x > q) throw InputError("color value out of range");
        colors.push_back(static_cast<std::uint8_t>(x));
    }
    EdgeColoring c(k, q, N, std::move(colors));
    if (j.contains("labels")) c.set_labels(j.at("labels").get<std::vector<json>>());
    return c;
}

void write_atomic(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
    const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    const auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp.string());
        body(out);
        out.flush();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw InputError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InputError("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace

EdgeColoring coloring_from_json(const json& j) {
    try {
        if (!j.is_object()) throw InputError("coloring file must hold a JSON object");
        const auto& arr = j.at("colors");
        if (!arr.is_array()) throw InputError("colors must be an array");
        std::vector<int> values;
        values.reserve(arr.size());
        for (const auto& v : arr) {
            if (!v.is_number_integer()) throw InputError("colors must be integers");
            values.push_back(v.get<int>());
        }
        return assemble(j, values);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed coloring file: ") + e.what());
    }
}

EdgeColoring read_coloring(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    // The color array is consumed while parsing so that large files never
    // exist as a JSON tree.
    std::vector<int> values;
    bool in_colors = false;
    bool saw_colors = false;
    bool bad_value = false;
    auto grab = [&](int depth, json::parse_event_t event, json& parsed) {
        if (depth == 1 && event == json::parse_event_t::key) {
            in_colors = parsed == "colors";
            saw_colors = saw_colors || in_colors;
            return true;
        }
        if (in_colors && depth == 2 && event == json::parse_event_t::value) {
            if (parsed.is_number_integer())
                values.push_back(parsed.get<int>());
            else
                bad_value = true;
            return false;
        }
        if (in_colors && depth == 1 && event == json::parse_event_t::value) {
            in_colors = false;
            if (!parsed.is_array()) bad_value = true;
        }
        if (in_colors && depth > 2) bad_value = true;
        return true;
    };
    try {
        const json j = json::parse(in, grab);
        if (!saw_colors) throw InputError("coloring file has no colors");
        if (bad_value) throw InputError("colors must be an array of integers");
        return assemble(j, values);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed coloring file ") + path.string() + ": " + e.what());
    }
}

void write_coloring(const std::filesystem::path& path, const EdgeColoring& c) {
    // Same bytes as coloring_to_json(c).dump(), with the color array streamed.
    json header = coloring_to_json(EdgeColoring(c.k(), c.q(), 0, {}));
    header["N"] = c.N();
    if (c.labels()) header["labels"] = *c.labels();
    const std::string text = header.dump();
    const std::string slot = "\"colors\":[]";
    const std::size_t at = text.find(slot);
    write_atomic(path, [&](std::ostream& out) {
        out << text.substr(0, at) << "\"colors\":[";
        std::string buf;
        buf.reserve(1 << 16);
        char digits[4];
        for (std::size_t r = 0; r < c.edge_count(); ++r) {
            if (r > 0) buf.push_back(',');
            const auto [end, ec] = std::to_chars(digits, digits + sizeof digits, c.color(r));
            buf.append(digits, end);
            if (buf.size() > (1 << 16) - 8) {
                out << buf;
                buf.clear();
            }
        }
        out << buf;
        out << ']' << text.substr(at + slot.size()) << '\n';
    });
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    write_atomic(path, [&](std::ostream& out) { out << contents; });
}

}  // namespace hyperpath
