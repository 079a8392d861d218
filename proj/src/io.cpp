#include "khcube/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace khcube {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw validation_error("input is not well-formed JSON");
    if (!j.is_object())
        throw validation_error("input must be a single JSON object");
    return j;
}

int get_int(const json& j, const char* field) {
    if (!j.is_number_integer())
        throw validation_error(std::string(field) + " must be an integer");
    return j.get<int>();
}

std::vector<std::vector<int>> get_list_of_lists(const json& j, const char* field) {
    if (!j.is_array())
        throw validation_error(std::string(field) + " must be a list of lists of integers");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) {
        if (!row.is_array())
            throw validation_error(std::string(field) + " must be a list of lists of integers");
        std::vector<int> r;
        for (const auto& x : row)
            r.push_back(get_int(x, field));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::array<int, 4>> get_crossings(const json& j) {
    std::vector<std::array<int, 4>> out;
    for (const auto& row : get_list_of_lists(j, "crossings")) {
        if (row.size() != 4)
            throw validation_error("crossings entries must hold exactly 4 arc labels");
        out.push_back({row[0], row[1], row[2], row[3]});
    }
    return out;
}

void check_fields(const json& j, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            throw validation_error("unknown field '" + key + "'");
}

} // namespace

LinkDiagram parse_link(const std::string& text) {
    const json j = parse_json(text);
    check_fields(j, {"crossings", "components", "free_loops"});
    LinkDiagram d;
    if (j.contains("crossings"))
        d.crossings = get_crossings(j["crossings"]);
    if (j.contains("components"))
        d.components = get_list_of_lists(j["components"], "components");
    if (j.contains("free_loops"))
        d.free_loops = get_int(j["free_loops"], "free_loops");
    return d;
}

SpatialGraphDiagram parse_spatial(const std::string& text) {
    const json j = parse_json(text);
    check_fields(j, {"vertices", "crossings", "free_loops"});
    SpatialGraphDiagram g;
    if (j.contains("vertices"))
        g.vertices = get_list_of_lists(j["vertices"], "vertices");
    if (j.contains("crossings"))
        g.crossings = get_crossings(j["crossings"]);
    if (j.contains("free_loops"))
        g.free_loops = get_int(j["free_loops"], "free_loops");
    return g;
}

AbstractGraph parse_graph(const std::string& text) {
    const json j = parse_json(text);
    check_fields(j, {"vertex_count", "edges"});
    AbstractGraph g;
    if (!j.contains("vertex_count"))
        throw validation_error("graph file requires vertex_count");
    g.vertex_count = get_int(j["vertex_count"], "vertex_count");
    if (j.contains("edges"))
        for (const auto& row : get_list_of_lists(j["edges"], "edges")) {
            if (row.size() != 2)
                throw validation_error("edges entries must hold exactly 2 vertex indices");
            g.edges.emplace_back(row[0], row[1]);
        }
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinkDiagram load_link(const std::string& path) { return parse_link(read_file(path)); }
SpatialGraphDiagram load_spatial(const std::string& path) {
    return parse_spatial(read_file(path));
}
AbstractGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

InputKind detect_kind(const std::string& text) {
    const json j = parse_json(text);
    if (j.contains("vertex_count"))
        return InputKind::abstract_graph;
    if (j.contains("vertices"))
        return InputKind::spatial_graph;
    return InputKind::link;
}

std::string to_json(const LinkDiagram& d) {
    json j;
    j["crossings"] = d.crossings;
    j["components"] = d.components;
    j["free_loops"] = d.free_loops;
    return j.dump();
}

std::string to_json(const SpatialGraphDiagram& g) {
    json j;
    j["vertices"] = g.vertices;
    j["crossings"] = g.crossings;
    j["free_loops"] = g.free_loops;
    return j.dump();
}

std::string to_json(const AbstractGraph& g) {
    json j;
    j["vertex_count"] = g.vertex_count;
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges)
        j["edges"].push_back({u, v});
    return j.dump();
}

std::string table_csv(const BigradedTable& t) {
    std::string out;
    for (const auto& [ij, dim] : t.dims)
        out += std::to_string(ij.first) + "," + std::to_string(ij.second) + "," +
               std::to_string(dim) + "\n";
    return out;
}

std::string table_grid(const BigradedTable& t) {
    if (t.dims.empty())
        return "(empty table)\n";
    std::set<int> is, js;
    for (const auto& [ij, dim] : t.dims) {
        is.insert(ij.first);
        js.insert(ij.second);
    }
    const int width = 7;
    auto pad_left = [&](const std::string& s) {
        const int pad = width - static_cast<int>(s.size());
        return std::string(pad > 0 ? pad : 1, ' ') + s;
    };
    std::ostringstream out;
    out << std::string(width, ' ');
    for (int i : is)
        out << pad_left("i=" + std::to_string(i));
    out << "\n";
    for (auto jt = js.rbegin(); jt != js.rend(); ++jt) {
        std::string head = "j=" + std::to_string(*jt);
        const int pad = width - static_cast<int>(head.size());
        out << head << std::string(pad > 0 ? pad : 1, ' ');
        for (int i : is) {
            const long long dim = t.at(i, *jt);
            out << pad_left(dim == 0 ? "." : std::to_string(dim));
        }
        out << "\n";
    }
    return out.str();
}

} // namespace khcube
