#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "plinc/configuration.hpp"
#include "plinc/errors.hpp"
#include "plinc/pattern.hpp"
#include "plinc/search.hpp"

namespace plinc {

using nlohmann::json;

inline json to_json(const Configuration& c) {
    json j;
    j["scalar_kind"] = kind_name(c.kind());
    auto m = c.field_m();
    if (m != 0) j["m"] = m;
    json pts = json::array();
    for (const auto& p : c.points)
        pts.push_back({scalar_str(p.x()), scalar_str(p.y()), scalar_str(p.z())});
    json lns = json::array();
    for (const auto& l : c.lines)
        lns.push_back({scalar_str(l.a()), scalar_str(l.b()), scalar_str(l.c())});
    json inc = json::array();
    for (auto [p, l] : c.incidences) inc.push_back({p, l});
    j["points"] = std::move(pts);
    j["lines"] = std::move(lns);
    j["incidences"] = std::move(inc);
    j["provenance"] = c.provenance;
    return j;
}

inline Configuration configuration_from_json(const json& j) {
    Configuration c;
    std::string kind_str = j.at("scalar_kind").get<std::string>();
    ScalarKind kind;
    if (kind_str == "rational") kind = ScalarKind::rational;
    else if (kind_str == "quadext") kind = ScalarKind::quadext;
    else if (kind_str == "float") kind = ScalarKind::float64;
    else throw parse_error("unknown scalar_kind: " + kind_str);
    std::int64_t m = j.value("m", std::int64_t(0));
    if (kind == ScalarKind::quadext && m < 2)
        throw parse_error("quadext configuration requires field index m >= 2");
    auto parse3 = [&](const json& arr) {
        if (!arr.is_array() || arr.size() != 3) throw parse_error("coordinate triple expected");
        return std::array<Scalar, 3>{parse_scalar(arr[0].get<std::string>(), kind, m),
                                     parse_scalar(arr[1].get<std::string>(), kind, m),
                                     parse_scalar(arr[2].get<std::string>(), kind, m)};
    };
    for (const auto& arr : j.at("points")) {
        auto t = parse3(arr);
        c.points.emplace_back(t[0], t[1], t[2]);
    }
    for (const auto& arr : j.at("lines")) {
        auto t = parse3(arr);
        c.lines.emplace_back(t[0], t[1], t[2]);
    }
    if (j.contains("incidences")) {
        for (const auto& pr : j.at("incidences")) {
            int p = pr.at(0).get<int>(), l = pr.at(1).get<int>();
            if (p < 0 || p >= static_cast<int>(c.points.size()) || l < 0 ||
                l >= static_cast<int>(c.lines.size()))
                throw parse_error("incidence index out of range");
            c.incidences.emplace_back(p, l);
        }
        c.sort_incidences();
    } else {
        c = make_configuration(std::move(c.points), std::move(c.lines), "");
    }
    c.provenance = j.value("provenance", std::string());
    return c;
}

inline json to_json(const Pattern& p) {
    json j;
    j["type"] = "pattern";
    j["name"] = p.name;
    j["point_vertices"] = p.point_labels;
    j["line_vertices"] = p.line_labels;
    json edges = json::array();
    for (auto [pv, lv] : p.edges) edges.push_back({pv, lv});
    j["edges"] = std::move(edges);
    return j;
}

inline Pattern pattern_from_json(const json& j) {
    Pattern p;
    p.name = j.value("name", std::string("pattern"));
    p.point_labels = j.at("point_vertices").get<std::vector<std::string>>();
    p.line_labels = j.at("line_vertices").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
        int pv = e.at(0).get<int>(), lv = e.at(1).get<int>();
        if (pv < 0 || pv >= static_cast<int>(p.point_labels.size()) || lv < 0 ||
            lv >= static_cast<int>(p.line_labels.size()))
            throw parse_error("pattern edge index out of range");
        p.edges.emplace_back(pv, lv);
    }
    p.finish();
    return p;
}

inline json to_json(const Embedding& e) {
    json j;
    j["point_map"] = e.point_map;
    j["line_map"] = e.line_map;
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw parse_error("bad JSON in " + path + ": " + ex.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace plinc
