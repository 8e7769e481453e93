#include <catch_amalgamated.hpp>

#include "plinc/export.hpp"
#include "plinc/gon.hpp"
#include "plinc/json_io.hpp"
#include "plinc/rng.hpp"

using namespace plinc;

TEST_CASE("configuration JSON round-trip, rational") {
    Configuration c = erdos_config(3);
    json j = to_json(c);
    CHECK(j["scalar_kind"] == "rational");
    Configuration back = configuration_from_json(j);
    REQUIRE(back.points.size() == c.points.size());
    REQUIRE(back.lines.size() == c.lines.size());
    CHECK(back.incidences == c.incidences);
    for (std::size_t i = 0; i < c.points.size(); ++i) CHECK(back.points[i] == c.points[i]);
    for (std::size_t i = 0; i < c.lines.size(); ++i) CHECK(back.lines[i] == c.lines[i]);
    CHECK(back.provenance == c.provenance);
}

TEST_CASE("configuration JSON round-trip, quadratic field") {
    Configuration c = to_configuration(extended_gon(6, GonMode::exact));
    json j = to_json(c);
    CHECK(j["scalar_kind"] == "quadext");
    CHECK(j["m"] == 3);
    Configuration back = configuration_from_json(j);
    REQUIRE(back.points.size() == c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) CHECK(back.points[i] == c.points[i]);
    CHECK(back.incidences == c.incidences);
}

TEST_CASE("configuration JSON round-trip, float") {
    Configuration c = to_configuration(extended_gon(7, GonMode::floating));
    Configuration back = configuration_from_json(to_json(c));
    REQUIRE(back.points.size() == c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) CHECK(back.points[i] == c.points[i]);
    CHECK(back.incidences == c.incidences);
}

TEST_CASE("incidences recomputed when absent") {
    json j = to_json(erdos_config(2));
    j.erase("incidences");
    Configuration back = configuration_from_json(j);
    CHECK(count_incidences(back) == 15);
}

TEST_CASE("bad JSON is rejected") {
    json j = to_json(erdos_config(2));
    j["scalar_kind"] = "complex";
    CHECK_THROWS_AS(configuration_from_json(j), parse_error);
    json k = to_json(erdos_config(2));
    k["incidences"].push_back({99, 0});
    CHECK_THROWS_AS(configuration_from_json(k), parse_error);
}

TEST_CASE("pattern JSON round-trip") {
    for (const Pattern& p : {pattern_hk(5), pattern_grid(3), pattern_subdivided_clique(4)}) {
        Pattern back = pattern_from_json(to_json(p));
        CHECK(back.point_labels == p.point_labels);
        CHECK(back.line_labels == p.line_labels);
        CHECK(back.edges == p.edges);
    }
}

TEST_CASE("scalar strings round-trip") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        long long n = static_cast<long long>(rng::below(3, 4 * i, 4001)) - 2000;
        long long d = 1 + static_cast<long long>(rng::below(3, 4 * i + 1, 997));
        Rational r(n, d);
        CHECK(parse_rational(format_rational(r)) == r);
        QuadExt q(2, r, Rational(static_cast<long long>(rng::below(3, 4 * i + 2, 41)) - 20, d));
        CHECK(parse_quadext(q.str(), 2) == q);
    }
    // doubles print as shortest round-trip literals
    for (double v : {0.1, -3.25, 1e-9, 12345.6789}) {
        CHECK(parse_double(format_double(v)) == v);
    }
}

TEST_CASE("degree CSV") {
    std::string csv = degree_csv(erdos_config(2));
    CHECK(csv.find("line,points_on_line") != std::string::npos);
    CHECK(csv.find("point,lines_through_point") != std::string::npos);
    // 8 lines + 8 points + two headers + comment
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 19);
}

TEST_CASE("svg export smoke") {
    Configuration c = erdos_config(3);
    std::string svg = svg_drawing(c);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    MatchingGraph g = matching_graph(c);
    std::string svg2 = svg_drawing(c, &g);
    CHECK(svg2.size() > svg.size());
}
