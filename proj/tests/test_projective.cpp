#include <catch_amalgamated.hpp>

#include <cmath>

#include "plinc/configuration.hpp"
#include "plinc/gon.hpp"
#include "plinc/projective.hpp"
#include "plinc/rng.hpp"

using namespace plinc;

namespace {

Scalar qe3(long long an, long long ad, long long bn, long long bd) {
    return QuadExt(3, Rational(an, ad), Rational(bn, bd));
}

ProjPoint rp(long long x, long long y, long long z) {
    return ProjPoint(scalar_of(x), scalar_of(y), scalar_of(z));
}

ProjPoint random_point(std::uint64_t seed, std::uint64_t i) {
    while (true) {
        long long x = static_cast<long long>(rng::below(seed, 3 * i, 19)) - 9;
        long long y = static_cast<long long>(rng::below(seed, 3 * i + 1, 19)) - 9;
        long long z = static_cast<long long>(rng::below(seed, 3 * i + 2, 3));
        if (x || y || z) return rp(x, y, z);
        ++i;
    }
}

ProjMap random_map(std::uint64_t seed, std::uint64_t i) {
    while (true) {
        std::array<Scalar, 9> e;
        for (int j = 0; j < 9; ++j)
            e[j] = scalar_of(static_cast<long long>(rng::below(seed, 100 * i + j, 11)) - 5);
        try {
            return ProjMap(e);
        } catch (const degenerate_error&) {
            ++i;
        }
    }
}

} // namespace

TEST_CASE("canonical form, exact") {
    CHECK(rp(-2, 4, -6) == rp(1, -2, 3));
    CHECK(rp(-2, 4, -6).str() == "[1:-2:3]");
    CHECK(rp(0, -5, 0).str() == "[0:1:0]");
    // a Q(sqrt(3)) multiple of an integer triple canonicalizes to it
    ProjPoint p(qe3(0, 1, -10, 1), qe3(0, 1, -10, 1), qe3(0, 1, 1, 1)); // sqrt3*(-10,-10,1)
    CHECK(p.str() == "[-10:-10:1]");
    CHECK_THROWS_AS(rp(0, 0, 0), degenerate_error);
}

TEST_CASE("line through two points and meet of two lines") {
    CHECK(line_through(rp(0, 0, 1), rp(1, 0, 1)) == ProjLine(scalar_of(0), scalar_of(1), scalar_of(0)));
    CHECK(line_through(rp(1, 0, 0), rp(0, 1, 0)) == ProjLine(scalar_of(0), scalar_of(0), scalar_of(1)));
    CHECK_THROWS_AS(line_through(rp(2, 2, 2), rp(1, 1, 1)), degenerate_error);
    ProjLine x0(scalar_of(1), scalar_of(0), scalar_of(0));
    ProjLine y0(scalar_of(0), scalar_of(1), scalar_of(0));
    CHECK(meet(x0, y0) == rp(0, 0, 1));
    // parallels y = 0 and y = z meet at infinity
    ProjLine y1(scalar_of(0), scalar_of(1), scalar_of(-1));
    CHECK(meet(y0, y1) == rp(1, 0, 0));
    CHECK_THROWS_AS(meet(y0, y0), degenerate_error);
}

TEST_CASE("projective maps preserve incidence") {
    ProjMap id = ProjMap::identity();
    CHECK(id.apply(rp(3, -4, 5)) == rp(3, -4, 5));
    for (std::uint64_t i = 0; i < 1000; ++i) {
        ProjPoint p = random_point(11, 2 * i);
        ProjPoint q = random_point(11, 2 * i + 1);
        if (p == q) continue;
        ProjLine l = line_through(p, q);
        ProjMap f = random_map(13, i);
        CHECK(incident(f.apply(p), f.apply(l)));
        CHECK(incident(f.apply(q), f.apply(l)));
        ProjPoint r = random_point(17, i);
        CHECK(incident(r, l) == incident(f.apply(r), f.apply(l)));
    }
}

TEST_CASE("cross ratio of collinear rational points") {
    // (a,b;c,d) = |ac||bd| / (|ad||bc|) = (1*1)/(2*2)
    Scalar cr = cross_ratio(rp(0, 0, 1), rp(3, 0, 1), rp(1, 0, 1), rp(2, 0, 1));
    CHECK(scalar_equal(cr, Rational(1, 4)));
    CHECK_THROWS_AS(cross_ratio(rp(0, 0, 1), rp(0, 0, 1), rp(1, 0, 1), rp(2, 0, 1)), domain_error);
    CHECK_THROWS_AS(cross_ratio(rp(0, 0, 1), rp(3, 0, 1), rp(1, 0, 1), rp(2, 1, 1)), domain_error);
}

TEST_CASE("cross ratio is projectively invariant") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        ProjPoint a = random_point(23, 2 * i);
        ProjPoint b = random_point(23, 2 * i + 1);
        if (a == b) continue;
        // four distinct points a*u + b*v on the line through a and b
        auto combo = [&](long long u, long long v) {
            return ProjPoint(scalar_of(u) * a.x() + scalar_of(v) * b.x(),
                             scalar_of(u) * a.y() + scalar_of(v) * b.y(),
                             scalar_of(u) * a.z() + scalar_of(v) * b.z());
        };
        ProjPoint c = combo(1, 1), d = combo(2, 1), e = combo(1, 3), g = combo(3, 2);
        if (c == d || c == e || c == g || d == e || d == g || e == g) continue;
        Scalar cr = cross_ratio(c, d, e, g);
        ProjMap f = random_map(29, i);
        Scalar cr2 = cross_ratio(f.apply(c), f.apply(d), f.apply(e), f.apply(g));
        CHECK(scalar_equal(cr, cr2));
    }
}

TEST_CASE("regular k-gon construction") {
    auto sq = regular_gon(4, GonMode::exact);
    REQUIRE(sq.size() == 4);
    CHECK(sq[0] == rp(0, 1, 1));
    CHECK(sq[3] == rp(1, 0, 1));
    bool has = false;
    for (const auto& v : sq) has = has || v == rp(-1, 0, 1);
    CHECK(has);

    auto hex = regular_gon(6, GonMode::exact);
    ProjPoint v_paper(qe3(-1, 2, 0, 1), qe3(0, 1, 1, 2), qe3(1, 1, 0, 1)); // [-1/2 : sqrt3/2 : 1]
    bool found = false;
    for (const auto& v : hex) found = found || v == v_paper;
    CHECK(found);

    auto pent = regular_gon(5, GonMode::floating);
    for (unsigned j = 1; j <= 5; ++j) {
        double ang = std::atan2(to_double(pent[j - 1].y()), to_double(pent[j - 1].x()));
        double want = 2 * M_PI * j / 5;
        double diff = std::remainder(ang - want, 2 * M_PI);
        CHECK(std::abs(diff) < 1e-12);
    }
    CHECK_THROWS_AS(regular_gon(5, GonMode::exact), unsupported_error);
    CHECK_THROWS_AS(regular_gon(2, GonMode::floating), domain_error);
}

TEST_CASE("extended gon: counts and t-point incidences") {
    auto g5 = extended_gon(5, GonMode::floating);
    CHECK(g5.points.size() == 10);
    CHECK(g5.lines.size() == 11);

    auto g3 = extended_gon(3, GonMode::exact);
    CHECK(g3.points.size() == 6);
    CHECK(g3.lines.size() == 4);
    // each chord contains exactly one t point
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = i + 1; j <= 3; ++j) {
            const ProjLine& chord = g3.lines[g3.chord_index(i, j)];
            int count = 0;
            for (unsigned t = 0; t < 3; ++t)
                if (incident(g3.points[3 + t], chord)) ++count;
            CHECK(count == 1);
        }
    // all t on the line at infinity
    for (unsigned t = 0; t < 3; ++t)
        CHECK(incident(g3.points[3 + t], g3.lines.back()));
}

TEST_CASE("side/radius ratio and the cross-ratio identity, float") {
    for (unsigned k = 5; k <= 24; ++k) {
        auto g = extended_gon(k, GonMode::floating);
        const ProjPoint& v1 = g.points[0];
        const ProjPoint& v2 = g.points[1];
        const ProjPoint& vk1 = g.points[k - 2]; // v_{k-1}
        const ProjPoint& vk = g.points[k - 1];  // v_k
        ProjPoint w = meet(line_through(v1, v2), line_through(vk1, vk));
        auto dist = [](const ProjPoint& p, const ProjPoint& q) {
            auto [px, py] = p.affine_xy();
            auto [qx, qy] = q.affine_xy();
            double dx = to_double(px) - to_double(qx), dy = to_double(py) - to_double(qy);
            return std::sqrt(dx * dx + dy * dy);
        };
        double s = dist(v1, v2);
        double r = dist(w, v1);
        CHECK(std::abs(s / r - 2 * std::cos(2 * M_PI / k)) < 1e-9);
        // t_1 is the slope point of the class of chord v1v2 (class 3 = 1+2)
        const ProjPoint& t1 = g.points[k];
        Scalar cr = cross_ratio(t1, w, v1, v2);
        CHECK(std::abs(to_double(cr) - (1 + 2 * std::cos(2 * M_PI / k))) < 1e-9);
    }
}

TEST_CASE("hexagon cross-ratio is exactly 2 in Q(sqrt(3))") {
    auto g = extended_gon(6, GonMode::exact);
    ProjPoint w = meet(line_through(g.points[0], g.points[1]),
                       line_through(g.points[4], g.points[5]));
    Scalar cr = cross_ratio(g.points[6], w, g.points[0], g.points[1]);
    CHECK(scalar_equal(cr, scalar_of(2)));
}

TEST_CASE("published hexagon images under the integer-embedding matrix") {
    ProjMap f({qe3(10, 1, 0, 1), qe3(0, 1, 20, 1), qe3(40, 1, 0, 1),
               qe3(10, 1, 0, 1), qe3(0, 1, 20, 1), qe3(20, 1, 0, 1),
               qe3(2, 1, 0, 1), qe3(0, 1, 1, 1), qe3(0, 1, 0, 1)});
    ProjPoint v3(qe3(1, 1, 0, 1), qe3(0, 1, 0, 1), qe3(1, 1, 0, 1));
    CHECK(f.apply(v3).str() == "[25:15:1]");
    ProjPoint t2(qe3(0, 1, -1, 1), qe3(1, 1, 0, 1), qe3(0, 1, 0, 1));
    CHECK(f.apply(t2).str() == "[-10:-10:1]");
}

TEST_CASE("integer embedding of the extended hexagon verifies") {
    K6Report rep = verify_integer_embedding_k6();
    CHECK(rep.pass);
    CHECK(rep.all_integer_affine);
    CHECK(rep.incidences_preserved);
    CHECK(rep.t_images_collinear);
    CHECK(rep.published_values_match);
    // t3 prints as a point at infinity and v5 as a non-collinear point; both
    // compute to finite integer points
    REQUIRE(rep.discrepancies.size() == 2);
    REQUIRE(rep.images.size() == 12);
    CHECK(rep.images[0].computed == "[130:90:1]");
    CHECK(rep.images[6].computed == "[5:5:1]");
    CHECK(rep.images[8].computed == "[50:50:1]");
    CHECK(rep.images[8].matches_published == false);
    CHECK(rep.images[8].integer_affine);
    CHECK(rep.images[4].computed == "[-2:6:1]");
    CHECK(rep.images[4].integer_affine);
    // cross-check from undisputed printed values alone: the image of v5 lies
    // on the chord through v3 and the slope point t6, i.e. on the line
    // through [25:15:1] and [10:10:1] — which [-2:3:1] does not.
    ProjPoint fv3 = rp(25, 15, 1), ft6 = rp(10, 10, 1);
    ProjLine chord = line_through(fv3, ft6);
    CHECK(incident(rp(-2, 6, 1), chord));
    CHECK(!incident(rp(-2, 3, 1), chord));
}

TEST_CASE("duality chart") {
    // point (1,2) -> line y = x - 2; line y = 3x + 1 -> point (3, -1)
    Configuration c;
    c.points.push_back(ProjPoint::affine(scalar_of(1), scalar_of(2)));
    c.lines.push_back(ProjLine(scalar_of(3), scalar_of(-1), scalar_of(1))); // y = 3x + 1
    c.incidences = {};
    auto d = dualize(c);
    CHECK(d.shear_q == 0);
    REQUIRE(d.dual.lines.size() == 1);
    REQUIRE(d.dual.points.size() == 1);
    CHECK(d.dual.lines[0] == ProjLine(scalar_of(1), scalar_of(-1), scalar_of(-2))); // y = x - 2
    CHECK(d.dual.points[0] == ProjPoint::affine(scalar_of(3), scalar_of(-1)));
    // involution on the point through double dualization
    auto dd = dualize(d.dual);
    CHECK(dd.dual.lines[0] == c.lines[0]);
    CHECK(dd.dual.points[0] == c.points[0]);
}

TEST_CASE("duality preserves incidence counts") {
    Configuration e2 = erdos_config(2);
    CHECK(count_incidences(e2) == 15);
    auto d = dualize(e2);
    CHECK(count_incidences(d.dual) == 15);
    for (auto [p, l] : d.dual.incidences)
        CHECK(incident(d.dual.points[p], d.dual.lines[l]));
}

TEST_CASE("duality shears away vertical lines") {
    std::vector<ProjPoint> pts{ProjPoint::affine(scalar_of(1), scalar_of(0)),
                               ProjPoint::affine(scalar_of(1), scalar_of(2)),
                               ProjPoint::affine(scalar_of(0), scalar_of(3))};
    std::vector<ProjLine> lns{
        ProjLine(scalar_of(1), scalar_of(0), scalar_of(-1)), // x = 1, vertical
        ProjLine(scalar_of(3), scalar_of(-1), scalar_of(3))  // y = 3x + 3
    };
    Configuration c = make_configuration(pts, lns, "vertical-test");
    CHECK(count_incidences(c) == 3); // two points on x=1, one on the other
    auto d = dualize(c);
    CHECK(d.shear_q >= 7);
    CHECK(count_incidences(d.dual) == 3);
    for (auto [p, l] : d.dual.incidences)
        CHECK(incident(d.dual.points[p], d.dual.lines[l]));
    // a point at infinity has no dual
    Configuration bad;
    bad.points.emplace_back(scalar_of(1), scalar_of(0), scalar_of(0));
    CHECK_THROWS_AS(dualize(bad), domain_error);
}
