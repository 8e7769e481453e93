#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "plinc/errors.hpp"

namespace plinc {

/// Abstract two-sorted incidence pattern: labeled point-vertices, labeled
/// line-vertices, and edges oriented points -> lines.
struct Pattern {
    std::string name;
    std::vector<std::string> point_labels;
    std::vector<std::string> line_labels;
    std::vector<std::pair<int, int>> edges; // (point vertex, line vertex), sorted

    std::size_t point_count() const { return point_labels.size(); }
    std::size_t line_count() const { return line_labels.size(); }

    std::vector<int> point_degrees() const {
        std::vector<int> d(point_labels.size(), 0);
        for (auto [p, l] : edges) ++d[p];
        return d;
    }
    std::vector<int> line_degrees() const {
        std::vector<int> d(line_labels.size(), 0);
        for (auto [p, l] : edges) ++d[l];
        return d;
    }

    void finish() {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
};

/// H_k: vertices v_1..v_k, t_1..t_k, chords L_{i,j}, and L_inf. Point
/// vertices are ordered v_1..v_k, t_1..t_k; line vertices are the chords in
/// lexicographic order followed by L_inf, matching extended_gon indexing.
///
/// Edges (indices mod k, 1-based):
///   (a) (v_i, L_{i,j}) and (v_j, L_{i,j}) for every pair {i, j},
///   (b) (t_{2i-1}, L_{i-s, i+s+1}), i in [ceil(k/2)], s in [0, floor(k/2) - 1],
///   (c) (t_{2i},   L_{i-s, i+s+2}), i in [floor(k/2)], s in [0, ceil(k/2) - 2],
///   (d) (t_i, L_inf) for every i.
inline Pattern pattern_hk(unsigned k) {
    if (k < 3) throw domain_error("pattern_hk requires k >= 3");
    Pattern p;
    p.name = "hk" + std::to_string(k);
    for (unsigned i = 1; i <= k; ++i) p.point_labels.push_back("v" + std::to_string(i));
    for (unsigned i = 1; i <= k; ++i) p.point_labels.push_back("t" + std::to_string(i));
    auto chord_rank = [k](unsigned i, unsigned j) {
        if (i > j) std::swap(i, j);
        return static_cast<int>((i - 1) * k - (i - 1) * i / 2 + (j - i) - 1);
    };
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = i + 1; j <= k; ++j)
            p.line_labels.push_back("L{" + std::to_string(i) + "," + std::to_string(j) + "}");
    p.line_labels.push_back("Linf");
    const int linf = static_cast<int>(p.line_labels.size()) - 1;
    auto norm = [k](long long i) { return static_cast<unsigned>(((i - 1) % k + k) % k + 1); };
    // (a)
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = i + 1; j <= k; ++j) {
            p.edges.emplace_back(i - 1, chord_rank(i, j));
            p.edges.emplace_back(j - 1, chord_rank(i, j));
        }
    // (b)
    for (unsigned i = 1; i <= (k + 1) / 2; ++i)
        for (unsigned s = 0; s + 1 <= k / 2; ++s) {
            unsigned a = norm(static_cast<long long>(i) - s), b = norm(static_cast<long long>(i) + s + 1);
            p.edges.emplace_back(k + (2 * i - 1) - 1, chord_rank(a, b));
        }
    // (c)
    for (unsigned i = 1; i <= k / 2; ++i)
        for (unsigned s = 0; s + 2 <= (k + 1) / 2; ++s) {
            unsigned a = norm(static_cast<long long>(i) - s), b = norm(static_cast<long long>(i) + s + 2);
            p.edges.emplace_back(k + (2 * i) - 1, chord_rank(a, b));
        }
    // (d)
    for (unsigned i = 1; i <= k; ++i) p.edges.emplace_back(k + i - 1, linf);
    p.finish();
    return p;
}

/// t x t grid pattern: two bundles of t line-vertices and t^2 point-vertices,
/// each point on exactly one line of each bundle.
inline Pattern pattern_grid(unsigned t) {
    if (t < 2) throw domain_error("pattern_grid requires t >= 2");
    Pattern p;
    p.name = "grid" + std::to_string(t);
    for (unsigned i = 1; i <= t; ++i) p.line_labels.push_back("a" + std::to_string(i));
    for (unsigned j = 1; j <= t; ++j) p.line_labels.push_back("b" + std::to_string(j));
    for (unsigned i = 1; i <= t; ++i)
        for (unsigned j = 1; j <= t; ++j) {
            int pv = static_cast<int>(p.point_labels.size());
            p.point_labels.push_back("p" + std::to_string(i) + "," + std::to_string(j));
            p.edges.emplace_back(pv, static_cast<int>(i - 1));
            p.edges.emplace_back(pv, static_cast<int>(t + j - 1));
        }
    p.finish();
    return p;
}

/// Incidence pattern of a 1-subdivision of K_k: k black points, C(k,2) white
/// points, and two lines per pair, each through one black and one white.
inline Pattern pattern_subdivided_clique(unsigned k) {
    if (k < 3) throw domain_error("pattern_subdivided_clique requires k >= 3");
    Pattern p;
    p.name = "subdiv" + std::to_string(k);
    for (unsigned i = 1; i <= k; ++i) p.point_labels.push_back("b" + std::to_string(i));
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = i + 1; j <= k; ++j) {
            int w = static_cast<int>(p.point_labels.size());
            p.point_labels.push_back("w" + std::to_string(i) + "," + std::to_string(j));
            int l1 = static_cast<int>(p.line_labels.size());
            p.line_labels.push_back("l" + std::to_string(i) + "|" + std::to_string(i) + "," +
                                    std::to_string(j));
            p.line_labels.push_back("l" + std::to_string(j) + "|" + std::to_string(i) + "," +
                                    std::to_string(j));
            p.edges.emplace_back(static_cast<int>(i - 1), l1);
            p.edges.emplace_back(w, l1);
            p.edges.emplace_back(static_cast<int>(j - 1), l1 + 1);
            p.edges.emplace_back(w, l1 + 1);
        }
    p.finish();
    return p;
}

} // namespace plinc
