#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "plinc/configuration.hpp"
#include "plinc/errors.hpp"
#include "plinc/pattern.hpp"

namespace plinc {

/// Sort-preserving injective assignment of pattern vertices to host indices
/// under which every pattern edge maps to a host incidence.
struct Embedding {
    std::vector<int> point_map;
    std::vector<int> line_map;
};

enum class SearchStatus { found, absent, unknown };

struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<Embedding> embedding;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kUnlimited = 0;

/// Adjacency view of a configuration's incidence graph.
struct HostGraph {
    std::vector<std::vector<int>> point_lines; // lines through each point
    std::vector<std::vector<int>> line_points; // points on each line

    explicit HostGraph(const Configuration& c)
        : point_lines(c.points.size()), line_points(c.lines.size()) {
        for (auto [p, l] : c.incidences) {
            point_lines[p].push_back(l);
            line_points[l].push_back(p);
        }
        for (auto& v : point_lines) std::sort(v.begin(), v.end());
        for (auto& v : line_points) std::sort(v.begin(), v.end());
    }

    bool has(int p, int l) const {
        return std::binary_search(point_lines[p].begin(), point_lines[p].end(), l);
    }
};

namespace detail {

// One sort-tagged pattern vertex; id indexes into the sort's own array.
struct PVert {
    bool is_point;
    int id;
};

struct SearchCtx {
    const Pattern& pat;
    const HostGraph& host;
    std::vector<std::vector<int>> pt_nbrs, ln_nbrs;  // pattern adjacency
    std::vector<int> pt_deg, ln_deg;
    std::vector<PVert> order;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<int> pt_img, ln_img;
    std::vector<char> pt_used, ln_used; // host indices taken, per sort
    std::function<bool(const Embedding&)> on_found; // return true to stop

    SearchCtx(const Pattern& p, const HostGraph& h, std::uint64_t b)
        : pat(p), host(h), budget(b) {
        pt_nbrs.resize(p.point_count());
        ln_nbrs.resize(p.line_count());
        for (auto [pv, lv] : p.edges) {
            pt_nbrs[pv].push_back(lv);
            ln_nbrs[lv].push_back(pv);
        }
        pt_deg.resize(p.point_count());
        ln_deg.resize(p.line_count());
        for (std::size_t i = 0; i < p.point_count(); ++i) pt_deg[i] = static_cast<int>(pt_nbrs[i].size());
        for (std::size_t i = 0; i < p.line_count(); ++i) ln_deg[i] = static_cast<int>(ln_nbrs[i].size());
        build_order();
        pt_img.assign(p.point_count(), -1);
        ln_img.assign(p.line_count(), -1);
        pt_used.assign(h.point_lines.size(), 0);
        ln_used.assign(h.line_points.size(), 0);
    }

    // Static order: line-vertex of highest degree first, then greedily the
    // vertex with the most already-ordered neighbors (ties: higher degree).
    void build_order() {
        const std::size_t np = pat.point_count(), nl = pat.line_count();
        std::vector<char> placed_pt(np, 0), placed_ln(nl, 0);
        std::vector<int> adj_pt(np, 0), adj_ln(nl, 0);
        for (std::size_t step = 0; step < np + nl; ++step) {
            int best_score = -1, best_deg = -1;
            PVert pick{false, -1};
            auto consider = [&](bool is_point, int id, int adj, int deg) {
                if (adj > best_score || (adj == best_score && deg > best_deg)) {
                    best_score = adj;
                    best_deg = deg;
                    pick = {is_point, id};
                }
            };
            for (std::size_t i = 0; i < nl; ++i)
                if (!placed_ln[i]) consider(false, static_cast<int>(i), adj_ln[i], ln_deg[i]);
            for (std::size_t i = 0; i < np; ++i)
                if (!placed_pt[i]) consider(true, static_cast<int>(i), adj_pt[i], pt_deg[i]);
            order.push_back(pick);
            if (pick.is_point) {
                placed_pt[pick.id] = 1;
                for (int lv : pt_nbrs[pick.id]) ++adj_ln[lv];
            } else {
                placed_ln[pick.id] = 1;
                for (int pv : ln_nbrs[pick.id]) ++adj_pt[pv];
            }
        }
    }

    bool verify(const Embedding& e) const {
        for (auto [pv, lv] : pat.edges)
            if (!host.has(e.point_map[pv], e.line_map[lv])) return false;
        return true;
    }

    // returns true when the caller asked to stop
    bool dfs(std::size_t depth) {
        if (depth == order.size()) {
            Embedding e{pt_img, ln_img};
            if (!verify(e)) throw error("internal: unverified embedding"); // soundness guard
            return on_found(e);
        }
        PVert v = order[depth];
        std::vector<int> candidates;
        if (v.is_point) {
            int anchor = -1;
            for (int lv : pt_nbrs[v.id])
                if (ln_img[lv] >= 0) { anchor = ln_img[lv]; break; }
            const auto& pool = anchor >= 0 ? host.line_points[anchor] : all_points();
            for (int cand : pool) {
                if (pt_used[cand]) continue;
                if (static_cast<int>(host.point_lines[cand].size()) < pt_deg[v.id]) continue;
                bool ok = true;
                for (int lv : pt_nbrs[v.id])
                    if (ln_img[lv] >= 0 && !host.has(cand, ln_img[lv])) { ok = false; break; }
                if (ok) candidates.push_back(cand);
            }
            for (int cand : candidates) {
                if (budget != kUnlimited && ++nodes > budget) { exhausted = true; return true; }
                if (budget == kUnlimited) ++nodes;
                pt_img[v.id] = cand;
                pt_used[cand] = 1;
                bool stop = dfs(depth + 1);
                pt_used[cand] = 0;
                pt_img[v.id] = -1;
                if (stop) return true;
            }
        } else {
            int anchor = -1;
            for (int pv : ln_nbrs[v.id])
                if (pt_img[pv] >= 0) { anchor = pt_img[pv]; break; }
            const auto& pool = anchor >= 0 ? host.point_lines[anchor] : all_lines();
            for (int cand : pool) {
                if (ln_used[cand]) continue;
                if (static_cast<int>(host.line_points[cand].size()) < ln_deg[v.id]) continue;
                bool ok = true;
                for (int pv : ln_nbrs[v.id])
                    if (pt_img[pv] >= 0 && !host.has(pt_img[pv], cand)) { ok = false; break; }
                if (ok) candidates.push_back(cand);
            }
            for (int cand : candidates) {
                if (budget != kUnlimited && ++nodes > budget) { exhausted = true; return true; }
                if (budget == kUnlimited) ++nodes;
                ln_img[v.id] = cand;
                ln_used[cand] = 1;
                bool stop = dfs(depth + 1);
                ln_used[cand] = 0;
                ln_img[v.id] = -1;
                if (stop) return true;
            }
        }
        return false;
    }

    const std::vector<int>& all_points() {
        if (all_pts_.empty() && !host.point_lines.empty()) {
            all_pts_.resize(host.point_lines.size());
            for (std::size_t i = 0; i < all_pts_.size(); ++i) all_pts_[i] = static_cast<int>(i);
        }
        return all_pts_;
    }
    const std::vector<int>& all_lines() {
        if (all_lns_.empty() && !host.line_points.empty()) {
            all_lns_.resize(host.line_points.size());
            for (std::size_t i = 0; i < all_lns_.size(); ++i) all_lns_[i] = static_cast<int>(i);
        }
        return all_lns_;
    }

private:
    std::vector<int> all_pts_, all_lns_;
};

} // namespace detail

/// Backtracking subgraph containment (not induced): finds a sort-preserving
/// injective embedding of the pattern into the host incidence graph.
/// Exhaustive when the budget is unlimited; a budget hit reports `unknown`,
/// never a false `absent`.
inline SearchResult contains(const Configuration& host, const Pattern& pat,
                             std::uint64_t budget = kUnlimited) {
    HostGraph h(host);
    if (pat.point_count() > h.point_lines.size() || pat.line_count() > h.line_points.size())
        return {SearchStatus::absent, std::nullopt, 0};
    detail::SearchCtx ctx(pat, h, budget);
    SearchResult result;
    ctx.on_found = [&](const Embedding& e) {
        result.embedding = e;
        return true;
    };
    ctx.dfs(0);
    result.nodes = ctx.nodes;
    if (result.embedding) result.status = SearchStatus::found;
    else result.status = ctx.exhausted ? SearchStatus::unknown : SearchStatus::absent;
    return result;
}

struct CountResult {
    std::uint64_t count = 0;
    bool exact = true; // false when the budget cut the enumeration short
    std::uint64_t nodes = 0;
};

/// Number of embeddings of the pattern in the host: distinct image pairs
/// (point set, line set) with `modulo_symmetry`, raw maps otherwise.
inline CountResult count_embeddings(const Configuration& host, const Pattern& pat,
                                    bool modulo_symmetry, std::uint64_t budget = kUnlimited) {
    HostGraph h(host);
    CountResult out;
    if (pat.point_count() > h.point_lines.size() || pat.line_count() > h.line_points.size())
        return out;
    detail::SearchCtx ctx(pat, h, budget);
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    ctx.on_found = [&](const Embedding& e) {
        if (modulo_symmetry) {
            auto ps = e.point_map;
            auto ls = e.line_map;
            std::sort(ps.begin(), ps.end());
            std::sort(ls.begin(), ls.end());
            images.emplace(std::move(ps), std::move(ls));
        } else {
            ++out.count;
        }
        return false; // keep enumerating
    };
    ctx.dfs(0);
    out.nodes = ctx.nodes;
    if (modulo_symmetry) out.count = images.size();
    if (ctx.exhausted) out.exact = false;
    return out;
}

// ---- specialized subdivided k-clique machinery ----

/// One copy: k black host points, a white host point per pair, and the two
/// supporting host lines per white.
struct SubdividedCliqueWitness {
    std::vector<int> blacks;
    std::vector<int> whites;                      // pair order (1,2),(1,3),...
    std::vector<std::pair<int, int>> white_lines; // (line to black i, line to black j)
};

struct CliqueCount {
    std::uint64_t copies = 0;  // distinct subgraph images (edge-set identity)
    std::uint64_t labeled = 0; // role-labeled assignments (black set, pair -> white);
                               // for k = 3 a 12-cycle image carries two of them
    bool exact = true;
    std::uint64_t nodes = 0;
    std::vector<SubdividedCliqueWitness> witnesses; // one per image, when requested
};

namespace detail {

/// Whites adjacent to both p and q through two distinct host lines, with the
/// supporting lines (two distinct host points lie on at most one common
/// line, so the lines are determined).
inline std::vector<std::array<int, 3>> common_whites(const HostGraph& h, int p, int q) {
    std::vector<std::array<int, 3>> out;
    std::vector<std::pair<int, int>> reach; // (point, line via p)
    for (int l : h.point_lines[p])
        for (int w : h.line_points[l])
            if (w != p && w != q) reach.emplace_back(w, l);
    for (auto [w, lp] : reach) {
        for (int l2 : h.point_lines[w]) {
            if (l2 == lp) continue;
            if (std::binary_search(h.point_lines[q].begin(), h.point_lines[q].end(), l2)) {
                out.push_back({w, lp, l2});
                break; // the connecting line pair is unique
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct CliqueCtx {
    const HostGraph& host;
    unsigned k;
    std::uint64_t budget;
    bool want_witnesses;
    CliqueCount result;
    std::vector<int> blacks;
    std::map<std::pair<int, int>, std::vector<std::array<int, 3>>> white_cache;
    std::set<std::vector<std::pair<int, int>>> images; // edge-set signatures

    const std::vector<std::array<int, 3>>& whites_for(int p, int q) {
        auto key = std::minmax(p, q);
        auto it = white_cache.find(key);
        if (it == white_cache.end())
            it = white_cache.emplace(key, common_whites(host, key.first, key.second)).first;
        return it->second;
    }

    bool tick() {
        ++result.nodes;
        if (budget != kUnlimited && result.nodes > budget) {
            result.exact = false;
            return false;
        }
        return true;
    }

    // Assign whites for each black pair (order (0,1),(0,2),(1,2),...) with
    // all points and all lines pairwise distinct.
    void assign_whites(std::size_t pair_idx, std::vector<std::array<int, 3>>& chosen,
                       std::set<int>& used_whites, std::set<int>& used_lines) {
        if (!result.exact) return;
        std::vector<std::pair<int, int>> pairs;
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
        if (pair_idx == pairs.size()) {
            ++result.labeled;
            // identify the copy by its incidence-subgraph edge set; for k = 3
            // both role-labelings of a 12-cycle collapse to one image
            std::vector<std::pair<int, int>> sig;
            for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
                auto [bi, bj] = pairs[pi];
                sig.emplace_back(blacks[bi], chosen[pi][1]);
                sig.emplace_back(chosen[pi][0], chosen[pi][1]);
                sig.emplace_back(blacks[bj], chosen[pi][2]);
                sig.emplace_back(chosen[pi][0], chosen[pi][2]);
            }
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            if (images.insert(std::move(sig)).second) {
                ++result.copies;
                if (want_witnesses) {
                    SubdividedCliqueWitness w;
                    w.blacks = blacks;
                    for (const auto& c : chosen) {
                        w.whites.push_back(c[0]);
                        w.white_lines.emplace_back(c[1], c[2]);
                    }
                    result.witnesses.push_back(std::move(w));
                }
            }
            return;
        }
        auto [bi, bj] = pairs[pair_idx];
        for (const auto& cand : whites_for(blacks[bi], blacks[bj])) {
            if (!tick()) return;
            int w = cand[0], l1 = cand[1], l2 = cand[2];
            if (used_whites.count(w)) continue;
            if (std::find(blacks.begin(), blacks.end(), w) != blacks.end()) continue;
            if (used_lines.count(l1) || used_lines.count(l2)) continue;
            used_whites.insert(w);
            used_lines.insert(l1);
            used_lines.insert(l2);
            chosen.push_back(cand);
            assign_whites(pair_idx + 1, chosen, used_whites, used_lines);
            chosen.pop_back();
            used_whites.erase(w);
            used_lines.erase(l1);
            used_lines.erase(l2);
            if (!result.exact) return;
        }
    }

    void choose_blacks(int start) {
        if (!result.exact) return;
        if (blacks.size() == k) {
            std::vector<std::array<int, 3>> chosen;
            std::set<int> uw, ul;
            assign_whites(0, chosen, uw, ul);
            return;
        }
        for (int b = start; b < static_cast<int>(host.point_lines.size()); ++b) {
            if (!tick()) return;
            if (host.point_lines[b].empty()) continue;
            // prune: the new black must share whites with every chosen black
            bool ok = true;
            for (int prev : blacks)
                if (whites_for(prev, b).empty()) { ok = false; break; }
            if (!ok) continue;
            blacks.push_back(b);
            choose_blacks(b + 1);
            blacks.pop_back();
            if (!result.exact) return;
        }
    }
};

} // namespace detail

/// Role-labeled subdivided k-clique copies in the host: black k-sets with a
/// white per pair, all point images distinct and all 2*C(k,2) line images
/// distinct. Witness extraction is optional.
inline CliqueCount count_subdivided_cliques(const Configuration& host, unsigned k,
                                            std::uint64_t budget = kUnlimited,
                                            bool want_witnesses = false) {
    if (k < 3) throw domain_error("count_subdivided_cliques requires k >= 3");
    HostGraph h(host);
    detail::CliqueCtx ctx{h, k, budget, want_witnesses, {}, {}, {}, {}};
    ctx.choose_blacks(0);
    return ctx.result;
}

/// Maximum number of common neighbors over point pairs in the graph H whose
/// edges join points sharing a host line.
inline std::uint64_t max_common_neighbors(const Configuration& host) {
    const std::size_t n = host.points.size();
    if (n < 2) return 0;
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> adj(n * words, 0);
    HostGraph h(host);
    for (std::size_t l = 0; l < h.line_points.size(); ++l) {
        const auto& pts = h.line_points[l];
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                int a = pts[i], b = pts[j];
                adj[a * words + b / 64] |= 1ull << (b % 64);
                adj[b * words + a / 64] |= 1ull << (a % 64);
            }
    }
    std::uint64_t best = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::uint64_t cnt = 0;
            for (std::size_t w = 0; w < words; ++w)
                cnt += static_cast<std::uint64_t>(__builtin_popcountll(adj[a * words + w] & adj[b * words + w]));
            // a or b may appear as each other's neighbor but not as a common one
            best = std::max(best, cnt);
        }
    }
    return best;
}

} // namespace plinc
