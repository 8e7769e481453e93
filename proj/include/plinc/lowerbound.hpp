#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plinc/configuration.hpp"
#include "plinc/pattern.hpp"
#include "plinc/rng.hpp"
#include "plinc/search.hpp"

namespace plinc {

/// Parameters of the random sub-configuration experiment (N = A^3).
struct SampleParams {
    unsigned A = 4;
    unsigned k = 3;
    double q = 0;             // 0: use default_q(A, k)
    std::uint64_t seed = 1;
    unsigned trials = 20;
    std::uint64_t budget = 50'000'000; // per-trial enumeration budget
};

/// q = N^(-(k+6)/(9k+6)).
inline double default_q(unsigned A, unsigned k) {
    double n = std::pow(static_cast<double>(A), 3.0);
    double ex = -(static_cast<double>(k) + 6.0) / (9.0 * static_cast<double>(k) + 6.0);
    return std::pow(n, ex);
}

namespace detail {
inline constexpr std::uint64_t kPhasePoints = 1;
inline constexpr std::uint64_t kPhaseLines = 2;
inline constexpr std::uint64_t kPhaseBalancePoints = 3;
inline constexpr std::uint64_t kPhaseBalanceLines = 4;

/// Restriction of a configuration to index subsets (sorted, deduplicated).
inline Configuration restrict_configuration(const Configuration& base,
                                            const std::vector<int>& keep_points,
                                            const std::vector<int>& keep_lines,
                                            const std::string& provenance) {
    Configuration out;
    out.provenance = provenance;
    std::vector<int> pmap(base.points.size(), -1), lmap(base.lines.size(), -1);
    for (int p : keep_points) {
        pmap[p] = static_cast<int>(out.points.size());
        out.points.push_back(base.points[p]);
    }
    for (int l : keep_lines) {
        lmap[l] = static_cast<int>(out.lines.size());
        out.lines.push_back(base.lines[l]);
    }
    for (auto [p, l] : base.incidences)
        if (pmap[p] >= 0 && lmap[l] >= 0) out.incidences.emplace_back(pmap[p], lmap[l]);
    out.sort_incidences();
    return out;
}
} // namespace detail

/// Keeps each point and each line independently with probability q, using
/// the counter-based generator (point i decides on counter i of the point
/// phase, line j on counter j of the line phase).
inline Configuration sample_subconfiguration(const Configuration& base, double q,
                                             std::uint64_t seed) {
    if (!(q > 0.0) || !(q < 1.0)) {
        if (q == 1.0) return base;
        throw domain_error("sample_subconfiguration requires 0 < q <= 1");
    }
    std::uint64_t sp = rng::substream(seed, detail::kPhasePoints);
    std::uint64_t sl = rng::substream(seed, detail::kPhaseLines);
    std::vector<int> keep_p, keep_l;
    for (std::size_t i = 0; i < base.points.size(); ++i)
        if (rng::uniform01(sp, i) < q) keep_p.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < base.lines.size(); ++j)
        if (rng::uniform01(sl, j) < q) keep_l.push_back(static_cast<int>(j));
    return detail::restrict_configuration(base, keep_p, keep_l,
                                          base.provenance + "|sample(q)");
}

/// The three conditions of the event A from the deletion argument, with the
/// third condition checked for points and for lines separately (the stricter
/// reading); the joint count is recorded alongside.
struct EventAReport {
    bool size_window = false;       // qN/2 < |P'|, |L'| < 2qN
    bool max_degree_ok = false;     // every degree <= 2qA
    bool rich_points_ok = false;    // >= qN/4 points with degree in [qA/4, 2qA]
    bool rich_lines_ok = false;     // same for lines
    std::size_t points = 0, lines = 0;
    std::size_t max_degree = 0;
    std::size_t rich_points = 0, rich_lines = 0;
    double q = 0;
    unsigned A = 0;

    bool holds() const { return size_window && max_degree_ok && rich_points_ok && rich_lines_ok; }
    bool rich_joint_ok() const {
        // looser reading: points and lines counted together
        return rich_points + rich_lines >=
               static_cast<std::size_t>(std::ceil(q * A * A * A / 4.0));
    }
};

inline EventAReport check_event_A(const Configuration& c, double q, unsigned A) {
    EventAReport r;
    r.q = q;
    r.A = A;
    const double N = std::pow(static_cast<double>(A), 3.0);
    r.points = c.points.size();
    r.lines = c.lines.size();
    r.size_window = (q * N / 2 < r.points) && (r.points < 2 * q * N) && (q * N / 2 < r.lines) &&
                    (r.lines < 2 * q * N);
    auto pd = c.point_degrees();
    auto ld = c.line_degrees();
    std::size_t maxd = 0;
    for (int d : pd) maxd = std::max(maxd, static_cast<std::size_t>(d));
    for (int d : ld) maxd = std::max(maxd, static_cast<std::size_t>(d));
    r.max_degree = maxd;
    const double hi = 2 * q * A, lo = q * A / 4;
    r.max_degree_ok = static_cast<double>(maxd) <= hi;
    for (int d : pd)
        if (lo <= d && d <= hi) ++r.rich_points;
    for (int d : ld)
        if (lo <= d && d <= hi) ++r.rich_lines;
    const double quota = q * N / 4;
    r.rich_points_ok = static_cast<double>(r.rich_points) >= quota;
    r.rich_lines_ok = static_cast<double>(r.rich_lines) >= quota;
    return r;
}

struct DeletionReport {
    std::uint64_t copies = 0;         // subgraph images found before deletion
    std::size_t deleted_points = 0;   // distinct white points removed
    bool certified_free = false;      // independent detector found nothing after
    bool valid = true;                // false when an enumeration budget was hit
};

/// Deletes, per subdivided-k-clique copy, the copy's white point of smallest
/// index, then certifies the result clique-free with the general pattern
/// detector (an independent code path from the specialized counter).
inline std::pair<Configuration, DeletionReport> delete_and_certify(const Configuration& c,
                                                                   unsigned k,
                                                                   std::uint64_t budget = kUnlimited) {
    DeletionReport rep;
    CliqueCount count = count_subdivided_cliques(c, k, budget, /*want_witnesses=*/true);
    rep.copies = count.copies;
    rep.valid = count.exact;
    std::set<int> to_delete;
    for (const auto& w : count.witnesses)
        to_delete.insert(*std::min_element(w.whites.begin(), w.whites.end()));
    rep.deleted_points = to_delete.size();
    std::vector<int> keep_p, keep_l;
    for (std::size_t i = 0; i < c.points.size(); ++i)
        if (!to_delete.count(static_cast<int>(i))) keep_p.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < c.lines.size(); ++j) keep_l.push_back(static_cast<int>(j));
    Configuration out =
        detail::restrict_configuration(c, keep_p, keep_l, c.provenance + "|deleted");
    if (rep.valid) {
        SearchResult check = contains(out, pattern_subdivided_clique(k), budget);
        rep.certified_free = (check.status == SearchStatus::absent);
        if (check.status == SearchStatus::unknown) rep.valid = false;
    }
    return {std::move(out), rep};
}

/// One pipeline run: sample, event-A check, deletion with certification,
/// and down-sampling to a balanced n-by-n configuration.
struct TrialReport {
    unsigned A = 0;
    double q = 0;
    unsigned trial = 0;
    std::uint64_t trial_seed = 0;
    std::size_t points_sampled = 0, lines_sampled = 0, edges_sampled = 0;
    bool event_a = false;
    std::uint64_t copies = 0;
    std::size_t deleted_points = 0;
    std::size_t points_final = 0, lines_final = 0, edges_final = 0;
    std::size_t n_balanced = 0, edges_balanced = 0;
    bool certified_free = false;
    bool valid = true;
};

inline TrialReport run_trial(const Configuration& base, unsigned A, unsigned k, double q,
                             std::uint64_t seed, unsigned trial, std::uint64_t budget) {
    TrialReport t;
    t.A = A;
    t.q = q;
    t.trial = trial;
    t.trial_seed = rng::substream(seed, 1000 + trial);
    Configuration sampled = sample_subconfiguration(base, q, t.trial_seed);
    t.points_sampled = sampled.points.size();
    t.lines_sampled = sampled.lines.size();
    t.edges_sampled = sampled.incidences.size();
    t.event_a = check_event_A(sampled, q, A).holds();
    auto [final_cfg, del] = delete_and_certify(sampled, k, budget);
    t.copies = del.copies;
    t.deleted_points = del.deleted_points;
    t.points_final = final_cfg.points.size();
    t.lines_final = final_cfg.lines.size();
    t.edges_final = final_cfg.incidences.size();
    t.certified_free = del.certified_free;
    t.valid = del.valid;
    // balance: n = min(|P''|, |L''|, floor(qN/4)), uniform down-sample
    const double N = std::pow(static_cast<double>(A), 3.0);
    std::size_t n = std::min({t.points_final, t.lines_final,
                              static_cast<std::size_t>(std::floor(q * N / 4.0))});
    t.n_balanced = n;
    if (n >= 1) {
        auto keep_p = rng::sample_without_replacement(
            rng::substream(t.trial_seed, detail::kPhaseBalancePoints), n, t.points_final);
        auto keep_l = rng::sample_without_replacement(
            rng::substream(t.trial_seed, detail::kPhaseBalanceLines), n, t.lines_final);
        Configuration balanced =
            detail::restrict_configuration(final_cfg, keep_p, keep_l, "balanced");
        t.edges_balanced = balanced.incidences.size();
    } else {
        t.valid = false;
    }
    return t;
}

struct SlopeFit {
    double slope = 0, intercept = 0, stderr_slope = 0;
    double ci_lo = 0, ci_hi = 0; // slope +- 1.96 * stderr
    std::size_t n = 0;
};

inline SlopeFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
    SlopeFit f;
    f.n = xs.size();
    if (f.n < 2) return f;
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < f.n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    double mx = sx / f.n, my = sy / f.n, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < f.n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) return f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    if (f.n > 2) {
        double ss = 0;
        for (std::size_t i = 0; i < f.n; ++i) {
            double r = ys[i] - (f.intercept + f.slope * xs[i]);
            ss += r * r;
        }
        f.stderr_slope = std::sqrt(ss / (f.n - 2) / sxx);
    }
    f.ci_lo = f.slope - 1.96 * f.stderr_slope;
    f.ci_hi = f.slope + 1.96 * f.stderr_slope;
    return f;
}

struct ExponentReport {
    SampleParams params;
    unsigned A_lo = 0, A_hi = 0;
    std::vector<TrialReport> trials;
    std::size_t invalid_trials = 0;
    SlopeFit base_fit;  // ln I vs ln n over the un-deleted base configurations
    SlopeFit final_fit; // over the balanced certified configurations
};

/// Full pipeline over a range of A: per-trial rows plus log-log fits of the
/// base and of the balanced final configurations.
inline ExponentReport exponent_report(unsigned A_lo, unsigned A_hi, unsigned k, unsigned trials,
                                      std::uint64_t seed, double q_override = 0,
                                      std::uint64_t budget = 50'000'000) {
    if (A_lo < 2 || A_hi < A_lo) throw domain_error("exponent_report: bad A range");
    ExponentReport rep;
    rep.A_lo = A_lo;
    rep.A_hi = A_hi;
    rep.params.k = k;
    rep.params.seed = seed;
    rep.params.trials = trials;
    rep.params.budget = budget;
    std::vector<double> bx, by, fx, fy;
    for (unsigned A = A_lo; A <= A_hi; ++A) {
        Configuration base = erdos_config(A);
        double q = q_override > 0 ? q_override : default_q(A, k);
        bx.push_back(std::log(static_cast<double>(base.points.size())));
        by.push_back(std::log(static_cast<double>(base.incidences.size())));
        std::uint64_t a_seed = rng::substream(seed, A);
        for (unsigned t = 0; t < trials; ++t) {
            TrialReport tr = run_trial(base, A, k, q, a_seed, t, budget);
            if (!tr.valid) {
                ++rep.invalid_trials;
            } else if (tr.n_balanced >= 2 && tr.edges_balanced >= 1) {
                fx.push_back(std::log(static_cast<double>(tr.n_balanced)));
                fy.push_back(std::log(static_cast<double>(tr.edges_balanced)));
            }
            rep.trials.push_back(std::move(tr));
        }
    }
    rep.base_fit = fit_loglog(bx, by);
    rep.final_fit = fit_loglog(fx, fy);
    return rep;
}

/// CSV with one row per trial; all parameters echoed in header comments.
inline std::string trials_csv(const ExponentReport& rep) {
    std::ostringstream os;
    os << "# plinc lowerbound rng=" << rng::kAlgorithmId << " seed=" << rep.params.seed
       << " k=" << rep.params.k << " A=" << rep.A_lo << ".." << rep.A_hi
       << " trials=" << rep.params.trials << " budget=" << rep.params.budget << "\n";
    os << "A,q,trial,trial_seed,points_sampled,lines_sampled,edges_sampled,event_a,copies,"
          "deleted_points,points_final,lines_final,edges_final,n_balanced,edges_balanced,"
          "certified_free,valid\n";
    for (const auto& t : rep.trials) {
        os << t.A << ',' << format_double(t.q) << ',' << t.trial << ',' << t.trial_seed << ','
           << t.points_sampled << ',' << t.lines_sampled << ',' << t.edges_sampled << ','
           << (t.event_a ? 1 : 0) << ',' << t.copies << ',' << t.deleted_points << ','
           << t.points_final << ',' << t.lines_final << ',' << t.edges_final << ','
           << t.n_balanced << ',' << t.edges_balanced << ',' << (t.certified_free ? 1 : 0) << ','
           << (t.valid ? 1 : 0) << "\n";
    }
    return os.str();
}

} // namespace plinc
