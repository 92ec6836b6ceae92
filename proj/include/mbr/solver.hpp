#pragma once

#include "mbr/scenario_regret.hpp"

#include <vector>

namespace mbr {

struct TraceStep {
    std::size_t size = 0;    ///< vertices still in play
    Vertex centroid = 0;
    std::size_t pruned = 0;  ///< vertices kept for the next pass
};

struct SolveResult {
    Vertex center = 0;
    Time max_regret = 0;
    std::size_t iterations = 0;
    std::vector<TraceStep> trace;
    std::vector<Time> profile;  ///< per-vertex maximum regret (solve_naive only)
};

enum class RegretMethod { naive, fast };

/// Prune-and-search over centroids. Each pass evaluates the centroid z of the
/// surviving vertex set; zero regret ends the search, otherwise the set shrinks
/// to z plus the branch at z holding the witness center.
inline SolveResult solve(const Tree& t, Weight rho) {
    SolveResult res;
    auto tb = preprocess_extremes(t, rho);
    std::vector<char> alive(t.size(), 1);
    std::size_t count = t.size();

    while (count >= 3) {
        ++res.iterations;
        Vertex z = centroid(t, alive);
        auto rep = max_regret_fast(t, rho, z, tb);
        if (rep.max_regret == 0) {
            res.trace.push_back({count, z, 1});
            res.center = z;
            res.max_regret = 0;
            return res;
        }
        auto side = branch(t, z, rep.witness_center);
        std::vector<char> next(t.size(), 0);
        std::size_t kept = 0;
        for (Vertex v : side.members) {
            if (alive[v]) {
                next[v] = 1;
                ++kept;
            }
        }
        next[z] = 1;
        ++kept;
        res.trace.push_back({count, z, kept});
        alive.swap(next);
        count = kept;
    }

    bool first = true;
    for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) {
        if (!alive[v]) continue;
        Time r = max_regret_fast(t, rho, v, tb).max_regret;
        if (first || r < res.max_regret) {
            res.center = v;
            res.max_regret = r;
            first = false;
        }
    }
    return res;
}

/// Maximum regret of every vertex; the argmin (lowest id on ties) is the center.
inline SolveResult solve_naive(const Tree& t, Weight rho, RegretMethod method = RegretMethod::naive) {
    SolveResult res;
    ExtremeTables tb;
    if (method == RegretMethod::fast) tb = preprocess_extremes(t, rho);
    res.profile.resize(t.size());
    for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) {
        res.profile[v] = method == RegretMethod::fast ? max_regret_fast(t, rho, v, tb).max_regret
                                                      : max_regret_naive(t, rho, v).max_regret;
        if (v == 0 || res.profile[v] < res.max_regret) {
            res.center = v;
            res.max_regret = res.profile[v];
        }
    }
    return res;
}

} // namespace mbr
