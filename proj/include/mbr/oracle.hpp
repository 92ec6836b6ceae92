#pragma once

// Brute-force references. Deliberately independent of the broadcast and
// regret code: only the tree type is shared.

#include "mbr/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mbr::oracle {

inline void guard(const Tree& t, std::size_t limit, const char* what) {
    if (t.size() > limit) {
        throw Error(Errc::TooLarge, std::string(what) + " is limited to n <= " + std::to_string(limit));
    }
}

/// Walks the 2^(n-1) lo/hi scenarios; bit e set means edge e at hi.
class ExtremalEnumerator {
public:
    explicit ExtremalEnumerator(const Tree& t) : t_(&t) {
        if (t.edge_count() >= 63) throw Error(Errc::TooLarge, "too many edges to enumerate");
    }

    std::uint64_t count() const noexcept { return std::uint64_t{1} << t_->edge_count(); }

    std::optional<std::vector<Weight>> next() {
        if (cursor_ >= count()) return std::nullopt;
        std::vector<Weight> w(t_->edge_count());
        for (std::size_t e = 0; e < w.size(); ++e) {
            w[e] = (cursor_ >> e) & 1U ? t_->edges()[e].w.hi : t_->edges()[e].w.lo;
        }
        ++cursor_;
        return w;
    }

private:
    const Tree* t_;
    std::uint64_t cursor_ = 0;
};

/// Plain recursive evaluation of the optimal broadcast time from v.
inline Weight btime_simple(const Tree& t, std::span<const Weight> w, Weight rho, Vertex v,
                           Vertex from = -1) {
    std::vector<Weight> keys;
    for (const auto& inc : t.neighbors(v)) {
        if (inc.to == from) continue;
        keys.push_back(w[inc.edge] + btime_simple(t, w, rho, inc.to, v));
    }
    std::sort(keys.rbegin(), keys.rend());
    Weight best = 0;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        best = std::max(best, static_cast<Weight>(k + 1) * rho + keys[k]);
    }
    return best;
}

/// Minimum makespan over every combination of per-vertex connection orders,
/// each combination simulated in full.
inline Weight btime_bruteforce(const Tree& t, std::span<const Weight> w, Weight rho, Vertex v) {
    guard(t, 8, "btime_bruteforce");
    t.check_vertex(v);
    const auto n = t.size();
    std::vector<Vertex> parent(n, -1), order{v};
    std::vector<std::vector<Incidence>> kids(n);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex u = order[i];
        for (const auto& inc : t.neighbors(u)) {
            if (inc.to == parent[u] || inc.to == v) continue;
            parent[inc.to] = u;
            kids[u].push_back(inc);
            order.push_back(inc.to);
        }
    }
    auto by_id = [](const Incidence& a, const Incidence& b) { return a.to < b.to; };
    for (auto& k : kids) std::sort(k.begin(), k.end(), by_id);

    Weight best = std::numeric_limits<Weight>::max();
    std::vector<Weight> arrive(n);
    while (true) {
        arrive[v] = 0;
        Weight span = 0;
        for (Vertex u : order) {
            for (std::size_t r = 0; r < kids[u].size(); ++r) {
                const auto& inc = kids[u][r];
                arrive[inc.to] = arrive[u] + static_cast<Weight>(r + 1) * rho + w[inc.edge];
                span = std::max(span, arrive[inc.to]);
            }
        }
        best = std::min(best, span);
        // odometer over permutations
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (std::next_permutation(kids[i].begin(), kids[i].end(), by_id)) break;
        }
        if (i == n) break;
    }
    return best;
}

/// max over lo/hi scenarios s and vertices y of btime_s(x) - btime_s(y).
inline Weight max_regret_bruteforce(const Tree& t, Weight rho, Vertex x) {
    guard(t, 10, "max_regret_bruteforce");
    t.check_vertex(x);
    Weight best = 0;
    ExtremalEnumerator en(t);
    while (auto w = en.next()) {
        Weight bx = btime_simple(t, *w, rho, x);
        for (Vertex y = 0; y < static_cast<Vertex>(t.size()); ++y) {
            best = std::max(best, bx - btime_simple(t, *w, rho, y));
        }
    }
    return best;
}

/// Lowest-id vertex of minimum maximum regret, with that regret.
inline std::pair<Vertex, Weight> minmax_center_bruteforce(const Tree& t, Weight rho) {
    guard(t, 10, "minmax_center_bruteforce");
    const auto n = t.size();
    std::vector<Weight> reg(n, 0);
    ExtremalEnumerator en(t);
    std::vector<Weight> bt(n);
    while (auto w = en.next()) {
        for (Vertex y = 0; y < static_cast<Vertex>(n); ++y) bt[y] = btime_simple(t, *w, rho, y);
        Weight lo = *std::min_element(bt.begin(), bt.end());
        for (std::size_t y = 0; y < n; ++y) reg[y] = std::max(reg[y], bt[y] - lo);
    }
    auto it = std::min_element(reg.begin(), reg.end());
    return {static_cast<Vertex>(it - reg.begin()), *it};
}

} // namespace mbr::oracle
