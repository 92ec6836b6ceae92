#pragma once

#include "mbr/broadcast.hpp"
#include "mbr/succ_chain.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

namespace mbr {

/// A member of the candidate family for query vertex x: the base scenario at
/// `pivot` with only its first j children kept heavy. pivot < 0 stands for the
/// all-lo scenario.
struct CandidateScenario {
    Vertex x = 0;
    Vertex pivot = -1;
    std::size_t j = 0;

    bool all_lo() const noexcept { return pivot < 0; }
    friend bool operator==(const CandidateScenario&, const CandidateScenario&) = default;
};

struct RegretReport {
    Vertex vertex = 0;
    Time max_regret = 0;
    CandidateScenario worst;
    Vertex witness_center = 0;
};

/// Side times under the all-hi and all-lo scenarios, slot-aligned with the
/// tree's adjacency, plus each vertex's neighbor slots in connection order.
struct ExtremeTables {
    std::uint64_t fingerprint = 0;
    Weight rho = 0;
    std::vector<Time> hang_plus;   ///< btime^{s+}(u, B<u,v>) at the slot of u in v's list
    std::vector<Time> hang_minus;
    std::vector<Time> total_plus;
    std::vector<Time> total_minus;
    std::vector<std::uint32_t> order_plus;   ///< per vertex, slots sorted by s+ key
    std::vector<std::uint32_t> order_minus;  ///< per vertex, slots sorted by s- key

    void check(const Tree& t, Weight r) const {
        if (t.fingerprint() != fingerprint || r != rho || hang_plus.size() != t.slot_count()) {
            throw Error(Errc::StaleTables, "tables were built for a different tree or rho");
        }
    }

    Time key_plus(const Tree& t, std::size_t slot) const {
        return t.interval(t.slot(slot).edge).hi + hang_plus[slot];
    }
    Time key_minus(const Tree& t, std::size_t slot) const {
        return t.interval(t.slot(slot).edge).lo + hang_minus[slot];
    }
};

inline ExtremeTables preprocess_extremes(const Tree& t, Weight rho) {
    ExtremeTables tb;
    tb.fingerprint = t.fingerprint();
    tb.rho = rho;
    auto hi = btime_sides(t, Scenario::hi(t), rho);
    auto lo = btime_sides(t, Scenario::lo(t), rho);
    tb.hang_plus = std::move(hi.hang);
    tb.total_plus = std::move(hi.total);
    tb.hang_minus = std::move(lo.hang);
    tb.total_minus = std::move(lo.total);

    auto fill = [&](std::vector<std::uint32_t>& order, bool plus) {
        order.resize(t.slot_count());
        for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) {
            auto b = t.adjacency_offset(v), e = b + t.degree(v);
            std::iota(order.begin() + b, order.begin() + e, static_cast<std::uint32_t>(b));
            std::sort(order.begin() + b, order.begin() + e, [&](std::uint32_t a, std::uint32_t c) {
                NeighborKey ka{t.slot(a).to, plus ? tb.key_plus(t, a) : tb.key_minus(t, a)};
                NeighborKey kc{t.slot(c).to, plus ? tb.key_plus(t, c) : tb.key_minus(t, c)};
                return key_before(ka, kc);
            });
        }
    };
    fill(tb.order_plus, true);
    fill(tb.order_minus, false);
    return tb;
}

inline Time relative_regret(const Tree& t, const Scenario& s, Weight rho, Vertex x, Vertex y) {
    t.check_vertex(x);
    t.check_vertex(y);
    if (x == y) return 0;
    auto all = btime_all(t, s, rho);
    return all[x] - all[y];
}

/// hi on the x-pivot path and on B<pivot, x>, lo elsewhere.
inline Scenario alpha_scenario(const Tree& t, Vertex x, Vertex pivot) {
    t.check_vertex(x);
    t.check_vertex(pivot);
    if (x == pivot) throw Error(Errc::SameVertex, "pivot equals query vertex");
    auto s = Scenario::lo(t);
    auto r = root_at(t, x);
    for (Vertex u = pivot; u != x; u = r.parent[u]) s.set(r.parent_edge[u], t.interval(r.parent_edge[u]).hi);
    // edges below the pivot: every vertex whose root path passes through it
    std::vector<char> below(t.size(), 0);
    below[pivot] = 1;
    for (Vertex u : r.order) {
        if (u != pivot && r.parent[u] >= 0 && below[r.parent[u]]) {
            below[u] = 1;
            s.set(r.parent_edge[u], t.interval(r.parent_edge[u]).hi);
        }
    }
    return s;
}

/// Children of pivot (hung from x) in connection order under the base scenario.
inline std::vector<NeighborKey> pivot_children(const Tree& t, Weight rho, Vertex x, Vertex pivot) {
    auto alpha = alpha_scenario(t, x, pivot);
    auto r = root_at(t, x);
    return neighbor_keys(t, alpha, rho, pivot, r.parent[pivot]);
}

namespace detail {

inline void reset_subtree_lo(const Tree& t, Scenario& s, Vertex child, Vertex parent) {
    std::vector<Vertex> stack{child};
    std::vector<Vertex> from{parent};
    s.set(*t.edge_between(child, parent), t.interval(*t.edge_between(child, parent)).lo);
    while (!stack.empty()) {
        Vertex u = stack.back();
        Vertex p = from.back();
        stack.pop_back();
        from.pop_back();
        for (const auto& inc : t.neighbors(u)) {
            if (inc.to == p) continue;
            s.set(inc.edge, t.interval(inc.edge).lo);
            stack.push_back(inc.to);
            from.push_back(u);
        }
    }
}

} // namespace detail

/// Base scenario with the subtrees of children j+1..h (and their edges) reset to lo.
inline Scenario beta_scenario(const Tree& t, Weight rho, Vertex x, Vertex pivot, std::size_t j) {
    auto kids = pivot_children(t, rho, x, pivot);
    if (j < 1 || j > kids.size()) {
        throw Error(Errc::IndexOutOfRange, "j=" + std::to_string(j) + " with " +
                                               std::to_string(kids.size()) + " children");
    }
    auto s = alpha_scenario(t, x, pivot);
    for (std::size_t k = j; k < kids.size(); ++k) detail::reset_subtree_lo(t, s, kids[k].vertex, pivot);
    return s;
}

inline Scenario materialize(const Tree& t, Weight rho, const CandidateScenario& c) {
    if (c.all_lo()) return Scenario::lo(t);
    return beta_scenario(t, rho, c.x, c.pivot, c.j);
}

/// Evaluates every candidate scenario in full: for each pivot and j the
/// scenario is built and all broadcast times recomputed.
inline RegretReport max_regret_naive(const Tree& t, Weight rho, Vertex x) {
    t.check_vertex(x);
    RegretReport best{x, std::numeric_limits<Time>::min(), {x, -1, 0}, x};
    auto r = root_at(t, x);
    auto consider = [&](const Scenario& s, Vertex pivot, std::size_t j) {
        auto all = btime_all(t, s, rho);
        auto it = std::min_element(all.begin(), all.end());
        Time reg = all[x] - *it;
        if (reg > best.max_regret) {
            best.max_regret = reg;
            best.worst = {x, pivot, j};
            best.witness_center = static_cast<Vertex>(it - all.begin());
        }
    };
    std::vector<Vertex> pivots(r.order.begin(), r.order.end());
    std::sort(pivots.begin(), pivots.end());
    for (Vertex v : pivots) {
        if (v == x) continue;
        auto alpha = alpha_scenario(t, x, v);
        auto kids = neighbor_keys(t, alpha, rho, v, r.parent[v]);
        if (kids.empty()) continue;
        // build beta^j for j = 1..h, each from scratch off alpha
        for (std::size_t j = 1; j <= kids.size(); ++j) {
            auto s = alpha;
            for (std::size_t k = j; k < kids.size(); ++k) detail::reset_subtree_lo(t, s, kids[k].vertex, v);
            consider(s, v, j);
        }
    }
    consider(Scenario::lo(t), -1, 0);
    return best;
}

namespace detail {

struct QueryFrame {
    RootedTree r;
    std::vector<Time> path_hi;   ///< sum of hi weights from x
    std::vector<Time> outside;   ///< btime of parent(v) over B<parent(v), v> under the base scenario at v
};

/// For each v != x, the time the parent of v needs to cover everything outside
/// v's subtree when the x-to-parent path is heavy and all else light.
inline QueryFrame query_frame(const Tree& t, Weight rho, Vertex x, const ExtremeTables& tb) {
    QueryFrame q;
    q.r = root_at(t, x);
    const auto n = t.size();
    q.path_hi.assign(n, 0);
    q.outside.assign(n, 0);
    std::vector<NeighborKey> keys;
    std::vector<Vertex> owner;
    for (Vertex p : q.r.order) {
        const Vertex pp = q.r.parent[p];
        if (pp >= 0) q.path_hi[p] = q.path_hi[pp] + t.interval(q.r.parent_edge[p]).hi;
        keys.clear();
        auto b = t.adjacency_offset(p), e = b + t.degree(p);
        Time up_key = 0;
        if (pp >= 0) up_key = t.interval(q.r.parent_edge[p]).hi + q.outside[p];
        bool placed = pp < 0;
        for (auto i = b; i < e; ++i) {
            auto slot = tb.order_minus[i];
            Vertex c = t.slot(slot).to;
            if (c == pp) continue;
            NeighborKey k{c, tb.key_minus(t, slot)};
            if (!placed && key_before(NeighborKey{pp, up_key}, k)) {
                keys.push_back({pp, up_key});
                placed = true;
            }
            keys.push_back(k);
        }
        if (!placed) keys.push_back({pp, up_key});
        auto ex = exclusion_times(keys, rho);
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (keys[i].vertex != pp) q.outside[keys[i].vertex] = ex[i];
        }
    }
    return q;
}

struct PivotLists {
    std::vector<Vertex> kids;
    std::vector<Time> plus, minus;
};

inline PivotLists pivot_lists(const Tree& t, const ExtremeTables& tb, Vertex v, Vertex parent) {
    PivotLists l;
    auto b = t.adjacency_offset(v), e = b + t.degree(v);
    for (auto i = b; i < e; ++i) {
        auto slot = tb.order_plus[i];
        Vertex c = t.slot(slot).to;
        if (c == parent) continue;
        l.kids.push_back(c);
        l.plus.push_back(tb.key_plus(t, slot));
        l.minus.push_back(tb.key_minus(t, slot));
    }
    return l;
}

} // namespace detail

/// The objective d*rho + heavy path weight + btime(pivot, B<pivot,x>) - btime(pivot, T)
/// for one candidate, evaluated by sorting the pivot's keys directly.
inline Time candidate_objective(const Tree& t, Weight rho, Vertex x, Vertex pivot, std::size_t j,
                                const ExtremeTables& tb) {
    tb.check(t, rho);
    t.check_vertex(x);
    t.check_vertex(pivot);
    if (x == pivot) throw Error(Errc::SameVertex, "pivot equals query vertex");
    auto r = root_at(t, x);
    auto lists = detail::pivot_lists(t, tb, pivot, r.parent[pivot]);
    if (j < 1 || j > lists.kids.size()) {
        throw Error(Errc::IndexOutOfRange, "j=" + std::to_string(j) + " with " +
                                               std::to_string(lists.kids.size()) + " children");
    }
    auto beta = beta_scenario(t, rho, x, pivot, j);
    std::vector<NeighborKey> keys;
    for (std::size_t k = 0; k < lists.kids.size(); ++k) {
        keys.push_back({lists.kids[k], k < j ? lists.plus[k] : lists.minus[k]});
    }
    sort_keys(keys);
    Time inside = time_of_sorted(keys, rho);
    Vertex mu = r.parent[pivot];
    EdgeId up = r.parent_edge[pivot];
    keys.push_back({mu, beta[up] + btime(t, beta, rho, mu, pivot)});
    sort_keys(keys);
    Time whole = time_of_sorted(keys, rho);
    Time path = 0;
    for (Vertex u = pivot; u != x; u = r.parent[u]) path += beta[r.parent_edge[u]];
    return static_cast<Time>(r.depth[pivot]) * rho + path + inside - whole;
}

/// Worst-case regret of x from the precomputed extreme tables. For each pivot
/// the inside and whole-tree times over all j come from two runs of the
/// bucket-chain evolution.
inline RegretReport max_regret_fast(const Tree& t, Weight rho, Vertex x, const ExtremeTables& tb,
                                    const ChainHooks* hooks = nullptr) {
    tb.check(t, rho);
    t.check_vertex(x);
    auto lo_min = std::min_element(tb.total_minus.begin(), tb.total_minus.end());
    RegretReport rep{x, tb.total_minus[x] - *lo_min, {x, -1, 0},
                     static_cast<Vertex>(lo_min - tb.total_minus.begin())};
    if (rep.max_regret == 0) rep.witness_center = x;
    if (t.size() == 1) return rep;

    auto q = detail::query_frame(t, rho, x, tb);
    Time best = std::numeric_limits<Time>::min();
    CandidateScenario arg{x, -1, 0};
    std::vector<Time> ext_plus, ext_minus;
    for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) {
        if (v == x) continue;
        const Vertex mu = q.r.parent[v];
        auto l = detail::pivot_lists(t, tb, v, mu);
        const std::size_t h = l.kids.size();
        if (h == 0) continue;
        auto inside = evolve_times(l.plus, l.minus, rho, hooks);

        const Time K = t.interval(q.r.parent_edge[v]).hi + q.outside[v];
        const std::size_t pos = static_cast<std::size_t>(
            std::upper_bound(l.plus.begin(), l.plus.end(), K, std::greater<>()) - l.plus.begin());
        ext_plus.assign(l.plus.begin(), l.plus.end());
        ext_minus.assign(l.minus.begin(), l.minus.end());
        ext_plus.insert(ext_plus.begin() + static_cast<std::ptrdiff_t>(pos), K);
        ext_minus.insert(ext_minus.begin() + static_cast<std::ptrdiff_t>(pos), K);
        auto whole = evolve_times(ext_plus, ext_minus, rho, hooks);

        const Time base = static_cast<Time>(q.r.depth[v]) * rho + q.path_hi[v];
        for (std::size_t j = 1; j <= h; ++j) {
            Time obj = base + inside[j] - whole[j <= pos ? j : j + 1];
            if (obj > best) {
                best = obj;
                arg = {x, v, j};
            }
        }
    }
    if (best >= rep.max_regret && arg.pivot >= 0) {
        rep.max_regret = best;
        rep.worst = arg;
        rep.witness_center = arg.pivot;
    }
    return rep;
}

} // namespace mbr
