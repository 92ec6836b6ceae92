#pragma once

#include "mbr/tree.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mbr {

/// Concrete edge weights, indexed by edge id.
class Scenario {
public:
    Scenario() = default;

    /// Validates every weight against its edge interval.
    static Scenario make(const Tree& t, std::vector<Weight> weights) {
        if (weights.size() != t.edge_count()) {
            throw Error(Errc::BadScenario, "expected " + std::to_string(t.edge_count()) +
                                               " weights, got " + std::to_string(weights.size()));
        }
        for (std::size_t e = 0; e < weights.size(); ++e) {
            if (!t.edges()[e].w.contains(weights[e])) {
                throw Error(Errc::BadScenario, "weight " + std::to_string(weights[e]) +
                                                   " outside interval of edge " + std::to_string(e));
            }
        }
        Scenario s;
        s.w_ = std::move(weights);
        return s;
    }

    static Scenario lo(const Tree& t) {
        Scenario s;
        for (const auto& e : t.edges()) s.w_.push_back(e.w.lo);
        return s;
    }
    static Scenario hi(const Tree& t) {
        Scenario s;
        for (const auto& e : t.edges()) s.w_.push_back(e.w.hi);
        return s;
    }

    Weight operator[](EdgeId e) const { return w_[static_cast<std::size_t>(e)]; }
    std::span<const Weight> weights() const noexcept { return w_; }
    std::size_t size() const noexcept { return w_.size(); }

    /// Unchecked write for internal scenario builders; values must stay in range.
    void set(EdgeId e, Weight w) { w_[static_cast<std::size_t>(e)] = w; }

    friend bool operator==(const Scenario&, const Scenario&) = default;

private:
    std::vector<Weight> w_;
};

struct NeighborKey {
    Vertex vertex = 0;
    Time key = 0;

    friend bool operator==(const NeighborKey&, const NeighborKey&) = default;
};

/// Connection order: larger key first, lower vertex id on ties.
inline bool key_before(const NeighborKey& a, const NeighborKey& b) noexcept {
    return a.key != b.key ? a.key > b.key : a.vertex < b.vertex;
}

inline void sort_keys(std::vector<NeighborKey>& keys) {
    std::sort(keys.begin(), keys.end(), key_before);
}

/// max_k (k*rho + key_k) over keys already in connection order; 0 if empty.
inline Time time_of_sorted(std::span<const NeighborKey> keys, Weight rho) noexcept {
    Time best = 0;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        best = std::max(best, static_cast<Time>(k + 1) * rho + keys[k].key);
    }
    return best;
}

/// rho-wide histogram of neighbor keys. Buckets are 1-based.
struct BucketArray {
    Weight width = 0;
    Time anchor = 0;
    std::size_t h = 0;
    std::vector<std::vector<Vertex>> buckets;  ///< index 0 unused
    std::vector<Time> min_v;                   ///< meaningful only for nonempty buckets
    std::vector<std::size_t> acc;              ///< acc[0] = 0
    std::vector<Vertex> excluded;              ///< keys too small to land in any bucket

    bool empty(std::size_t l) const { return buckets[l].empty(); }
};

/// Bucket index of `key` for the given anchor, or 0 if it falls past bucket h.
inline std::size_t bucket_of(Time anchor, Time key, Weight rho, std::size_t h) noexcept {
    auto diff = static_cast<std::uint64_t>(anchor - key);
    auto l = diff / static_cast<std::uint64_t>(rho) + 1;
    return l <= h ? static_cast<std::size_t>(l) : 0;
}

inline BucketArray bucket_build(std::vector<NeighborKey> keys, Weight rho) {
    if (rho == 0) throw Error(Errc::ZeroRho, "bucket width must be positive");
    if (keys.empty()) throw Error(Errc::IndexOutOfRange, "bucket array over no keys");
    sort_keys(keys);
    BucketArray b;
    b.width = rho;
    b.anchor = keys.front().key;
    b.h = keys.size();
    b.buckets.resize(b.h + 1);
    b.min_v.assign(b.h + 1, std::numeric_limits<Time>::max());
    b.acc.assign(b.h + 1, 0);
    for (const auto& k : keys) {
        auto l = bucket_of(b.anchor, k.key, rho, b.h);
        if (l == 0) {
            b.excluded.push_back(k.vertex);
            continue;
        }
        b.buckets[l].push_back(k.vertex);
        b.min_v[l] = std::min(b.min_v[l], k.key);
    }
    for (std::size_t l = 1; l <= b.h; ++l) b.acc[l] = b.acc[l - 1] + b.buckets[l].size();
    return b;
}

inline Time btime_from_buckets(const BucketArray& b) {
    Time best = 0;
    for (std::size_t l = 1; l <= b.h; ++l) {
        if (!b.empty(l)) best = std::max(best, b.min_v[l] + static_cast<Time>(b.acc[l]) * b.width);
    }
    return best;
}

/// For keys in connection order, the time of the list with element e removed,
/// for every e. Bucket-based for rho > 0 (prefix/suffix maxima over buckets plus
/// the second-smallest key of each bucket); top-two maximum for rho = 0.
inline std::vector<Time> exclusion_times(std::span<const NeighborKey> keys, Weight rho) {
    const std::size_t h = keys.size();
    std::vector<Time> out(h, 0);
    if (h <= 1) return out;
    if (rho == 0) {
        for (std::size_t e = 0; e < h; ++e) out[e] = e == 0 ? keys[1].key : keys[0].key;
        return out;
    }

    const Time anchor = keys[0].key;
    std::vector<std::size_t> where(h);
    std::vector<std::size_t> acc(h + 2, 0);
    std::vector<Time> min_v(h + 2, 0);
    for (std::size_t i = 0; i < h; ++i) {
        where[i] = bucket_of(anchor, keys[i].key, rho, h);
        if (where[i]) {
            ++acc[where[i]];
            min_v[where[i]] = keys[i].key;  // sorted, so the last member is the minimum
        }
    }
    for (std::size_t l = 1; l <= h; ++l) acc[l] += acc[l - 1];
    auto val = [&](std::size_t l) { return min_v[l] + static_cast<Time>(acc[l]) * rho; };
    auto nonempty = [&](std::size_t l) { return acc[l] != acc[l - 1]; };

    constexpr Time none = std::numeric_limits<Time>::min();
    std::vector<Time> pre(h + 2, none), post(h + 2, none);
    for (std::size_t l = 1; l <= h; ++l) pre[l] = std::max(pre[l - 1], nonempty(l) ? val(l) : none);
    for (std::size_t l = h; l >= 1; --l) post[l] = std::max(post[l + 1], nonempty(l) ? val(l) : none);

    {
        Time best = 0;
        for (std::size_t i = 1; i < h; ++i) best = std::max(best, static_cast<Time>(i) * rho + keys[i].key);
        out[0] = best;
    }
    for (std::size_t e = 1; e < h; ++e) {
        std::size_t z = where[e];
        if (z == 0) {
            out[e] = pre[h];
            continue;
        }
        Time best = std::max<Time>(0, pre[z - 1]);
        std::size_t last = acc[z] - 1;  // position of the bucket minimum
        if (acc[z] - acc[z - 1] > 1) {
            Time m = e == last ? keys[last - 1].key : min_v[z];
            best = std::max(best, m + static_cast<Time>(acc[z] - 1) * rho);
        }
        if (post[z + 1] != none) best = std::max(best, post[z + 1] - rho);
        out[e] = best;
    }
    return out;
}

/// Connection-ordered keys of v's neighbors inside the region
/// (all of T, or B<v, excluded> when `excluded` is given).
inline std::vector<NeighborKey> neighbor_keys(const Tree& t, const Scenario& s, Weight rho, Vertex v,
                                              std::optional<Vertex> excluded = std::nullopt) {
    t.check_vertex(v);
    if (excluded) {
        t.check_vertex(*excluded);
        if (!t.edge_between(v, *excluded)) {
            throw Error(Errc::NotNeighbor,
                        std::to_string(*excluded) + " is not adjacent to " + std::to_string(v));
        }
    }
    const Vertex block = excluded.value_or(-1);

    std::vector<Vertex> order{v};
    std::vector<Vertex> par(t.size(), -1);
    std::vector<EdgeId> pedge(t.size(), -1);
    par[v] = block;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex u = order[i];
        for (const auto& inc : t.neighbors(u)) {
            if (inc.to == par[u]) continue;
            par[inc.to] = u;
            pedge[inc.to] = inc.edge;
            order.push_back(inc.to);
        }
    }
    std::vector<Time> down(t.size(), 0);
    std::vector<NeighborKey> keys;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex u = *it;
        keys.clear();
        for (const auto& inc : t.neighbors(u)) {
            if (inc.to == par[u]) continue;
            keys.push_back({inc.to, s[inc.edge] + down[inc.to]});
        }
        sort_keys(keys);
        down[u] = time_of_sorted(keys, rho);
    }
    return keys;  // the last vertex processed is v
}

inline Time btime(const Tree& t, const Scenario& s, Weight rho, Vertex v,
                  std::optional<Vertex> excluded = std::nullopt) {
    auto keys = neighbor_keys(t, s, rho, v, excluded);
    return time_of_sorted(keys, rho);
}

/// Broadcast times of every vertex plus the time of each side of every edge.
///
/// hang[slot] for the slot of u in v's adjacency is btime(u, B<u,v>): the time
/// u needs to cover its own side of the edge (u,v).
struct SideTimes {
    std::vector<Time> total;
    std::vector<Time> hang;

    Time side(const Tree& t, Vertex u, Vertex away_from) const {
        auto s = t.slot_of(away_from, u);
        if (!s) throw Error(Errc::NotNeighbor, std::to_string(u) + " is not adjacent to " + std::to_string(away_from));
        return hang[*s];
    }
};

/// All-vertex broadcast times by rerooting: subtree times bottom-up from
/// vertex 0, then each child's complement time from its parent's key list
/// with that child removed.
inline SideTimes btime_sides(const Tree& t, const Scenario& s, Weight rho) {
    const auto n = t.size();
    auto r = root_at(t, 0);
    SideTimes out;
    out.total.assign(n, 0);
    out.hang.assign(t.slot_count(), 0);
    std::vector<Time> down(n, 0), up(n, 0);
    std::vector<NeighborKey> keys;

    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        Vertex u = *it;
        keys.clear();
        for (const auto& inc : t.neighbors(u)) {
            if (inc.to == r.parent[u]) continue;
            keys.push_back({inc.to, s[inc.edge] + down[inc.to]});
        }
        sort_keys(keys);
        down[u] = time_of_sorted(keys, rho);
    }
    for (Vertex u : r.order) {
        keys.clear();
        std::size_t base = t.adjacency_offset(u);
        auto nb = t.neighbors(u);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            Vertex c = nb[k].to;
            Time side = c == r.parent[u] ? up[u] : down[c];
            out.hang[base + k] = side;
            keys.push_back({c, s[nb[k].edge] + side});
        }
        sort_keys(keys);
        out.total[u] = time_of_sorted(keys, rho);
        auto ex = exclusion_times(keys, rho);
        for (std::size_t i = 0; i < keys.size(); ++i) {
            Vertex c = keys[i].vertex;
            if (c != r.parent[u]) up[c] = ex[i];
        }
    }
    return out;
}

inline std::vector<Time> btime_all(const Tree& t, const Scenario& s, Weight rho) {
    return btime_sides(t, s, rho).total;
}

namespace detail {

inline std::vector<Vertex> argmin_set(const std::vector<Time>& total) {
    Time m = *std::min_element(total.begin(), total.end());
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < total.size(); ++v) {
        if (total[v] == m) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

/// Center of the star induced by `set`, or -1 if the set does not induce a star.
/// For one or two vertices the lowest id is returned.
inline Vertex star_center(const Tree& t, const std::vector<Vertex>& set) {
    if (set.size() <= 2) {
        if (set.size() == 2 && !t.edge_between(set[0], set[1])) return -1;
        return set.front();
    }
    for (Vertex c : set) {
        bool all = true;
        for (Vertex o : set) {
            if (o != c && !t.edge_between(c, o)) {
                all = false;
                break;
            }
        }
        if (all) return c;
    }
    return -1;
}

} // namespace detail

inline std::vector<Vertex> broadcast_centers(const Tree& t, const Scenario& s, Weight rho) {
    auto set = detail::argmin_set(btime_all(t, s, rho));
    if (detail::star_center(t, set) < 0) {
        throw Error(Errc::InvariantViolation, "broadcast centers do not induce a star");
    }
    return set;
}

/// Walks from the star center of the broadcast centers toward any neighbor
/// whose side outlasts the current vertex's side, lowest id first.
inline Vertex prime_broadcast_center(const Tree& t, const Scenario& s, Weight rho) {
    auto st = btime_sides(t, s, rho);
    auto set = detail::argmin_set(st.total);
    Vertex k = detail::star_center(t, set);
    if (k < 0) throw Error(Errc::InvariantViolation, "broadcast centers do not induce a star");
    for (std::size_t step = 0; step <= t.size(); ++step) {
        Vertex next = -1;
        std::size_t base = t.adjacency_offset(k);
        auto nb = t.neighbors(k);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            Time far = st.hang[base + i];
            Time own = st.side(t, k, nb[i].to);
            if (own < far) {
                next = nb[i].to;
                break;
            }
        }
        if (next < 0) return k;
        k = next;
    }
    throw Error(Errc::InvariantViolation, "prime center walk did not terminate");
}

struct Schedule {
    Vertex sender = 0;
    std::vector<Vertex> parent;           ///< -1 for the sender
    std::vector<std::int32_t> connect_rank;  ///< 1-based position in parent's order; 0 for the sender
    std::vector<Time> arrival;

    Time makespan() const { return *std::max_element(arrival.begin(), arrival.end()); }
};

inline Schedule optimal_schedule(const Tree& t, const Scenario& s, Weight rho, Vertex v) {
    auto r = root_at(t, v);
    const auto n = t.size();
    std::vector<Time> down(n, 0);
    std::vector<std::vector<NeighborKey>> kids(n);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        Vertex u = *it;
        for (const auto& inc : t.neighbors(u)) {
            if (inc.to == r.parent[u]) continue;
            kids[u].push_back({inc.to, s[inc.edge] + down[inc.to]});
        }
        sort_keys(kids[u]);
        down[u] = time_of_sorted(kids[u], rho);
    }
    Schedule sc;
    sc.sender = v;
    sc.parent = r.parent;
    sc.connect_rank.assign(n, 0);
    sc.arrival.assign(n, 0);
    for (Vertex u : r.order) {
        for (std::size_t k = 0; k < kids[u].size(); ++k) {
            Vertex c = kids[u][k].vertex;
            sc.connect_rank[c] = static_cast<std::int32_t>(k + 1);
            sc.arrival[c] = sc.arrival[u] + static_cast<Time>(k + 1) * rho + s[r.parent_edge[c]];
        }
    }
    return sc;
}

} // namespace mbr
