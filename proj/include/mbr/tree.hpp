#pragma once

#include "mbr/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mbr {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
/// Exact edge weight / time value. All arithmetic in the library is integral.
using Weight = std::int64_t;
using Time = std::int64_t;

struct WeightInterval {
    Weight lo = 0;
    Weight hi = 0;

    bool contains(Weight w) const noexcept { return lo <= w && w <= hi; }
    friend bool operator==(const WeightInterval&, const WeightInterval&) = default;
};

/// One line of an edge list: endpoints plus the interval bounds.
struct EdgeSpec {
    Vertex u = 0;
    Vertex v = 0;
    Weight lo = 0;
    Weight hi = 0;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    WeightInterval w;

    Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
};

/// Adjacency entry: the neighbor and the id of the connecting edge.
struct Incidence {
    Vertex to = 0;
    EdgeId edge = 0;
};

/// Immutable tree with interval edge weights.
///
/// Vertices are 0..n-1 and edges keep their input order as ids 0..n-2.
/// Adjacency is stored in CSR form; each vertex's neighbors are sorted by id,
/// so a neighbor can also be addressed by its slot `adjacency_offset(v) + k`.
class Tree {
public:
    Tree() : Tree(1, {}) {}

    /// Validates and builds. Vertex count is explicit so a single vertex
    /// (no edges) is representable.
    static Tree build(std::size_t n, std::span<const EdgeSpec> edges) { return Tree(n, edges); }

    /// Vertex count inferred as max id + 1 (1 for an empty list).
    static Tree build(std::span<const EdgeSpec> edges) {
        Vertex hi = 0;
        for (const auto& e : edges) hi = std::max({hi, e.u, e.v});
        return Tree(static_cast<std::size_t>(hi) + 1, edges);
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const WeightInterval& interval(EdgeId e) const { return edge(e).w; }

    std::span<const Incidence> neighbors(Vertex v) const {
        check_vertex(v);
        return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    std::size_t adjacency_offset(Vertex v) const {
        check_vertex(v);
        return offset_[v];
    }
    /// Total number of adjacency slots (2 * edge_count()).
    std::size_t slot_count() const noexcept { return adj_.size(); }
    const Incidence& slot(std::size_t s) const { return adj_.at(s); }

    /// Slot of `u` inside the adjacency list of `v`, if they are adjacent.
    std::optional<std::size_t> slot_of(Vertex v, Vertex u) const {
        auto nb = neighbors(v);
        auto it = std::lower_bound(nb.begin(), nb.end(), u,
                                   [](const Incidence& a, Vertex b) { return a.to < b; });
        if (it == nb.end() || it->to != u) return std::nullopt;
        return offset_[v] + static_cast<std::size_t>(it - nb.begin());
    }

    std::optional<EdgeId> edge_between(Vertex u, Vertex v) const {
        auto s = slot_of(u, v);
        if (!s) return std::nullopt;
        return adj_[*s].edge;
    }

    bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < n_; }

    void check_vertex(Vertex v) const {
        if (!contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
    }

    /// Order-sensitive hash of the structure and intervals.
    std::uint64_t fingerprint() const noexcept {
        std::uint64_t h = 1469598103934665603ULL ^ n_;
        auto mix = [&h](std::uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        for (const auto& e : edges_) {
            mix(static_cast<std::uint64_t>(e.u));
            mix(static_cast<std::uint64_t>(e.v));
            mix(static_cast<std::uint64_t>(e.w.lo));
            mix(static_cast<std::uint64_t>(e.w.hi));
        }
        return h;
    }

private:
    Tree(std::size_t n, std::span<const EdgeSpec> specs) : n_(n) {
        if (n == 0) throw Error(Errc::Disconnected, "tree needs at least one vertex");
        if (specs.size() >= n) throw Error(Errc::CycleDetected, "more than n-1 edges");

        std::vector<Vertex> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](Vertex a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        std::vector<std::pair<Vertex, Vertex>> seen;
        seen.reserve(specs.size());
        edges_.reserve(specs.size());
        for (const auto& s : specs) {
            check_vertex(s.u);
            check_vertex(s.v);
            if (s.lo < 0 || s.hi < 0 || s.lo > s.hi) {
                throw Error(Errc::BadInterval, "[" + std::to_string(s.lo) + "," +
                                                   std::to_string(s.hi) + "] on edge " +
                                                   std::to_string(s.u) + "-" + std::to_string(s.v));
            }
            if (s.u == s.v) throw Error(Errc::CycleDetected, "self-loop at " + std::to_string(s.u));
            seen.emplace_back(std::min(s.u, s.v), std::max(s.u, s.v));
            edges_.push_back({s.u, s.v, {s.lo, s.hi}});
        }
        auto sorted = seen;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error(Errc::DuplicateEdge, "parallel edges");
        }
        for (const auto& [a, b] : seen) {
            Vertex ra = find(a), rb = find(b);
            if (ra == rb) {
                throw Error(Errc::CycleDetected,
                            "edge " + std::to_string(a) + "-" + std::to_string(b) + " closes a cycle");
            }
            parent[ra] = rb;
        }
        if (edges_.size() + 1 != n) throw Error(Errc::Disconnected, "fewer than n-1 edges");

        offset_.assign(n + 1, 0);
        for (const auto& e : edges_) {
            ++offset_[e.u + 1];
            ++offset_[e.v + 1];
        }
        std::partial_sum(offset_.begin(), offset_.end(), offset_.begin());
        adj_.resize(2 * edges_.size());
        std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
        for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
            const auto& e = edges_[id];
            adj_[fill[e.u]++] = {e.v, id};
            adj_[fill[e.v]++] = {e.u, id};
        }
        for (std::size_t v = 0; v < n; ++v) {
            std::sort(adj_.begin() + offset_[v], adj_.begin() + offset_[v + 1],
                      [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
        }
    }

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offset_;
    std::vector<Incidence> adj_;
};

/// A tree hung from `root`: BFS order, parents, parent edges, depths.
/// Traversals are iterative so depth is unbounded.
struct RootedTree {
    Vertex root = 0;
    std::vector<Vertex> order;        ///< BFS order, root first
    std::vector<Vertex> parent;       ///< -1 for the root
    std::vector<EdgeId> parent_edge;  ///< -1 for the root
    std::vector<std::int32_t> depth;

    bool is_child(Vertex c, Vertex p) const { return parent[c] == p; }
};

inline RootedTree root_at(const Tree& t, Vertex root) {
    t.check_vertex(root);
    RootedTree r;
    r.root = root;
    const auto n = t.size();
    r.parent.assign(n, -1);
    r.parent_edge.assign(n, -1);
    r.depth.assign(n, 0);
    r.order.reserve(n);
    r.order.push_back(root);
    for (std::size_t i = 0; i < r.order.size(); ++i) {
        Vertex u = r.order[i];
        for (const auto& inc : t.neighbors(u)) {
            if (inc.to == r.parent[u]) continue;
            r.parent[inc.to] = u;
            r.parent_edge[inc.to] = inc.edge;
            r.depth[inc.to] = r.depth[u] + 1;
            r.order.push_back(inc.to);
        }
    }
    return r;
}

struct PathInfo {
    std::vector<EdgeId> edges;  ///< x to y, in walking order
    std::size_t hops = 0;
};

/// Edges of the unique x-y path.
inline PathInfo path_info(const Tree& t, Vertex x, Vertex y) {
    t.check_vertex(x);
    t.check_vertex(y);
    PathInfo p;
    if (x == y) return p;
    auto r = root_at(t, y);
    for (Vertex u = x; u != y; u = r.parent[u]) p.edges.push_back(r.parent_edge[u]);
    p.hops = p.edges.size();
    return p;
}

/// A vertex set cut out of the tree at one edge.
///
/// With `excluded` set, `members` is the component of `root` after deleting
/// the edge root-excluded. Without it, `members` is the whole vertex set.
struct BranchView {
    Vertex root = 0;
    std::optional<Vertex> excluded;
    std::vector<Vertex> members;  ///< sorted

    bool contains(Vertex v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
};

namespace detail {

inline std::vector<Vertex> component_without_edge(const Tree& t, Vertex start, Vertex blocked) {
    std::vector<Vertex> out{start};
    std::vector<Vertex> from{blocked};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& inc : t.neighbors(out[i])) {
            if (inc.to == from[i]) continue;
            out.push_back(inc.to);
            from.push_back(out[i]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Vertex neighbor_toward(const Tree& t, Vertex from, Vertex toward) {
    auto r = root_at(t, toward);
    return r.parent[from];
}

} // namespace detail

/// Closed branch at `root` with the side of neighbor `excluded` removed.
inline BranchView closed_side(const Tree& t, Vertex root, Vertex excluded) {
    t.check_vertex(root);
    t.check_vertex(excluded);
    if (!t.edge_between(root, excluded)) {
        throw Error(Errc::NotNeighbor, std::to_string(excluded) + " is not adjacent to " +
                                           std::to_string(root));
    }
    return {root, excluded, detail::component_without_edge(t, root, excluded)};
}

/// Open branch: the component of T - root that contains `toward`.
/// Represented as the closed side of root's neighbor on that component.
inline BranchView branch(const Tree& t, Vertex root, Vertex toward) {
    t.check_vertex(root);
    t.check_vertex(toward);
    if (root == toward) throw Error(Errc::SameVertex, "branch root equals target");
    Vertex nb = detail::neighbor_toward(t, root, toward);
    return closed_side(t, nb, root);
}

/// Closed branch: T minus the open branch at `root` toward `toward`.
inline BranchView closed_branch(const Tree& t, Vertex root, Vertex toward) {
    t.check_vertex(root);
    t.check_vertex(toward);
    if (root == toward) throw Error(Errc::SameVertex, "branch root equals target");
    Vertex nb = detail::neighbor_toward(t, root, toward);
    return closed_side(t, root, nb);
}

/// Centroid of the connected vertex subset marked in `in_set`
/// (empty mask = whole tree). Ties go to the lowest id.
inline Vertex centroid(const Tree& t, std::span<const char> in_set = {}) {
    auto member = [&](Vertex v) { return in_set.empty() || in_set[v]; };
    Vertex start = -1;
    std::size_t m = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) {
        if (member(v)) {
            if (start < 0) start = v;
            ++m;
        }
    }
    if (start < 0) throw Error(Errc::IndexOutOfRange, "centroid of an empty set");

    std::vector<Vertex> order{start};
    std::vector<Vertex> par(t.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& inc : t.neighbors(order[i])) {
            if (inc.to == par[order[i]] || !member(inc.to)) continue;
            par[inc.to] = order[i];
            order.push_back(inc.to);
        }
    }
    std::vector<std::size_t> sub(t.size(), 1);
    std::vector<std::size_t> worst(t.size(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex u = *it;
        worst[u] = std::max(worst[u], m - sub[u]);
        if (par[u] >= 0) {
            sub[par[u]] += sub[u];
            worst[par[u]] = std::max(worst[par[u]], sub[u]);
        }
    }
    Vertex best = -1;
    for (Vertex v : order) {
        if (best < 0 || worst[v] < worst[best] || (worst[v] == worst[best] && v < best)) best = v;
    }
    return best;
}

/// Size of the largest open branch at v within the tree.
inline std::size_t largest_open_branch(const Tree& t, Vertex v) {
    std::size_t best = 0;
    for (const auto& inc : t.neighbors(v)) {
        best = std::max(best, detail::component_without_edge(t, inc.to, v).size());
    }
    return best;
}

} // namespace mbr
