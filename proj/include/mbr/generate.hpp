#pragma once

#include "mbr/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <string>
#include <vector>

namespace mbr {

enum class Shape { random, path, star, caterpillar };

inline Shape parse_shape(const std::string& s) {
    if (s == "random") return Shape::random;
    if (s == "path") return Shape::path;
    if (s == "star") return Shape::star;
    if (s == "caterpillar") return Shape::caterpillar;
    throw Error(Errc::Parse, "unknown shape '" + s + "'");
}

/// Uniform integer in [lo, hi] by rejection, so results do not depend on the
/// standard library's distribution implementation.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

struct GenConfig {
    std::size_t n = 1;
    Weight wmin = 0;
    Weight wmax = 9;
    Shape shape = Shape::random;
};

inline std::vector<std::pair<Vertex, Vertex>> tree_skeleton(std::size_t n, Shape shape, std::mt19937_64& rng) {
    std::vector<std::pair<Vertex, Vertex>> e;
    if (n <= 1) return e;
    auto V = [](std::size_t i) { return static_cast<Vertex>(i); };
    switch (shape) {
    case Shape::path:
        for (std::size_t i = 1; i < n; ++i) e.emplace_back(V(i - 1), V(i));
        break;
    case Shape::star:
        for (std::size_t i = 1; i < n; ++i) e.emplace_back(0, V(i));
        break;
    case Shape::caterpillar: {
        std::size_t spine = (n + 1) / 2;
        for (std::size_t i = 1; i < spine; ++i) e.emplace_back(V(i - 1), V(i));
        for (std::size_t i = spine; i < n; ++i) e.emplace_back(V((i - spine) % spine), V(i));
        break;
    }
    case Shape::random: {
        if (n == 2) {
            e.emplace_back(0, 1);
            break;
        }
        std::vector<Vertex> code(n - 2);
        for (auto& c : code) c = static_cast<Vertex>(draw(rng, 0, static_cast<std::int64_t>(n) - 1));
        std::vector<std::size_t> deg(n, 1);
        for (Vertex c : code) ++deg[c];
        std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
        for (std::size_t v = 0; v < n; ++v) {
            if (deg[v] == 1) leaves.push(V(v));
        }
        for (Vertex c : code) {
            Vertex leaf = leaves.top();
            leaves.pop();
            e.emplace_back(std::min(leaf, c), std::max(leaf, c));
            if (--deg[c] == 1) leaves.push(c);
        }
        Vertex a = leaves.top();
        leaves.pop();
        Vertex b = leaves.top();
        e.emplace_back(std::min(a, b), std::max(a, b));
        break;
    }
    }
    return e;
}

/// Random instance; every interval is the sorted pair of two draws from [wmin, wmax].
inline std::vector<EdgeSpec> generate_edges(const GenConfig& cfg, std::mt19937_64& rng) {
    if (cfg.n == 0) throw Error(Errc::BadRange, "n must be at least 1");
    if (cfg.wmin < 0 || cfg.wmin > cfg.wmax) {
        throw Error(Errc::BadRange, "weight range [" + std::to_string(cfg.wmin) + "," +
                                        std::to_string(cfg.wmax) + "]");
    }
    std::vector<EdgeSpec> out;
    for (auto [u, v] : tree_skeleton(cfg.n, cfg.shape, rng)) {
        Weight a = draw(rng, cfg.wmin, cfg.wmax);
        Weight b = draw(rng, cfg.wmin, cfg.wmax);
        out.push_back({u, v, std::min(a, b), std::max(a, b)});
    }
    return out;
}

inline Tree generate_tree(const GenConfig& cfg, std::mt19937_64& rng) {
    return Tree::build(cfg.n, generate_edges(cfg, rng));
}

} // namespace mbr
