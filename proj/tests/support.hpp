#pragma once

#include "mbr/broadcast.hpp"
#include "mbr/generate.hpp"
#include "mbr/succ_chain.hpp"
#include "mbr/tree.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

namespace testing_support {

using namespace mbr;

// Query vertex 0, pivot 2 with children 3, 4, 5.
inline Tree sample_tree() {
    std::vector<EdgeSpec> e{
        {0, 1, 1, 2}, {1, 2, 1, 2}, {2, 3, 0, 7}, {2, 4, 2, 5}, {2, 5, 5, 7},
        {3, 6, 2, 5}, {4, 7, 3, 4}, {4, 8, 1, 6}, {1, 9, 0, 3}, {0, 10, 5, 6},
        {0, 11, 2, 4}, {11, 12, 1, 4}, {11, 13, 2, 3},
    };
    return Tree::build(14, e);
}
constexpr Vertex sample_x = 0;
constexpr Vertex sample_pivot = 2;

inline Tree small_tree() {
    std::vector<EdgeSpec> e{{0, 1, 2, 6}, {1, 2, 1, 4}};
    return Tree::build(e);
}

inline Tree path_tree(std::size_t n, Weight lo, Weight hi) {
    std::vector<EdgeSpec> e;
    for (std::size_t i = 1; i < n; ++i) e.push_back({Vertex(i - 1), Vertex(i), lo, hi});
    return Tree::build(n, e);
}

inline Tree random_tree(std::mt19937_64& rng, std::size_t n, Weight wmax = 9, Shape shape = Shape::random) {
    GenConfig c;
    c.n = n;
    c.wmin = 0;
    c.wmax = wmax;
    c.shape = shape;
    return generate_tree(c, rng);
}

inline Scenario random_extremal(const Tree& t, std::mt19937_64& rng) {
    std::vector<Weight> w;
    for (const auto& e : t.edges()) w.push_back(draw(rng, 0, 1) ? e.w.hi : e.w.lo);
    return Scenario::make(t, w);
}

inline Scenario random_scenario(const Tree& t, std::mt19937_64& rng) {
    std::vector<Weight> w;
    for (const auto& e : t.edges()) w.push_back(draw(rng, e.w.lo, e.w.hi));
    return Scenario::make(t, w);
}

/// succ(j) and Δ straight from the definitions, building the bucket array of
/// configuration j and of the all-promoted configuration from scratch.
inline std::vector<ChainEntry> chain_from_scratch(const std::vector<Time>& plus, const std::vector<Time>& minus,
                                                  Weight rho, std::size_t j) {
    const std::size_t m = plus.size();
    const Time anchor = plus[0];
    std::vector<std::size_t> cnt(m + 2, 0), cnt_h(m + 2, 0);
    std::vector<Time> low(m + 2, std::numeric_limits<Time>::max());
    for (std::size_t k = 1; k <= m; ++k) {
        Time key = k <= j ? plus[k - 1] : minus[k - 1];
        if (auto l = bucket_of(anchor, key, rho, m)) {
            ++cnt[l];
            low[l] = std::min(low[l], key);
        }
        if (auto l = bucket_of(anchor, plus[k - 1], rho, m)) ++cnt_h[l];
    }
    std::vector<Time> acc(m + 2, 0), acc_h(m + 2, 0);
    for (std::size_t l = 1; l <= m; ++l) {
        acc[l] = acc[l - 1] + static_cast<Time>(cnt[l]);
        acc_h[l] = acc_h[l - 1] + static_cast<Time>(cnt_h[l]);
    }
    const std::size_t tau = bucket_of(anchor, plus[j - 1], rho, m);
    std::vector<std::size_t> kept;
    for (std::size_t l = tau + 1; l <= m; ++l) {
        if (!cnt[l]) continue;
        bool dominates = true;
        for (std::size_t t = l + 1; t <= m; ++t) {
            if (cnt[t] && low[t] + acc[t] * rho > low[l] + acc[l] * rho) dominates = false;
        }
        if (dominates) kept.push_back(l);
    }
    std::vector<ChainEntry> out;
    std::size_t prev = tau;
    for (auto l : kept) {
        out.push_back({l, (acc[l] - acc[prev]) - (acc_h[l] - acc_h[prev])});
        prev = l;
    }
    return out;
}

/// Bucket contents of configuration j as (bucket, element) pairs, elements 1-based.
inline std::vector<std::vector<std::size_t>> buckets_of_config(const std::vector<Time>& plus,
                                                               const std::vector<Time>& minus, Weight rho,
                                                               std::size_t j) {
    const std::size_t m = plus.size();
    std::vector<std::vector<std::size_t>> b(m + 1);
    for (std::size_t k = 1; k <= m; ++k) {
        Time key = k <= j ? plus[k - 1] : minus[k - 1];
        if (auto l = bucket_of(plus[0], key, rho, m)) b[l].push_back(k);
    }
    return b;
}

/// Random promoted/demoted key lists shaped like a high-degree pivot.
inline void random_chain(std::mt19937_64& rng, std::size_t m, Weight rho, std::vector<Time>& plus,
                         std::vector<Time>& minus) {
    plus.resize(m);
    minus.resize(m);
    Time spread = draw(rng, 1, 3) * rho * static_cast<Time>(m) / 2 + 1;
    for (auto& p : plus) p = draw(rng, 0, spread);
    std::sort(plus.rbegin(), plus.rend());
    for (std::size_t k = 0; k < m; ++k) {
        Time drop = draw(rng, 0, 1) ? 3 * rho : spread;
        minus[k] = plus[k] - draw(rng, 0, std::min(plus[k], drop));
    }
}

} // namespace testing_support
