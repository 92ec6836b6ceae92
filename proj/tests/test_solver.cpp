#include "support.hpp"

#include "mbr/oracle.hpp"
#include "mbr/solver.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace mbr;
using namespace testing_support;

namespace {

std::size_t log_bound(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k + 1;
}

} // namespace

TEST_CASE("trivial trees", "[solver]") {
    auto one = Tree::build(1, {});
    auto r = solve(one, 3);
    CHECK(r.center == 0);
    CHECK(r.max_regret == 0);
    CHECK(r.iterations == 0);
    auto rn = solve_naive(one, 3);
    CHECK(rn.center == 0);
    CHECK(rn.max_regret == 0);

    auto pair = path_tree(2, 1, 4);
    auto [bc, bv] = oracle::minmax_center_bruteforce(pair, 1);
    auto r2 = solve(pair, 1);
    CHECK(r2.center == bc);
    CHECK(r2.max_regret == bv);
    CHECK(r2.iterations == 0);

    auto sym = path_tree(3, 2, 5);
    CHECK(solve_naive(sym, 1).center == 1);
    CHECK(solve(sym, 1).center == 1);
    CHECK(oracle::minmax_center_bruteforce(sym, 1).first == 1);
}

TEST_CASE("solver matches brute force on small trees", "[solver]") {
    std::mt19937_64 rng(51);
    for (int it = 0; it < 200; ++it) {
        auto t = random_tree(rng, 1 + it % 10);
        Weight rho = it % 4;
        auto r = solve(t, rho);
        auto [bc, bv] = oracle::minmax_center_bruteforce(t, rho);
        REQUIRE(r.max_regret == bv);
        auto naive = solve_naive(t, rho);
        CHECK(naive.center == bc);
        CHECK(naive.max_regret == bv);
        if (std::count(naive.profile.begin(), naive.profile.end(), bv) == 1) CHECK(r.center == bc);
    }
}

TEST_CASE("solver matches the naive argmin", "[solver]") {
    std::mt19937_64 rng(52);
    for (int it = 0; it < 200; ++it) {
        auto t = random_tree(rng, 3 + it % 58, 20, it % 4 == 0 ? Shape::caterpillar : Shape::random);
        Weight rho = it % 3;
        auto r = solve(t, rho);
        auto naive = solve_naive(t, rho, RegretMethod::fast);
        REQUIRE(r.max_regret == naive.max_regret);
        CHECK(naive.profile[r.center] == r.max_regret);
        CHECK(r.iterations <= log_bound(t.size()));
        CHECK(r.trace.size() == r.iterations);
        for (const auto& step : r.trace) CHECK(step.pruned <= step.size / 2 + 1);
        if (it % 10 == 0) CHECK(solve_naive(t, rho).profile == naive.profile);
    }
}

TEST_CASE("pruning keeps an optimal vertex", "[solver]") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 150; ++it) {
        auto t = random_tree(rng, 3 + it % 8);
        Weight rho = it % 3;
        auto tb = preprocess_extremes(t, rho);
        auto naive = solve_naive(t, rho);
        Vertex z = centroid(t);
        auto rep = max_regret_fast(t, rho, z, tb);
        if (rep.max_regret == 0) continue;
        auto s = materialize(t, rho, rep.worst);
        auto centers = broadcast_centers(t, s, rho);
        CHECK(std::find(centers.begin(), centers.end(), z) == centers.end());
        for (Vertex k : centers) {
            auto side = branch(t, z, k).members;
            side.push_back(z);
            Time best = naive.profile[z];
            for (Vertex v : side) best = std::min(best, naive.profile[v]);
            CHECK(best == naive.max_regret);
        }
    }
}
