#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <string>

using namespace mbr;
using namespace testing_support;

namespace {

Time direct_time(const std::vector<Time>& plus, const std::vector<Time>& minus, Weight rho, std::size_t j) {
    std::vector<NeighborKey> keys;
    for (std::size_t k = 0; k < plus.size(); ++k) keys.push_back({Vertex(k), k < j ? plus[k] : minus[k]});
    sort_keys(keys);
    return time_of_sorted(keys, rho);
}

using Counter = std::size_t StageStats::*;
const std::vector<std::pair<std::string, Counter>> branches{
    {"hat_same", &StageStats::hat_same},       {"hat_outside", &StageStats::hat_outside},
    {"s2_tail_old", &StageStats::s2_tail_old}, {"s2_tail_new", &StageStats::s2_tail_new},
    {"s2_in_old", &StageStats::s2_in_old},     {"s2_in_new", &StageStats::s2_in_new},
    {"s2_out_old", &StageStats::s2_out_old},   {"s2_out_new", &StageStats::s2_out_new},
    {"s3_deleted", &StageStats::s3_deleted},   {"s3_stopped", &StageStats::s3_stopped},
    {"s3_exhausted", &StageStats::s3_exhausted}, {"s4_skipped", &StageStats::s4_skipped},
    {"s4_empty", &StageStats::s4_empty},       {"s4_alone", &StageStats::s4_alone},
    {"s4_in", &StageStats::s4_in},             {"s4_out", &StageStats::s4_out},
    {"tail_reuse", &StageStats::tail_reuse},
};

} // namespace

TEST_CASE("chain times equal sorted evaluation", "[succ_chain]") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 3000; ++it) {
        std::vector<Time> plus, minus;
        Weight rho = it % 6;
        random_chain(rng, 1 + it % 30, std::max<Weight>(rho, 1), plus, minus);
        auto T = evolve_times(plus, minus, rho);
        for (std::size_t j = 1; j <= plus.size(); ++j) REQUIRE(T[j] == direct_time(plus, minus, rho, j));
    }
}

TEST_CASE("chain rejects malformed key lists", "[succ_chain]") {
    std::vector<Time> up{1, 2}, ok{1, 1}, down{3, 1};
    CHECK_THROWS_AS(evolve_times(up, ok, 1), Error);
    CHECK_THROWS_AS(evolve_times(std::vector<Time>{3, 1}, std::vector<Time>{4, 1}, 1), Error);
    CHECK_THROWS_AS(evolve_times(std::vector<Time>{}, std::vector<Time>{}, 1), Error);
    CHECK_NOTHROW(evolve_times(down, ok, 1));
}

TEST_CASE("three-key bucket example through the chain", "[succ_chain]") {
    // keys 13, 12, 7 promoted; demoted values chosen to move between buckets
    std::vector<Time> plus{13, 12, 7}, minus{13, 11, 5};
    auto T = evolve_times(plus, minus, 1);
    CHECK(T[3] == 14);
    CHECK(T[2] == 14);
    CHECK(T[1] == direct_time(plus, minus, 1, 1));
}

TEST_CASE("succ lists and deltas match from-scratch recomputation", "[succ_chain]") {
    std::mt19937_64 rng(32);
    StageStats stats;
    std::map<std::string, std::size_t> verified;
    for (int it = 0; it < 4000; ++it) {
        std::vector<Time> plus, minus;
        Weight rho = 1 + it % 4;
        random_chain(rng, 1 + it % 64, rho, plus, minus);
        StageStats prev = stats;
        std::vector<ChainSnapshot> snaps;
        ChainHooks hooks;
        hooks.stats = &stats;
        hooks.observe = [&](const ChainSnapshot& s) {
            snaps.push_back(s);
            REQUIRE(s.succ == chain_from_scratch(plus, minus, rho, s.j));
            for (const auto& [name, field] : branches) {
                if (stats.*field != prev.*field) ++verified[name];
            }
            prev = stats;
        };
        evolve_times(plus, minus, rho, &hooks);

        for (const auto& s : snaps) {
            if (s.tau_next == 0) continue;
            // bucket index order along the transition
            CHECK(s.tau <= s.tau_next);
            CHECK(s.tau_next <= s.hat);
            // only the two touched buckets change membership
            auto before = buckets_of_config(plus, minus, rho, s.j + 1);
            auto after = buckets_of_config(plus, minus, rho, s.j);
            for (std::size_t l = 1; l < before.size(); ++l) {
                if (l == s.tau_next || l == s.hat) continue;
                CHECK(before[l] == after[l]);
            }
        }
    }
    for (const auto& [name, field] : branches) {
        INFO(name);
        CHECK(verified[name] > 0);
        CHECK(stats.*field > 0);
    }
}

TEST_CASE("zero latency degenerates to maxima", "[succ_chain]") {
    std::vector<Time> plus{9, 7, 7, 2}, minus{1, 7, 3, 2};
    auto T = evolve_times(plus, minus, 0);
    for (std::size_t j = 1; j <= 4; ++j) CHECK(T[j] == 9);
}
