#include "mbr/generate.hpp"
#include "mbr/ordered_index.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace mbr;

namespace {

std::optional<std::uint64_t> ref_succ(const std::set<std::uint64_t>& s, std::uint64_t k) {
    auto it = s.upper_bound(k);
    if (it == s.end()) return std::nullopt;
    return *it;
}

std::optional<std::uint64_t> ref_pred(const std::set<std::uint64_t>& s, std::uint64_t k) {
    auto it = s.lower_bound(k);
    if (it == s.begin()) return std::nullopt;
    return *--it;
}

} // namespace

TEST_CASE("ordered index basics", "[ordered_index]") {
    OrderedIndex idx(16);
    CHECK_FALSE(idx.successor(5).has_value());
    CHECK_FALSE(idx.min().has_value());
    CHECK(idx.insert(3));
    CHECK(idx.insert(9));
    CHECK_FALSE(idx.insert(9));
    CHECK(idx.successor(3) == 9u);
    CHECK(idx.predecessor(9) == 3u);
    CHECK(idx.min() == 3u);
    CHECK(idx.max() == 9u);
    CHECK(idx.size() == 2);
    CHECK(idx.erase(3));
    CHECK_FALSE(idx.erase(3));
    CHECK(idx.min() == 9u);
    CHECK_FALSE(idx.predecessor(9).has_value());

    try {
        idx.insert(17);
        FAIL("expected OutOfUniverse");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OutOfUniverse);
    }
    CHECK_THROWS_AS(idx.successor(0), Error);
    CHECK_THROWS_AS(OrderedIndex(0), Error);
}

TEST_CASE("ordered index edges of tiny universes", "[ordered_index]") {
    OrderedIndex one(1);
    CHECK(one.insert(1));
    CHECK(one.min() == 1u);
    CHECK_FALSE(one.successor(1).has_value());
    CHECK_FALSE(one.predecessor(1).has_value());

    OrderedIndex leaf(64);
    leaf.insert(64);
    leaf.insert(1);
    CHECK(leaf.successor(1) == 64u);
    CHECK(leaf.predecessor(64) == 1u);
}

TEST_CASE("ordered index matches std::set", "[ordered_index]") {
    std::mt19937_64 rng(99);
    for (std::uint64_t U : {1ULL, 2ULL, 63ULL, 64ULL, 65ULL, 1000ULL, 4096ULL, 100000ULL, 1ULL << 22}) {
        OrderedIndex idx(U);
        std::set<std::uint64_t> ref;
        for (int op = 0; op < 20000; ++op) {
            auto k = std::uint64_t(draw(rng, 1, std::int64_t(U)));
            switch (draw(rng, 0, 4)) {
            case 0:
            case 1:
                REQUIRE(idx.insert(k) == ref.insert(k).second);
                break;
            case 2:
                REQUIRE(idx.erase(k) == (ref.erase(k) == 1));
                break;
            case 3:
                REQUIRE(idx.successor(k) == ref_succ(ref, k));
                REQUIRE(idx.contains(k) == ref.count(k));
                break;
            default:
                REQUIRE(idx.predecessor(k) == ref_pred(ref, k));
                break;
            }
            REQUIRE(idx.size() == ref.size());
            REQUIRE(idx.min() == (ref.empty() ? std::nullopt : std::optional(*ref.begin())));
            REQUIRE(idx.max() == (ref.empty() ? std::nullopt : std::optional(*ref.rbegin())));
        }
    }
}
