#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace mbr;
using namespace testing_support;

namespace {

Errc build_error(std::vector<EdgeSpec> e, std::size_t n = 0) {
    try {
        if (n) Tree::build(n, e);
        else Tree::build(e);
    } catch (const Error& err) {
        return err.code();
    }
    FAIL("expected an error");
    return Errc::Parse;
}

std::size_t max_branch_brute(const Tree& t, Vertex v) {
    std::size_t best = 0;
    for (const auto& inc : t.neighbors(v)) best = std::max(best, branch(t, v, inc.to).members.size());
    return best;
}

} // namespace

TEST_CASE("build validates edge lists", "[tree]") {
    auto t = small_tree();
    CHECK(t.size() == 3);
    CHECK(t.edge_count() == 2);
    CHECK(t.interval(0) == WeightInterval{2, 6});
    CHECK(t.interval(1) == WeightInterval{1, 4});

    CHECK(build_error({{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 0, 1, 1}}, 3) == Errc::CycleDetected);
    CHECK(build_error({{0, 1, 5, 2}}) == Errc::BadInterval);
    CHECK(build_error({{0, 1, -1, 2}}) == Errc::BadInterval);
    CHECK(build_error({{0, 1, 1, 2}, {1, 0, 1, 2}}, 3) == Errc::DuplicateEdge);
    CHECK(build_error({{0, 1, 1, 2}}, 3) == Errc::Disconnected);
    CHECK(build_error({{0, 0, 1, 2}}, 2) == Errc::CycleDetected);
    CHECK(build_error({{0, 5, 1, 2}}, 2) == Errc::UnknownVertex);
    CHECK(build_error({{0, 1, 1, 2}, {2, 3, 1, 1}, {3, 2, 1, 1}}, 4) == Errc::DuplicateEdge);

    auto single = Tree::build(1, {});
    CHECK(single.size() == 1);
    CHECK(single.degree(0) == 0);
}

TEST_CASE("adjacency is sorted and slot-addressable", "[tree]") {
    auto t = sample_tree();
    for (Vertex v = 0; v < 14; ++v) {
        auto nb = t.neighbors(v);
        for (std::size_t i = 1; i < nb.size(); ++i) CHECK(nb[i - 1].to < nb[i].to);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            CHECK(t.slot_of(v, nb[i].to) == t.adjacency_offset(v) + i);
            CHECK(t.edge_between(v, nb[i].to) == nb[i].edge);
        }
    }
    CHECK_FALSE(t.slot_of(0, 5).has_value());
}

TEST_CASE("centroid", "[tree]") {
    CHECK(centroid(path_tree(3, 1, 1)) == 1);
    CHECK(centroid(path_tree(4, 1, 1)) == 1);
    CHECK(centroid(Tree::build(1, {})) == 0);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        auto t = random_tree(rng, 1 + it % 40);
        Vertex c = centroid(t);
        CHECK(largest_open_branch(t, c) <= t.size() / 2);
        std::size_t best = t.size();
        for (Vertex v = 0; v < Vertex(t.size()); ++v) best = std::min(best, max_branch_brute(t, v));
        CHECK(max_branch_brute(t, c) == best);
        for (Vertex v = 0; v < c; ++v) CHECK(max_branch_brute(t, v) > best);
    }
}

TEST_CASE("centroid of a vertex subset", "[tree]") {
    auto t = path_tree(7, 1, 1);
    std::vector<char> mask{0, 0, 1, 1, 1, 0, 0};
    CHECK(centroid(t, mask) == 3);
    mask = {1, 1, 0, 0, 0, 0, 0};
    CHECK(centroid(t, mask) == 0);
}

TEST_CASE("path_info", "[tree]") {
    auto t = path_tree(3, 1, 1);
    auto p = path_info(t, 0, 2);
    CHECK(p.edges == std::vector<EdgeId>{0, 1});
    CHECK(p.hops == 2);
    CHECK(path_info(t, 1, 1).edges.empty());
    CHECK(path_info(sample_tree(), sample_x, sample_pivot).hops == 2);
    CHECK_THROWS_AS(path_info(t, 0, 7), Error);

    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        auto r = random_tree(rng, 2 + it % 20);
        Vertex a = Vertex(draw(rng, 0, Vertex(r.size()) - 1));
        Vertex b = Vertex(draw(rng, 0, Vertex(r.size()) - 1));
        auto ab = path_info(r, a, b).edges;
        auto ba = path_info(r, b, a).edges;
        std::reverse(ba.begin(), ba.end());
        CHECK(ab == ba);
    }
}

TEST_CASE("branches", "[tree]") {
    auto t = path_tree(3, 1, 1);
    CHECK(branch(t, 1, 2).members == std::vector<Vertex>{2});
    CHECK(closed_branch(t, 1, 2).members == std::vector<Vertex>{0, 1});
    CHECK_THROWS_AS(branch(t, 1, 1), Error);
    try {
        branch(t, 1, 1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SameVertex);
    }

    std::vector<EdgeSpec> star;
    for (Vertex i = 1; i <= 4; ++i) star.push_back({0, i, 1, 1});
    CHECK(branch(Tree::build(star), 0, 3).members == std::vector<Vertex>{3});

    std::mt19937_64 rng(5);
    for (int it = 0; it < 100; ++it) {
        auto r = random_tree(rng, 2 + it % 15);
        for (const auto& e : r.edges()) {
            // <x,y> = B<y,x> for adjacent x, y
            CHECK(branch(r, e.u, e.v).members == closed_side(r, e.v, e.u).members);
        }
        Vertex v = Vertex(draw(rng, 0, Vertex(r.size()) - 1));
        std::vector<int> seen(r.size(), 0);
        for (const auto& inc : r.neighbors(v)) {
            for (Vertex m : branch(r, v, inc.to).members) ++seen[m];
        }
        for (Vertex u = 0; u < Vertex(r.size()); ++u) CHECK(seen[u] == (u == v ? 0 : 1));
    }
}
