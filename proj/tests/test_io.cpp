#include "support.hpp"

#include "mbr/io.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace mbr;
using namespace testing_support;

namespace {

Errc read_error(const std::string& text) {
    try {
        read_instance(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::InvariantViolation;
}

} // namespace

TEST_CASE("read and write instances", "[io]") {
    auto inst = read_instance("# sample tree\n3 1\n0 1 2 6\n1 2 1 4  # second edge\n");
    CHECK(inst.rho == 1);
    CHECK(inst.scale == 1);
    CHECK(inst.tree.fingerprint() == small_tree().fingerprint());

    std::ostringstream out;
    write_instance(out, inst.tree, inst.rho);
    CHECK(out.str() == "3 1\n0 1 2 6\n1 2 1 4\n");
    CHECK(read_instance(out.str()).tree.fingerprint() == inst.tree.fingerprint());

    auto one = read_instance("1 0\n");
    CHECK(one.tree.size() == 1);
}

TEST_CASE("rational values are scaled", "[io]") {
    auto inst = read_instance("2 1/2\n0 1 1/3 2\n");
    CHECK(inst.scale == 6);
    CHECK(inst.rho == 3);
    CHECK(inst.tree.interval(0) == WeightInterval{2, 12});
}

TEST_CASE("malformed input", "[io]") {
    CHECK(read_error("") == Errc::Parse);
    CHECK(read_error("3\n") == Errc::Parse);
    CHECK(read_error("3 1\n0 1 1 2\n") == Errc::Parse);
    CHECK(read_error("2 1\n0 1 x 2\n") == Errc::Parse);
    CHECK(read_error("2 1\n0 1 1/0 2\n") == Errc::Parse);
    CHECK(read_error("2 -1\n0 1 1 2\n") == Errc::Parse);
    CHECK(read_error("2 1\n0 4 1 2\n") == Errc::UnknownVertex);
    CHECK(read_error("2 1\n0 1 3 2\n") == Errc::BadInterval);
    CHECK(read_error("3 1\n0 1 1 2\n1 0 1 2\n") == Errc::DuplicateEdge);
    CHECK(read_error("2 1\n0 1 1 2 7\n") == Errc::Parse);
}

TEST_CASE("generated instances", "[io]") {
    GenConfig cfg;
    cfg.n = 5;
    cfg.shape = Shape::path;
    std::mt19937_64 rng(1);
    auto e = generate_edges(cfg, rng);
    REQUIRE(e.size() == 4);
    for (Vertex i = 0; i < 4; ++i) {
        CHECK(e[i].u == i);
        CHECK(e[i].v == i + 1);
        CHECK(e[i].lo <= e[i].hi);
    }
    cfg.shape = Shape::random;
    cfg.n = 40;
    std::mt19937_64 a(42), b(42);
    auto ta = generate_tree(cfg, a), tb = generate_tree(cfg, b);
    CHECK(ta.fingerprint() == tb.fingerprint());

    cfg.wmin = 5;
    cfg.wmax = 2;
    CHECK_THROWS_AS(generate_edges(cfg, a), Error);
    cfg.n = 1;
    cfg.wmin = 0;
    CHECK(generate_edges(cfg, a).empty());
    CHECK(parse_shape("caterpillar") == Shape::caterpillar);
    CHECK_THROWS_AS(parse_shape("blob"), Error);
}
