#include <numeric>

#include "doctest.h"
#include "palf/error.hpp"
#include "palf/grid.hpp"
#include "support.hpp"

using namespace palf;

namespace {

GridDiagram raw_grid(const std::string& name) { return to_square_bridge(modify_for_handles(support::sample(name))); }

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("coprime padding sizes") {
    CHECK(coprime_size(4, 6, 2, 2) == std::pair{5, 6});
    CHECK(coprime_size(5, 6, 2, 2) == std::pair{5, 6});
    CHECK(coprime_size(5, 6, 20, 20) == std::pair{20, 21});
    CHECK(coprime_size(2, 2, 2, 2) == std::pair{2, 3});
}

TEST_CASE("property: padded sizes are coprime and dominate the request") {
    for (int p = 1; p <= 14; ++p)
        for (int q = 1; q <= 14; ++q)
            for (int mp = 2; mp <= 6; mp += 2)
                for (int mq = 2; mq <= 6; mq += 3) {
                    auto [a, b] = coprime_size(p, q, mp, mq);
                    CHECK(std::gcd(a, b) == 1);
                    CHECK(a >= std::max(p, mp));
                    CHECK(b >= std::max(q, mq));
                    // nothing smaller in max(a,b) works
                    for (int x = std::max(p, mp); x <= a + b; ++x)
                        for (int y = std::max(q, mq); y <= a + b; ++y)
                            if (std::gcd(x, y) == 1 && std::max(x, y) < std::max(a, b)) FAIL("smaller pair " << x << "," << y);
                }
}

TEST_CASE("unknot gives a 2x2 grid padded to (2,3)") {
    auto g = raw_grid("unknot");
    CHECK(g.p == 2);
    CHECK(g.q == 2);
    auto h = pad_coprime(g, 2, 2);
    CHECK(h.p == 2);
    CHECK(h.q == 3);
    CHECK(h.components == g.components);
}

TEST_CASE("trefoil gives a 5x5 grid padded to (5,6)") {
    auto g = raw_grid("trefoil");
    CHECK(g.p == 5);
    CHECK(g.q == 5);
    auto h = pad_coprime(g, 2, 2);
    CHECK(h.p == 5);
    CHECK(h.q == 6);
    // 10 corners: one band transit each
    CHECK(h.component("A").corners.size() == 10);
}

TEST_CASE("fishtail grid is 7x7 with the dotted circle marked") {
    auto g = raw_grid("fishtail");
    CHECK(g.p == 7);
    CHECK(g.q == 7);
    CHECK(g.component("H").dotted);
    CHECK_FALSE(g.component("A").dotted);
    auto h = pad_coprime(g, 2, 2);
    CHECK(h.p == 7);
    CHECK(h.q == 8);
}

TEST_CASE("one segment per level and alternating segments") {
    for (const auto& name : support::corpus()) {
        CAPTURE(name);
        auto g = raw_grid(name);
        CHECK_NOTHROW(validate(g));
        CHECK(static_cast<int>(g.horizontals().size()) <= g.p);
        CHECK(static_cast<int>(g.verticals().size()) <= g.q);
    }
}

TEST_CASE("grid writhe minus up-right corners is tb") {
    for (const auto& name : support::corpus()) {
        CAPTURE(name);
        auto m = modify_for_handles(support::sample(name));
        auto g = to_square_bridge(m);
        for (const auto& c : g.components) {
            CAPTURE(c.label);
            CHECK(writhe_grid(c) - up_right_corners(c) == thurston_bennequin(m, c.label));
        }
    }
}

TEST_CASE("text format round trip") {
    for (const auto& name : support::corpus()) {
        CAPTURE(name);
        auto g = pad_coprime(raw_grid(name), 2, 2);
        auto text = to_text(g);
        CHECK(text.rfind("grid ", 0) == 0);
        CHECK(parse_grid(text) == g);
    }
}

TEST_CASE("malformed grids are rejected") {
    GridDiagram g{3, 3, {{"A", false, {{1, 1}, {2, 1}, {2, 2}}}}};
    CHECK_THROWS_AS(validate(g), Error);
    g.components[0].corners = {{1, 1}, {2, 2}, {1, 2}, {2, 1}};
    CHECK_THROWS_AS(validate(g), Error);
    g.components[0].corners = {{1, 1}, {4, 1}, {4, 2}, {1, 2}};
    CHECK_THROWS_AS(validate(g), Error);
    g.components[0].corners = {{1, 1}, {2, 1}, {2, 2}, {1, 2}};
    CHECK_NOTHROW(validate(g));
    CHECK_THROWS_AS(parse_grid("h 1 1 2 A\n"), Error);
    CHECK_THROWS_AS(parse_grid("grid 2 2\nh 1 1 2 A\nv 2 1 2 A\n"), Error);
}

TEST_CASE("a handle in the diagram requires the modified front") {
    CHECK_THROWS_AS(to_square_bridge(support::sample("fishtail")), Error);
}

TEST_CASE("property: random diagrams give valid grids with tb preserved") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        auto text = support::random_front(rng, 3, 2, 6, 10);
        CAPTURE(text);
        auto m = modify_for_handles(parse_front(text));
        auto g = to_square_bridge(m);
        CHECK_NOTHROW(validate(g));
        for (const auto& c : g.components) CHECK(writhe_grid(c) - up_right_corners(c) == thurston_bennequin(m, c.label));
    }
}

}
