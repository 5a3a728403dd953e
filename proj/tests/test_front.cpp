#include "doctest.h"
#include "palf/error.hpp"
#include "palf/front.hpp"
#include "support.hpp"

using namespace palf;

namespace {

ErrorKind kind_of(const std::string& text) {
    try {
        parse_front(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a parse error");
    return ErrorKind::Argument;
}

int tb_of(const FrontDiagram& d, const std::string& label) { return thurston_bennequin(d, label); }

}  // namespace

TEST_SUITE("front") {

TEST_CASE("unknot and trefoil invariants") {
    auto u = support::sample("unknot");
    CHECK(u.components == std::vector<std::string>{"A"});
    CHECK(writhe(u) == 0);
    CHECK(tb_of(u, "A") == -1);

    auto t = support::sample("trefoil");
    CHECK(writhe(t) == 3);
    CHECK(tb_of(t, "A") == 1);

    auto s = support::sample("stabilized_unknot");
    CHECK(tb_of(s, "A") == -2);
}

TEST_CASE("unlink has tb -1 on each component") {
    auto d = support::sample("unlink");
    auto inv = classical_invariants(d);
    REQUIRE(inv.size() == 2);
    for (const auto& c : inv) CHECK(c.tb == -1);
}

TEST_CASE("hopf link crossings are between components") {
    auto d = support::sample("hopf");
    auto inv = classical_invariants(d);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0].writhe == 0);
    CHECK(inv[1].writhe == 0);
    auto tr = trace_front(d);
    int lk2 = 0;
    for (const auto& c : tr.crossings) {
        CHECK(tr.piece_label[c.lower] != tr.piece_label[c.upper]);
        lk2 += crossing_sign(tr, c);
    }
    CHECK(std::abs(lk2) == 2);
}

TEST_CASE("syntax errors report a position") {
    try {
        parse_front("components: 1\nlcusp 0 A\nfrob 1\nrcusp 0\n");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Syntax);
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(kind_of("components: 1\nlcusp x A\nrcusp 0\n") == ErrorKind::Syntax);
    CHECK(kind_of("lcusp 0 A\ncomponents: 1\nrcusp 0\n") == ErrorKind::Syntax);
}

TEST_CASE("input errors by category") {
    // two left cusps and nothing closes them
    CHECK(kind_of("components: 1\nlcusp 0 A\nlcusp 0 A\n") == ErrorKind::Unclosed);
    CHECK(kind_of("components: 1\nlcusp 0 A; lcusp 0 A") == ErrorKind::Unclosed);
    CHECK(kind_of("components: 1\nlcusp 0 A\ncross 3\nrcusp 0\n") == ErrorKind::StrandCount);
    CHECK(kind_of("components: 1\nlcusp 2 A\nrcusp 0\n") == ErrorKind::StrandCount);
    CHECK(kind_of("components: 1\nlcusp 0 A\nhandle H rows 4-5\nrcusp 0\n") == ErrorKind::Handle);
    CHECK(kind_of("components: 2\nlcusp 0 A\nrcusp 0\n") == ErrorKind::Component);
    CHECK(kind_of("components: 2\nlcusp 0 A\nlcusp 2 B\ncross 1\nrcusp 0\nrcusp 0\n") == ErrorKind::Component);
}

TEST_CASE("statements separated by semicolons and comments") {
    auto a = parse_front("components: 1 # one\nlcusp 0 A; rcusp 0\n");
    auto b = support::sample("unknot");
    CHECK(a.events.size() == b.events.size());
    CHECK(tb_of(a, "A") == -1);
}

TEST_CASE("text round trip") {
    for (const auto& name : support::corpus()) {
        CAPTURE(name);
        auto d = support::sample(name);
        auto e = parse_front(to_text(d));
        CHECK(e.components == d.components);
        CHECK(e.handles.size() == d.handles.size());
        REQUIRE(e.events.size() == d.events.size());
        for (std::size_t k = 0; k < d.events.size(); ++k) {
            CHECK(e.events[k].kind == d.events[k].kind);
            CHECK(e.events[k].row == d.events[k].row);
        }
    }
}

TEST_CASE("modification without handles changes nothing") {
    auto d = support::sample("trefoil");
    auto m = modify_for_handles(d);
    CHECK(m.modified);
    CHECK(m.events == d.events);
    CHECK(m.twists.empty());
    CHECK(modify_for_handles(m) == m);
}

TEST_CASE("one strand through a handle inserts no twist letters") {
    auto m = modify_for_handles(support::sample("example2"));
    REQUIRE(m.twists.size() == 1);
    CHECK(m.twists[0].strands == 1);
    CHECK(m.twists[0].inserted == 0);
    CHECK(m.is_dotted("H"));
    CHECK(m.two_handles() == std::vector<std::string>{"A"});
}

TEST_CASE("fishtail inserts two twist letters that cancel") {
    auto m = modify_for_handles(support::sample("fishtail"));
    REQUIRE(m.twists.size() == 1);
    CHECK(m.twists[0].strands == 2);
    CHECK(m.twists[0].inserted == 2);
    CHECK(m.twists[0].cancelled == 2);
    CHECK(m.twists[0].zigzags == 0);
    CHECK(thurston_bennequin(m, "A") == 1);
    CHECK(m.dotted == std::vector<std::string>{"H"});
}

TEST_CASE("handles after a right cusp are rejected") {
    auto d = parse_front("components: 2\nlcusp 0 A\nrcusp 0\nlcusp 0 B\nhandle H rows 0-1\nrcusp 0\n");
    CHECK_THROWS_AS(modify_for_handles(d), Error);
}

TEST_CASE("property: modification adds one dotted component per handle") {
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        auto text = support::random_front(rng, 3, 2, 6, 10);
        CAPTURE(text);
        auto d = parse_front(text);
        auto m = modify_for_handles(d);
        CHECK(m.two_handles() == d.components);
        CHECK(m.dotted.size() == d.handles.size());
        for (const auto& l : m.two_handles()) CHECK(m.has_component(l));
    }
}

}
