#include "lch/plat.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lch;

namespace {

const char* K1 = "6,7,4,3,7,5,3,6,4,2,5,1,3,2,5,2,4,6,2";
const char* K2 = "4,5,3,5,3,2,4,1,3,2,4,2,5,1,3,2,4,4,3,5,4,2";

}  // namespace

TEST_CASE("parse_plat")
{
    auto w = parse_plat(" 2, 1 ,3 ", 4);
    CHECK(w.letters == std::vector<int>{2, 1, 3});
    CHECK(parse_plat("", 2).letters.empty());
    CHECK_THROWS_AS(parse_plat("2,x", 4), FrontError);
    CHECK_THROWS_AS(parse_plat("4", 4), FrontError);
    CHECK_THROWS_AS(parse_plat("0", 4), FrontError);
    CHECK_THROWS_AS(parse_plat("1", 3), FrontError);
    CHECK_THROWS_AS(parse_plat("", 0), FrontError);
}

TEST_CASE("links are rejected")
{
    CHECK_THROWS_AS(build_front(parse_plat("", 4)), FrontError);
    CHECK_THROWS_AS(build_front(parse_plat("2,2", 4)), FrontError);
}

TEST_CASE("unknot and trefoil invariants")
{
    auto u = classical_invariants(build_front(parse_plat("", 2)));
    CHECK(u.tb == -1);
    CHECK(u.r == 0);
    auto t = classical_invariants(build_front(parse_plat("2,2,2", 4)));
    CHECK(t.tb == 1);
    CHECK(t.r == 0);
    CHECK(t.writhe == 3);
}

TEST_CASE("m(10_132) representatives")
{
    for (const char* w : {K1, K2}) {
        auto fr = build_front(parse_plat(w, w == K1 ? 8 : 6));
        auto inv = classical_invariants(fr);
        CHECK(inv.tb == -1);
        CHECK(inv.r == 0);
    }
    CHECK(generator_names(build_front(parse_plat(K1, 8))).size() == 23);
    CHECK(generator_names(build_front(parse_plat(K2, 6))).size() == 25);
}

TEST_CASE("K1 gradings: odd generators")
{
    auto fr = build_front(parse_plat(K1, 8));
    auto gt = maslov_grading(fr);
    CHECK(gt.modulus == 0);
    auto names = generator_names(fr);
    std::vector<std::string> odd;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (gt.grading[i] % 2 != 0) odd.push_back(names[i]);
    CHECK(odd == std::vector<std::string>{"x2", "x3", "x5", "x9", "x11", "x12", "x13", "x15", "x20", "x21",
                                          "x22", "x23"});
    // right cusps are graded 1
    for (std::size_t i = 19; i < 23; ++i) CHECK(gt.grading[i] == 1);
}

TEST_CASE("Maslov potential jumps by one across every cusp")
{
    auto fr = build_front(parse_plat(K2, 6));
    auto gt = maslov_grading(fr);
    for (const auto& c : fr.left_cusps()) CHECK(gt.potential[c.upper] == gt.potential[c.lower] + 1);
    for (const auto& c : fr.right_cusps()) CHECK(gt.potential[c.upper] == gt.potential[c.lower] + 1);
}

TEST_CASE("stabilized unknot has nonzero rotation and a grading modulus")
{
    // unknot with a zig-zag: tb = -2, r = +-1
    CHECK(classical_invariants(build_front(parse_plat("2", 4))).tb == -1);
    auto fr = build_front(parse_plat("2,1", 4));
    auto inv = classical_invariants(fr);
    CHECK(inv.tb == -2);
    CHECK(std::abs(inv.r) == 1);
    CHECK(maslov_grading(fr).modulus == 2);
}

TEST_CASE("summary lists events")
{
    auto fr = build_front(parse_plat("2,2,2", 4));
    CHECK(fr.summary() == "L 1\nL 2\nX 2\nX 2\nX 2\nR 1\nR 2\n");
    CHECK(fr.is_plat());
}

TEST_CASE("base point selection")
{
    auto fr = build_front(parse_plat("2,2,2", 4));
    CHECK(fr.base_point_cusp() == 2);
    CHECK(build_front(parse_plat("2,2,2", 4), 1).base_point_cusp() == 1);
    CHECK_THROWS_AS(build_front(parse_plat("2,2,2", 4), 3), FrontError);
}
