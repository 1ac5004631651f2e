#include "lch/chalg.hpp"
#include "lch/dga.hpp"
#include "lch/reps.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace lch;

namespace {

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string read(const std::string& rel)
{
    std::ifstream f(oracle::path(rel), std::ios::binary);
    REQUIRE_MESSAGE(f, "missing " << rel);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const std::pair<const char*, std::uint64_t> bundled[] = {
    {"data/k1.dga", 0x76f6e942e4cfd927ULL},
    {"data/k2.dga", 0x569d0d1e89d6874cULL},
    {"certs/k1_unit.expr", 0x9bc6b0f0de8bd4dbULL},
    {"certs/k1_trivial.cert", 0x46160c40d5fbb7f1ULL},
    {"certs/k2_quotient.cert", 0x5159dd21d78c1d3cULL},
    {"certs/k2_norep.cert", 0x73e878de73914cf9ULL},
    {"reps/m9_42_dim2.rep", 0xa5572c87923a44e9ULL},
};

}  // namespace

TEST_CASE("bundled files are unchanged")
{
    for (const auto& [file, sum] : bundled) {
        CAPTURE(file);
        CHECK(fnv1a(read(file)) == sum);
    }
}

TEST_CASE("bundled DGA files round-trip")
{
    for (const char* f : {"data/k1.dga", "data/k2.dga"}) {
        Dga g = deserialize(read(f));
        CHECK(deserialize(serialize(g)) == g);
        CHECK(serialize(deserialize(serialize(g))) == serialize(g));
    }
    CHECK(load_dga(oracle::path("data/k1.dga")).ring() == Ring::ZT);
    CHECK(load_dga(oracle::path("data/k2.dga")).ring() == Ring::F2);
}

TEST_CASE("bundled certificates parse")
{
    auto k1 = char_algebra(load_dga(oracle::path("data/k1.dga")));
    auto k2 = char_algebra(load_dga(oracle::path("data/k2.dga")));
    CHECK_NOTHROW(parse_certificate(read("certs/k1_trivial.cert"), k1));
    CHECK_NOTHROW(parse_certificate(read("certs/k2_quotient.cert"), k2));
    CHECK_NOTHROW(parse_certificate(read("certs/k2_norep.cert"), k2));
}
