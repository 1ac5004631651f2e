#include "lch/reps.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <omp.h>

using namespace lch;

namespace {

const char* M942 = "2,1,1,4,5,3,5,3,2,4,3,3,2,4";

Dga plat_dga(const char* word, int strands) { return compute_dga(build_front(parse_plat(word, strands)), Ring::F2); }

std::vector<std::vector<bool>> as_vectors(const std::vector<Augmentation>& augs)
{
    return {augs.begin(), augs.end()};
}

// Operator determined by a sparse-vector map, truncated at N.
TruncatedOp from_oracle(std::size_t N, oracle::blocks::Vec (*fn)(long))
{
    return TruncatedOp::from_basis(N, [fn](long i) {
        auto v = fn(i);
        return TruncatedOp::Image(v.begin(), v.end());
    });
}

}  // namespace

TEST_CASE("small matrices")
{
    SmallMat A = SmallMat::from_bits(2, "0100"), B = SmallMat::from_bits(2, "0010");
    CHECK(A.get(0, 1));
    CHECK(A.code() == 4);
    CHECK(SmallMat::from_code(2, 4) == A);
    CHECK((A * A).is_zero());
    CHECK(A * B + B * A == SmallMat::identity(2));
    CHECK((A * B).bits() == "1000");
    for (std::uint64_t c = 0; c < 512; ++c) CHECK(SmallMat::from_code(3, c).code() == c);
    CHECK_THROWS_AS(SmallMat(9), RepError);
    CHECK_THROWS_AS(SmallMat::from_bits(2, "010"), RepError);

    // associativity against random 4x4 matrices
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto x = SmallMat::from_code(4, rng() & 0xFFFF), y = SmallMat::from_code(4, rng() & 0xFFFF),
             z = SmallMat::from_code(4, rng() & 0xFFFF);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("augmentations agree with exhaustive enumeration")
{
    Dga tre = plat_dga("2,2,2", 4);
    auto augs = find_augmentations(tre);
    CHECK_FALSE(augs.empty());
    CHECK(as_vectors(augs) == oracle::brute_force_augmentations(tre));
    CHECK(as_vectors(find_augmentations(tre, true)) == oracle::brute_force_augmentations(tre, true));

    Dga t34 = torus_dga(3, 4).dga;
    REQUIRE(t34.size() <= 20);
    CHECK(find_augmentations(t34).empty());
    CHECK(oracle::brute_force_augmentations(t34).empty());

    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        std::string word;
        auto fr = oracle::random_knot(rng, i % 2 ? 4 : 6, 5 + i % 9, &word);
        Dga g = compute_dga(fr, Ring::F2);
        if (g.size() > 18) continue;
        CAPTURE(word);
        CHECK(as_vectors(find_augmentations(g)) == oracle::brute_force_augmentations(g));
        CHECK(as_vectors(find_augmentations(g, true)) == oracle::brute_force_augmentations(g, true));
    }
}

TEST_CASE("no augmentations for the bundled examples")
{
    CHECK(find_augmentations(load_dga(oracle::path("data/k1.dga"))).empty());
    CHECK(find_augmentations(load_dga(oracle::path("data/k2.dga"))).empty());
    CHECK(find_augmentations(torus_dga(3, 5).dga).empty());
    CHECK(find_augmentations(plat_dga(M942, 6)).empty());
}

TEST_CASE("verify_matrix_rep")
{
    Dga tre = plat_dga("2,2,2", 4);
    MatRepAssignment zero{2, {}};
    for (auto s : tre.pres.generators()) zero.images.emplace(s, SmallMat(2));
    CHECK_FALSE(verify_matrix_rep(tre, zero));

    for (const auto& a : find_augmentations(tre)) {
        MatRepAssignment rho{1, {}};
        for (std::size_t i = 0; i < a.size(); ++i)
            rho.images.emplace(tre.pres.generators()[i], SmallMat::from_code(1, a[i]));
        CHECK(verify_matrix_rep(tre, rho));
    }

    MatRepAssignment partial{1, {{Symbol("x1"), SmallMat(1)}}};
    CHECK_THROWS_AS(verify_matrix_rep(tre, partial), RepError);
}

TEST_CASE("one-dimensional search finds the first augmentation")
{
    Dga tre = plat_dga("2,2,2", 4);
    auto res = search_matrix_rep(tre, 1, 1'000'000);
    REQUIRE(res.rep.has_value());
    auto first = find_augmentations(tre).front();
    for (std::size_t i = 0; i < first.size(); ++i)
        CHECK(res.rep->images.at(tre.pres.generators()[i]).get(0, 0) == first[i]);

    auto none = search_matrix_rep(load_dga(oracle::path("data/k2.dga")), 1, 1'000'000);
    CHECK_FALSE(none.rep.has_value());
    CHECK(none.exhausted);
}

TEST_CASE("matrix search: serial and parallel agree")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 12; ++i) {
        auto fr = oracle::random_knot(rng, 6, 8 + i % 5);
        Dga g = compute_dga(fr, Ring::F2);
        for (std::uint64_t budget : {200ULL, 20'000ULL, 2'000'000ULL}) {
            auto s = search_matrix_rep_serial(g, 2, budget);
            for (int threads : {1, 3}) {
                omp_set_num_threads(threads);
                auto p = search_matrix_rep(g, 2, budget);
                CHECK(p.rep == s.rep);
                CHECK(p.nodes == s.nodes);
                CHECK(p.exhausted == s.exhausted);
            }
            if (s.rep) CHECK(verify_matrix_rep(g, *s.rep));
        }
    }
}

TEST_CASE("K2 has no 2-dimensional representation within the search")
{
    auto res = search_matrix_rep(load_dga(oracle::path("data/k2.dga")), 2, 2'000'000);
    CHECK_FALSE(res.rep.has_value());
}

TEST_CASE("bundled m(9_42) representation")
{
    Dga g = plat_dga(M942, 6);
    CHECK(g.size() == 17);
    auto rho = load_rep(oracle::path("reps/m9_42_dim2.rep"));
    CHECK(rho.n == 2);
    CHECK(verify_matrix_rep(g, rho));
    CHECK(read_rep(write_rep(rho)) == rho);
}

TEST_CASE("representation files")
{
    CHECK_THROWS_AS(read_rep("map x1 = 0\n"), RepError);
    CHECK_THROWS_AS(read_rep("rep n=2\nmap x1 = 011\n"), RepError);
    CHECK_THROWS_AS(read_rep("rep n=2\nmap x1 = 0110\nmap x1 = 0000\n"), RepError);
    CHECK_THROWS_WITH_AS(read_rep("rep n=2\nfoo\n"), doctest::Contains("line 2"), RepError);
    auto rho = read_rep("# c\nrep n=2\nmap y = 1001\n");
    CHECK(rho.images.at(Symbol("y")) == SmallMat::identity(2));
}

TEST_CASE("torus representations")
{
    for (auto [p, q] : {std::pair{3, 4}, {3, 5}, {5, 6}, {5, 8}, {3, 7}}) {
        auto t = torus_dga(p, q);
        auto rho = torus_rep(t.labels, t.dga);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(verify_matrix_rep(t.dga, rho));
        std::set<std::string> used;
        for (const auto& [s, m] : rho.images) {
            if (!m.is_zero()) used.insert(m.bits());
        }
        CHECK(used == std::set<std::string>{"0100", "0010"});
        for (auto z : t.labels.z) CHECK(rho.images.at(z).is_zero());
    }
    TorusLabeling broken = torus_dga(3, 4).labels;
    broken.x.erase({1, 3});
    CHECK_THROWS_AS(torus_rep(broken, torus_dga(3, 4).dga), RepError);
}

TEST_CASE("Mat2 presentation")
{
    auto rep = mat2_presentation_check();
    CHECK(rep.pass);
    CHECK(rep.quotient_size == 16);
    CHECK(rep.ab_plus_ba_identity);
    CHECK(rep.ba_rewrites);
    CHECK(rep.bijective);
}

TEST_CASE("truncated operators")
{
    auto ops = build_R_truncated(64);
    CHECK(ops.f.valid_domain() == 31);
    CHECK(ops.g.valid_domain() == 31);
    CHECK(ops.p.valid_domain() == 63);
    CHECK(ops.c.valid_domain() == 63);
    auto fg = TruncatedOp::then(ops.f, ops.f);
    CHECK(fg.valid_domain() == 15);
    CHECK(fg.entry(12, 3));
    CHECK_THROWS_AS(build_R_truncated(4), RepError);
    CHECK_THROWS_AS(verify_R_relations(32), RepError);
}

TEST_CASE("closed forms of a, b, c agree with the block diagrams")
{
    namespace B = oracle::blocks;
    const std::size_t N = 128;
    auto ops = build_R_truncated(N);
    CHECK(ops.a.equals_upto(from_oracle(N, B::a), 127));
    CHECK(ops.b.equals_upto(from_oracle(N, B::b), 127));
    CHECK(ops.c.equals_upto(from_oracle(N, B::c), 127));
    auto ac = TruncatedOp::then(ops.a, ops.c);
    CHECK(ac.equals_upto(from_oracle(N, B::ac), ac.valid_domain()));
    // 1 + ab is f and 1 + ba is g
    auto one = TruncatedOp::identity(N);
    auto ab = one + TruncatedOp::then(ops.a, ops.b);
    auto ba = one + TruncatedOp::then(ops.b, ops.a);
    CHECK((ab + ops.f).vanishes_upto(ab.valid_domain()));
    CHECK((ba + ops.g).vanishes_upto(ba.valid_domain()));
}

TEST_CASE("relations of R on the truncation")
{
    auto rep = verify_R_relations(256);
    CHECK(rep.pass);
    REQUIRE(rep.checks.size() == 7);
    for (const auto& c : rep.checks) {
        CAPTURE(c.label);
        CHECK(c.pass);
        CHECK(c.checked_upto >= 31);
    }
}

TEST_CASE("reading ab as b-then-a breaks the relations")
{
    // evaluate with the opposite composition order
    auto ops = build_R_truncated(128);
    std::map<Symbol, TruncatedOp> gens{{Symbol("a"), ops.a}, {Symbol("b"), ops.b}, {Symbol("c"), ops.c}};
    bool all = true;
    for (const auto& [label, rel] : r_relations()) {
        NcPoly reversed = NcPoly::zero(Ring::F2);
        for (const auto& t : rel.terms()) reversed += NcPoly::word(Ring::F2, Word(t.word.rbegin(), t.word.rend()));
        auto op = evaluate_right(reversed, gens, 128);
        all = all && op.vanishes_upto(op.valid_domain());
    }
    CHECK_FALSE(all);
}

TEST_CASE("corrupting b breaks a relation")
{
    auto ops = build_R_truncated(256);
    ops.b = TruncatedOp::from_basis(256, [](long i) {
        long k = i / 2;
        return i % 2 == 0 ? TruncatedOp::Image{2 * k + 1} : TruncatedOp::Image{2 * k + 2, 4 * k + 4};
    });
    CHECK_FALSE(verify_R_relations(ops).pass);
}

TEST_CASE("truncation stability")
{
    auto small = build_R_truncated(64), big = build_R_truncated(128);
    for (auto [x, y] : {std::pair{&small.a, &big.a}, {&small.b, &big.b}, {&small.c, &big.c}, {&small.s, &big.s}})
        CHECK(x->equals_upto(*y, x->valid_domain()));
}

TEST_CASE("C(K2) acts on H through the quotient by I")
{
    // x2, x5, x18 act as a, b, c; the other generators of the quotient are
    // the words found for them, and the generators of I act by 0.
    const std::size_t N = 256;
    auto ops = build_R_truncated(N);
    std::map<Symbol, TruncatedOp> abc{{Symbol("a"), ops.a}, {Symbol("b"), ops.b}, {Symbol("c"), ops.c}};
    GradedPresentation rp(Ring::F2);
    for (const char* s : {"a", "b", "c"}) rp.add_generator(Symbol(s));
    auto word = [&](const char* text) { return evaluate_right(parse_ncpoly(text, Ring::F2, &rp), abc, N); };

    Dga g = load_dga(oracle::path("data/k2.dga"));
    std::map<Symbol, TruncatedOp> act;
    for (auto s : g.pres.generators()) act[s] = TruncatedOp::zero(N);
    act[Symbol("x2")] = ops.a;
    act[Symbol("x5")] = ops.b;
    act[Symbol("x18")] = ops.c;
    act[Symbol("x4")] = word("b.c");
    act[Symbol("x13")] = word("1 + a.b");
    act[Symbol("x14")] = word("(1 + a).c");
    act[Symbol("x20")] = word("(1 + a).c");
    act[Symbol("x16")] = word("(1 + a).a.c");
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto op = evaluate_right(g.differential[i], act, N);
        CAPTURE(g.pres.generators()[i].name());
        CHECK(op.valid_domain() >= 15);
        CHECK(op.vanishes_upto(op.valid_domain()));
    }
}
