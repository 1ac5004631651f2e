// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include "lch/chalg.hpp"
#include "lch/dga.hpp"
#include "lch/reps.hpp"

#include "oracles.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace lch;

namespace {

const char* K1 = "6,7,4,3,7,5,3,6,4,2,5,1,3,2,5,2,4,6,2";
const char* K2 = "4,5,3,5,3,2,4,1,3,2,4,2,5,1,3,2,4,4,3,5,4,2";
const char* M942 = "2,1,1,4,5,3,5,3,2,4,3,3,2,4";

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what)
{
    if (!ok) throw Failure(what);
}

std::string read(const std::string& rel)
{
    std::ifstream f(oracle::path(rel));
    if (!f) throw Failure("missing " + rel);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

NcPoly expr_file(const Dga& g, const std::string& rel)
{
    std::string text, line;
    std::istringstream in(read(rel));
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        text += line + ' ';
    }
    return parse_ncpoly(text, g.ring(), &g.pres);
}

Dga plat(const char* w, int strands, Ring r) { return compute_dga(build_front(parse_plat(w, strands)), r); }

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<std::string()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        detail = body();
        ok = true;
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > limit_seconds) {
        ok = false;
        detail += " (over the " + std::to_string(limit_seconds) + " s limit)";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << title << "  [" << std::fixed
              << std::setprecision(2) << secs << " s]" << (detail.empty() ? "" : "  " + detail) << std::endl;
}

}  // namespace

int main()
{
    criterion(1, "generator counts (K1: 23, K2: 25)", 1.0, [] {
        auto n1 = generator_names(build_front(parse_plat(K1, 8))).size();
        auto n2 = generator_names(build_front(parse_plat(K2, 6))).size();
        require(n1 == 23 && n2 == 25, "got " + std::to_string(n1) + ", " + std::to_string(n2));
        require(load_dga(oracle::path("data/k1.dga")).size() == 23, "K1 file");
        require(load_dga(oracle::path("data/k2.dga")).size() == 25, "K2 file");
        return std::string();
    });

    criterion(2, "K2 over F2 equals the bundled differential term for term", 10.0, [] {
        Dga computed = plat(K2, 6, Ring::F2);
        Dga file = load_dga(oracle::path("data/k2.dga"));
        require(computed.pres.generators() == file.pres.generators(), "generator lists differ");
        for (std::size_t i = 0; i < file.size(); ++i)
            require(computed.differential[i] == file.differential[i],
                    "d" + std::string(file.pres.generators()[i].name()) + " differs");
        return std::string();
    });

    criterion(3, "K1 over Z[t,t^-1]: d^2 = 0, mod 2 agreement, diagonal equivalence", 300.0, [] {
        Dga computed = plat(K1, 8, Ring::ZT);
        Dga file = load_dga(oracle::path("data/k1.dga"));
        auto d2 = check_d_squared(computed);
        require(d2.pass, "d^2 fails");
        require(specialize(computed) == specialize(file), "mod 2 reductions differ");
        auto w = dga_diag_equivalent(computed, file);
        require(w.has_value(), "no diagonal witness");
        require(apply_diagonal(computed, *w) == file, "witness does not map one DGA onto the other");
        int flips = static_cast<int>(std::count(w->signs.begin(), w->signs.end(), -1));
        return "witness: " + std::to_string(flips) + " sign flips, t -> " + (w->t_sign < 0 ? "-" : "") + "t^" +
               std::to_string(w->t_exponent);
    });

    criterion(4, "K1 odd gradings; both bundled differentials homogeneous of degree -1", 1.0, [] {
        auto fr = build_front(parse_plat(K1, 8));
        auto gt = maslov_grading(fr);
        auto names = generator_names(fr);
        std::vector<std::string> odd;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (gt.grading[i] % 2 != 0) odd.push_back(names[i]);
        require(odd == std::vector<std::string>{"x2", "x3", "x5", "x9", "x11", "x12", "x13", "x15", "x20", "x21",
                                                "x22", "x23"},
                "odd set differs");
        std::string why;
        for (const char* f : {"data/k1.dga", "data/k2.dga"})
            require(is_homogeneous_degree_minus_one(load_dga(oracle::path(f)), &why), std::string(f) + ": " + why);
        return std::string();
    });

    criterion(5, "classical invariants of K1, K2 and T(p,-q)", 1.0, [] {
        for (auto [w, n] : {std::pair{K1, 8}, {K2, 6}}) {
            auto inv = classical_invariants(build_front(parse_plat(w, n)));
            require(inv.tb == -1 && inv.r == 0, "K: tb " + std::to_string(inv.tb) + " r " + std::to_string(inv.r));
        }
        for (auto [p, q] : {std::pair{3, 4}, {3, 5}, {5, 6}, {5, 8}}) {
            auto inv = classical_invariants(torus_front(p, q));
            require(inv.tb == -p * q, "T(" + std::to_string(p) + "," + std::to_string(q) + ") tb " +
                                          std::to_string(inv.tb));
        }
        return std::string();
    });

    criterion(6, "K1 trivial: d(e) = 1 with d(a) = b, d(b) = 0, d(c) = 1 + (x17 - a x15) x7", 1.0, [] {
        Dga g = load_dga(oracle::path("data/k1.dga"));
        auto d = g.derivation();
        auto P = [&](const std::string& s) { return parse_ncpoly(s, Ring::ZT, &g.pres); };
        const std::string a = "(x12.(x4.(1 + x2.x5) - x8) + x14.x5)";
        const std::string b = "(x10.x4.(1 + x2.x5) - x10.x8 + x13.x5)";
        const std::string c = "(x22 + x12 - " + a + ".x18)";
        require(d(P(a)) == P(b), "d(a) != b");
        require(d(P(b)).is_zero(), "d(b) != 0");
        require(d(P(c)) == P("1 + (x17 - " + a + ".x15).x7"), "d(c) wrong");
        require(verify_unit(g, expr_file(g, "certs/k1_unit.expr")), "d(e) != 1");
        require(verify_unit(plat(K1, 8, Ring::ZT), expr_file(g, "certs/k1_unit.expr")), "d(e) != 1 (computed DGA)");
        auto rs = char_algebra(g);
        auto v = verify_certificate(rs, parse_certificate(read("certs/k1_trivial.cert"), rs));
        require(v.pass && v.derived_unit, "certificate: " + v.message);
        return std::string();
    });

    criterion(7, "K2 quotient chain and the relations of R", 1.0, [] {
        Dga g = load_dga(oracle::path("data/k2.dga"));
        auto rs = char_algebra(g);
        auto v = verify_certificate(rs, parse_certificate(read("certs/k2_quotient.cert"), rs));
        require(v.pass, v.message);
        std::map<std::string, const RegisteredRelation*> t;
        for (const auto& r : v.table) t[r.rel.name] = &r;
        auto P = [&](const std::string& s) { return parse_ncpoly(s, Ring::F2, &g.pres); };
        auto genuine = [&](const char* name, const std::string& value) {
            require(t.contains(name) && !t[name]->adjoined && t[name]->rel.value == P(value),
                    std::string(name) + " != " + value);
        };
        genuine("dx2", "x1");
        genuine("dx8", "x6");
        genuine("r11", "x11");
        genuine("r12", "x12");
        genuine("r15", "x15");
        genuine("r14", "x14 + x20");

        // relabel x2, x5, x18 as a, b, c
        GradedPresentation abc(Ring::F2);
        for (const char* s : {"a", "b", "c"}) abc.add_generator(Symbol(s));
        Substitution relabel{{Symbol("x2"), parse_ncpoly("a", Ring::F2)},
                             {Symbol("x5"), parse_ncpoly("b", Ring::F2)},
                             {Symbol("x18"), parse_ncpoly("c", Ring::F2)}};
        auto R = r_relations();
        auto in_R = [&](const char* name, const NcPoly& expected) {
            require(t.contains(name), std::string("missing ") + name);
            require(substitute(t[name]->rel.value, relabel) == expected, std::string(name) + " does not relabel");
        };
        NcPoly one_plus_a = parse_ncpoly("1 + a", Ring::F2, &abc);
        in_R("q25c", one_plus_a * R[0].second);  // (1 + a)(1 + c(1 + ab) + ac(1 + ba))
        in_R("q22", R[1].second);                // (1 + ba)c
        in_R("q23", R[2].second);                // 1 + (1 + ab)c
        in_R("q24b", R[3].second);               // 1 + (1 + ba)ac
        return std::string("first relation of R derived times (1 + a)");
    });

    criterion(8, "R acts on the truncation N = 256; corrupted b fails", 1.0, [] {
        auto rep = verify_R_relations(256);
        require(rep.pass && rep.checks.size() == 7, "relation check failed");
        long smallest = 1 << 30;
        for (const auto& c : rep.checks) smallest = std::min(smallest, c.checked_upto);
        require(smallest >= 31, "valid domain too small");
        auto ops = build_R_truncated(256);
        ops.b = TruncatedOp::from_basis(256, [](long i) {
            long k = i / 2;
            return i % 2 == 0 ? TruncatedOp::Image{2 * k + 1} : TruncatedOp::Image{2 * k + 2, 4 * k + 4};
        });
        require(!verify_R_relations(ops).pass, "mutation not detected");
        return "checked on v0..v" + std::to_string(smallest) + " or more";
    });

    criterion(9, "C(K2) has no finite-dimensional representation", 1.0, [] {
        Dga g = load_dga(oracle::path("data/k2.dga"));
        auto rs = char_algebra(g);
        auto cert = parse_certificate(read("certs/k2_norep.cert"), rs);
        NcPoly a = parse_ncpoly("1 + x5.(x2 + x3)", Ring::F2, &g.pres);
        NcPoly b = parse_ncpoly("x20", Ring::F2, &g.pres);
        auto v = adjoin_and_derive(rs, a, b, cert);
        require(v.no_finite_representation, v.message);
        return std::string();
    });

    criterion(10, "augmentations: none for K1, K2, T(3,-4), T(3,-5), m(9_42); some for the trefoil", 60.0, [] {
        std::vector<std::pair<std::string, Dga>> empty{
            {"K1", load_dga(oracle::path("data/k1.dga"))},
            {"K2", load_dga(oracle::path("data/k2.dga"))},
            {"T(3,-4)", torus_dga(3, 4).dga},
            {"T(3,-5)", torus_dga(3, 5).dga},
            {"m(9_42)", plat(M942, 6, Ring::F2)}};
        for (const auto& [name, g] : empty) require(find_augmentations(g).empty(), name + " has an augmentation");
        Dga tre = plat("2,2,2", 4, Ring::F2);
        auto augs = find_augmentations(tre);
        require(!augs.empty(), "trefoil has none");
        auto vec = [](const std::vector<Augmentation>& a) { return std::vector<std::vector<bool>>(a.begin(), a.end()); };
        require(vec(augs) == oracle::brute_force_augmentations(tre), "trefoil disagrees with enumeration");
        require(oracle::brute_force_augmentations(empty[2].second).empty(), "T(3,-4) disagrees with enumeration");
        return "trefoil: " + std::to_string(augs.size());
    });

    criterion(11, "torus representations for (3,4), (3,5), (5,6), (5,8)", 60.0, [] {
        const SmallMat A = SmallMat::from_bits(2, "0100"), B = SmallMat::from_bits(2, "0010");
        require((A * A).is_zero() && (B * B).is_zero() && A * B + B * A == SmallMat::identity(2), "a, b relations");
        for (auto [p, q] : {std::pair{3, 4}, {3, 5}, {5, 6}, {5, 8}}) {
            auto t = torus_dga(p, q);
            auto rho = torus_rep(t.labels, t.dga);
            for (const auto& [s, m] : rho.images) require(m.is_zero() || m == A || m == B, "unexpected image");
            require(verify_matrix_rep(t.dga, rho), "T(" + std::to_string(p) + ",-" + std::to_string(q) + ")");
        }
        return std::string();
    });

    criterion(12, "Mat2(F2) presentation: 16 elements, bijective", 1.0, [] {
        auto rep = mat2_presentation_check();
        require(rep.pass && rep.quotient_size == 16 && rep.bijective, "check failed");
        return std::string();
    });

    criterion(13, "m(9_42): 2-dimensional representation by search, bundled file verifies", 600.0, [] {
        Dga g = plat(M942, 6, Ring::F2);
        auto bundled = load_rep(oracle::path("reps/m9_42_dim2.rep"));
        require(verify_matrix_rep(g, bundled), "bundled representation fails");
        auto res = search_matrix_rep(g, 2, 100'000'000);
        require(res.rep.has_value(), "not found within budget");
        require(verify_matrix_rep(g, *res.rep), "found representation fails");
        return "found after " + std::to_string(res.nodes) + " nodes";
    });

    criterion(14, "property suites: random knots, algebra laws, file round trips", 120.0, [] {
        std::mt19937_64 rng(14);
        for (int i = 0; i < 100; ++i) {
            std::string word;
            auto fr = oracle::random_knot(rng, i % 3 == 0 ? 6 : 4, 4 + i % 9, &word);
            Dga z = compute_dga(fr, Ring::ZT);
            require(check_d_squared(z).pass, "d^2 on " + word);
            require(is_homogeneous_degree_minus_one(z), "grading on " + word);
        }
        std::uniform_int_distribution<int> gen(1, 4), len(0, 3), coef(-3, 3), ex(-2, 2);
        auto random_poly = [&](Ring r) {
            std::vector<Term> ts;
            for (int k = 0; k < 4; ++k) {
                Word w;
                for (int j = len(rng); j > 0; --j) w.push_back(Symbol("x" + std::to_string(gen(rng))));
                ts.push_back({r == Ring::F2 ? Laurent(1) : Laurent::monomial(coef(rng), ex(rng)), w});
            }
            return NcPoly::from_terms(r, ts);
        };
        for (int i = 0; i < 500; ++i) {
            Ring r = i % 2 ? Ring::ZT : Ring::F2;
            NcPoly a = random_poly(r), b = random_poly(r), c = random_poly(r);
            require((a * b) * c == a * (b * c), "associativity");
            require(a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c, "distributivity");
            require(a + b == b + a && (a - a).is_zero(), "addition");
            require(parse_ncpoly(a.str(), r) == a, "rendering round trip");
        }
        for (const char* f : {"data/k1.dga", "data/k2.dga"}) {
            Dga g = load_dga(oracle::path(f));
            require(deserialize(serialize(g)) == g, std::string("round trip ") + f);
        }
        auto rho = load_rep(oracle::path("reps/m9_42_dim2.rep"));
        require(read_rep(write_rep(rho)) == rho, "rep round trip");
        return std::string();
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures;
}
