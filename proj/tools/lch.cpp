// Command-line front end for the lch library.
//
// Exit codes: 0 verified or completed, 1 an assertion failed, 2 usage or
// input error.

#include "lch/chalg.hpp"
#include "lch/dga.hpp"
#include "lch/reps.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace lch;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string dga_path;
    std::string word;
    int strands = 0;
    std::string ring = "f2";
    int base_point = 0;
};

void add_input(CLI::App* cmd, Input& in, bool allow_dga = true)
{
    if (allow_dga) cmd->add_option("--dga", in.dga_path, "DGA file");
    cmd->add_option("--strands", in.strands, "Number of plat strands (with a braid word)");
    cmd->add_option("word", in.word, "Comma-separated plat braid word");
    cmd->add_option("--ring", in.ring, "Coefficient ring for computed DGAs")
        ->check(CLI::IsMember({"f2", "zt"}, CLI::ignore_case));
    cmd->add_option("--base-point", in.base_point,
                    "Right cusp (1-based, top to bottom) carrying the base point; default last");
}

Ring parse_ring(const std::string& s) { return (s == "zt" || s == "ZT") ? Ring::ZT : Ring::F2; }

FrontDiagram front_of(const Input& in)
{
    if (in.strands == 0) throw InputError("--strands is required with a braid word");
    return build_front(parse_plat(in.word, in.strands), in.base_point);
}

Dga dga_of(const Input& in)
{
    if (!in.dga_path.empty()) {
        if (in.strands != 0 || !in.word.empty()) throw InputError("give either --dga or a braid word, not both");
        return load_dga(in.dga_path);
    }
    return compute_dga(front_of(in), parse_ring(in.ring));
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Drops `#` comments and joins lines.
std::string read_expression(const std::string& path)
{
    std::istringstream in(read_file(path));
    std::string line, out;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        out += line + ' ';
    }
    return out;
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

int verdict(bool ok, const std::string& what)
{
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    return ok ? 0 : 1;
}

void print_cert_verdict(const CertVerdict& v, std::size_t original, bool verbose)
{
    if (!v.pass) {
        std::cout << "failed: " << v.message << "\n";
        if (!v.residual.is_zero()) std::cout << "residual: " << v.residual.str() << "\n";
        return;
    }
    if (!verbose) return;
    for (std::size_t i = original; i < v.table.size(); ++i)
        std::cout << "  " << v.table[i].rel.name << (v.table[i].adjoined ? " [quotient]" : "") << " = "
                  << v.table[i].rel.value.str() << "\n";
}

int configure_threads(int requested)
{
    int n = requested;
    if (n <= 0)
        if (const char* env = std::getenv("LCH_THREADS")) n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
    return n;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Legendrian contact homology: DGAs of plat fronts, characteristic algebras, representations"};
    app.require_subcommand(1);
    int threads = 0;
    bool verbose = false;
    app.add_option("--threads", threads, "Worker threads (default: LCH_THREADS or the OpenMP default)");
    app.add_flag("-v,--verbose", verbose, "Print intermediate results");

    // dga
    Input dga_in;
    std::string dga_out;
    auto* dga_cmd = app.add_subcommand("dga", "Compute the Chekanov-Eliashberg DGA of a plat");
    add_input(dga_cmd, dga_in, false);
    dga_cmd->add_option("-o,--out", dga_out, "Output file (default stdout)");

    // invariants, grading
    Input inv_in;
    auto* inv_cmd = app.add_subcommand("invariants", "Print tb, r and the writhe of a plat");
    add_input(inv_cmd, inv_in, false);
    Input gr_in;
    auto* gr_cmd = app.add_subcommand("grading", "Print generator gradings of a plat");
    add_input(gr_cmd, gr_in, false);

    // torus-dga
    int tp = 3, tq = 4;
    std::string torus_out;
    auto* tdga_cmd = app.add_subcommand("torus-dga", "DGA of the Legendrian negative torus knot T(p,-q)");
    tdga_cmd->add_option("--p", tp, "p (>= 3)")->required();
    tdga_cmd->add_option("--q", tq, "q (> p)")->required();
    tdga_cmd->add_option("-o,--out", torus_out, "Output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a claim; exit 0 on pass, 1 on failure");
    verify->require_subcommand(1);

    Input d2_in;
    auto* v_d2 = verify->add_subcommand("d2", "d^2 = 0 and degree -1 homogeneity");
    add_input(v_d2, d2_in);

    Input unit_in;
    std::string unit_expr, unit_file;
    auto* v_unit = verify->add_subcommand("unit", "d(e) = 1 for a given element e");
    add_input(v_unit, unit_in);
    v_unit->add_option("--element", unit_expr, "Element as text");
    v_unit->add_option("--element-file", unit_file, "File holding the element");

    Input cert_in;
    std::string cert_path;
    bool cert_mod2 = false;
    auto* v_cert = verify->add_subcommand("cert", "Replay a derivation certificate");
    add_input(v_cert, cert_in);
    v_cert->add_option("--cert", cert_path, "Certificate file")->required();
    v_cert->add_flag("--mod2", cert_mod2, "Reduce the DGA to Z/2 first");

    Input rep_in;
    std::string rep_path;
    auto* v_rep = verify->add_subcommand("rep", "Check a matrix representation against every differential");
    add_input(v_rep, rep_in);
    v_rep->add_option("--rep", rep_path, "Representation file")->required();

    Input norep_in;
    std::string norep_cert, norep_a, norep_b;
    auto* v_norep = verify->add_subcommand("norep", "No finite-dimensional representation via ab = 1, ba = 1 => 0 = 1");
    add_input(v_norep, norep_in);
    v_norep->add_option("--cert", norep_cert, "Certificate file")->required();
    v_norep->add_option("--a", norep_a, "Element a (default from the certificate)");
    v_norep->add_option("--b", norep_b, "Element b (default from the certificate)");

    int vt_p = 3, vt_q = 4;
    std::string vt_write;
    auto* v_torus = verify->add_subcommand("torus", "Check the 2-dimensional representation of T(p,-q)");
    v_torus->add_option("--p", vt_p, "p (>= 3)")->required();
    v_torus->add_option("--q", vt_q, "q (> p)")->required();
    v_torus->add_option("--write-rep", vt_write, "Also write the representation to this file");

    std::size_t rN = 256;
    auto* v_R = verify->add_subcommand("R", "Check the truncated infinite-dimensional representation of R");
    v_R->add_option("--N", rN, "Truncation size (>= 64)");

    auto* v_mat2 = verify->add_subcommand("mat2", "Check the presentation of Mat2(F2) by a, b");

    // search
    auto* search = app.add_subcommand("search", "Search for representations");
    search->require_subcommand(1);
    Input aug_in;
    bool aug_graded = false;
    auto* s_aug = search->add_subcommand("aug", "List all augmentations");
    add_input(s_aug, aug_in);
    s_aug->add_flag("--graded", aug_graded, "Only graded augmentations");

    Input mat_in;
    int mat_n = 2;
    double mat_budget = 1e8;
    std::string mat_out;
    bool mat_serial = false;
    auto* s_mat = search->add_subcommand("matrep", "First n-dimensional representation in search order");
    add_input(s_mat, mat_in);
    s_mat->add_option("--n", mat_n, "Matrix size")->check(CLI::Range(1, 8));
    s_mat->add_option("--budget", mat_budget, "Node budget")->check(CLI::PositiveNumber);
    s_mat->add_option("-o,--out", mat_out, "Write the representation to this file");
    s_mat->add_flag("--serial", mat_serial, "Use the single-threaded search");

    // saturate
    Input sat_in;
    SaturationLimits limits;
    auto* sat_cmd = app.add_subcommand("saturate", "Eliminate generators from relations linear in them");
    add_input(sat_cmd, sat_in);
    sat_cmd->add_option("--max-applications", limits.max_applications, "Rule application limit")
        ->check(CLI::PositiveNumber);
    sat_cmd->add_option("--max-degree", limits.max_degree, "Relation degree limit")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    configure_threads(threads);

    try {
        if (*dga_cmd) {
            write_output(dga_out, serialize(dga_of(dga_in)));
            return 0;
        }
        if (*inv_cmd) {
            auto fr = front_of(inv_in);
            auto inv = classical_invariants(fr);
            std::cout << "tb " << inv.tb << "\nr " << inv.r << "\nwrithe " << inv.writhe << "\ngenerators "
                      << generator_names(fr).size() << "\n";
            return 0;
        }
        if (*gr_cmd) {
            auto fr = front_of(gr_in);
            auto gt = maslov_grading(fr);
            auto names = generator_names(fr);
            std::cout << "modulus " << gt.modulus << "\n";
            std::string odd;
            for (std::size_t i = 0; i < names.size(); ++i) {
                std::cout << names[i] << " " << gt.grading[i] << "\n";
                int r = gt.modulus ? ((gt.grading[i] % gt.modulus) + gt.modulus) % gt.modulus : gt.grading[i];
                if (r % 2 != 0) odd += (odd.empty() ? "" : ",") + names[i];
            }
            std::cout << "odd " << odd << "\n";
            return 0;
        }
        if (*tdga_cmd) {
            write_output(torus_out, serialize(torus_dga(tp, tq).dga));
            return 0;
        }
        if (*v_d2) {
            Dga g = dga_of(d2_in);
            auto rep = check_d_squared(g);
            std::string why;
            bool homog = !g.pres.fully_graded() || is_homogeneous_degree_minus_one(g, &why);
            if (!rep.pass) std::cout << "d^2 " << rep.failing->name() << " = " << rep.residual.str() << "\n";
            if (!homog) std::cout << why << "\n";
            return verdict(rep.pass && homog, "d^2 = 0 on " + std::to_string(g.size()) + " generators" +
                                                  (g.pres.fully_graded() ? ", homogeneous of degree -1" : ""));
        }
        if (*v_unit) {
            Dga g = dga_of(unit_in);
            if (unit_expr.empty() == unit_file.empty()) throw InputError("give exactly one of --element, --element-file");
            std::string text = unit_file.empty() ? unit_expr : read_expression(unit_file);
            NcPoly e = parse_ncpoly(text, g.ring(), &g.pres);
            NcPoly de = g.derivation()(e);
            if (verbose) std::cout << "d(e) = " << de.str() << "\n";
            return verdict(de.is_one(), "d(e) = 1");
        }
        if (*v_cert) {
            Dga g = dga_of(cert_in);
            if (cert_mod2) g = specialize(g);
            RelationSet rs = char_algebra(g);
            Certificate cert = load_certificate(cert_path, rs);
            CertVerdict v = verify_certificate(rs, cert);
            print_cert_verdict(v, rs.relations.size(), verbose);
            std::string what = std::to_string(cert.steps.size()) + " certificate steps";
            if (v.derived_unit) what += v.unit_depends_on_adjoined ? ", 0 = 1 in the quotient" : ", 0 = 1";
            return verdict(v.pass, what);
        }
        if (*v_rep) {
            Dga g = dga_of(rep_in);
            MatRepAssignment rho = load_rep(rep_path);
            return verdict(verify_matrix_rep(g, rho), "representation of dimension " + std::to_string(rho.n));
        }
        if (*v_norep) {
            Dga g = dga_of(norep_in);
            RelationSet rs = char_algebra(g);
            Certificate cert = load_certificate(norep_cert, rs);
            auto pick = [&](const std::string& text, const std::optional<NcPoly>& dflt, const char* which) {
                if (!text.empty()) return parse_ncpoly(text, g.ring(), &g.pres);
                if (!dflt) throw InputError(std::string("no element ") + which + " given");
                return *dflt;
            };
            NcPoly a = pick(norep_a, cert.norep_a, "a");
            NcPoly b = pick(norep_b, cert.norep_b, "b");
            auto v = adjoin_and_derive(rs, a, b, cert);
            print_cert_verdict(v.replay, rs.relations.size() + 1, verbose);
            std::cout << "a = " << a.str() << "\nb = " << b.str() << "\n" << v.message << "\n";
            return verdict(v.no_finite_representation, "no finite-dimensional representation");
        }
        if (*v_torus) {
            auto t = torus_dga(vt_p, vt_q);
            auto inv = classical_invariants(t.front);
            auto rho = torus_rep(t.labels, t.dga);
            const SmallMat A = SmallMat::from_bits(2, "0100"), B = SmallMat::from_bits(2, "0010");
            bool mat2 = (A * A).is_zero() && (B * B).is_zero() && A * B + B * A == SmallMat::identity(2);
            bool ok = verify_matrix_rep(t.dga, rho);
            if (!vt_write.empty()) write_output(vt_write, write_rep(rho));
            std::cout << "tb " << inv.tb << " (expected " << -vt_p * vt_q << ")\n";
            return verdict(ok && mat2 && inv.tb == -vt_p * vt_q,
                           "T(" + std::to_string(vt_p) + ",-" + std::to_string(vt_q) + ") 2-dimensional representation");
        }
        if (*v_R) {
            auto rep = verify_R_relations(rN);
            for (const auto& c : rep.checks)
                std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.label << "  on v0..v" << c.checked_upto << "\n";
            return verdict(rep.pass, "relations of R on the truncation N = " + std::to_string(rN));
        }
        if (*v_mat2) {
            auto rep = mat2_presentation_check();
            std::cout << "quotient size " << rep.quotient_size << ", basis";
            for (const auto& w : rep.normal_words) std::cout << " " << (w.empty() ? "1" : w);
            std::cout << "\n";
            return verdict(rep.pass, "F2<a,b>/(a^2, b^2, ab + ba + 1) = Mat2(F2)");
        }
        if (*s_aug) {
            Dga g = dga_of(aug_in);
            auto augs = find_augmentations(g, aug_graded);
            std::cout << "augmentations " << augs.size() << "\n";
            for (const auto& a : augs) {
                std::string ones;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (a[i]) ones += (ones.empty() ? "" : " ") + std::string(g.pres.generators()[i].name());
                std::cout << "  {" << ones << "}\n";
            }
            return 0;
        }
        if (*s_mat) {
            Dga g = dga_of(mat_in);
            auto budget = static_cast<std::uint64_t>(mat_budget);
            auto res = mat_serial ? search_matrix_rep_serial(g, mat_n, budget) : search_matrix_rep(g, mat_n, budget);
            std::cout << "nodes " << res.nodes << "\n";
            if (!res.rep) {
                std::cout << "representations 0" << (res.exhausted ? " (search complete)" : " (budget exhausted)") << "\n";
                return 0;
            }
            std::cout << "representations 1\n";
            if (mat_out.empty()) std::cout << write_rep(*res.rep);
            else write_output(mat_out, write_rep(*res.rep));
            return 0;
        }
        if (*sat_cmd) {
            Dga g = specialize(dga_of(sat_in));
            auto res = bounded_saturation(char_algebra(g), limits);
            for (const auto& [s, v] : res.eliminated) std::cout << s.name() << " -> " << v.str() << "\n";
            std::cout << "surviving generators " << res.reduced.pres.size() << ", relations "
                      << res.reduced.relations.size() << ", applications " << res.applications << "\n";
            if (verbose)
                for (const auto& r : res.reduced.relations) std::cout << "  " << r.name << " = " << r.value.str() << "\n";
            std::cout << (res.trivial ? "trivial: 0 = 1\n" : "no unit relation found\n");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
