#include "lch/dga.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lch {

Derivation Dga::derivation() const
{
    std::unordered_map<Symbol, NcPoly> images;
    for (std::size_t i = 0; i < pres.size(); ++i)
        if (!differential[i].is_zero())
            images.emplace(pres.generators()[i], differential[i]);
    return Derivation(pres, std::move(images));
}

namespace {

struct SweepContext {
    const FrontDiagram& front;
    Ring ring;
    std::vector<Symbol> names;
    std::vector<int> generator_of_event;  // crossing generator index or -1
    std::vector<int> parity;              // grading parity per generator
    std::size_t max_states;
};

struct PartialDisk {
    std::vector<int> upper;  // corners on the upper boundary, right to left
    std::vector<int> lower;  // corners on the lower boundary, right to left
    int sign = 1;
    std::size_t states = 0;
};

// Corner sign over Z[t,t^-1]: even crossings with the disk below them.
int corner_sign(const SweepContext& ctx, int gen, bool disk_below)
{
    return (disk_below && ctx.parity[static_cast<std::size_t>(gen)] == 0) ? -1 : 1;
}

void emit(const SweepContext& ctx, const PartialDisk& disk, std::vector<Term>& out)
{
    Word w;
    w.reserve(disk.upper.size() + disk.lower.size());
    // Counterclockwise from the positive corner: along the top leftward,
    // then along the bottom rightward.
    for (int g : disk.upper)
        w.push_back(ctx.names[static_cast<std::size_t>(g)]);
    for (auto it = disk.lower.rbegin(); it != disk.lower.rend(); ++it)
        w.push_back(ctx.names[static_cast<std::size_t>(*it)]);
    out.push_back({Laurent(disk.sign), std::move(w)});
}

void sweep(const SweepContext& ctx, std::size_t e, int u, int l, PartialDisk& disk, std::vector<Term>& out)
{
    if (++disk.states > ctx.max_states)
        throw DgaError("disk sweep exceeded the safety bound of " + std::to_string(ctx.max_states) + " states");
    const auto& events = ctx.front.events();
    while (e > 0) {
        --e;
        const FrontEvent& ev = events[e];
        const int j = ev.level;
        if (ev.kind == EventKind::Crossing) {
            if (j + 1 < u || j > l)
                continue;
            if (j == u && j + 1 == l)
                return;  // boundary arcs would cross
            if (j == u) {
                u = j + 1;
                continue;
            }
            if (j + 1 == l) {
                l = j;
                continue;
            }
            const int gen = ctx.generator_of_event[e];
            if (j + 1 == u) {
                sweep(ctx, e, j, l, disk, out);  // slide past
                disk.upper.push_back(gen);
                const int s = corner_sign(ctx, gen, true);
                disk.sign *= s;
                sweep(ctx, e, u, l, disk, out);  // convex corner, disk below the crossing
                disk.sign *= s;
                disk.upper.pop_back();
                return;
            }
            if (j == l) {
                sweep(ctx, e, u, j + 1, disk, out);
                disk.lower.push_back(gen);
                const int s = corner_sign(ctx, gen, false);
                disk.sign *= s;
                sweep(ctx, e, u, l, disk, out);
                disk.sign *= s;
                disk.lower.pop_back();
                return;
            }
            continue;  // interior crossing
        }
        if (ev.kind == EventKind::LeftCusp) {
            if (u == j && l == j + 1) {
                emit(ctx, disk, out);
                return;
            }
            if (u == j || u == j + 1 || l == j || l == j + 1)
                return;
            if (j + 1 < u) {
                u -= 2;
                l -= 2;
            } else if (j < l) {
                l -= 2;
            }
            continue;
        }
        throw DgaError("right cusp to the left of a positive corner: front is not simple");
    }
}

SweepContext make_context(const FrontDiagram& d, Ring ring, const SweepOptions& opt)
{
    SweepContext ctx{d, ring, {}, {}, {}, opt.max_states};
    for (const auto& n : generator_names(d))
        ctx.names.emplace_back(n);
    ctx.generator_of_event.assign(d.events().size(), -1);
    for (std::size_t i = 0; i < d.crossings().size(); ++i)
        ctx.generator_of_event[d.crossings()[i].event] = static_cast<int>(i);
    const GradingTable gt = maslov_grading(d);
    for (int g : gt.grading)
        ctx.parity.push_back(g & 1);
    return ctx;
}

GradedPresentation presentation_for(const FrontDiagram& d, Ring ring, const SweepContext& ctx)
{
    GradedPresentation pres(ring);
    const GradingTable gt = maslov_grading(d);
    pres.set_grading_modulus(gt.modulus);
    for (std::size_t i = 0; i < ctx.names.size(); ++i)
        pres.add_generator(ctx.names[i], gt.grading[i]);
    return pres;
}

NcPoly differential_of(const SweepContext& ctx, std::size_t gen)
{
    const FrontDiagram& d = ctx.front;
    const std::size_t ncross = d.crossings().size();
    std::vector<Term> terms;
    PartialDisk disk;
    if (gen < ncross) {
        const auto& c = d.crossings()[gen];
        sweep(ctx, c.event, c.level, c.level + 1, disk, terms);
    } else {
        const int cusp = static_cast<int>(gen - ncross) + 1;
        const std::size_t first_right = d.right_cusps().front().event;
        sweep(ctx, first_right, 2 * cusp - 1, 2 * cusp, disk, terms);
        // The small disk bounded by the cusp itself.
        Laurent c = (ctx.ring == Ring::ZT && cusp == d.base_point_cusp()) ? Laurent::t_power(-1) : Laurent(1);
        terms.push_back({c, {}});
    }
    return NcPoly::from_terms(ctx.ring, std::move(terms));
}

}  // namespace

Dga compute_dga_serial(const FrontDiagram& d, Ring ring, const SweepOptions& opt)
{
    const SweepContext ctx = make_context(d, ring, opt);
    Dga g{presentation_for(d, ring, ctx), {}, d};
    for (std::size_t i = 0; i < ctx.names.size(); ++i)
        g.differential.push_back(differential_of(ctx, i));
    return g;
}

Dga compute_dga(const FrontDiagram& d, Ring ring, const SweepOptions& opt)
{
    const SweepContext ctx = make_context(d, ring, opt);
    Dga g{presentation_for(d, ring, ctx), {}, d};
    const auto n = static_cast<std::ptrdiff_t>(ctx.names.size());
    g.differential.assign(ctx.names.size(), NcPoly(ring));
    std::string error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            g.differential[static_cast<std::size_t>(i)] = differential_of(ctx, static_cast<std::size_t>(i));
        } catch (const std::exception& ex) {
#pragma omp critical(lch_sweep_error)
            if (error.empty())
                error = ex.what();
        }
    }
    if (!error.empty())
        throw DgaError(error);
    return g;
}

Dga specialize(const Dga& g)
{
    Dga out = g;
    out.pres.set_ring(Ring::F2);
    for (auto& p : out.differential)
        p = specialize(p);
    return out;
}

D2Report check_d_squared(const Dga& g)
{
    const Derivation D = g.derivation();
    for (std::size_t i = 0; i < g.size(); ++i) {
        NcPoly r = D(g.differential[i]);
        if (!r.is_zero())
            return {false, g.pres.generators()[i], r};
    }
    return {true, std::nullopt, NcPoly(g.ring())};
}

bool is_homogeneous_degree_minus_one(const Dga& g, std::string* why)
{
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Symbol s = g.pres.generators()[i];
        try {
            auto deg = homogeneous_degree(g.pres, g.differential[i]);
            auto own = g.pres.grading(s);
            if (deg && own && *deg != g.pres.reduce(*own - 1)) {
                if (why)
                    *why = "d" + std::string(s.name()) + " has degree " + std::to_string(*deg) + ", expected " +
                           std::to_string(g.pres.reduce(*own - 1));
                return false;
            }
        } catch (const AlgebraError& ex) {
            if (why)
                *why = "d" + std::string(s.name()) + ": " + ex.what();
            return false;
        }
    }
    return true;
}

// Diagonal equivalence -------------------------------------------------------------

namespace {

// Solves A e = b over GF(2); rows are bitsets of length n (+1 for rhs).
class Gf2System {
public:
    explicit Gf2System(std::size_t n) : n_(n), words_((n + 1 + 63) / 64) {}

    void add(const std::vector<std::size_t>& vars, bool rhs)
    {
        std::vector<std::uint64_t> row(words_, 0);
        for (auto v : vars)
            row[v / 64] ^= std::uint64_t(1) << (v % 64);
        if (rhs)
            row[n_ / 64] ^= std::uint64_t(1) << (n_ % 64);
        rows_.push_back(std::move(row));
    }

    std::optional<std::vector<int>> solve()
    {
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t c = 0; c < n_ && r < rows_.size(); ++c) {
            std::size_t p = r;
            while (p < rows_.size() && !bit(rows_[p], c))
                ++p;
            if (p == rows_.size())
                continue;
            std::swap(rows_[p], rows_[r]);
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (i != r && bit(rows_[i], c))
                    for (std::size_t w = 0; w < words_; ++w)
                        rows_[i][w] ^= rows_[r][w];
            pivot_col.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < rows_.size(); ++i)
            if (bit(rows_[i], n_))
                return std::nullopt;
        std::vector<int> x(n_, 0);  // free variables chosen as 0 (sign +1)
        for (std::size_t i = 0; i < r; ++i)
            x[pivot_col[i]] = bit(rows_[i], n_) ? 1 : 0;
        return x;
    }

private:
    static bool bit(const std::vector<std::uint64_t>& row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1; }
    std::size_t n_, words_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace

std::optional<DiagonalWitness> dga_diag_equivalent(const Dga& g1, const Dga& g2)
{
    if (g1.size() != g2.size())
        return std::nullopt;
    for (std::size_t i = 0; i < g1.size(); ++i)
        if (g1.pres.grading(g1.pres.generators()[i]) != g2.pres.grading(g2.pres.generators()[i]))
            return std::nullopt;
    std::unordered_map<Symbol, std::size_t> index1;
    for (std::size_t i = 0; i < g1.size(); ++i)
        index1.emplace(g1.pres.generators()[i], i);
    // Words of g1 are translated to g2's names position by position.
    Substitution rename;
    for (std::size_t i = 0; i < g1.size(); ++i)
        rename.emplace(g1.pres.generators()[i], NcPoly::generator(g1.ring(), g2.pres.generators()[i]));

    const int choices[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (const auto& [ts, te] : choices) {
        if (g1.ring() == Ring::F2 && (ts != 1 || te != 1))
            continue;
        Gf2System sys(g1.size());
        bool ok = true;
        for (std::size_t v = 0; v < g1.size() && ok; ++v) {
            NcPoly lhs = substitute_t(substitute(g1.differential[v], rename), ts, te);
            const NcPoly& rhs = g2.differential[v];
            if (lhs.terms().size() != rhs.terms().size()) {
                ok = false;
                break;
            }
            for (std::size_t k = 0; k < lhs.terms().size(); ++k) {
                const Term& a = lhs.terms()[k];
                const Term& b = rhs.terms()[k];
                if (a.word != b.word) {
                    ok = false;
                    break;
                }
                bool flip;
                if (a.coeff == b.coeff)
                    flip = false;
                else if (a.coeff == -b.coeff)
                    flip = true;
                else {
                    ok = false;
                    break;
                }
                std::vector<std::size_t> vars{v};
                for (Symbol s : b.word)
                    vars.push_back(g2.pres.index_of(s));
                sys.add(vars, flip);
            }
        }
        if (!ok)
            continue;
        if (auto sol = sys.solve()) {
            DiagonalWitness w;
            w.t_sign = ts;
            w.t_exponent = te;
            for (int bit : *sol)
                w.signs.push_back(bit ? -1 : 1);
            return w;
        }
    }
    return std::nullopt;
}

Dga apply_diagonal(const Dga& g, const DiagonalWitness& w)
{
    Dga out = g;
    Substitution sigma;
    for (std::size_t i = 0; i < g.size(); ++i)
        sigma.emplace(g.pres.generators()[i],
                      NcPoly::word(g.ring(), {g.pres.generators()[i]}, Laurent(w.signs.at(i))));
    for (std::size_t i = 0; i < g.size(); ++i) {
        NcPoly p = substitute_t(substitute(g.differential[i], sigma), w.t_sign, w.t_exponent);
        out.differential[i] = w.signs[i] < 0 ? -p : p;
    }
    return out;
}

// Torus knots ------------------------------------------------------------------------

FrontDiagram torus_front(int p, int q, TorusLabeling* labels)
{
    if (!(q > p && p >= 3))
        throw DgaError("torus front needs q > p >= 3");
    // Strand identities: (+i) upper branch, (-i) lower branch of left cusp i
    // on the outer edge; right-half identities are tracked separately.
    struct Strand {
        int right_cusp;  // numbered right cusp this strand ends at
        bool right_upper;
        int left_cusp;  // numbered outer left cusp, or 0 for inner cusps
        bool left_upper;
    };
    std::vector<FrontEvent> events;
    std::vector<Strand> slice;
    std::vector<std::pair<char, std::pair<int, int>>> crossing_labels;

    for (int i = 1; i <= p; ++i) {
        events.push_back({EventKind::LeftCusp, 2 * i - 1});
        slice.push_back({0, false, i, true});
        slice.push_back({0, false, i, false});
    }
    auto cross = [&](int level, char kind, int a, int b) {
        events.push_back({EventKind::Crossing, level});
        crossing_labels.push_back({kind, {a, b}});
        std::swap(slice[static_cast<std::size_t>(level - 1)], slice[static_cast<std::size_t>(level)]);
    };
    auto find = [&](auto pred) {
        for (std::size_t k = 0; k < slice.size(); ++k)
            if (pred(slice[k]))
                return static_cast<int>(k) + 1;
        throw DgaError("torus front construction lost a strand");
    };
    // Left half: upper branch of cusp j rises past the lower branches of
    // cusps j-1, ..., 1, leaving U1..Up L1..Lp.
    for (int j = 2; j <= p; ++j)
        for (int i = j - 1; i >= 1; --i) {
            int pos = find([&](const Strand& s) { return s.left_cusp == j && s.left_upper; });
            cross(pos - 1, 'x', i, j);
        }
    // Inner cusps between Up and L1.
    for (int k = 1; k <= q - p; ++k) {
        const int level = p + 2 * k - 1;
        events.push_back({EventKind::LeftCusp, level});
        slice.insert(slice.begin() + (level - 1), {Strand{0, false, 0, true}, Strand{0, false, 0, false}});
    }
    // Name the middle strands by the right cusps they reach: U'1..U'p,
    // (L'k, U'(p+k)) for each inner cusp k, then L'(q-p+1)..L'q.
    {
        std::size_t pos = 0;
        for (int i = 1; i <= p; ++i, ++pos)
            slice[pos].right_cusp = i, slice[pos].right_upper = true;
        for (int k = 1; k <= q - p; ++k) {
            slice[pos].right_cusp = k, slice[pos].right_upper = false, ++pos;
            slice[pos].right_cusp = p + k, slice[pos].right_upper = true, ++pos;
        }
        for (int i = q - p + 1; i <= q; ++i, ++pos)
            slice[pos].right_cusp = i, slice[pos].right_upper = false;
    }
    // Right half: lower branch of right cusp i rises past the upper
    // branches of cusps i+p-1, ..., i+1.
    for (int i = 1; i <= q; ++i) {
        for (;;) {
            int pos = find([&](const Strand& s) { return s.right_cusp == i && !s.right_upper; });
            const Strand& above = slice[static_cast<std::size_t>(pos - 2)];
            if (above.right_cusp == i)
                break;
            cross(pos - 1, 'y', i, above.right_cusp);
        }
    }
    for (int i = 1; i <= q; ++i)
        events.push_back({EventKind::RightCusp, i});

    FrontDiagram front(std::move(events));
    if (labels) {
        labels->p = p;
        labels->q = q;
        labels->x.clear();
        labels->y.clear();
        labels->z.clear();
        const auto names = generator_names(front);
        for (std::size_t c = 0; c < crossing_labels.size(); ++c) {
            const auto& [kind, ij] = crossing_labels[c];
            (kind == 'x' ? labels->x : labels->y).emplace(ij, Symbol(names[c]));
        }
        for (int i = 0; i < q; ++i)
            labels->z.emplace_back(names[crossing_labels.size() + static_cast<std::size_t>(i)]);
    }
    return front;
}

TorusDga torus_dga(int p, int q)
{
    TorusLabeling labels;
    FrontDiagram front = torus_front(p, q, &labels);
    Dga g = compute_dga(front, Ring::F2);
    return {front, std::move(g), std::move(labels)};
}

// Files -----------------------------------------------------------------------------

std::string serialize(const Dga& g)
{
    std::ostringstream os;
    os << "ring " << ring_name(g.ring()) << '\n';
    if (g.pres.grading_modulus() != 0)
        os << "modulus " << g.pres.grading_modulus() << '\n';
    for (Symbol s : g.pres.generators()) {
        os << "gen " << s.name();
        if (auto gr = g.pres.grading(s))
            os << ' ' << *gr;
        os << '\n';
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!g.differential[i].is_zero())
            os << "d " << g.pres.generators()[i].name() << " = " << g.differential[i].str() << '\n';
    return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;)
        out.push_back(w);
    return out;
}

}  // namespace

Dga deserialize(std::string_view text)
{
    Dga g;
    bool have_ring = false;
    std::vector<std::pair<std::size_t, std::string>> diffs;  // (line, rest)
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw DgaError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        auto words = split_ws(line);
        if (words.empty())
            continue;
        if (words[0] == "ring") {
            if (words.size() != 2 || (words[1] != "F2" && words[1] != "ZT"))
                fail("expected 'ring F2' or 'ring ZT'");
            if (!g.pres.generators().empty())
                fail("ring must precede generators");
            g.pres = GradedPresentation(words[1] == "F2" ? Ring::F2 : Ring::ZT);
            have_ring = true;
        } else if (words[0] == "modulus") {
            if (words.size() != 2)
                fail("expected 'modulus <m>'");
            g.pres.set_grading_modulus(std::stoi(words[1]));
        } else if (words[0] == "gen") {
            if (!have_ring)
                fail("'gen' before 'ring'");
            if (words.size() < 2 || words.size() > 3)
                fail("expected 'gen <name> [grading]'");
            std::optional<int> gr;
            if (words.size() == 3) {
                try {
                    gr = std::stoi(words[2]);
                } catch (const std::exception&) {
                    fail("bad grading '" + words[2] + "'");
                }
            }
            try {
                g.pres.add_generator(Symbol(words[1]), gr);
            } catch (const AlgebraError& ex) {
                fail(ex.what());
            }
        } else if (words[0] == "d") {
            auto eq = line.find('=');
            if (words.size() < 4 || words[2] != "=" || eq == std::string::npos)
                fail("expected 'd <name> = <poly>'");
            diffs.emplace_back(lineno, line.substr(line.find_first_not_of(" \t")));
        } else {
            fail("unknown directive '" + words[0] + "'");
        }
    }
    if (!have_ring)
        throw DgaError("missing 'ring' line");
    g.differential.assign(g.pres.size(), NcPoly(g.ring()));
    std::vector<bool> seen(g.pres.size(), false);
    for (const auto& [ln, rest] : diffs) {
        lineno = ln;
        auto words = split_ws(rest);
        Symbol s(words[1]);
        if (!g.pres.contains(s))
            fail("differential of unknown generator " + words[1]);
        const std::size_t idx = g.pres.index_of(s);
        if (seen[idx])
            fail("second differential for " + words[1]);
        seen[idx] = true;
        try {
            g.differential[idx] = parse_ncpoly(rest.substr(rest.find('=') + 1), g.ring(), &g.pres);
        } catch (const AlgebraError& ex) {
            fail(ex.what());
        }
    }
    return g;
}

Dga load_dga(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw DgaError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return deserialize(ss.str());
    } catch (const DgaError& ex) {
        throw DgaError(path + ": " + ex.what());
    }
}

}  // namespace lch
