#include "lch/chalg.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace lch {

const Relation* RelationSet::find(std::string_view name) const
{
    for (const auto& r : relations)
        if (r.name == name) return &r;
    return nullptr;
}

RelationSet char_algebra(const Dga& g)
{
    RelationSet rs{g.pres, {}, g.derivation()};
    for (std::size_t i = 0; i < g.size(); ++i)
        rs.relations.push_back({"d" + std::string(g.pres.generators()[i].name()), g.differential[i]});
    return rs;
}

RelationSet make_relation_set(Ring ring, const std::vector<std::string>& generators,
                              const std::vector<std::pair<std::string, std::string>>& relations)
{
    RelationSet rs{GradedPresentation(ring), {}, std::nullopt};
    for (const auto& g : generators) rs.pres.add_generator(Symbol(g));
    std::set<std::string> seen;
    for (const auto& [name, text] : relations) {
        if (!seen.insert(name).second) throw CertificateError("duplicate relation name " + name);
        rs.relations.push_back({name, parse_ncpoly(text, ring, &rs.pres)});
    }
    return rs;
}

// Parsing ---------------------------------------------------------------------

namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_top(std::string_view s, char sep)
{
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

bool is_name(std::string_view s)
{
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

// "<name> = <rest>"
std::pair<std::string, std::string> split_assignment(std::string_view body, std::size_t line)
{
    auto eq = body.find('=');
    if (eq == std::string_view::npos)
        throw CertificateError("line " + std::to_string(line) + ": expected '='");
    auto name = trim(body.substr(0, eq));
    if (!is_name(name)) throw CertificateError("line " + std::to_string(line) + ": bad step name '" + name + "'");
    return {name, trim(body.substr(eq + 1))};
}

}  // namespace

Certificate parse_certificate(std::string_view text, const RelationSet& rs)
{
    Certificate cert;
    std::set<std::string> names;
    for (const auto& r : rs.relations) names.insert(r.name);
    names.insert("inverse");

    auto poly = [&](std::string_view s, std::size_t line) {
        try {
            return parse_ncpoly(s, rs.ring(), &rs.pres);
        } catch (const AlgebraError& e) {
            throw CertificateError("line " + std::to_string(line) + ": " + e.what());
        }
    };
    auto fresh = [&](const std::string& name, std::size_t line) {
        if (!names.insert(name).second)
            throw CertificateError("line " + std::to_string(line) + ": relation " + name + " already defined");
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto sp = line.find_first_of(" \t");
        std::string kw = line.substr(0, sp);
        std::string body = sp == std::string::npos ? std::string() : trim(line.substr(sp));

        if (kw == "diff") {
            auto [name, rest] = split_assignment(body, lineno);
            if (rest.size() < 3 || rest.substr(0, 2) != "D(" || rest.back() != ')')
                throw CertificateError("line " + std::to_string(lineno) + ": expected D( ... )");
            fresh(name, lineno);
            cert.steps.push_back(DiffStep{name, poly(std::string_view(rest).substr(2, rest.size() - 3), lineno)});
        } else if (kw == "comb") {
            auto [name, rest] = split_assignment(body, lineno);
            CombStep step{name, {}};
            for (const auto& part : split_top(rest, '+')) {
                auto pieces = split_top(part, '*');
                CombPart cp{NcPoly::one(rs.ring()), {}, NcPoly::one(rs.ring())};
                if (pieces.size() == 1) {
                    cp.relation = pieces[0];
                } else if (pieces.size() == 2) {
                    if (names.contains(pieces[0])) {
                        cp.relation = pieces[0];
                        cp.right = poly(pieces[1], lineno);
                    } else {
                        cp.left = poly(pieces[0], lineno);
                        cp.relation = pieces[1];
                    }
                } else if (pieces.size() == 3) {
                    cp.left = poly(pieces[0], lineno);
                    cp.relation = pieces[1];
                    cp.right = poly(pieces[2], lineno);
                } else {
                    throw CertificateError("line " + std::to_string(lineno) + ": bad combination term '" + part + "'");
                }
                if (!names.contains(cp.relation))
                    throw CertificateError("line " + std::to_string(lineno) + ": unknown relation " + cp.relation);
                step.parts.push_back(std::move(cp));
            }
            fresh(name, lineno);
            cert.steps.push_back(std::move(step));
        } else if (kw == "subst") {
            auto [name, rest] = split_assignment(body, lineno);
            auto w = rest.find(" with ");
            if (w == std::string::npos)
                throw CertificateError("line " + std::to_string(lineno) + ": expected 'with'");
            SubstStep step{name, trim(rest.substr(0, w)), {}};
            if (!names.contains(step.relation))
                throw CertificateError("line " + std::to_string(lineno) + ": unknown relation " + step.relation);
            for (const auto& rule : split_top(rest.substr(w + 6), ';')) {
                auto arrow = rule.find("->");
                if (arrow == std::string::npos)
                    throw CertificateError("line " + std::to_string(lineno) + ": expected '->' in rule");
                Symbol g(trim(rule.substr(0, arrow)));
                if (!rs.pres.contains(g))
                    throw CertificateError("line " + std::to_string(lineno) + ": unknown generator " + std::string(g.name()));
                step.rules.emplace_back(g, poly(rule.substr(arrow + 2), lineno));
            }
            fresh(name, lineno);
            cert.steps.push_back(std::move(step));
        } else if (kw == "adjoin") {
            auto [name, rest] = split_assignment(body, lineno);
            fresh(name, lineno);
            cert.steps.push_back(AdjoinStep{name, poly(rest, lineno)});
        } else if (kw == "assert-unit") {
            if (!names.contains(body))
                throw CertificateError("line " + std::to_string(lineno) + ": unknown relation " + body);
            cert.steps.push_back(AssertUnitStep{body});
        } else if (kw == "assert") {
            auto [name, rest] = split_assignment(body, lineno);
            if (!names.contains(name))
                throw CertificateError("line " + std::to_string(lineno) + ": unknown relation " + name);
            cert.steps.push_back(AssertEqualStep{name, poly(rest, lineno)});
        } else if (kw == "norep-a" || kw == "norep-b") {
            if (body.empty() || body[0] != '=')
                throw CertificateError("line " + std::to_string(lineno) + ": expected '='");
            auto p = poly(std::string_view(body).substr(1), lineno);
            (kw == "norep-a" ? cert.norep_a : cert.norep_b) = std::move(p);
            continue;
        } else {
            throw CertificateError("line " + std::to_string(lineno) + ": unknown step '" + kw + "'");
        }
        cert.lines.push_back(lineno);
    }
    return cert;
}

Certificate load_certificate(const std::string& path, const RelationSet& rs)
{
    std::ifstream in(path);
    if (!in) throw CertificateError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_certificate(ss.str(), rs);
}

// Replay ----------------------------------------------------------------------

namespace {

struct Replay {
    const RelationSet& rs;
    std::vector<RegisteredRelation> table;
    std::map<std::string, std::size_t, std::less<>> index;

    explicit Replay(const RelationSet& r) : rs(r)
    {
        for (const auto& rel : rs.relations) add(rel, false);
    }

    void add(Relation rel, bool adjoined)
    {
        if (index.contains(rel.name)) throw CertificateError("relation " + rel.name + " already defined");
        index[rel.name] = table.size();
        table.push_back({std::move(rel), adjoined});
    }

    const RegisteredRelation& get(std::string_view name) const
    {
        auto it = index.find(name);
        if (it == index.end()) throw CertificateError("unknown relation " + std::string(name));
        return table[it->second];
    }

    // A registered relation equal to +-(g - p), if any.
    const RegisteredRelation* justify(Symbol g, const NcPoly& p) const
    {
        NcPoly want = NcPoly::generator(rs.ring(), g) - p;
        NcPoly neg = -want;
        for (const auto& r : table)
            if (r.rel.value == want || r.rel.value == neg) return &r;
        return nullptr;
    }
};

struct StepFailure {
    std::string message;
    NcPoly residual;
};

bool acyclic(const std::vector<std::pair<Symbol, NcPoly>>& rules)
{
    std::map<Symbol, const NcPoly*> lhs;
    for (const auto& [g, p] : rules) lhs[g] = &p;
    std::map<Symbol, int> state;  // 1 visiting, 2 done
    std::function<bool(Symbol)> visit = [&](Symbol g) {
        auto& st = state[g];
        if (st == 1) return false;
        if (st == 2) return true;
        st = 1;
        for (const auto& [h, p] : lhs)
            if (lhs[g]->contains(h) && !visit(h)) return false;
        st = 2;
        return true;
    };
    for (const auto& [g, p] : lhs)
        if (!visit(g)) return false;
    return true;
}

}  // namespace

static CertVerdict verify_certificate_impl(const RelationSet& rs, const Certificate& cert,
                                    const std::vector<RegisteredRelation>& extra)
{
    Replay rp(rs);
    for (const auto& e : extra) rp.add(e.rel, e.adjoined);
    CertVerdict v;
    const Ring ring = rs.ring();

    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        std::optional<StepFailure> fail;
        try {
            std::visit(
                [&](const auto& st) {
                    using T = std::decay_t<decltype(st)>;
                    if constexpr (std::is_same_v<T, DiffStep>) {
                        if (!rs.derivation) throw CertificateError("no differential available for diff step");
                        check_same_ring(st.expr, NcPoly::zero(ring));
                        rp.add({st.name, (*rs.derivation)(st.expr)}, false);
                    } else if constexpr (std::is_same_v<T, CombStep>) {
                        NcPoly sum = NcPoly::zero(ring);
                        bool adj = false;
                        for (const auto& part : st.parts) {
                            const auto& r = rp.get(part.relation);
                            sum += part.left * r.rel.value * part.right;
                            adj = adj || r.adjoined;
                        }
                        rp.add({st.name, std::move(sum)}, adj);
                    } else if constexpr (std::is_same_v<T, SubstStep>) {
                        const auto& base = rp.get(st.relation);
                        bool adj = base.adjoined;
                        for (const auto& [g, p] : st.rules) {
                            const auto* just = rp.justify(g, p);
                            if (!just) {
                                fail = StepFailure{"rule " + std::string(g.name()) + " -> " + p.str() +
                                                       " is not backed by a registered relation",
                                                   NcPoly::generator(ring, g) - p};
                                return;
                            }
                            adj = adj || just->adjoined;
                        }
                        if (!acyclic(st.rules)) {
                            fail = StepFailure{"substitution rules are cyclic", NcPoly::zero(ring)};
                            return;
                        }
                        Substitution sigma;
                        for (const auto& [g, p] : st.rules) sigma[g] = p;
                        NcPoly cur = base.rel.value;
                        for (std::size_t k = 0; k <= st.rules.size(); ++k) {
                            NcPoly next = substitute_partial(cur, sigma);
                            if (next == cur) break;
                            cur = std::move(next);
                        }
                        rp.add({st.name, std::move(cur)}, adj);
                    } else if constexpr (std::is_same_v<T, AdjoinStep>) {
                        rp.add({st.name, st.value}, true);
                    } else if constexpr (std::is_same_v<T, AssertUnitStep>) {
                        const auto& r = rp.get(st.name);
                        if (!r.rel.value.is_unit_constant()) {
                            fail = StepFailure{"relation " + st.name + " is not a unit", r.rel.value};
                            return;
                        }
                        if (!v.derived_unit || v.unit_depends_on_adjoined) {
                            v.unit_depends_on_adjoined = r.adjoined;
                        }
                        v.derived_unit = true;
                    } else if constexpr (std::is_same_v<T, AssertEqualStep>) {
                        const auto& r = rp.get(st.name);
                        if (r.rel.value != st.value) {
                            fail = StepFailure{"relation " + st.name + " differs from the asserted value",
                                               r.rel.value - st.value};
                        }
                    }
                },
                cert.steps[i]);
        } catch (const std::exception& e) {
            fail = StepFailure{e.what(), NcPoly::zero(ring)};
        }
        if (fail) {
            v.pass = false;
            v.failed_step = i;
            std::size_t line = i < cert.lines.size() ? cert.lines[i] : 0;
            v.message = (line ? "line " + std::to_string(line) + ": " : "step " + std::to_string(i + 1) + ": ") +
                        fail->message;
            v.residual = fail->residual;
            break;
        }
    }
    v.table = std::move(rp.table);
    return v;
}

CertVerdict verify_certificate(const RelationSet& rs, const Certificate& cert)
{
    return verify_certificate_impl(rs, cert, {});
}

bool verify_unit(const Dga& g, const NcPoly& e)
{
    return g.derivation()(e).is_one();
}

NoRepVerdict adjoin_and_derive(const RelationSet& rs, const NcPoly& a, const NcPoly& b, const Certificate& cert)
{
    NoRepVerdict out;
    for (const auto& st : cert.steps) {
        if (std::holds_alternative<AdjoinStep>(st)) {
            out.message = "certificate may not adjoin relations other than the inverse";
            return out;
        }
    }
    const Ring ring = rs.ring();
    NcPoly one = NcPoly::one(ring);
    out.replay = verify_certificate_impl(rs, cert, {{{"inverse", b * a - one}, true}});
    if (!out.replay.pass) {
        out.message = out.replay.message;
        return out;
    }
    if (!out.replay.derived_unit) {
        out.message = "certificate does not derive a unit";
        return out;
    }
    if (!out.replay.unit_depends_on_adjoined) {
        out.no_finite_representation = true;
        out.message = "the algebra itself is trivial";
        return out;
    }
    NcPoly ab = a * b - one;
    bool have = false;
    for (const auto& r : out.replay.table)
        if (!r.adjoined && (r.rel.value == ab || r.rel.value == -ab)) have = true;
    if (!have) {
        out.message = "no derived relation equals ab - 1";
        return out;
    }
    out.no_finite_representation = true;
    out.message = "ab = 1 holds and ba = 1 forces 0 = 1";
    return out;
}

// Saturation ------------------------------------------------------------------

namespace {

// For a relation u*g + rest with u = +-t^k and g absent from rest, returns g -> -u^-1 rest.
std::optional<std::pair<Symbol, NcPoly>> orient(const NcPoly& r)
{
    for (const auto& term : r.terms()) {
        if (term.word.size() != 1 || !term.coeff.is_unit()) continue;
        Symbol g = term.word[0];
        NcPoly rest = r - NcPoly::word(r.ring(), term.word, term.coeff);
        if (rest.contains(g)) continue;
        // inverse of +-t^k
        const auto& [k, c] = term.coeff.monomials().front();
        Laurent inv = Laurent::monomial(c < 0 ? -1 : 1, -k);
        return std::pair{g, -(inv * rest)};
    }
    return std::nullopt;
}

}  // namespace

SaturationResult bounded_saturation(const RelationSet& rs, const SaturationLimits& limits)
{
    SaturationResult res;
    std::vector<Relation> rels;
    for (const auto& r : rs.relations)
        if (!r.value.is_zero()) rels.push_back(r);
    std::set<Symbol> gone;

    auto check_trivial = [&] {
        for (const auto& r : rels)
            if (r.value.is_unit_constant()) return true;
        return false;
    };

    bool stop = false;
    while (!stop) {
        if (check_trivial()) {
            res.trivial = true;
            break;
        }
        std::optional<std::pair<Symbol, NcPoly>> rule;
        std::size_t at = 0;
        for (; at < rels.size() && !rule; ++at) rule = orient(rels[at].value);
        if (!rule) break;
        --at;
        auto [g, p] = *rule;
        Substitution sigma{{g, p}};
        std::vector<Relation> next;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            if (i == at) continue;
            Relation r = rels[i];
            if (r.value.contains(g)) {
                if (res.applications >= limits.max_applications) { stop = true; break; }
                NcPoly v = substitute_partial(r.value, sigma);
                if (v.max_degree() > limits.max_degree) { stop = true; break; }
                ++res.applications;
                r.value = std::move(v);
            }
            if (!r.value.is_zero()) next.push_back(std::move(r));
        }
        if (stop) break;
        for (auto& [h, val] : res.eliminated) val = substitute_partial(val, sigma);
        res.eliminated.emplace_back(g, p);
        gone.insert(g);
        rels = std::move(next);
    }
    if (!res.trivial) res.trivial = check_trivial();

    res.reduced.pres = GradedPresentation(rs.ring());
    for (Symbol g : rs.pres.generators()) {
        if (gone.contains(g)) continue;
        res.reduced.pres.add_generator(g, rs.pres.grading(g));
    }
    res.reduced.pres.set_grading_modulus(rs.pres.grading_modulus());
    res.reduced.relations = std::move(rels);
    return res;
}

}  // namespace lch
