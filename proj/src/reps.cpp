#include "lch/reps.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>

#include <omp.h>

namespace lch {

// SmallMat --------------------------------------------------------------------

void SmallMat::check(int n)
{
    if (n < 1 || n > 8) throw RepError("matrix size must be between 1 and 8");
}

SmallMat SmallMat::identity(int n)
{
    SmallMat m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void SmallMat::set(int r, int c, bool v)
{
    std::uint64_t bit = std::uint64_t{1} << (8 * r + c);
    bits_ = v ? (bits_ | bit) : (bits_ & ~bit);
}

SmallMat SmallMat::from_code(int n, std::uint64_t code)
{
    SmallMat m(n);
    int k = n * n;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, (code >> (k - 1 - (r * n + c))) & 1U);
    return m;
}

SmallMat SmallMat::from_bits(int n, std::string_view bits)
{
    if (bits.size() != static_cast<std::size_t>(n * n))
        throw RepError("expected " + std::to_string(n * n) + " bits, got '" + std::string(bits) + "'");
    SmallMat m(n);
    for (int i = 0; i < n * n; ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw RepError("bad bit string '" + std::string(bits) + "'");
        m.set(i / n, i % n, bits[i] == '1');
    }
    return m;
}

std::uint64_t SmallMat::code() const
{
    std::uint64_t code = 0;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) code = (code << 1) | (get(r, c) ? 1U : 0U);
    return code;
}

std::string SmallMat::bits() const
{
    std::string s;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) s += get(r, c) ? '1' : '0';
    return s;
}

SmallMat& SmallMat::operator+=(const SmallMat& o)
{
    if (n_ != o.n_) throw RepError("matrix size mismatch");
    bits_ ^= o.bits_;
    return *this;
}

SmallMat operator*(const SmallMat& a, const SmallMat& b)
{
    if (a.n_ != b.n_) throw RepError("matrix size mismatch");
    SmallMat out(a.n_);
    for (int i = 0; i < a.n_; ++i) {
        std::uint64_t row = 0;
        std::uint64_t arow = (a.bits_ >> (8 * i)) & 0xFFU;
        for (int k = 0; arow; ++k, arow >>= 1)
            if (arow & 1U) row ^= (b.bits_ >> (8 * k)) & 0xFFU;
        out.bits_ |= row << (8 * i);
    }
    return out;
}

// Evaluation ------------------------------------------------------------------

SmallMat evaluate(const NcPoly& p, const MatRepAssignment& rho)
{
    SmallMat sum(rho.n);
    const NcPoly sp = specialize(p);
    for (const auto& term : sp.terms()) {
        SmallMat prod = SmallMat::identity(rho.n);
        for (Symbol s : term.word) {
            auto it = rho.images.find(s);
            if (it == rho.images.end()) throw RepError("no image for generator " + std::string(s.name()));
            prod = prod * it->second;
        }
        sum += prod;
    }
    return sum;
}

namespace {

void require_images(const GradedPresentation& pres, const MatRepAssignment& rho)
{
    for (Symbol g : pres.generators())
        if (!rho.images.contains(g)) throw RepError("no image for generator " + std::string(g.name()));
}

}  // namespace

bool verify_matrix_rep(const Dga& g, const MatRepAssignment& rho)
{
    require_images(g.pres, rho);
    return std::all_of(g.differential.begin(), g.differential.end(),
                       [&](const NcPoly& d) { return evaluate(d, rho).is_zero(); });
}

bool verify_matrix_rep(const RelationSet& rs, const MatRepAssignment& rho)
{
    require_images(rs.pres, rho);
    return std::all_of(rs.relations.begin(), rs.relations.end(),
                       [&](const Relation& r) { return evaluate(r.value, rho).is_zero(); });
}

// Backtracking ----------------------------------------------------------------

namespace {

struct CompiledRel {
    bool constant = false;
    std::vector<std::vector<int>> words;
};

struct Problem {
    int n = 1;
    std::vector<Symbol> gens;
    std::vector<std::vector<CompiledRel>> at_level;  // checked once level i is assigned
    std::vector<bool> forced_zero;
    bool impossible = false;  // a nonzero constant relation
    std::uint64_t choices = 2;
};

Problem compile(const Dga& g, int n, bool graded)
{
    Problem pb;
    pb.n = n;
    pb.gens = g.pres.generators();
    pb.at_level.resize(pb.gens.size());
    pb.forced_zero.assign(pb.gens.size(), false);
    pb.choices = std::uint64_t{1} << (n * n);
    if (graded) {
        for (std::size_t i = 0; i < pb.gens.size(); ++i) {
            auto gr = g.pres.grading(pb.gens[i]);
            pb.forced_zero[i] = !gr || g.pres.reduce(*gr) != 0;
        }
    }
    for (const auto& d : g.differential) {
        NcPoly sp = specialize(d);
        if (sp.is_zero()) continue;
        CompiledRel rel;
        int top = -1;
        for (const auto& term : sp.terms()) {
            if (term.word.empty()) {
                rel.constant = true;
                continue;
            }
            std::vector<int> w;
            for (Symbol s : term.word) {
                int idx = static_cast<int>(g.pres.index_of(s));
                w.push_back(idx);
                top = std::max(top, idx);
            }
            rel.words.push_back(std::move(w));
        }
        if (top < 0) pb.impossible = true;
        else pb.at_level[static_cast<std::size_t>(top)].push_back(std::move(rel));
    }
    return pb;
}

bool holds(const Problem& pb, const CompiledRel& rel, const std::vector<SmallMat>& vals)
{
    SmallMat sum = rel.constant ? SmallMat::identity(pb.n) : SmallMat(pb.n);
    for (const auto& w : rel.words) {
        SmallMat prod = vals[static_cast<std::size_t>(w[0])];
        for (std::size_t k = 1; k < w.size(); ++k) prod = prod * vals[static_cast<std::size_t>(w[k])];
        sum += prod;
    }
    return sum.is_zero();
}

enum class Stop { Continue, Found, Budget };

// Depth-first over levels [level, end). `on_leaf` returns true to stop.
struct Dfs {
    const Problem& pb;
    std::vector<SmallMat>& vals;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    const std::function<bool(const std::vector<SmallMat>&)>& on_leaf;
    const std::atomic<bool>* cancel = nullptr;

    Stop run(std::size_t level)
    {
        if (level == pb.gens.size()) return on_leaf(vals) ? Stop::Found : Stop::Continue;
        std::uint64_t count = pb.forced_zero[level] ? 1 : pb.choices;
        for (std::uint64_t code = 0; code < count; ++code) {
            if (++nodes > budget) return Stop::Budget;
            if (cancel && (nodes & 0xFFF) == 0 && cancel->load(std::memory_order_relaxed)) return Stop::Budget;
            vals[level] = SmallMat::from_code(pb.n, code);
            bool ok = true;
            for (const auto& rel : pb.at_level[level])
                if (!holds(pb, rel, vals)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Stop st = run(level + 1);
            if (st != Stop::Continue) return st;
        }
        return Stop::Continue;
    }
};

MatRepAssignment to_assignment(const Problem& pb, const std::vector<SmallMat>& vals)
{
    MatRepAssignment rho;
    rho.n = pb.n;
    for (std::size_t i = 0; i < pb.gens.size(); ++i) rho.images.emplace(pb.gens[i], vals[i]);
    return rho;
}

SearchResult search_serial(const Problem& pb, std::uint64_t budget)
{
    SearchResult res;
    if (pb.impossible) {
        res.exhausted = true;
        return res;
    }
    std::vector<SmallMat> vals(pb.gens.size(), SmallMat(pb.n));
    std::function<bool(const std::vector<SmallMat>&)> leaf = [](const std::vector<SmallMat>&) { return true; };
    Dfs dfs{pb, vals, budget, 0, leaf};
    Stop st = dfs.run(0);
    res.nodes = std::min(dfs.nodes, budget);
    if (st == Stop::Found) res.rep = to_assignment(pb, vals);
    res.exhausted = st == Stop::Continue;
    return res;
}

}  // namespace

std::vector<Augmentation> find_augmentations(const Dga& g, bool graded)
{
    Problem pb = compile(g, 1, graded);
    std::vector<Augmentation> out;
    if (pb.impossible) return out;
    std::vector<SmallMat> vals(pb.gens.size(), SmallMat(1));
    std::function<bool(const std::vector<SmallMat>&)> leaf = [&](const std::vector<SmallMat>& v) {
        Augmentation a(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) a[i] = !v[i].is_zero();
        out.push_back(std::move(a));
        return false;
    };
    Dfs dfs{pb, vals, std::numeric_limits<std::uint64_t>::max(), 0, leaf};
    dfs.run(0);
    return out;
}

SearchResult search_matrix_rep_serial(const Dga& g, int n, std::uint64_t budget)
{
    return search_serial(compile(g, n, false), budget);
}

SearchResult search_matrix_rep(const Dga& g, int n, std::uint64_t budget)
{
    Problem pb = compile(g, n, false);
    // Split the tree at a fixed depth; each surviving prefix is searched on
    // its own and the results are merged in serial order, so node counts and
    // the reported representation match the serial search exactly.
    std::size_t depth = static_cast<std::size_t>((8 + n * n - 1) / (n * n));
    if (pb.impossible || depth >= pb.gens.size()) return search_serial(pb, budget);

    struct Prefix {
        std::vector<SmallMat> vals;
        std::uint64_t nodes_before;  // prefix-phase nodes up to and including this prefix
    };
    std::vector<Prefix> prefixes;
    std::uint64_t prefix_nodes = 0;
    {
        std::vector<SmallMat> vals(pb.gens.size(), SmallMat(pb.n));
        std::function<void(std::size_t)> rec = [&](std::size_t level) {
            if (level == depth) {
                prefixes.push_back({vals, prefix_nodes});
                return;
            }
            std::uint64_t count = pb.forced_zero[level] ? 1 : pb.choices;
            for (std::uint64_t code = 0; code < count; ++code) {
                ++prefix_nodes;
                vals[level] = SmallMat::from_code(pb.n, code);
                bool ok = std::all_of(pb.at_level[level].begin(), pb.at_level[level].end(),
                                      [&](const CompiledRel& r) { return holds(pb, r, vals); });
                if (ok) rec(level + 1);
            }
        };
        rec(0);
    }

    struct Sub {
        Stop stop = Stop::Continue;
        std::uint64_t nodes = 0;
        std::vector<SmallMat> vals;
    };
    std::vector<Sub> subs(prefixes.size());
    std::atomic<long> first_found{static_cast<long>(prefixes.size())};
    std::function<bool(const std::vector<SmallMat>&)> leaf = [](const std::vector<SmallMat>&) { return true; };

#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < static_cast<long>(prefixes.size()); ++k) {
        if (k > first_found.load()) {
            subs[static_cast<std::size_t>(k)].stop = Stop::Budget;
            continue;
        }
        std::vector<SmallMat> vals = prefixes[static_cast<std::size_t>(k)].vals;
        std::atomic<bool> never{false};
        Dfs dfs{pb, vals, budget, 0, leaf, &never};
        Stop st = dfs.run(depth);
        auto& s = subs[static_cast<std::size_t>(k)];
        s.stop = st;
        s.nodes = dfs.nodes;
        if (st == Stop::Found) {
            s.vals = std::move(vals);
            long cur = first_found.load();
            while (k < cur && !first_found.compare_exchange_weak(cur, k)) {
            }
        }
    }

    SearchResult res;
    std::uint64_t used = 0;
    for (std::size_t k = 0; k < prefixes.size(); ++k) {
        std::uint64_t base = prefixes[k].nodes_before + used;
        if (base > budget) {
            res.nodes = budget;
            return res;
        }
        const Sub& s = subs[k];
        if (s.stop == Stop::Budget || base + s.nodes > budget) {
            res.nodes = budget;
            return res;
        }
        if (s.stop == Stop::Found) {
            res.nodes = base + s.nodes;
            res.rep = to_assignment(pb, s.vals);
            return res;
        }
        used += s.nodes;
    }
    res.nodes = prefix_nodes + used;
    if (res.nodes > budget) {
        res.nodes = budget;
        return res;
    }
    res.exhausted = true;
    return res;
}

// Torus representation --------------------------------------------------------

MatRepAssignment torus_rep(const TorusLabeling& labels, const Dga& g)
{
    const int p = labels.p;
    MatRepAssignment rho;
    rho.n = 2;
    for (Symbol s : g.pres.generators()) rho.images.emplace(s, SmallMat(2));
    const SmallMat A = SmallMat::from_bits(2, "0100");
    const SmallMat B = SmallMat::from_bits(2, "0010");
    auto put = [&](const std::map<std::pair<int, int>, Symbol>& m, int i, int j, const SmallMat& v,
                   bool required) {
        auto it = m.find({i, j});
        if (it == m.end()) {
            if (required)
                throw RepError("labeling has no crossing x" + std::to_string(i) + "," + std::to_string(j));
            return;
        }
        rho.images.at(it->second) = v;
    };
    for (int i = 1; i < p; ++i) put(labels.x, i, i + 1, A, true);
    put(labels.x, 1, p, B, true);
    for (const auto& [key, sym] : labels.y) {
        auto [i, j] = key;
        if (j == i + p - 1) rho.images.at(sym) = A;
        else if (j == i + 1) rho.images.at(sym) = B;
    }
    return rho;
}

// Files -----------------------------------------------------------------------

std::string write_rep(const MatRepAssignment& rho)
{
    std::ostringstream out;
    out << "rep n=" << rho.n << "\n";
    for (const auto& [g, m] : rho.images) out << "map " << g.name() << " = " << m.bits() << "\n";
    return out.str();
}

MatRepAssignment read_rep(std::string_view text)
{
    MatRepAssignment rho;
    bool header = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) { throw RepError("line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "rep") {
            std::string dim;
            ls >> dim;
            if (dim.rfind("n=", 0) != 0) fail("expected n=<dim>");
            try {
                rho.n = std::stoi(dim.substr(2));
            } catch (const std::exception&) {
                fail("bad dimension");
            }
            if (rho.n < 1 || rho.n > 8) fail("dimension out of range");
            header = true;
        } else if (kw == "map") {
            if (!header) fail("map before rep header");
            std::string name, eq, bits;
            if (!(ls >> name >> eq >> bits) || eq != "=") fail("expected map <gen> = <bits>");
            try {
                if (!rho.images.emplace(Symbol(name), SmallMat::from_bits(rho.n, bits)).second)
                    fail("duplicate generator " + name);
            } catch (const RepError& e) {
                fail(e.what());
            }
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (!header) throw RepError("missing rep header");
    return rho;
}

MatRepAssignment load_rep(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw RepError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_rep(ss.str());
}

// Mat2 presentation -----------------------------------------------------------

namespace {

using Lin = std::set<std::string>;  // F2 combination of words in a, b

void toggle(Lin& l, const std::string& w)
{
    if (!l.erase(w)) l.insert(w);
}

// One rewrite at position pos (which must start a left-hand side).
Lin rewrite_at(const std::string& w, std::size_t pos)
{
    std::string pre = w.substr(0, pos), post = w.substr(pos + 2);
    std::string lhs = w.substr(pos, 2);
    Lin out;
    if (lhs == "ba") {
        toggle(out, pre + post);
        toggle(out, pre + "ab" + post);
    }
    return out;  // aa, bb -> 0
}

std::optional<std::size_t> redex(const std::string& w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        auto two = w.substr(i, 2);
        if (two == "aa" || two == "bb" || two == "ba") return i;
    }
    return std::nullopt;
}

Lin reduce(Lin l)
{
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& w : l) {
            if (auto pos = redex(w)) {
                Lin next = l;
                next.erase(w);
                for (const auto& v : rewrite_at(w, *pos)) toggle(next, v);
                l = std::move(next);
                changed = true;
                break;
            }
        }
    }
    return l;
}

SmallMat mat_of_word(const std::string& w, const SmallMat& A, const SmallMat& B)
{
    SmallMat m = SmallMat::identity(2);
    for (char ch : w) m = m * (ch == 'a' ? A : B);
    return m;
}

}  // namespace

Mat2Report mat2_presentation_check()
{
    Mat2Report rep;
    const SmallMat A = SmallMat::from_bits(2, "0100");
    const SmallMat B = SmallMat::from_bits(2, "0010");
    const SmallMat I = SmallMat::identity(2);
    rep.ab_plus_ba_identity = (A * B + B * A) == I && (A * A).is_zero() && (B * B).is_zero();
    rep.ba_rewrites = reduce({"ba"}) == Lin{"", "ab"};

    // Local confluence on the overlaps of the left-hand sides.
    bool confluent = true;
    for (std::string w : {"aaa", "bbb", "bba", "baa"})
        confluent = confluent && reduce(rewrite_at(w, 0)) == reduce(rewrite_at(w, 1));

    // Irreducible words up to length 4 span the quotient; longer words all
    // contain a redex since no word of length 3 is irreducible.
    std::vector<std::string> words{""};
    for (std::size_t len = 1; len <= 4; ++len) {
        std::vector<std::string> next;
        for (const auto& w : words)
            if (w.size() == len - 1) {
                next.push_back(w + "a");
                next.push_back(w + "b");
            }
        words.insert(words.end(), next.begin(), next.end());
    }
    std::set<std::string> normal;
    for (const auto& w : words) {
        Lin r = reduce({w});
        normal.insert(r.begin(), r.end());
        // the rewriting respects the matrix images
        SmallMat lhs = mat_of_word(w, A, B), rhs(2);
        for (const auto& v : r) rhs += mat_of_word(v, A, B);
        confluent = confluent && lhs == rhs;
    }
    rep.normal_words.assign(normal.begin(), normal.end());
    rep.quotient_size = std::size_t{1} << normal.size();

    std::set<std::uint64_t> images;
    for (std::size_t mask = 0; mask < rep.quotient_size; ++mask) {
        SmallMat m(2);
        for (std::size_t i = 0; i < rep.normal_words.size(); ++i)
            if (mask >> i & 1U) m += mat_of_word(rep.normal_words[i], A, B);
        images.insert(m.code());
    }
    rep.bijective = images.size() == 16 && rep.quotient_size == 16;
    rep.pass = confluent && rep.ab_plus_ba_identity && rep.ba_rewrites && rep.bijective &&
               rep.normal_words == std::vector<std::string>{"", "a", "ab", "b"};
    return rep;
}

// Truncated operators ---------------------------------------------------------

namespace {

std::size_t blocks(std::size_t N) { return (N + 63) / 64; }

}  // namespace

TruncatedOp TruncatedOp::zero(std::size_t N)
{
    TruncatedOp op;
    op.cols_.assign(N, std::vector<std::uint64_t>(blocks(N), 0));
    op.valid_.assign(N, true);
    return op;
}

TruncatedOp TruncatedOp::identity(std::size_t N)
{
    TruncatedOp op = zero(N);
    for (std::size_t i = 0; i < N; ++i) op.cols_[i][i / 64] |= std::uint64_t{1} << (i % 64);
    return op;
}

TruncatedOp TruncatedOp::from_basis(std::size_t N, const std::function<Image(long)>& image)
{
    TruncatedOp op = zero(N);
    for (std::size_t i = 0; i < N; ++i) {
        for (long j : image(static_cast<long>(i))) {
            if (j < 0) throw RepError("negative basis index");
            if (static_cast<std::size_t>(j) >= N) {
                op.valid_[i] = false;
                continue;
            }
            op.cols_[i][static_cast<std::size_t>(j) / 64] ^= std::uint64_t{1} << (j % 64);
        }
        if (!op.valid_[i]) std::fill(op.cols_[i].begin(), op.cols_[i].end(), 0);
    }
    return op;
}

long TruncatedOp::valid_domain() const
{
    for (std::size_t i = 0; i < valid_.size(); ++i)
        if (!valid_[i]) return static_cast<long>(i) - 1;
    return static_cast<long>(valid_.size()) - 1;
}

bool TruncatedOp::entry(std::size_t row, std::size_t col) const
{
    return (cols_[col][row / 64] >> (row % 64)) & 1U;
}

TruncatedOp operator+(const TruncatedOp& a, const TruncatedOp& b)
{
    if (a.size() != b.size()) throw RepError("truncation size mismatch");
    TruncatedOp out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < out.cols_[i].size(); ++k) out.cols_[i][k] ^= b.cols_[i][k];
        out.valid_[i] = a.valid_[i] && b.valid_[i];
    }
    return out;
}

TruncatedOp TruncatedOp::then(const TruncatedOp& first, const TruncatedOp& second)
{
    if (first.size() != second.size()) throw RepError("truncation size mismatch");
    const std::size_t N = first.size();
    TruncatedOp out = zero(N);
    for (std::size_t i = 0; i < N; ++i) {
        if (!first.valid_[i]) {
            out.valid_[i] = false;
            continue;
        }
        for (std::size_t j = 0; j < N; ++j) {
            if (!first.entry(j, i)) continue;
            if (!second.valid_[j]) {
                out.valid_[i] = false;
                break;
            }
            for (std::size_t k = 0; k < out.cols_[i].size(); ++k) out.cols_[i][k] ^= second.cols_[j][k];
        }
        if (!out.valid_[i]) std::fill(out.cols_[i].begin(), out.cols_[i].end(), 0);
    }
    return out;
}

bool TruncatedOp::vanishes_upto(long upto) const
{
    for (long i = 0; i <= upto && i < static_cast<long>(size()); ++i) {
        if (!valid_[static_cast<std::size_t>(i)]) continue;
        for (auto w : cols_[static_cast<std::size_t>(i)])
            if (w) return false;
    }
    return true;
}

bool TruncatedOp::equals_upto(const TruncatedOp& o, long upto) const
{
    for (long i = 0; i <= upto; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (k >= size() || k >= o.size()) return false;
        if (valid_[k] != o.valid_[k]) return false;
        if (!valid_[k]) continue;
        // compare the overlapping rows only
        std::size_t rows = std::min(size(), o.size());
        for (std::size_t r = 0; r < rows; ++r)
            if (entry(r, k) != o.entry(r, k)) return false;
    }
    return true;
}

ROperators build_R_truncated(std::size_t N)
{
    if (N < 8) throw RepError("truncation size must be at least 8");
    using Img = TruncatedOp::Image;
    ROperators ops;
    ops.N = N;
    ops.f = TruncatedOp::from_basis(N, [](long i) { return Img{2 * i}; });
    ops.g = TruncatedOp::from_basis(N, [](long i) { return Img{2 * i + 1}; });
    ops.p = TruncatedOp::from_basis(N, [](long i) { return i >= 1 ? Img{i - 1} : Img{}; });
    ops.s = TruncatedOp::from_basis(N, [](long i) { return Img{i + 1, 2 * (i + 1)}; });
    ops.a = TruncatedOp::from_basis(N, [](long i) {
        if (i % 2 == 0) return i >= 2 ? Img{i - 1} : Img{};
        return Img{i - 1};
    });
    ops.b = TruncatedOp::from_basis(N, [](long i) {
        long k = i / 2;
        if (i % 2 == 0) return Img{2 * k + 1, 4 * k + 2};
        return Img{2 * k + 2, 4 * k + 4};
    });
    ops.c = TruncatedOp::from_basis(N, [](long i) { return i % 2 == 0 ? Img{i / 2} : Img{}; });
    return ops;
}

TruncatedOp evaluate_right(const NcPoly& p, const std::map<Symbol, TruncatedOp>& ops, std::size_t N)
{
    TruncatedOp sum = TruncatedOp::zero(N);
    const NcPoly sp = specialize(p);
    for (const auto& term : sp.terms()) {
        TruncatedOp prod = TruncatedOp::identity(N);
        for (Symbol s : term.word) {
            auto it = ops.find(s);
            if (it == ops.end()) throw RepError("no operator for generator " + std::string(s.name()));
            prod = TruncatedOp::then(prod, it->second);
        }
        sum = sum + prod;
    }
    return sum;
}

std::vector<std::pair<std::string, NcPoly>> r_relations()
{
    GradedPresentation pres(Ring::F2);
    for (const char* g : {"a", "b", "c"}) pres.add_generator(Symbol(g));
    std::vector<std::pair<std::string, NcPoly>> out;
    for (const char* text : {"1 + c.(1 + a.b) + a.c.(1 + b.a)", "(1 + b.a).c", "1 + (1 + a.b).c",
                             "1 + (1 + b.a).a.c"})
        out.emplace_back(text, parse_ncpoly(text, Ring::F2, &pres));
    return out;
}

RReport verify_R_relations(const ROperators& ops)
{
    RReport rep;
    const std::size_t N = ops.N;
    std::map<Symbol, TruncatedOp> gens{{Symbol("a"), ops.a}, {Symbol("b"), ops.b}, {Symbol("c"), ops.c}};
    auto record = [&](std::string label, const TruncatedOp& op) {
        long upto = op.valid_domain();
        if (upto < 0) throw RepError("valid domain of " + label + " is empty; increase N");
        rep.checks.push_back({std::move(label), op.vanishes_upto(upto), upto});
    };
    for (const auto& [label, rel] : r_relations()) record(label + " = 0", evaluate_right(rel, gens, N));
    const TruncatedOp one = TruncatedOp::identity(N);
    record("s p = f + 1", TruncatedOp::then(ops.p, ops.s) + ops.f + one);
    record("p g = f", TruncatedOp::then(ops.g, ops.p) + ops.f);
    record("p s = g + 1", TruncatedOp::then(ops.s, ops.p) + ops.g + one);
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const RCheck& c) { return c.pass; });
    return rep;
}

RReport verify_R_relations(std::size_t N)
{
    if (N < 64) throw RepError("truncation size must be at least 64");
    return verify_R_relations(build_R_truncated(N));
}

}  // namespace lch
