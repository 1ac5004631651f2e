#include "lch/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lch {

std::string_view ring_name(Ring r) { return r == Ring::F2 ? "F2" : "ZT"; }

bool word_less(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i])
            continue;
        return (a[i] <=> b[i]) < 0;
    }
    return false;
}

// NcPoly -----------------------------------------------------------------

NcPoly NcPoly::constant(Ring r, const Laurent& c) { return word(r, {}, c); }

NcPoly NcPoly::generator(Ring r, Symbol g) { return word(r, {g}, 1); }

NcPoly NcPoly::word(Ring r, Word w, const Laurent& c)
{
    std::vector<Term> t;
    t.push_back({c, std::move(w)});
    return from_terms(r, std::move(t));
}

NcPoly NcPoly::from_terms(Ring r, std::vector<Term> terms)
{
    NcPoly p(r);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void NcPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return word_less(a.word, b.word); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i + 1;
        Laurent sum = std::move(terms_[i].coeff);
        while (j < terms_.size() && terms_[j].word == terms_[i].word)
            sum += terms_[j++].coeff;
        if (ring_ == Ring::F2)
            sum = sum.mod2_at_one() ? Laurent(1) : Laurent();
        if (!sum.is_zero())
            out.push_back({std::move(sum), std::move(terms_[i].word)});
        i = j;
    }
    terms_ = std::move(out);
}

bool NcPoly::is_one() const
{
    return terms_.size() == 1 && terms_[0].word.empty() && terms_[0].coeff.is_one();
}

bool NcPoly::is_unit_constant() const
{
    return terms_.size() == 1 && terms_[0].word.empty() && terms_[0].coeff.is_unit();
}

Laurent NcPoly::constant_term() const
{
    if (!terms_.empty() && terms_[0].word.empty())
        return terms_[0].coeff;
    return {};
}

bool NcPoly::contains(Symbol g) const
{
    for (const auto& t : terms_)
        if (std::find(t.word.begin(), t.word.end(), g) != t.word.end())
            return true;
    return false;
}

std::size_t NcPoly::max_degree() const { return terms_.empty() ? 0 : terms_.back().word.size(); }

NcPoly NcPoly::operator-() const
{
    NcPoly r = *this;
    if (ring_ == Ring::ZT)
        for (auto& t : r.terms_)
            t.coeff = -t.coeff;
    return r;
}

void check_same_ring(const NcPoly& a, const NcPoly& b)
{
    if (a.ring() != b.ring())
        throw AlgebraError("ring mismatch: " + std::string(ring_name(a.ring())) + " vs " +
                           std::string(ring_name(b.ring())));
}

NcPoly& NcPoly::operator+=(const NcPoly& o)
{
    check_same_ring(*this, o);
    if (o.terms_.empty())
        return *this;
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) { return *this += -o; }

NcPoly operator*(const NcPoly& a, const NcPoly& b)
{
    check_same_ring(a, b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Word w;
            w.reserve(ta.word.size() + tb.word.size());
            w.insert(w.end(), ta.word.begin(), ta.word.end());
            w.insert(w.end(), tb.word.begin(), tb.word.end());
            out.push_back({ta.coeff * tb.coeff, std::move(w)});
        }
    }
    return NcPoly::from_terms(a.ring_, std::move(out));
}

NcPoly operator*(const Laurent& c, const NcPoly& p)
{
    std::vector<Term> out = p.terms_;
    for (auto& t : out)
        t.coeff = c * t.coeff;
    return NcPoly::from_terms(p.ring_, std::move(out));
}

std::string NcPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        if (i)
            os << " + ";
        if (!t.coeff.is_one()) {
            if (t.coeff.is_monomial())
                os << t.coeff.str() << '*';
            else
                os << '(' << t.coeff.str() << ")*";
        }
        if (t.word.empty()) {
            os << '1';
            continue;
        }
        for (std::size_t j = 0; j < t.word.size(); ++j) {
            if (j)
                os << '.';
            os << t.word[j].name();
        }
    }
    return os.str();
}

NcPoly add(const NcPoly& p, const NcPoly& q) { return p + q; }
NcPoly mul(const NcPoly& p, const NcPoly& q) { return p * q; }

namespace {

NcPoly substitute_impl(const NcPoly& p, const Substitution& sigma, bool total)
{
    NcPoly result(p.ring());
    std::vector<Term> acc;
    for (const auto& t : p.terms()) {
        NcPoly img = NcPoly::constant(p.ring(), t.coeff);
        for (Symbol g : t.word) {
            auto it = sigma.find(g);
            if (it == sigma.end()) {
                if (total)
                    throw AlgebraError("substitution has no image for generator " + std::string(g.name()));
                img = img * NcPoly::generator(p.ring(), g);
                continue;
            }
            check_same_ring(p, it->second);
            img = img * it->second;
            if (img.is_zero())
                break;
        }
        acc.insert(acc.end(), img.terms().begin(), img.terms().end());
    }
    return NcPoly::from_terms(p.ring(), std::move(acc));
}

}  // namespace

NcPoly substitute(const NcPoly& p, const Substitution& sigma) { return substitute_impl(p, sigma, true); }

NcPoly substitute_partial(const NcPoly& p, const Substitution& sigma)
{
    return substitute_impl(p, sigma, false);
}

NcPoly specialize(const NcPoly& p)
{
    std::vector<Term> out;
    for (const auto& t : p.terms())
        if (t.coeff.mod2_at_one())
            out.push_back({Laurent(1), t.word});
    return NcPoly::from_terms(Ring::F2, std::move(out));
}

NcPoly substitute_t(const NcPoly& p, int sign, int exponent_sign)
{
    std::vector<Term> out = p.terms();
    for (auto& t : out)
        t.coeff = t.coeff.substitute_t(sign, exponent_sign);
    return NcPoly::from_terms(p.ring(), std::move(out));
}

// GradedPresentation ---------------------------------------------------------

void GradedPresentation::add_generator(Symbol g, std::optional<int> grading)
{
    if (index_.contains(g))
        throw AlgebraError("duplicate generator " + std::string(g.name()));
    index_.emplace(g, gens_.size());
    gens_.push_back(g);
    gradings_.push_back(grading ? std::optional<int>(reduce(*grading)) : std::nullopt);
}

void GradedPresentation::set_grading(Symbol g, int grading) { gradings_.at(index_of(g)) = reduce(grading); }

std::size_t GradedPresentation::index_of(Symbol g) const
{
    auto it = index_.find(g);
    if (it == index_.end())
        throw AlgebraError("unknown generator " + std::string(g.name()));
    return it->second;
}

std::optional<int> GradedPresentation::grading(Symbol g) const
{
    auto it = index_.find(g);
    if (it == index_.end())
        return std::nullopt;
    return gradings_[it->second];
}

bool GradedPresentation::fully_graded() const
{
    return std::all_of(gradings_.begin(), gradings_.end(), [](const auto& g) { return g.has_value(); });
}

int GradedPresentation::reduce(int g) const
{
    if (modulus_ == 0)
        return g;
    int r = g % modulus_;
    return r < 0 ? r + modulus_ : r;
}

std::optional<int> GradedPresentation::word_grading(std::span<const Symbol> w) const
{
    int sum = 0;
    for (Symbol s : w) {
        auto g = grading(s);
        if (!g)
            return std::nullopt;
        sum += *g;
    }
    return reduce(sum);
}

int GradedPresentation::parity(std::span<const Symbol> w) const
{
    int p = 0;
    for (Symbol s : w) {
        auto g = grading(s);
        if (!g)
            throw AlgebraError("grading undefined for generator " + std::string(s.name()) +
                               " while applying the signed Leibniz rule");
        p ^= (*g & 1);
    }
    return p;
}

std::optional<int> homogeneous_degree(const GradedPresentation& pres, const NcPoly& p)
{
    std::optional<int> deg;
    for (const auto& t : p.terms()) {
        auto g = pres.word_grading(t.word);
        if (!g)
            throw AlgebraError("ungraded generator in " + p.str());
        if (deg && *deg != *g)
            throw AlgebraError("inhomogeneous element " + p.str());
        deg = g;
    }
    return deg;
}

// Derivation --------------------------------------------------------------------

Derivation::Derivation(GradedPresentation pres, std::unordered_map<Symbol, NcPoly> images)
    : pres_(std::move(pres)), images_(std::move(images))
{
    for (const auto& [g, img] : images_) {
        if (!pres_.contains(g))
            throw AlgebraError("derivation image given for unknown generator " + std::string(g.name()));
        if (img.ring() != pres_.ring())
            throw AlgebraError("derivation image ring mismatch at " + std::string(g.name()));
        for (const auto& t : img.terms())
            for (Symbol s : t.word)
                if (!pres_.contains(s))
                    throw AlgebraError("differential of " + std::string(g.name()) +
                                       " mentions unknown generator " + std::string(s.name()));
    }
}

NcPoly Derivation::of_generator(Symbol g) const
{
    auto it = images_.find(g);
    return it == images_.end() ? NcPoly(pres_.ring()) : it->second;
}

NcPoly Derivation::operator()(const NcPoly& p) const
{
    if (p.ring() != pres_.ring())
        throw AlgebraError("derivation applied to element of the wrong ring");
    const bool signed_rule = pres_.ring() == Ring::ZT;
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        int prefix_parity = 0;
        for (std::size_t i = 0; i < t.word.size(); ++i) {
            Symbol g = t.word[i];
            auto it = images_.find(g);
            if (it != images_.end() && !it->second.is_zero()) {
                Laurent c = t.coeff;
                if (signed_rule && prefix_parity)
                    c = -c;
                for (const auto& dt : it->second.terms()) {
                    Word w;
                    w.reserve(t.word.size() - 1 + dt.word.size());
                    w.insert(w.end(), t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(i));
                    w.insert(w.end(), dt.word.begin(), dt.word.end());
                    w.insert(w.end(), t.word.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.word.end());
                    out.push_back({c * dt.coeff, std::move(w)});
                }
            } else if (!pres_.contains(g)) {
                throw AlgebraError("derivation applied to unknown generator " + std::string(g.name()));
            }
            if (signed_rule) {
                auto gr = pres_.grading(g);
                if (!gr)
                    throw AlgebraError("grading undefined for generator " + std::string(g.name()) +
                                       " while applying the signed Leibniz rule");
                prefix_parity ^= (*gr & 1);
            }
        }
    }
    return NcPoly::from_terms(pres_.ring(), std::move(out));
}

// Parser ----------------------------------------------------------------------

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, Ring ring, const GradedPresentation* pres)
        : s_(text), ring_(ring), pres_(pres)
    {
    }

    NcPoly parse()
    {
        NcPoly p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw AlgebraError("parse error at column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" +
                           std::string(s_) + "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NcPoly expr()
    {
        NcPoly acc(ring_);
        bool negate = false;
        skip();
        if (eat('-'))
            negate = true;
        else
            eat('+');
        NcPoly t = product();
        acc += negate ? -t : t;
        for (;;) {
            if (eat('+')) {
                // Canonical output writes `a + -1*b`.
                bool neg = eat('-');
                NcPoly u = product();
                acc += neg ? -u : u;
            } else if (eat('-')) {
                acc -= product();
            } else {
                break;
            }
        }
        return acc;
    }

    NcPoly product()
    {
        NcPoly acc = power();
        for (;;) {
            skip();
            if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '*')) {
                ++pos_;
                acc = acc * power();
            } else if (pos_ < s_.size() && s_[pos_] == '(') {
                // Juxtaposed parenthesis: x5(1+x2)
                acc = acc * power();
            } else {
                break;
            }
        }
        return acc;
    }

    int integer()
    {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            neg = s_[pos_++] == '-';
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    NcPoly power()
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            return -power();
        }
        bool is_t = false;
        NcPoly base = atom(is_t);
        if (eat('^')) {
            int e = integer();
            if (is_t) {
                if (ring_ == Ring::F2)
                    fail("t is not available over F2");
                return NcPoly::constant(ring_, Laurent::t_power(e));
            }
            if (e < 0)
                fail("negative power of a non-unit");
            NcPoly r = NcPoly::one(ring_);
            for (int i = 0; i < e; ++i)
                r = r * base;
            return r;
        }
        if (is_t && ring_ == Ring::F2)
            fail("t is not available over F2");
        return base;
    }

    NcPoly atom(bool& is_t)
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NcPoly e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            BigInt v(std::string(s_.substr(start, pos_ - start)));
            return NcPoly::constant(ring_, Laurent::monomial(v, 0));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            if (name == "t") {
                is_t = true;
                return NcPoly::constant(ring_, Laurent::t_power(1));
            }
            Symbol g(name);
            if (pres_ && !pres_->contains(g))
                throw AlgebraError("unknown generator " + std::string(name) + " in \"" + std::string(s_) + "\"");
            return NcPoly::generator(ring_, g);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Ring ring_;
    const GradedPresentation* pres_;
};

}  // namespace

NcPoly parse_ncpoly(std::string_view text, Ring ring, const GradedPresentation* pres)
{
    return PolyParser(text, ring, pres).parse();
}

}  // namespace lch
