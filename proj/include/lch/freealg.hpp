#pragma once

#include "lch/laurent.hpp"
#include "lch/symbol.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lch {

enum class Ring { F2, ZT };

std::string_view ring_name(Ring r);

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Word = std::vector<Symbol>;

/// Length first, then lexicographic in the natural symbol order.
bool word_less(const Word& a, const Word& b);

struct Term {
    Laurent coeff;
    Word word;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Element of the free associative algebra over F2 or Z[t,t^-1].
///
/// Always normalized: terms sorted by word_less, words distinct, no zero
/// coefficients. Over F2 every stored coefficient is exactly 1.
class NcPoly {
public:
    explicit NcPoly(Ring ring = Ring::F2) : ring_(ring) {}

    static NcPoly zero(Ring r) { return NcPoly(r); }
    static NcPoly one(Ring r) { return constant(r, 1); }
    static NcPoly constant(Ring r, const Laurent& c);
    static NcPoly generator(Ring r, Symbol g);
    static NcPoly word(Ring r, Word w, const Laurent& c = 1);
    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    static NcPoly from_terms(Ring r, std::vector<Term> terms);

    Ring ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Nonzero constant +-t^k.
    bool is_unit_constant() const;
    /// Coefficient of the empty word.
    Laurent constant_term() const;
    bool contains(Symbol g) const;
    std::size_t max_degree() const;

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const Laurent& c, const NcPoly& p);
    friend bool operator==(const NcPoly&, const NcPoly&) = default;

    /// Canonical text: `t^-1*1 + x2.x5 + -1*x3`; zero renders as `0`.
    std::string str() const;

private:
    void normalize();
    Ring ring_;
    std::vector<Term> terms_;
};

void check_same_ring(const NcPoly& a, const NcPoly& b);

NcPoly add(const NcPoly& p, const NcPoly& q);
NcPoly mul(const NcPoly& p, const NcPoly& q);

using Substitution = std::unordered_map<Symbol, NcPoly>;

/// Algebra homomorphism image. Every generator occurring in p must be mapped.
NcPoly substitute(const NcPoly& p, const Substitution& sigma);
/// As substitute, but generators without an image are left unchanged.
NcPoly substitute_partial(const NcPoly& p, const Substitution& sigma);
/// t -> 1 and coefficients mod 2.
NcPoly specialize(const NcPoly& p);
/// Coefficientwise t -> sign * t^exponent_sign.
NcPoly substitute_t(const NcPoly& p, int sign, int exponent_sign);

/// Ordered generators with optional integer gradings. A nonzero
/// grading_modulus means gradings live in Z/modulus.
class GradedPresentation {
public:
    GradedPresentation() = default;
    explicit GradedPresentation(Ring r) : ring_(r) {}

    void add_generator(Symbol g, std::optional<int> grading = std::nullopt);
    void set_grading(Symbol g, int grading);
    void set_grading_modulus(int m) { modulus_ = m; }

    Ring ring() const { return ring_; }
    void set_ring(Ring r) { ring_ = r; }
    const std::vector<Symbol>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool contains(Symbol g) const { return index_.contains(g); }
    std::size_t index_of(Symbol g) const;
    std::optional<int> grading(Symbol g) const;
    int grading_modulus() const { return modulus_; }
    bool fully_graded() const;
    /// Parity of a word's grading; throws if some letter is ungraded.
    int parity(std::span<const Symbol> w) const;
    std::optional<int> word_grading(std::span<const Symbol> w) const;
    int reduce(int g) const;

    friend bool operator==(const GradedPresentation& a, const GradedPresentation& b)
    {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_ && a.gradings_ == b.gradings_ &&
               a.modulus_ == b.modulus_;
    }

private:
    Ring ring_ = Ring::F2;
    std::vector<Symbol> gens_;
    std::vector<std::optional<int>> gradings_;
    std::unordered_map<Symbol, std::size_t> index_;
    int modulus_ = 0;
};

/// The derivation extending generator images by the graded Leibniz rule
/// d(vw) = d(v) w + (-1)^|v| v d(w). Over F2 signs drop out; over Z[t,t^-1]
/// t is a constant (d t = 0).
class Derivation {
public:
    Derivation(GradedPresentation pres, std::unordered_map<Symbol, NcPoly> images);

    NcPoly operator()(const NcPoly& p) const;
    NcPoly of_generator(Symbol g) const;
    const GradedPresentation& presentation() const { return pres_; }

private:
    GradedPresentation pres_;
    std::unordered_map<Symbol, NcPoly> images_;
};

/// Grading of a homogeneous polynomial, nullopt for zero; throws on
/// inhomogeneous input or ungraded letters.
std::optional<int> homogeneous_degree(const GradedPresentation& pres, const NcPoly& p);

// Text input ------------------------------------------------------------

/// Parses sums, differences and products (`.` or `*`) of generators,
/// integers and powers of t, with parentheses. When `pres` is given, every
/// generator must belong to it.
NcPoly parse_ncpoly(std::string_view text, Ring ring, const GradedPresentation* pres = nullptr);

}  // namespace lch
