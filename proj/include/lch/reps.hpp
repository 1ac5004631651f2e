#pragma once

#include "lch/chalg.hpp"
#include "lch/dga.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lch {

class RepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n x n matrix over F2, n <= 8, packed one byte per row.
class SmallMat {
public:
    SmallMat() = default;
    explicit SmallMat(int n) : n_(n) { check(n); }

    static SmallMat zero(int n) { return SmallMat(n); }
    static SmallMat identity(int n);
    /// Row-major bits of `code`, most significant first: code 0b0100 for
    /// n = 2 is the matrix with a single 1 in the upper-right entry.
    static SmallMat from_code(int n, std::uint64_t code);
    /// Row-major string of '0'/'1' characters.
    static SmallMat from_bits(int n, std::string_view bits);

    int n() const { return n_; }
    bool get(int r, int c) const { return (bits_ >> (8 * r + c)) & 1U; }
    void set(int r, int c, bool v);
    bool is_zero() const { return bits_ == 0; }
    std::uint64_t code() const;
    std::string bits() const;

    SmallMat& operator+=(const SmallMat& o);
    friend SmallMat operator+(SmallMat a, const SmallMat& b) { return a += b; }
    friend SmallMat operator*(const SmallMat& a, const SmallMat& b);
    friend bool operator==(const SmallMat&, const SmallMat&) = default;

private:
    static void check(int n);
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

struct MatRepAssignment {
    int n = 1;
    std::map<Symbol, SmallMat> images;

    friend bool operator==(const MatRepAssignment&, const MatRepAssignment&) = default;
};

/// Multiplicative extension with 1 -> identity. Coefficients are read mod 2
/// (t -> 1). Throws RepError on a generator without an image.
SmallMat evaluate(const NcPoly& p, const MatRepAssignment& rho);

bool verify_matrix_rep(const Dga& g, const MatRepAssignment& rho);
bool verify_matrix_rep(const RelationSet& rs, const MatRepAssignment& rho);

using Augmentation = std::vector<bool>;  // aligned with the DGA's generators

/// All F2-valued algebra maps killing every differential, in lexicographic
/// order of the value vector. With `graded`, generators of nonzero grading
/// are sent to 0. Z[t,t^-1] input is specialized first.
std::vector<Augmentation> find_augmentations(const Dga& g, bool graded = false);

struct SearchResult {
    std::optional<MatRepAssignment> rep;
    std::uint64_t nodes = 0;
    bool exhausted = false;  // whole tree explored (only then is "none" a proof)
};

/// Backtracking over generators in index order, matrices in code order,
/// checking each relation as soon as all its letters are assigned. Returns
/// the first representation in that order, or none within `budget` nodes.
SearchResult search_matrix_rep(const Dga& g, int n, std::uint64_t budget);
/// Reference implementation without threads; same result as search_matrix_rep.
SearchResult search_matrix_rep_serial(const Dga& g, int n, std::uint64_t budget);

MatRepAssignment torus_rep(const TorusLabeling& labels, const Dga& g);

std::string write_rep(const MatRepAssignment& rho);
MatRepAssignment read_rep(std::string_view text);
MatRepAssignment load_rep(const std::string& path);

struct Mat2Report {
    bool pass = false;
    std::size_t quotient_size = 0;
    bool ab_plus_ba_identity = false;
    bool ba_rewrites = false;
    bool bijective = false;
    std::vector<std::string> normal_words;
};

/// The algebra F2<a,b>/(a^2, b^2, ab + ba + 1) by word rewriting
/// (a.a -> 0, b.b -> 0, b.a -> 1 + a.b), compared with Mat2(F2) under
/// a -> [[0,1],[0,0]], b -> [[0,0],[1,0]].
Mat2Report mat2_presentation_check();

// Truncated operators ---------------------------------------------------------

/// Linear map on span(v_0, v_1, ...) stored on v_0..v_{N-1}. Column i is
/// the image of v_i; it is valid only when the true image lies inside the
/// truncation, which composition tracks.
class TruncatedOp {
public:
    using Image = std::vector<long>;  // basis indices, F2 sum

    TruncatedOp() = default;
    static TruncatedOp identity(std::size_t N);
    static TruncatedOp zero(std::size_t N);
    static TruncatedOp from_basis(std::size_t N, const std::function<Image(long)>& image);

    std::size_t size() const { return cols_.size(); }
    bool valid(std::size_t i) const { return valid_[i]; }
    /// Largest M with v_0..v_M all valid, or -1.
    long valid_domain() const;
    bool entry(std::size_t row, std::size_t col) const;
    const std::vector<std::uint64_t>& column(std::size_t i) const { return cols_[i]; }

    friend TruncatedOp operator+(const TruncatedOp& a, const TruncatedOp& b);
    /// `first` applied, then `second`.
    static TruncatedOp then(const TruncatedOp& first, const TruncatedOp& second);
    /// Zero on the valid columns among v_0..v_upto.
    bool vanishes_upto(long upto) const;
    bool equals_upto(const TruncatedOp& o, long upto) const;

private:
    std::vector<std::vector<std::uint64_t>> cols_;
    std::vector<bool> valid_;
};

struct ROperators {
    std::size_t N = 0;
    TruncatedOp f, g, p, s, a, b, c;
};

ROperators build_R_truncated(std::size_t N);

/// Right action: the word w1 w2 ... wk acts by applying w1 first.
TruncatedOp evaluate_right(const NcPoly& p, const std::map<Symbol, TruncatedOp>& ops, std::size_t N);

struct RCheck {
    std::string label;
    bool pass = false;
    long checked_upto = -1;  // v_0..v_checked_upto
};

struct RReport {
    bool pass = false;
    std::vector<RCheck> checks;
};

/// The four defining relations of R (over a, b, c) and the identities
/// s p = f + 1, p g = f, p s = g + 1, each on its valid domain.
RReport verify_R_relations(const ROperators& ops);
RReport verify_R_relations(std::size_t N);

/// The defining relations of R as polynomials in a, b, c (each = 0).
std::vector<std::pair<std::string, NcPoly>> r_relations();

}  // namespace lch
