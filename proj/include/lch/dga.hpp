#pragma once

#include "lch/freealg.hpp"
#include "lch/plat.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lch {

class DgaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Semi-free DGA: ordered generators with gradings and a differential.
struct Dga {
    GradedPresentation pres;
    std::vector<NcPoly> differential;  // aligned with pres.generators()
    std::optional<FrontDiagram> source;

    Ring ring() const { return pres.ring(); }
    std::size_t size() const { return pres.size(); }
    const NcPoly& d(Symbol g) const { return differential.at(pres.index_of(g)); }
    Derivation derivation() const;

    friend bool operator==(const Dga& a, const Dga& b)
    {
        return a.pres == b.pres && a.differential == b.differential;
    }
};

struct SweepOptions {
    /// Abort when a single generator's sweep visits more partial disks.
    std::size_t max_states = 10'000'000;
};

/// Differential of a simple front by enumerating admissible disks.
///
/// Each disk is swept right to left from its positive corner, tracking the
/// pair of boundary strands. At a crossing touching the upper boundary
/// from above (or the lower boundary from below) the disk may either pass
/// or turn a convex corner there. A disk closes at a left cusp joining
/// exactly its two boundary strands.
///
/// The monomial of a disk lists its negative corners counterclockwise from
/// the positive corner. Over Z[t,t^-1] a corner at an even-graded crossing
/// whose disk lies below it contributes -1; the trivial disk at the base
/// point cusp carries t^-1.
///
/// Generators are processed in parallel; the result does not depend on
/// the thread count.
Dga compute_dga(const FrontDiagram& d, Ring ring, const SweepOptions& opt = {});
/// Single-threaded reference for compute_dga.
Dga compute_dga_serial(const FrontDiagram& d, Ring ring, const SweepOptions& opt = {});

/// Specialize every differential to F2 (t = 1, coefficients mod 2).
Dga specialize(const Dga& g);

struct D2Report {
    bool pass = true;
    std::optional<Symbol> failing;
    NcPoly residual;
};

D2Report check_d_squared(const Dga& g);

/// Degree of d, or nullopt when some differential is inhomogeneous.
bool is_homogeneous_degree_minus_one(const Dga& g, std::string* why = nullptr);

struct DiagonalWitness {
    std::vector<int> signs;  // epsilon_i = +-1 per generator
    int t_sign = 1;          // t -> t_sign * t^t_exponent
    int t_exponent = 1;
};

/// Searches for x_i -> eps_i x_i, t -> +-t^(+-1) carrying g1 to g2. The
/// sign constraints are linear over GF(2), so for each of the four
/// t-substitutions the full 2^n sign space is decided by elimination.
std::optional<DiagonalWitness> dga_diag_equivalent(const Dga& g1, const Dga& g2);

/// Apply a diagonal change of variables (used to build test inputs).
Dga apply_diagonal(const Dga& g, const DiagonalWitness& w);

// Torus knots ------------------------------------------------------------

struct TorusLabeling {
    int p = 0, q = 0;
    std::map<std::pair<int, int>, Symbol> x;  // left half, 1 <= i < j <= p
    std::map<std::pair<int, int>, Symbol> y;  // right half
    std::vector<Symbol> z;                    // right cusps, top to bottom
};

/// Front of the negative torus knot T(p,-q), q > p >= 3: p left cusps on the
/// left edge, q - p left cusps in the middle, q right cusps.
FrontDiagram torus_front(int p, int q, TorusLabeling* labels = nullptr);

struct TorusDga {
    FrontDiagram front;
    Dga dga;
    TorusLabeling labels;
};

TorusDga torus_dga(int p, int q);

// Files ---------------------------------------------------------------------

/// Line format: `ring F2|ZT`, optional `modulus m`, `gen <name> [grading]`,
/// `d <name> = <poly>`. `#` starts a comment.
std::string serialize(const Dga& g);
Dga deserialize(std::string_view text);
Dga load_dga(const std::string& path);

}  // namespace lch
