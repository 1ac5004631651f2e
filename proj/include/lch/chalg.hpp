#pragma once

#include "lch/dga.hpp"
#include "lch/freealg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lch {

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Relation {
    std::string name;
    NcPoly value;  // asserted = 0
};

/// Finitely presented quotient: the free algebra on `pres` modulo the
/// two-sided ideal of `relations`. When built from a DGA it keeps the
/// differential so certificates can take derivatives.
struct RelationSet {
    GradedPresentation pres;
    std::vector<Relation> relations;
    std::optional<Derivation> derivation;

    Ring ring() const { return pres.ring(); }
    const Relation* find(std::string_view name) const;
};

/// Relations d(x) for every generator x, named `d<x>` (e.g. `dx25`).
/// Generators with zero differential contribute the zero relation.
RelationSet char_algebra(const Dga& g);

/// Free algebra on the named generators with the given relations (no DGA).
RelationSet make_relation_set(Ring ring, const std::vector<std::string>& generators,
                              const std::vector<std::pair<std::string, std::string>>& relations);

// Certificates ----------------------------------------------------------------

struct DiffStep {
    std::string name;
    NcPoly expr;
};
struct CombPart {
    NcPoly left;
    std::string relation;
    NcPoly right;
};
struct CombStep {
    std::string name;
    std::vector<CombPart> parts;
};
struct SubstStep {
    std::string name;
    std::string relation;
    std::vector<std::pair<Symbol, NcPoly>> rules;
};
/// Adds a relation that is not a consequence: later results hold in the
/// further quotient only.
struct AdjoinStep {
    std::string name;
    NcPoly value;
};
struct AssertUnitStep {
    std::string name;
};
struct AssertEqualStep {
    std::string name;
    NcPoly value;
};

using CertStep = std::variant<DiffStep, CombStep, SubstStep, AdjoinStep, AssertUnitStep, AssertEqualStep>;

struct Certificate {
    std::vector<CertStep> steps;
    std::vector<std::size_t> lines;  // source line per step, 0 if built in code
    /// Optional `norep-a` / `norep-b` directives naming the pair a, b with ab = 1.
    std::optional<NcPoly> norep_a, norep_b;
};

/// Line format:
///   diff <name> = D( <poly> )
///   comb <name> = <cof> * <rel> * <cof> [+ ...]
///   subst <name> = <rel> with <gen> -> <poly> [; ...]
///   adjoin <name> = <poly>
///   assert-unit <name>
///   assert <name> = <poly>
///   norep-a = <poly>     norep-b = <poly>
/// Cofactors containing `+` or `*` must be parenthesized; `#` comments.
Certificate parse_certificate(std::string_view text, const RelationSet& rs);
Certificate load_certificate(const std::string& path, const RelationSet& rs);

struct RegisteredRelation {
    Relation rel;
    /// True when the relation depends on an adjoined (non-consequence) relation.
    bool adjoined = false;
};

struct CertVerdict {
    bool pass = true;
    std::optional<std::size_t> failed_step;
    std::string message;
    NcPoly residual;
    std::vector<RegisteredRelation> table;
    /// A relation equal to a unit was asserted (0 = 1 in the quotient).
    bool derived_unit = false;
    bool unit_depends_on_adjoined = false;
};

/// Replays every step exactly. No search: derivatives come from the DGA,
/// combinations from the stated cofactors, rewriting from rules each of
/// which must be backed by a registered relation `g - P`.
CertVerdict verify_certificate(const RelationSet& rs, const Certificate& cert);

/// True iff the derivative of e is exactly 1.
bool verify_unit(const Dga& g, const NcPoly& e);

struct NoRepVerdict {
    bool no_finite_representation = false;
    std::string message;
    CertVerdict replay;
};

/// If ab = 1 holds in the algebra and adjoining ba = 1 yields 0 = 1, then
/// there is no representation into any matrix algebra. The certificate is
/// replayed with the extra relation `inverse` = ba - 1 available; the
/// verdict needs an un-adjoined relation equal to +-(ab - 1) and a unit
/// assertion.
NoRepVerdict adjoin_and_derive(const RelationSet& rs, const NcPoly& a, const NcPoly& b, const Certificate& cert);

struct SaturationLimits {
    std::size_t max_applications = 10'000;
    std::size_t max_degree = 12;
};

struct SaturationResult {
    RelationSet reduced;
    /// Eliminated generators with their values in the remaining generators
    /// (in elimination order; later values may mention earlier-eliminated ones
    /// only through substitution already applied).
    std::vector<std::pair<Symbol, NcPoly>> eliminated;
    bool trivial = false;
    std::size_t applications = 0;
};

/// Repeatedly orients relations of the form +-g + p (g not in p) into
/// substitutions g -> -+p and rewrites the others, stopping on a unit
/// relation or at the limits. Every output relation lies in the original ideal.
SaturationResult bounded_saturation(const RelationSet& rs, const SaturationLimits& limits = {});

}  // namespace lch
