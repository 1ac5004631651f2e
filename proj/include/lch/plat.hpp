#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lch {

class FrontError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Braid word of a plat: letters k act on strands k and k+1 (1-based,
/// strand 1 on top).
struct PlatWord {
    int strand_count = 2;
    std::vector<int> letters;
};

PlatWord parse_plat(std::string_view text, int strand_count);

enum class EventKind { LeftCusp, Crossing, RightCusp };

/// One column of a front read left to right.
///
/// LeftCusp: `level` is the position of the upper branch of the new pair in
/// the slice to its right (the lower branch is level+1). Crossing: strands
/// at positions level and level+1 swap. RightCusp: closes positions 2i-1 and
/// 2i, with `level` = i; right cusps are always the last events.
struct FrontEvent {
    EventKind kind;
    int level;
    friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

/// A simple front: left cusps anywhere, crossings, and all right cusps on
/// the far right stacked as in a plat. Plats are the special case where
/// the left cusps open positions (1,2),(3,4),... before any crossing.
///
/// Strand segments run from a left cusp to a right cusp; there are two per
/// left cusp. Segment ids are assigned in order of creation, upper branch
/// first.
class FrontDiagram {
public:
    struct CrossingInfo {
        std::size_t event;
        int level;
        int upper_left;  // segment at position `level` left of the crossing
        int lower_left;  // segment at position `level`+1 left of the crossing
    };
    struct CuspInfo {
        std::size_t event;
        int upper;
        int lower;
    };

    /// Validates the event list, traces segments and orientation. Throws
    /// FrontError for a non-simple front or a link.
    explicit FrontDiagram(std::vector<FrontEvent> events, int base_point_cusp = 0);

    const std::vector<FrontEvent>& events() const { return events_; }
    const std::vector<CrossingInfo>& crossings() const { return crossings_; }
    const std::vector<CuspInfo>& left_cusps() const { return left_cusps_; }
    const std::vector<CuspInfo>& right_cusps() const { return right_cusps_; }
    std::size_t segment_count() const { return orientation_.size(); }
    /// Width of the slice just left of event `e` (before applying it).
    int width_before(std::size_t e) const { return widths_[e]; }
    int max_width() const;

    /// +1 when the knot orientation runs left to right along the segment.
    int orientation(int segment) const { return orientation_[static_cast<std::size_t>(segment)]; }
    /// Right cusp (1-based, top to bottom) carrying the base point.
    int base_point_cusp() const { return base_point_; }
    bool is_plat() const;

    /// One line per event: `L i`, `X k`, `R i`.
    std::string summary() const;

private:
    std::vector<FrontEvent> events_;
    std::vector<int> widths_;
    std::vector<CrossingInfo> crossings_;
    std::vector<CuspInfo> left_cusps_;
    std::vector<CuspInfo> right_cusps_;
    std::vector<int> orientation_;
    int base_point_ = 0;
};

/// Plat closure of the word. `base_point_cusp` = 0 selects the last right cusp.
FrontDiagram build_front(const PlatWord& word, int base_point_cusp = 0);

struct ClassicalInvariants {
    int tb;
    int r;
    int writhe;
};

/// tb = writhe - #right cusps; r = (#down cusps - #up cusps)/2. A crossing
/// is positive when both strands run in the same horizontal direction.
ClassicalInvariants classical_invariants(const FrontDiagram& d);

/// Maslov potentials per segment and the induced generator gradings.
///
/// Potentials increase by one from the lower to the upper branch of each
/// cusp. With rotation number r they are defined mod 2|r| (`modulus`,
/// 0 when r = 0). A crossing is graded potential(strand of negative slope)
/// minus potential(strand of positive slope); right cusps are graded 1.
struct GradingTable {
    std::vector<int> potential;
    /// Crossings in event order, then right cusps top to bottom.
    std::vector<int> grading;
    int modulus = 0;
};

GradingTable maslov_grading(const FrontDiagram& d);

/// Generator names in DGA order: x1..xm for crossings, then right cusps.
std::vector<std::string> generator_names(const FrontDiagram& d);

}  // namespace lch
