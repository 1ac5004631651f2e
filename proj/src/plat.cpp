#include "lch/plat.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace lch {

PlatWord parse_plat(std::string_view text, int strand_count)
{
    if (strand_count < 2 || strand_count % 2 != 0)
        throw FrontError("strand count must be even and at least 2, got " + std::to_string(strand_count));
    PlatWord w;
    w.strand_count = strand_count;
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return w;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw FrontError("not an integer in braid word: '" + std::string(tok) + "'");
        if (v < 1 || v > strand_count - 1)
            throw FrontError("braid letter " + std::to_string(v) + " out of range 1.." +
                             std::to_string(strand_count - 1));
        w.letters.push_back(v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return w;
}

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events, int base_point_cusp) : events_(std::move(events))
{
    std::vector<int> slice;  // segment id per position, top first
    std::vector<int> left_partner, right_partner;
    bool in_right_block = false;
    int right_expected = 1;
    int right_width = 0;
    int next_segment = 0;

    for (std::size_t e = 0; e < events_.size(); ++e) {
        const auto& ev = events_[e];
        const int width = static_cast<int>(slice.size());
        widths_.push_back(width);
        switch (ev.kind) {
        case EventKind::LeftCusp: {
            if (in_right_block)
                throw FrontError("left cusp after a right cusp: front is not simple");
            if (ev.level < 1 || ev.level > width + 1)
                throw FrontError("left cusp position " + std::to_string(ev.level) + " out of range");
            int up = next_segment++, lo = next_segment++;
            left_partner.resize(static_cast<std::size_t>(next_segment));
            right_partner.resize(static_cast<std::size_t>(next_segment), -1);
            left_partner[static_cast<std::size_t>(up)] = lo;
            left_partner[static_cast<std::size_t>(lo)] = up;
            slice.insert(slice.begin() + (ev.level - 1), {up, lo});
            left_cusps_.push_back({e, up, lo});
            break;
        }
        case EventKind::Crossing: {
            if (in_right_block)
                throw FrontError("crossing to the right of a right cusp: front is not simple");
            if (ev.level < 1 || ev.level >= width)
                throw FrontError("crossing level " + std::to_string(ev.level) + " out of range for width " +
                                 std::to_string(width));
            auto k = static_cast<std::size_t>(ev.level - 1);
            crossings_.push_back({e, ev.level, slice[k], slice[k + 1]});
            std::swap(slice[k], slice[k + 1]);
            break;
        }
        case EventKind::RightCusp: {
            if (!in_right_block) {
                in_right_block = true;
                right_width = width;
            }
            if (ev.level != right_expected)
                throw FrontError("right cusps must close pairs 1..n in order");
            auto k = static_cast<std::size_t>(2 * ev.level - 2);
            if (k + 1 >= slice.size())
                throw FrontError("right cusp " + std::to_string(ev.level) + " has no strands to close");
            int up = slice[k], lo = slice[k + 1];
            right_partner[static_cast<std::size_t>(up)] = lo;
            right_partner[static_cast<std::size_t>(lo)] = up;
            right_cusps_.push_back({e, up, lo});
            ++right_expected;
            break;
        }
        }
    }
    if (left_cusps_.empty())
        throw FrontError("front has no cusps");
    if (right_width != static_cast<int>(slice.size()) || 2 * static_cast<int>(right_cusps_.size()) != right_width)
        throw FrontError("right cusps do not close every strand");

    // Trace the knot starting rightward on the upper branch of the first left cusp.
    orientation_.assign(static_cast<std::size_t>(next_segment), 0);
    const int start = left_cusps_.front().upper;
    int seg = start, dir = +1;
    std::size_t visited = 0;
    do {
        orientation_[static_cast<std::size_t>(seg)] = dir;
        ++visited;
        if (dir > 0) {
            seg = right_partner[static_cast<std::size_t>(seg)];
            dir = -1;
        } else {
            seg = left_partner[static_cast<std::size_t>(seg)];
            dir = +1;
        }
    } while (seg != start && visited <= orientation_.size());
    if (visited != orientation_.size())
        throw FrontError("closure has more than one component");

    const int n = static_cast<int>(right_cusps_.size());
    base_point_ = base_point_cusp == 0 ? n : base_point_cusp;
    if (base_point_ < 1 || base_point_ > n)
        throw FrontError("base point cusp " + std::to_string(base_point_cusp) + " out of range 1.." +
                         std::to_string(n));
}

int FrontDiagram::max_width() const
{
    int m = 0;
    for (int w : widths_)
        m = std::max(m, w);
    return m;
}

bool FrontDiagram::is_plat() const
{
    int expected = 1;
    for (const auto& ev : events_) {
        if (ev.kind != EventKind::LeftCusp)
            break;
        if (ev.level != expected)
            return false;
        expected += 2;
    }
    return static_cast<std::size_t>((expected - 1) / 2) == left_cusps_.size();
}

std::string FrontDiagram::summary() const
{
    std::ostringstream os;
    const bool plat = is_plat();
    for (const auto& ev : events_) {
        switch (ev.kind) {
        case EventKind::LeftCusp:
            if (plat)
                os << "L " << (ev.level + 1) / 2 << '\n';
            else
                os << "Lp " << ev.level << '\n';
            break;
        case EventKind::Crossing:
            os << "X " << ev.level << '\n';
            break;
        case EventKind::RightCusp:
            os << "R " << ev.level << '\n';
            break;
        }
    }
    return os.str();
}

FrontDiagram build_front(const PlatWord& word, int base_point_cusp)
{
    if (word.strand_count < 2 || word.strand_count % 2 != 0)
        throw FrontError("strand count must be even and at least 2");
    std::vector<FrontEvent> ev;
    const int n = word.strand_count / 2;
    for (int i = 1; i <= n; ++i)
        ev.push_back({EventKind::LeftCusp, 2 * i - 1});
    for (int k : word.letters) {
        if (k < 1 || k >= word.strand_count)
            throw FrontError("braid letter " + std::to_string(k) + " out of range");
        ev.push_back({EventKind::Crossing, k});
    }
    for (int i = 1; i <= n; ++i)
        ev.push_back({EventKind::RightCusp, i});
    return FrontDiagram(std::move(ev), base_point_cusp);
}

ClassicalInvariants classical_invariants(const FrontDiagram& d)
{
    int writhe = 0;
    for (const auto& c : d.crossings())
        writhe += d.orientation(c.upper_left) == d.orientation(c.lower_left) ? 1 : -1;
    int down = 0, up = 0;
    for (const auto& c : d.left_cusps())
        (d.orientation(c.upper) < 0 ? down : up)++;
    for (const auto& c : d.right_cusps())
        (d.orientation(c.upper) > 0 ? down : up)++;
    const int right = static_cast<int>(d.right_cusps().size());
    return {writhe - right, (down - up) / 2, writhe};
}

GradingTable maslov_grading(const FrontDiagram& d)
{
    const std::size_t nseg = d.segment_count();
    std::vector<int> left_partner(nseg), right_partner(nseg);
    std::vector<char> is_upper_left(nseg), is_upper_right(nseg);
    for (const auto& c : d.left_cusps()) {
        left_partner[static_cast<std::size_t>(c.upper)] = c.lower;
        left_partner[static_cast<std::size_t>(c.lower)] = c.upper;
        is_upper_left[static_cast<std::size_t>(c.upper)] = 1;
    }
    for (const auto& c : d.right_cusps()) {
        right_partner[static_cast<std::size_t>(c.upper)] = c.lower;
        right_partner[static_cast<std::size_t>(c.lower)] = c.upper;
        is_upper_right[static_cast<std::size_t>(c.upper)] = 1;
    }

    GradingTable table;
    table.potential.assign(nseg, 0);
    const int start = d.left_cusps().front().upper;
    int seg = start, mu = 0;
    // Walk in the orientation direction, crossing one cusp per step.
    for (std::size_t step = 0; step < nseg; ++step) {
        table.potential[static_cast<std::size_t>(seg)] = mu;
        const auto s = static_cast<std::size_t>(seg);
        if (d.orientation(seg) > 0) {
            mu += is_upper_right[s] ? -1 : 1;
            seg = right_partner[s];
        } else {
            mu += is_upper_left[s] ? -1 : 1;
            seg = left_partner[s];
        }
    }
    const int drift = mu;  // potential on returning to the start segment
    const int r = classical_invariants(d).r;
    if (std::abs(drift) != 2 * std::abs(r))
        throw FrontError("inconsistent Maslov potential (internal error)");
    table.modulus = std::abs(drift);
    auto reduce = [&](int g) {
        if (table.modulus == 0)
            return g;
        int v = g % table.modulus;
        return v < 0 ? v + table.modulus : v;
    };
    for (auto& p : table.potential)
        p = reduce(p);
    for (const auto& c : d.crossings())
        table.grading.push_back(reduce(table.potential[static_cast<std::size_t>(c.upper_left)] -
                                       table.potential[static_cast<std::size_t>(c.lower_left)]));
    for (std::size_t i = 0; i < d.right_cusps().size(); ++i)
        table.grading.push_back(reduce(1));
    return table;
}

std::vector<std::string> generator_names(const FrontDiagram& d)
{
    std::vector<std::string> names;
    const std::size_t total = d.crossings().size() + d.right_cusps().size();
    for (std::size_t i = 1; i <= total; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace lch
