#pragma once

#include <vector>

#include "segcover/geometry.hpp"

namespace segcover {

struct SweepResult {
    Cover cover;
    // Sweep-selected segment indices. Always an independent set, so
    // |lb| <= OPT and |cover| <= c * |lb| for the per-algorithm constant c.
    std::vector<std::size_t> lb;
};

Point transpose(const Point& p);
Segment transpose(const Segment& s);
UnitSquare transpose(const UnitSquare& t);

// Unit horizontal/vertical segments: strip 2-approximation on each
// orientation separately (the vertical side through the transpose adapter).
// At most 4x the optimum.
Cover hv1_four_approx(const std::vector<Segment>& segments);

// Unit horizontal/vertical segments, swept top-to-bottom by r(.) values.
// Each selected segment gets 3 squares (horizontal) or 2 (vertical) placed
// so that every later jointly-coverable segment is covered.
// At most 3x the optimum.
SweepResult hv1_three_approx(const std::vector<Segment>& segments);

// Arbitrary segments: each selected segment gets the 4+4 unit squares tiling
// the 2x2 neighborhoods of both endpoints. At most 8x the optimum.
SweepResult arb_eight_approx(const std::vector<Segment>& segments);

// Arbitrary segments swept by l(.).x: 2 squares tiling the right half of the
// left endpoint's 2x2 neighborhood plus 4 tiling the right endpoint's.
// At most 6x the optimum.
SweepResult arb_six_approx(const std::vector<Segment>& segments);

}  // namespace segcover
