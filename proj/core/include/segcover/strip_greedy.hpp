#pragma once

#include <vector>

#include "segcover/geometry.hpp"

namespace segcover {

// Horizontal segments confined to the unit-height strip [y0, y0+1].
struct StripInstance {
    Rational y0;
    std::vector<Segment> segments;
};

// Optimal greedy for unit horizontal segments in a strip: scan by right
// endpoint, place a square with its left boundary at r(s) whenever s is
// still uncovered. Output cardinality equals the optimum.
Cover greedy_strip_cover(const StripInstance& inst);

// Partition the plane into unit-height strips anchored at the minimum
// endpoint y, run the strip greedy per strip, return the union.
// At most twice the optimum.
Cover h1_two_approx(const std::vector<Segment>& segments);

struct StripArbResult {
    Cover cover;
    std::vector<std::size_t> selected;  // sweep-selected segment indices (independent)
};

// Arbitrary-length horizontal segments in a strip: sweep by left endpoint;
// each selected segment contributes one square at its left endpoint and two
// tiling the 2x1 neighborhood of its right endpoint. At most 3x the optimum.
StripArbResult strip_arb_three_approx(const StripInstance& inst);

}  // namespace segcover
