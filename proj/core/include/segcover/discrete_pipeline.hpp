#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segcover/geometry.hpp"

namespace segcover {

// Segments plus the fixed square set they must be covered from.
struct DiscreteInstance {
    std::vector<Segment> segments;
    std::vector<UnitSquare> squares;
};

// Unit-spaced horizontal lines anchored at the lowest square bottom; each
// square is assigned to the single line crossing [y, y+1) — a square whose
// bottom sits exactly on a line goes to that (lower) line.
struct LineSystem {
    Rational offset;
    std::vector<long> line_of;  // per square

    static LineSystem build(const std::vector<UnitSquare>& squares);
    Rational line_y(long xi) const { return offset + Rational(xi); }
};

// Unit-width rectangle abutting the baseline (y = 0 in normalized
// coordinates, distances measured away from the line). Covers (x, d) iff
// left <= x <= left+1 and d <= height. Height 0 still covers on-line points.
struct BaselineRect {
    Rational left;
    Rational height;
};

// A square clipped against its line: the above part and the below part,
// heights summing to 1.
struct ClippedSquare {
    BaselineRect above;
    BaselineRect below;
};
ClippedSquare clip_square(const UnitSquare& square, const Rational& line_y);

struct RpcResult {
    std::vector<std::size_t> chosen;  // rect indices, ascending
    std::vector<std::size_t> lb;      // picked point indices, in pick order
};

// Recursive greedy for covering points above a baseline with unit-width
// rectangles abutting it: pick the highest point, take the leftmost-left and
// rightmost-right rectangles covering it, drop everything those rectangles'
// pool covers, and recurse on the strictly-left and strictly-right remains.
// |chosen| <= 2 |lb| <= 2 * OPT. Points are (x, distance-above-baseline).
RpcResult rpc_cover(const std::vector<Point>& points, const std::vector<BaselineRect>& rects);

enum class EndpointSel { Left, Right };

struct Step1Result {
    std::vector<std::size_t> t1, t2;  // squares covering some l(s) / some r(s)
    std::vector<std::size_t> s1, s2;  // segment partition
    Rational opt0F;                   // relaxation optimum of the combined LP
};
Step1Result step1_split(const DiscreteInstance& inst);

struct Step2Result {
    std::vector<std::size_t> t_even, t_odd;  // side squares by line parity
    std::vector<std::size_t> s_even, s_odd;  // side segments by dominant parity mass
    Rational side_optF;                      // relaxation optimum of the side LP
};
Step2Result step2_split(const DiscreteInstance& inst, const std::vector<std::size_t>& side_segments,
                        const std::vector<std::size_t>& side_squares, EndpointSel sel,
                        const LineSystem& lines);

// One parity class restricted to one line, split by endpoint side (points on
// the line go above) and expressed over clipped rectangles.
struct BaselineSubproblem {
    std::vector<std::size_t> segment_ids;  // instance segment indices
    std::vector<Point> points;             // normalized (x, distance)
    std::vector<std::size_t> square_ids;   // instance square indices
    std::vector<BaselineRect> rects;
};
struct Step3Result {
    BaselineSubproblem above;
    BaselineSubproblem below;
};
Step3Result step3_split(const DiscreteInstance& inst,
                        const std::vector<std::size_t>& class_segments,
                        const std::vector<std::size_t>& class_squares, EndpointSel sel,
                        const Rational& line_y);

struct PipelineTrace {
    std::size_t segments = 0, squares = 0;
    Rational opt0F;
    std::size_t s1 = 0, s2 = 0;
    Rational opt1F, opt2F;
    std::size_t s11 = 0, s12 = 0, s21 = 0, s22 = 0;
    Rational opt11F, opt12F, opt21F, opt22F;

    struct LineEntry {
        int side = 1;            // 1: left endpoints, 2: right endpoints
        int parity = 0;          // 0: even lines, 1: odd lines
        long line = 0;           // xi
        std::size_t above_points = 0, below_points = 0;
        Rational combinedF, aboveF, belowF;
        std::size_t rpc_above = 0, rpc_below = 0;
        std::size_t lb_above = 0, lb_below = 0;
    };
    std::vector<LineEntry> lines;
};

// All inequalities the run must satisfy, checked with exact arithmetic:
// each split level at most doubles the fractional optimum, and each leaf's
// greedy output is at most twice its LP value. Returns human-readable
// violation descriptions (empty means the ledger holds).
std::vector<std::string> check_ledger(const PipelineTrace& trace);

// Tab-separated trace: one TRACE line per stage plus one LEDGER line per
// inequality.
std::string format_trace(const PipelineTrace& trace);

struct PipelineResult {
    Cover cover;
    PipelineTrace trace;
};

// Full pipeline: step 1 left/right LP split, step 2 parity LP split per
// side, step 3 per-line above/below split, step 4 RPC greedy per leaf, then
// the lift back to squares. |cover| <= 16 * OPT.
PipelineResult dcsus_16_approx(const DiscreteInstance& inst);

}  // namespace segcover
