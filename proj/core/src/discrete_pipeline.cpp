#include "segcover/discrete_pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "segcover/errors.hpp"
#include "segcover/lp.hpp"

namespace segcover {

namespace {

const Point& endpoint(const Segment& s, EndpointSel sel) {
    return sel == EndpointSel::Left ? s.left() : s.right();
}

bool square_contains(const UnitSquare& t, const Point& p) { return t.contains(p); }

// Uniform covering LP: minimize the number of picked squares subject to one
// >=1 incidence row per segment.
Rational solve_cover_lp(std::size_t nvars, const std::vector<std::vector<std::size_t>>& rows,
                        std::vector<Rational>* values = nullptr) {
    LinearProgram lp;
    lp.objective.assign(nvars, Rational(1));
    lp.rows.reserve(rows.size());
    lp.rhs.assign(rows.size(), Rational(1));
    for (const auto& row : rows) {
        std::vector<Rational> coeff(nvars, Rational(0));
        for (std::size_t j : row) coeff[j] = 1;
        lp.rows.push_back(std::move(coeff));
    }
    const LinearSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw StructuralError("covering relaxation reported infeasible despite incidence check");
    if (values) *values = sol.x;
    return sol.objective;
}

}  // namespace

LineSystem LineSystem::build(const std::vector<UnitSquare>& squares) {
    LineSystem lines;
    lines.line_of.reserve(squares.size());
    if (squares.empty()) {
        lines.offset = 0;
        return lines;
    }
    lines.offset = squares[0].y;
    for (const UnitSquare& t : squares) lines.offset = std::min(lines.offset, t.y);
    for (const UnitSquare& t : squares) {
        // Unique xi with offset + xi in [y, y+1).
        lines.line_of.push_back(static_cast<long>(ceil_to_int(t.y - lines.offset)));
    }
    return lines;
}

ClippedSquare clip_square(const UnitSquare& square, const Rational& line_y) {
    ClippedSquare clipped;
    clipped.above = BaselineRect{square.x, square.y + 1 - line_y};
    clipped.below = BaselineRect{square.x, line_y - square.y};
    return clipped;
}

RpcResult rpc_cover(const std::vector<Point>& points, const std::vector<BaselineRect>& rects) {
    RpcResult result;

    auto rect_covers = [&](std::size_t r, std::size_t p) {
        return points[p].x >= rects[r].left && points[p].x <= rects[r].left + 1 &&
               points[p].y <= rects[r].height;
    };

    struct Frame {
        std::vector<std::size_t> points;
        std::vector<std::size_t> rects;
    };
    std::vector<Frame> stack;
    Frame root;
    root.points.resize(points.size());
    root.rects.resize(rects.size());
    for (std::size_t i = 0; i < points.size(); ++i) root.points[i] = i;
    for (std::size_t i = 0; i < rects.size(); ++i) root.rects[i] = i;
    stack.push_back(std::move(root));

    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        if (frame.points.empty()) continue;

        // Highest point; ties by smaller x, then index.
        std::size_t pick = frame.points[0];
        for (std::size_t p : frame.points) {
            const int cy = cmp(points[p].y, points[pick].y);
            if (cy > 0 || (cy == 0 && (cmp(points[p].x, points[pick].x) < 0 ||
                                       (points[p].x == points[pick].x && p < pick))))
                pick = p;
        }

        std::vector<std::size_t> pool;  // rects covering the pick
        for (std::size_t r : frame.rects)
            if (rect_covers(r, pick)) pool.push_back(r);
        if (pool.empty())
            throw InfeasibleError("point " + std::to_string(pick) + " covered by no rectangle",
                                  static_cast<long>(pick));

        std::size_t left_rect = pool[0], right_rect = pool[0];
        for (std::size_t r : pool) {
            if (cmp(rects[r].left, rects[left_rect].left) < 0) left_rect = r;
            if (cmp(rects[r].left, rects[right_rect].left) > 0) right_rect = r;
        }

        result.lb.push_back(pick);
        result.chosen.push_back(left_rect);
        if (right_rect != left_rect) result.chosen.push_back(right_rect);

        // Everything a pool rectangle covers disappears with the pool.
        std::vector<std::size_t> survivors;
        for (std::size_t p : frame.points) {
            bool gone = false;
            for (std::size_t r : pool)
                if (rect_covers(r, p)) {
                    gone = true;
                    break;
                }
            if (!gone) survivors.push_back(p);
        }

        Frame left_frame, right_frame;
        const Rational left_edge = rects[left_rect].left;
        const Rational right_edge = rects[right_rect].left + 1;
        for (std::size_t p : survivors) {
            if (points[p].x < left_edge) left_frame.points.push_back(p);
            else if (points[p].x > right_edge) right_frame.points.push_back(p);
            // No survivor can sit between the two edges: both extreme
            // rectangles reach at least as high as the pick.
        }
        for (std::size_t r : frame.rects) {
            bool in_pool = false;
            for (std::size_t q : pool)
                if (q == r) {
                    in_pool = true;
                    break;
                }
            if (in_pool) continue;
            bool serves_left = false, serves_right = false;
            for (std::size_t p : left_frame.points)
                if (rect_covers(r, p)) {
                    serves_left = true;
                    break;
                }
            for (std::size_t p : right_frame.points)
                if (rect_covers(r, p)) {
                    serves_right = true;
                    break;
                }
            // A unit-width rectangle cannot span both remains.
            if (serves_left) left_frame.rects.push_back(r);
            else if (serves_right) right_frame.rects.push_back(r);
        }
        // Right subtree is stacked first so the left one is processed next.
        if (!right_frame.points.empty()) stack.push_back(std::move(right_frame));
        if (!left_frame.points.empty()) stack.push_back(std::move(left_frame));
    }

    std::sort(result.chosen.begin(), result.chosen.end());
    return result;
}

Step1Result step1_split(const DiscreteInstance& inst) {
    Step1Result result;
    const std::size_t n = inst.segments.size();
    const std::size_t m = inst.squares.size();

    for (std::size_t k = 0; k < n; ++k) {
        bool covered = false;
        for (std::size_t t = 0; t < m && !covered; ++t)
            covered = covers(inst.squares[t], inst.segments[k]);
        if (!covered)
            throw InfeasibleError("segment " + std::to_string(k) + " covered by no square",
                                  static_cast<long>(k));
    }

    std::vector<bool> in_t1(m, false), in_t2(m, false);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t k = 0; k < n; ++k) {
            in_t1[t] = in_t1[t] || square_contains(inst.squares[t], inst.segments[k].left());
            in_t2[t] = in_t2[t] || square_contains(inst.squares[t], inst.segments[k].right());
        }
    std::vector<std::size_t> var_of_t1(m, 0), var_of_t2(m, 0);
    for (std::size_t t = 0; t < m; ++t) {
        if (in_t1[t]) {
            var_of_t1[t] = result.t1.size();
            result.t1.push_back(t);
        }
        if (in_t2[t]) {
            var_of_t2[t] = result.t2.size();
            result.t2.push_back(t);
        }
    }

    // Combined relaxation: left-coverage variables then right-coverage ones.
    const std::size_t offset = result.t1.size();
    std::vector<std::vector<std::size_t>> rows(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t : result.t1)
            if (square_contains(inst.squares[t], inst.segments[k].left()))
                rows[k].push_back(var_of_t1[t]);
        for (std::size_t t : result.t2)
            if (square_contains(inst.squares[t], inst.segments[k].right()))
                rows[k].push_back(offset + var_of_t2[t]);
    }
    std::vector<Rational> values;
    result.opt0F = solve_cover_lp(offset + result.t2.size(), rows, &values);

    for (std::size_t k = 0; k < n; ++k) {
        Rational left_sum = 0;
        for (std::size_t t : result.t1)
            if (square_contains(inst.squares[t], inst.segments[k].left()))
                left_sum += values[var_of_t1[t]];
        if (left_sum >= make_rational(1, 2)) result.s1.push_back(k);
        else result.s2.push_back(k);
    }
    return result;
}

Step2Result step2_split(const DiscreteInstance& inst, const std::vector<std::size_t>& side_segments,
                        const std::vector<std::size_t>& side_squares, EndpointSel sel,
                        const LineSystem& lines) {
    Step2Result result;

    std::map<std::size_t, std::size_t> var_of;
    for (std::size_t t : side_squares) var_of[t] = var_of.size();

    std::vector<std::vector<std::size_t>> rows;
    rows.reserve(side_segments.size());
    for (std::size_t k : side_segments) {
        std::vector<std::size_t> row;
        for (std::size_t t : side_squares)
            if (square_contains(inst.squares[t], endpoint(inst.segments[k], sel)))
                row.push_back(var_of[t]);
        rows.push_back(std::move(row));
    }
    std::vector<Rational> values;
    result.side_optF = solve_cover_lp(side_squares.size(), rows, &values);

    for (std::size_t t : side_squares) {
        if (lines.line_of[t] % 2 == 0) result.t_even.push_back(t);
        else result.t_odd.push_back(t);
    }
    for (std::size_t i = 0; i < side_segments.size(); ++i) {
        const std::size_t k = side_segments[i];
        Rational even_sum = 0;
        for (std::size_t t : result.t_even)
            if (square_contains(inst.squares[t], endpoint(inst.segments[k], sel)))
                even_sum += values[var_of[t]];
        if (even_sum >= make_rational(1, 2)) result.s_even.push_back(k);
        else result.s_odd.push_back(k);
    }
    return result;
}

Step3Result step3_split(const DiscreteInstance& inst,
                        const std::vector<std::size_t>& class_segments,
                        const std::vector<std::size_t>& class_squares, EndpointSel sel,
                        const Rational& line_y) {
    Step3Result result;
    for (std::size_t t : class_squares) {
        const ClippedSquare clipped = clip_square(inst.squares[t], line_y);
        result.above.square_ids.push_back(t);
        result.above.rects.push_back(clipped.above);
        result.below.square_ids.push_back(t);
        result.below.rects.push_back(clipped.below);
    }
    for (std::size_t k : class_segments) {
        const Point& p = endpoint(inst.segments[k], sel);
        if (p.y >= line_y) {  // ties go above; a height-0 rect still covers them
            result.above.segment_ids.push_back(k);
            result.above.points.push_back(Point{p.x, p.y - line_y});
        } else {
            result.below.segment_ids.push_back(k);
            result.below.points.push_back(Point{p.x, line_y - p.y});
        }
    }
    return result;
}

namespace {

struct LeafOutcome {
    Rational lp_value;
    std::size_t rpc_size = 0;
    std::size_t lb_size = 0;
};

// Solves one baseline subproblem: LP value for the ledger, RPC picks for the
// cover. Selected squares and witnesses land in the shared accumulators.
LeafOutcome run_leaf(const BaselineSubproblem& leaf, std::vector<bool>& square_selected,
                     std::map<std::size_t, std::size_t>& witness_square) {
    LeafOutcome outcome;

    std::vector<std::vector<std::size_t>> rows;
    rows.reserve(leaf.points.size());
    for (const Point& p : leaf.points) {
        std::vector<std::size_t> row;
        for (std::size_t r = 0; r < leaf.rects.size(); ++r)
            if (p.x >= leaf.rects[r].left && p.x <= leaf.rects[r].left + 1 &&
                p.y <= leaf.rects[r].height)
                row.push_back(r);
        rows.push_back(std::move(row));
    }
    outcome.lp_value = solve_cover_lp(leaf.rects.size(), rows, nullptr);

    const RpcResult rpc = rpc_cover(leaf.points, leaf.rects);
    outcome.rpc_size = rpc.chosen.size();
    outcome.lb_size = rpc.lb.size();

    for (std::size_t r : rpc.chosen) square_selected[leaf.square_ids[r]] = true;
    for (std::size_t i = 0; i < leaf.points.size(); ++i) {
        for (std::size_t r : rpc.chosen) {
            if (leaf.points[i].x >= leaf.rects[r].left &&
                leaf.points[i].x <= leaf.rects[r].left + 1 &&
                leaf.points[i].y <= leaf.rects[r].height) {
                witness_square[leaf.segment_ids[i]] = leaf.square_ids[r];
                break;
            }
        }
    }
    return outcome;
}

}  // namespace

PipelineResult dcsus_16_approx(const DiscreteInstance& inst) {
    PipelineResult result;
    PipelineTrace& trace = result.trace;
    trace.segments = inst.segments.size();
    trace.squares = inst.squares.size();
    trace.opt0F = trace.opt1F = trace.opt2F = 0;
    trace.opt11F = trace.opt12F = trace.opt21F = trace.opt22F = 0;
    if (inst.segments.empty()) return result;

    const Step1Result step1 = step1_split(inst);
    trace.opt0F = step1.opt0F;
    trace.s1 = step1.s1.size();
    trace.s2 = step1.s2.size();

    const LineSystem lines = LineSystem::build(inst.squares);

    std::vector<bool> square_selected(inst.squares.size(), false);
    std::map<std::size_t, std::size_t> witness_square;

    struct SidePass {
        int side;
        const std::vector<std::size_t>* segments;
        const std::vector<std::size_t>* squares;
        EndpointSel sel;
    };
    const SidePass sides[2] = {{1, &step1.s1, &step1.t1, EndpointSel::Left},
                               {2, &step1.s2, &step1.t2, EndpointSel::Right}};

    for (const SidePass& side : sides) {
        const Step2Result step2 =
            step2_split(inst, *side.segments, *side.squares, side.sel, lines);
        if (side.side == 1) {
            trace.opt1F = step2.side_optF;
            trace.s11 = step2.s_even.size();
            trace.s12 = step2.s_odd.size();
        } else {
            trace.opt2F = step2.side_optF;
            trace.s21 = step2.s_even.size();
            trace.s22 = step2.s_odd.size();
        }

        struct ParityPass {
            int parity;
            const std::vector<std::size_t>* segments;
            const std::vector<std::size_t>* squares;
        };
        const ParityPass classes[2] = {{0, &step2.s_even, &step2.t_even},
                                      {1, &step2.s_odd, &step2.t_odd}};
        for (const ParityPass& klass : classes) {
            // Parity-class relaxation value for the step-2 ledger line.
            std::map<std::size_t, std::size_t> var_of;
            for (std::size_t t : *klass.squares) var_of[t] = var_of.size();
            std::vector<std::vector<std::size_t>> rows;
            for (std::size_t k : *klass.segments) {
                std::vector<std::size_t> row;
                for (std::size_t t : *klass.squares)
                    if (square_contains(inst.squares[t], endpoint(inst.segments[k], side.sel)))
                        row.push_back(var_of[t]);
                rows.push_back(std::move(row));
            }
            const Rational classF = solve_cover_lp(klass.squares->size(), rows, nullptr);
            if (side.side == 1) (klass.parity == 0 ? trace.opt11F : trace.opt12F) = classF;
            else (klass.parity == 0 ? trace.opt21F : trace.opt22F) = classF;

            // Group the class by line; every segment's endpoint is covered by
            // squares of exactly one line within the class.
            std::map<long, std::vector<std::size_t>> squares_on_line;
            for (std::size_t t : *klass.squares) squares_on_line[lines.line_of[t]].push_back(t);
            std::map<long, std::vector<std::size_t>> segments_on_line;
            for (std::size_t k : *klass.segments) {
                const Point& p = endpoint(inst.segments[k], side.sel);
                long assigned = 0;
                bool found = false;
                for (std::size_t t : *klass.squares)
                    if (square_contains(inst.squares[t], p)) {
                        assigned = lines.line_of[t];
                        found = true;
                        break;
                    }
                if (!found)
                    throw StructuralError("parity class lost coverage of segment " +
                                          std::to_string(k));
                segments_on_line[assigned].push_back(k);
            }

            for (const auto& [xi, line_segments] : segments_on_line) {
                const std::vector<std::size_t>& line_squares = squares_on_line[xi];
                PipelineTrace::LineEntry entry;
                entry.side = side.side;
                entry.parity = klass.parity;
                entry.line = xi;

                // Combined per-line relaxation.
                std::map<std::size_t, std::size_t> line_var;
                for (std::size_t t : line_squares) line_var[t] = line_var.size();
                std::vector<std::vector<std::size_t>> line_rows;
                for (std::size_t k : line_segments) {
                    std::vector<std::size_t> row;
                    for (std::size_t t : line_squares)
                        if (square_contains(inst.squares[t], endpoint(inst.segments[k], side.sel)))
                            row.push_back(line_var[t]);
                    line_rows.push_back(std::move(row));
                }
                entry.combinedF = solve_cover_lp(line_squares.size(), line_rows, nullptr);

                const Step3Result step3 =
                    step3_split(inst, line_segments, line_squares, side.sel, lines.line_y(xi));
                entry.above_points = step3.above.points.size();
                entry.below_points = step3.below.points.size();

                const LeafOutcome above = run_leaf(step3.above, square_selected, witness_square);
                const LeafOutcome below = run_leaf(step3.below, square_selected, witness_square);
                entry.aboveF = above.lp_value;
                entry.belowF = below.lp_value;
                entry.rpc_above = above.rpc_size;
                entry.rpc_below = below.rpc_size;
                entry.lb_above = above.lb_size;
                entry.lb_below = below.lb_size;
                trace.lines.push_back(entry);
            }
        }
    }

    // Lift: selected squares in instance order, witnesses remapped.
    std::vector<std::size_t> position(inst.squares.size(), 0);
    for (std::size_t t = 0; t < inst.squares.size(); ++t) {
        if (!square_selected[t]) continue;
        position[t] = result.cover.squares.size();
        result.cover.squares.push_back(inst.squares[t]);
    }
    for (const auto& [seg, square] : witness_square)
        result.cover.witness[seg] = position[square];
    return result;
}

std::vector<std::string> check_ledger(const PipelineTrace& trace) {
    std::vector<std::string> violations;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) violations.push_back(what);
    };
    require(trace.opt1F + trace.opt2F <= 2 * trace.opt0F, "step1: OPT1F + OPT2F > 2*OPT0F");
    require(trace.opt11F + trace.opt12F <= 2 * trace.opt1F, "step2: OPT11F + OPT12F > 2*OPT1F");
    require(trace.opt21F + trace.opt22F <= 2 * trace.opt2F, "step2: OPT21F + OPT22F > 2*OPT2F");
    for (const auto& entry : trace.lines) {
        const std::string where = "side=" + std::to_string(entry.side) +
                                  " parity=" + std::to_string(entry.parity) +
                                  " line=" + std::to_string(entry.line);
        require(entry.aboveF + entry.belowF <= 2 * entry.combinedF,
                "step3 " + where + ": above+below > 2*combined");
        require(Rational(static_cast<long>(entry.rpc_above)) <= 2 * entry.aboveF,
                "step4 " + where + " above: |rpc| > 2*LP");
        require(Rational(static_cast<long>(entry.rpc_below)) <= 2 * entry.belowF,
                "step4 " + where + " below: |rpc| > 2*LP");
        require(entry.rpc_above <= 2 * entry.lb_above, "step4 " + where + " above: |rpc| > 2|LB|");
        require(entry.rpc_below <= 2 * entry.lb_below, "step4 " + where + " below: |rpc| > 2|LB|");
    }
    return violations;
}

std::string format_trace(const PipelineTrace& trace) {
    std::ostringstream out;
    out << "TRACE\tstep1\tsegments=" << trace.segments << "\tsquares=" << trace.squares
        << "\tS1=" << trace.s1 << "\tS2=" << trace.s2 << "\tOPT0F=" << format_rational(trace.opt0F)
        << "\n";
    out << "TRACE\tstep2\tside=1\tS11=" << trace.s11 << "\tS12=" << trace.s12
        << "\tOPT1F=" << format_rational(trace.opt1F)
        << "\tOPT11F=" << format_rational(trace.opt11F)
        << "\tOPT12F=" << format_rational(trace.opt12F) << "\n";
    out << "TRACE\tstep2\tside=2\tS21=" << trace.s21 << "\tS22=" << trace.s22
        << "\tOPT2F=" << format_rational(trace.opt2F)
        << "\tOPT21F=" << format_rational(trace.opt21F)
        << "\tOPT22F=" << format_rational(trace.opt22F) << "\n";
    for (const auto& entry : trace.lines) {
        out << "TRACE\tstep3\tside=" << entry.side << "\tparity=" << entry.parity
            << "\tline=" << entry.line << "\tabove=" << entry.above_points
            << "\tbelow=" << entry.below_points
            << "\tOPTF=" << format_rational(entry.combinedF)
            << "\tOPTaboveF=" << format_rational(entry.aboveF)
            << "\tOPTbelowF=" << format_rational(entry.belowF) << "\n";
        out << "TRACE\tstep4\tside=" << entry.side << "\tparity=" << entry.parity
            << "\tline=" << entry.line << "\trpc_above=" << entry.rpc_above
            << "\tlb_above=" << entry.lb_above << "\trpc_below=" << entry.rpc_below
            << "\tlb_below=" << entry.lb_below << "\n";
    }
    const std::vector<std::string> violations = check_ledger(trace);
    out << "LEDGER\tinequalities=" << (3 + 5 * trace.lines.size())
        << "\tviolations=" << violations.size() << "\n";
    for (const std::string& v : violations) out << "LEDGER\tVIOLATION\t" << v << "\n";
    return out.str();
}

}  // namespace segcover
