#pragma once

#include <cstdint>
#include <vector>

#include "segcover/geometry.hpp"

namespace segcover {

// Canonical candidate positions: every unit square slid (left, then up) until
// its left edge and its top edge each touch an input endpoint. Any unit
// square can be replaced by the canonical square anchored at the extreme
// endpoints it contains without losing coverage, so exact search over this
// set is exact over all placements.
std::vector<UnitSquare> enumerate_candidates(const std::vector<Point>& endpoints);

// Shifted k-strip grid over an integer-length square box enclosing all
// endpoints. Cells are half-open rectangles of at most k x k unit cells;
// for shift index i > 0 the first strip on that axis is i units wide.
struct ShiftGrid {
    std::int64_t x0 = 0;
    std::int64_t y0 = 0;
    std::int64_t side = 0;
    unsigned k = 1;
    unsigned shift_i = 0;  // vertical strips (x axis)
    unsigned shift_j = 0;  // horizontal strips (y axis)

    struct CellKey {
        std::int64_t col;
        std::int64_t row;
        friend bool operator<(const CellKey& a, const CellKey& b) {
            if (a.col != b.col) return a.col < b.col;
            return a.row < b.row;
        }
        friend bool operator==(const CellKey& a, const CellKey& b) {
            return a.col == b.col && a.row == b.row;
        }
    };

    // Box from endpoint extremes; every endpoint lies strictly inside
    // [x0, x0+side) x [y0, y0+side).
    static ShiftGrid enclose(const std::vector<Point>& endpoints, unsigned k);

    CellKey cell_of(const Point& p) const;
    // Unit-cell count of a cell (chi): width * height in integer units.
    std::int64_t cell_units(const CellKey& key) const;
};

// Minimum-cardinality cover of `cell_segments` using only `candidates`,
// searched with the solution size capped at `chi`. Throws
// BudgetExceededError when the node budget runs out and InfeasibleError when
// no candidate covers some segment.
Cover solve_cell_exact(const std::vector<Segment>& cell_segments,
                       const std::vector<UnitSquare>& candidates, std::size_t chi,
                       std::uint64_t node_budget = 1'000'000);

struct PtasOptions {
    std::uint64_t node_budget_per_cell = 1'000'000;
    unsigned jobs = 1;
};

struct PtasResult {
    Cover cover;
    unsigned chosen_i = 0;
    unsigned chosen_j = 0;
    // cover size per shift, indexed [i * k + j]
    std::vector<std::size_t> shift_sizes;
};

// Shifting-strategy PTAS for unit horizontal/vertical segments:
// solves every cell of every shift exactly over canonical candidates and
// returns the smallest of the k*k per-shift unions. Guarantee:
// |cover| <= (1 + 1/k)^2 * OPT.
PtasResult ptas_cover(const std::vector<Segment>& segments, unsigned k,
                      const PtasOptions& options = {});

}  // namespace segcover
