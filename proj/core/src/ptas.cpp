#include "segcover/ptas.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <stdexcept>

#include "segcover/errors.hpp"
#include "segcover/set_cover.hpp"

namespace segcover {

std::vector<UnitSquare> enumerate_candidates(const std::vector<Point>& endpoints) {
    std::set<Rational> xs, ys;
    for (const Point& p : endpoints) {
        xs.insert(p.x);
        ys.insert(p.y);
    }
    std::vector<UnitSquare> out;
    out.reserve(xs.size() * ys.size());
    for (const Rational& x : xs)
        for (const Rational& y : ys) out.push_back(UnitSquare{x, y - 1});
    return out;  // distinct by construction of the (x, y) cross product
}

ShiftGrid ShiftGrid::enclose(const std::vector<Point>& endpoints, unsigned k) {
    ShiftGrid grid;
    grid.k = k;
    if (endpoints.empty()) {
        grid.side = 1;
        return grid;
    }
    Rational min_x = endpoints[0].x, max_x = endpoints[0].x;
    Rational min_y = endpoints[0].y, max_y = endpoints[0].y;
    for (const Point& p : endpoints) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    grid.x0 = floor_to_int(min_x);
    grid.y0 = floor_to_int(min_y);
    const std::int64_t lx = floor_to_int(max_x) - grid.x0 + 1;
    const std::int64_t ly = floor_to_int(max_y) - grid.y0 + 1;
    grid.side = std::max(lx, ly);
    return grid;
}

namespace {

// Strip index along one axis: strip 0 is the short strip of width `shift`
// (absent when shift == 0), then full k-strips.
std::int64_t strip_of(const Rational& v, std::int64_t origin, unsigned shift, unsigned k) {
    const Rational offset = v - origin;
    if (shift > 0 && offset < static_cast<long>(shift)) return 0;
    const Rational past = (offset - static_cast<long>(shift)) / static_cast<long>(k);
    return (shift > 0 ? 1 : 0) + floor_to_int(past);
}

// Integer extent of a strip, clipped to the box.
std::int64_t strip_units(std::int64_t strip, std::int64_t side, unsigned shift, unsigned k) {
    std::int64_t start, width;
    if (shift > 0) {
        if (strip == 0) {
            start = 0;
            width = shift;
        } else {
            start = shift + (strip - 1) * static_cast<std::int64_t>(k);
            width = k;
        }
    } else {
        start = strip * static_cast<std::int64_t>(k);
        width = k;
    }
    return std::max<std::int64_t>(0, std::min(start + width, side) - start);
}

}  // namespace

ShiftGrid::CellKey ShiftGrid::cell_of(const Point& p) const {
    return CellKey{strip_of(p.x, x0, shift_i, k), strip_of(p.y, y0, shift_j, k)};
}

std::int64_t ShiftGrid::cell_units(const CellKey& key) const {
    return strip_units(key.col, side, shift_i, k) * strip_units(key.row, side, shift_j, k);
}

Cover solve_cell_exact(const std::vector<Segment>& cell_segments,
                       const std::vector<UnitSquare>& candidates, std::size_t chi,
                       std::uint64_t node_budget) {
    Cover cover;
    if (cell_segments.empty()) return cover;

    SetCoverInstance sc;
    sc.universe_size = cell_segments.size();
    sc.sets.reserve(candidates.size());
    for (const UnitSquare& t : candidates) {
        std::vector<std::size_t> covered;
        for (std::size_t i = 0; i < cell_segments.size(); ++i)
            if (covers(t, cell_segments[i])) covered.push_back(i);
        sc.sets.push_back(std::move(covered));
    }

    const SetCoverResult res = exact_setcover(sc, node_budget, chi);
    if (res.status == SolveStatus::TooLarge)
        throw BudgetExceededError("cell subproblem exceeded the node budget");
    if (res.status == SolveStatus::Infeasible) {
        if (res.infeasible_element == SetCoverResult::npos)
            throw StructuralError("no cover within the unit-cell cap; candidate set is incomplete");
        throw InfeasibleError("segment " + std::to_string(res.infeasible_element) +
                                  " covered by no candidate square",
                              static_cast<long>(res.infeasible_element));
    }

    for (std::size_t idx : res.chosen) cover.squares.push_back(candidates[idx]);
    for (std::size_t i = 0; i < cell_segments.size(); ++i)
        for (std::size_t s = 0; s < cover.squares.size(); ++s)
            if (covers(cover.squares[s], cell_segments[i])) {
                cover.witness[i] = s;
                break;
            }
    return cover;
}

namespace {

Cover solve_shift(const std::vector<Segment>& segments, const ShiftGrid& grid,
                  std::uint64_t node_budget) {
    std::map<ShiftGrid::CellKey, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < segments.size(); ++i)
        cells[grid.cell_of(segments[i].left())].push_back(i);

    std::vector<UnitSquare> squares;
    std::map<std::size_t, UnitSquare> witness_square;
    for (const auto& [key, members] : cells) {
        std::vector<Segment> cell_segments;
        std::vector<Point> endpoints;
        cell_segments.reserve(members.size());
        for (std::size_t idx : members) {
            cell_segments.push_back(segments[idx]);
            endpoints.push_back(segments[idx].left());
            endpoints.push_back(segments[idx].right());
        }
        const std::int64_t chi = grid.cell_units(key);
        const Cover cell_cover =
            solve_cell_exact(cell_segments, enumerate_candidates(endpoints),
                             static_cast<std::size_t>(chi), node_budget);
        for (std::size_t local = 0; local < members.size(); ++local)
            witness_square.emplace(members[local],
                                   cell_cover.squares[cell_cover.witness.at(local)]);
        squares.insert(squares.end(), cell_cover.squares.begin(), cell_cover.squares.end());
    }

    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());

    Cover cover;
    cover.squares = std::move(squares);
    for (const auto& [seg, sq] : witness_square) {
        const auto it = std::lower_bound(cover.squares.begin(), cover.squares.end(), sq);
        cover.witness[seg] = static_cast<std::size_t>(it - cover.squares.begin());
    }
    return cover;
}

}  // namespace

PtasResult ptas_cover(const std::vector<Segment>& segments, unsigned k,
                      const PtasOptions& options) {
    if (k < 1) throw std::invalid_argument("ptas_cover requires k >= 1");
    for (const Segment& s : segments)
        if (!s.unit_length() || s.klass() == SegmentClass::General)
            throw InvalidInstanceError("ptas_cover requires unit horizontal/vertical segments");

    PtasResult result;
    result.shift_sizes.assign(static_cast<std::size_t>(k) * k, 0);
    if (segments.empty()) return result;

    std::vector<Point> endpoints;
    endpoints.reserve(2 * segments.size());
    for (const Segment& s : segments) {
        endpoints.push_back(s.left());
        endpoints.push_back(s.right());
    }
    const ShiftGrid base = ShiftGrid::enclose(endpoints, k);

    std::vector<Cover> covers(static_cast<std::size_t>(k) * k);
    auto run = [&](unsigned i, unsigned j) {
        ShiftGrid grid = base;
        grid.shift_i = i;
        grid.shift_j = j;
        return solve_shift(segments, grid, options.node_budget_per_cell);
    };

    if (options.jobs > 1) {
        std::vector<std::future<Cover>> futures;
        futures.reserve(covers.size());
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j)
                futures.push_back(std::async(std::launch::async, run, i, j));
        for (std::size_t t = 0; t < futures.size(); ++t) covers[t] = futures[t].get();
    } else {
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) covers[i * k + j] = run(i, j);
    }

    std::size_t best = 0;
    for (std::size_t t = 0; t < covers.size(); ++t) {
        result.shift_sizes[t] = covers[t].size();
        if (covers[t].size() < covers[best].size()) best = t;
    }
    result.chosen_i = static_cast<unsigned>(best / k);
    result.chosen_j = static_cast<unsigned>(best % k);
    result.cover = std::move(covers[best]);
    return result;
}

}  // namespace segcover
