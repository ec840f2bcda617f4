#include "segcover/sweep_cover.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "segcover/errors.hpp"
#include "segcover/point_index.hpp"
#include "segcover/strip_greedy.hpp"

namespace segcover {

Point transpose(const Point& p) { return Point{p.y, p.x}; }

Segment transpose(const Segment& s) { return Segment(transpose(s.left()), transpose(s.right())); }

UnitSquare transpose(const UnitSquare& t) { return UnitSquare{t.y, t.x}; }

namespace {

void require_hv_unit(const std::vector<Segment>& segments, const char* who) {
    for (const Segment& s : segments)
        if (s.klass() == SegmentClass::General || !s.unit_length())
            throw InvalidInstanceError(std::string(who) + " requires unit horizontal/vertical segments");
}

// Driver shared by the sweeps: processes segments in `order`, placing
// `placement(s)` for each still-unflagged segment, then flags everything an
// emitted square covers and drops those endpoints from the index.
SweepResult run_sweep(const std::vector<Segment>& segments,
                      const std::vector<std::size_t>& order,
                      const std::function<std::vector<UnitSquare>(const Segment&)>& placement) {
    SweepResult result;
    Cover& cover = result.cover;

    std::vector<Point> endpoints;
    endpoints.reserve(2 * segments.size());
    for (const Segment& s : segments) {
        endpoints.push_back(s.left());
        endpoints.push_back(s.right());
    }
    PointIndex index(endpoints);

    std::vector<bool> flagged(segments.size(), false);
    std::map<UnitSquare, std::size_t> seen;
    std::vector<std::size_t> hits;
    for (std::size_t idx : order) {
        if (flagged[idx]) continue;
        result.lb.push_back(idx);

        for (const UnitSquare& sq : placement(segments[idx])) {
            auto [it, inserted] = seen.emplace(sq, cover.squares.size());
            if (inserted) cover.squares.push_back(sq);
            const std::size_t sq_idx = it->second;

            hits.clear();
            index.query(Point{sq.x, sq.y}, Point{sq.x + 1, sq.y + 1}, hits);
            for (std::size_t entry : hits) {
                const std::size_t seg = entry / 2;
                if (!flagged[seg]) {
                    flagged[seg] = true;
                    cover.witness[seg] = sq_idx;
                }
                index.erase(2 * seg);
                index.erase(2 * seg + 1);
            }
        }
    }
    return result;
}

}  // namespace

Cover hv1_four_approx(const std::vector<Segment>& segments) {
    require_hv_unit(segments, "hv1_four_approx");

    std::vector<Segment> horizontal, vertical_t;
    std::vector<std::size_t> h_ids, v_ids;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].horizontal()) {
            horizontal.push_back(segments[i]);
            h_ids.push_back(i);
        } else {
            vertical_t.push_back(transpose(segments[i]));
            v_ids.push_back(i);
        }
    }

    const Cover h_cover = h1_two_approx(horizontal);
    const Cover v_cover = h1_two_approx(vertical_t);

    Cover cover;
    cover.squares = h_cover.squares;
    for (const UnitSquare& sq : v_cover.squares) cover.squares.push_back(transpose(sq));
    std::sort(cover.squares.begin(), cover.squares.end());
    cover.squares.erase(std::unique(cover.squares.begin(), cover.squares.end()),
                        cover.squares.end());

    auto position = [&](const UnitSquare& sq) {
        return static_cast<std::size_t>(
            std::lower_bound(cover.squares.begin(), cover.squares.end(), sq) -
            cover.squares.begin());
    };
    for (std::size_t local = 0; local < h_ids.size(); ++local)
        cover.witness[h_ids[local]] = position(h_cover.squares[h_cover.witness.at(local)]);
    for (std::size_t local = 0; local < v_ids.size(); ++local)
        cover.witness[v_ids[local]] =
            position(transpose(v_cover.squares[v_cover.witness.at(local)]));
    return cover;
}

SweepResult hv1_three_approx(const std::vector<Segment>& segments) {
    require_hv_unit(segments, "hv1_three_approx");

    std::vector<std::size_t> order(segments.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const int cy = cmp(segments[a].right().y, segments[b].right().y);
        if (cy != 0) return cy > 0;  // top to bottom
        const int cx = cmp(segments[a].right().x, segments[b].right().x);
        if (cx != 0) return cx < 0;
        return a < b;
    });

    return run_sweep(segments, order, [](const Segment& s) {
        std::vector<UnitSquare> placed;
        if (s.horizontal()) {
            // Three squares tiling [l.x-1, r.x+1] x [y-1, y], top edges at
            // the segment's height.
            const Rational x = s.left().x, y = s.left().y - 1;
            placed = {UnitSquare{x - 1, y}, UnitSquare{x, y}, UnitSquare{x + 1, y}};
        } else {
            // Two squares tiling [x-1, x+1] x [bottom-1, bottom].
            const Rational x = s.left().x, y = s.right().y - 1;
            placed = {UnitSquare{x - 1, y}, UnitSquare{x, y}};
        }
        return placed;
    });
}

SweepResult arb_eight_approx(const std::vector<Segment>& segments) {
    std::vector<std::size_t> order(segments.size());
    std::iota(order.begin(), order.end(), 0);

    return run_sweep(segments, order, [](const Segment& s) {
        std::vector<UnitSquare> placed;
        for (const Point* a : {&s.left(), &s.right()}) {
            // Four unit squares tiling the 2x2 square centered at *a.
            placed.push_back(UnitSquare{a->x - 1, a->y - 1});
            placed.push_back(UnitSquare{a->x, a->y - 1});
            placed.push_back(UnitSquare{a->x - 1, a->y});
            placed.push_back(UnitSquare{a->x, a->y});
        }
        return placed;
    });
}

SweepResult arb_six_approx(const std::vector<Segment>& segments) {
    std::vector<std::size_t> order(segments.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const int cx = cmp(segments[a].left().x, segments[b].left().x);
        if (cx != 0) return cx < 0;
        const int cy = cmp(segments[a].left().y, segments[b].left().y);
        if (cy != 0) return cy > 0;  // upper first on ties
        return a < b;
    });

    return run_sweep(segments, order, [](const Segment& s) {
        std::vector<UnitSquare> placed;
        // Right half of the 2x2 neighborhood of l(s)...
        placed.push_back(UnitSquare{s.left().x, s.left().y - 1});
        placed.push_back(UnitSquare{s.left().x, s.left().y});
        // ...and all of the 2x2 neighborhood of r(s).
        placed.push_back(UnitSquare{s.right().x - 1, s.right().y - 1});
        placed.push_back(UnitSquare{s.right().x, s.right().y - 1});
        placed.push_back(UnitSquare{s.right().x - 1, s.right().y});
        placed.push_back(UnitSquare{s.right().x, s.right().y});
        return placed;
    });
}

}  // namespace segcover
