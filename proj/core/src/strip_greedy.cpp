#include "segcover/strip_greedy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "segcover/errors.hpp"

namespace segcover {

namespace {

void check_strip(const StripInstance& inst, bool require_unit) {
    const Rational top = inst.y0 + 1;
    for (const Segment& s : inst.segments) {
        if (!s.horizontal()) throw InvalidInstanceError("strip solver requires horizontal segments");
        if (require_unit && !s.unit_length())
            throw InvalidInstanceError("strip greedy requires unit-length segments");
        if (s.left().y < inst.y0 || s.left().y > top)
            throw InvalidInstanceError("segment endpoint outside the strip");
    }
}

std::vector<std::size_t> order_by_right(const std::vector<Segment>& segments) {
    std::vector<std::size_t> order(segments.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const int cx = cmp(segments[a].right().x, segments[b].right().x);
        if (cx != 0) return cx < 0;
        const int cy = cmp(segments[a].right().y, segments[b].right().y);
        if (cy != 0) return cy < 0;
        return a < b;
    });
    return order;
}

}  // namespace

Cover greedy_strip_cover(const StripInstance& inst) {
    check_strip(inst, /*require_unit=*/true);
    Cover cover;
    std::optional<UnitSquare> last;
    for (std::size_t idx : order_by_right(inst.segments)) {
        const Segment& s = inst.segments[idx];
        if (last && covers(*last, s)) {
            cover.witness[idx] = cover.squares.size() - 1;
            continue;
        }
        last = UnitSquare{s.right().x, inst.y0};
        cover.squares.push_back(*last);
        cover.witness[idx] = cover.squares.size() - 1;
    }
    return cover;
}

Cover h1_two_approx(const std::vector<Segment>& segments) {
    for (const Segment& s : segments)
        if (!s.horizontal() || !s.unit_length())
            throw InvalidInstanceError("h1_two_approx requires unit horizontal segments");
    Cover cover;
    if (segments.empty()) return cover;

    Rational ymin = segments[0].left().y;
    for (const Segment& s : segments) ymin = std::min(ymin, s.left().y);

    // Half-open strips [ymin+i, ymin+i+1); a horizontal segment lands in
    // exactly one.
    std::map<std::int64_t, std::vector<std::size_t>> strips;
    for (std::size_t i = 0; i < segments.size(); ++i)
        strips[floor_to_int(segments[i].left().y - ymin)].push_back(i);

    std::vector<UnitSquare> squares;
    std::map<std::size_t, UnitSquare> witness_square;
    for (const auto& [strip_idx, members] : strips) {
        StripInstance strip;
        strip.y0 = ymin + Rational(strip_idx);
        for (std::size_t idx : members) strip.segments.push_back(segments[idx]);
        const Cover strip_cover = greedy_strip_cover(strip);
        for (std::size_t local = 0; local < members.size(); ++local)
            witness_square.emplace(members[local],
                                   strip_cover.squares[strip_cover.witness.at(local)]);
        squares.insert(squares.end(), strip_cover.squares.begin(), strip_cover.squares.end());
    }

    std::sort(squares.begin(), squares.end());
    cover.squares = std::move(squares);
    for (const auto& [seg, sq] : witness_square) {
        const auto it = std::lower_bound(cover.squares.begin(), cover.squares.end(), sq);
        cover.witness[seg] = static_cast<std::size_t>(it - cover.squares.begin());
    }
    return cover;
}

StripArbResult strip_arb_three_approx(const StripInstance& inst) {
    check_strip(inst, /*require_unit=*/false);
    const std::vector<Segment>& segments = inst.segments;

    std::vector<std::size_t> order(segments.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const int cx = cmp(segments[a].left().x, segments[b].left().x);
        if (cx != 0) return cx < 0;
        const int cy = cmp(segments[a].left().y, segments[b].left().y);
        if (cy != 0) return cy < 0;
        return a < b;
    });

    StripArbResult result;
    Cover& cover = result.cover;
    std::map<UnitSquare, std::size_t> seen;
    std::vector<bool> flagged(segments.size(), false);
    for (std::size_t idx : order) {
        if (flagged[idx]) continue;
        const Segment& s = segments[idx];
        result.selected.push_back(idx);

        std::vector<std::size_t> placed;
        const Rational xs[3] = {s.left().x, Rational(s.right().x - 1), s.right().x};
        for (const Rational& x : xs) {
            const UnitSquare sq{x, inst.y0};
            auto [it, inserted] = seen.emplace(sq, cover.squares.size());
            if (inserted) cover.squares.push_back(sq);
            placed.push_back(it->second);
        }
        // A strip square covers a strip segment iff an endpoint x falls in
        // the square's x-span, so one pass over the new squares flags
        // everything they cover.
        for (std::size_t j = 0; j < segments.size(); ++j) {
            if (flagged[j]) continue;
            for (std::size_t sq_idx : placed) {
                if (covers(cover.squares[sq_idx], segments[j])) {
                    flagged[j] = true;
                    cover.witness[j] = sq_idx;
                    break;
                }
            }
        }
    }
    return result;
}

}  // namespace segcover
