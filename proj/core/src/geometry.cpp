#include "segcover/geometry.hpp"

#include <stdexcept>
#include <utility>

#include "segcover/errors.hpp"

namespace segcover {

Segment::Segment(Point a, Point b) {
    if (a == b) throw std::invalid_argument("degenerate segment");
    if (a.x == b.x) {
        class_ = SegmentClass::Vertical;
        if (a.y < b.y) std::swap(a, b);  // left() is the top endpoint
    } else {
        class_ = a.y == b.y ? SegmentClass::Horizontal : SegmentClass::General;
        if (b.x < a.x) std::swap(a, b);
    }
    left_ = std::move(a);
    right_ = std::move(b);
}

bool Segment::unit_length() const {
    const Rational dx = right_.x - left_.x;
    const Rational dy = right_.y - left_.y;
    return dx * dx + dy * dy == 1;
}

bool UnitSquare::contains(const Point& p) const {
    return p.x >= x && p.x <= x + 1 && p.y >= y && p.y <= y + 1;
}

bool covers(const UnitSquare& t, const Segment& s) {
    return t.contains(s.left()) || t.contains(s.right());
}

namespace {

bool linf_within_one(const Point& a, const Point& b) {
    const Rational dx = a.x >= b.x ? a.x - b.x : b.x - a.x;
    if (dx > 1) return false;
    const Rational dy = a.y >= b.y ? a.y - b.y : b.y - a.y;
    return dy <= 1;
}

}  // namespace

bool jointly_coverable(const Segment& s1, const Segment& s2) {
    for (const Point* a : {&s1.left(), &s1.right()})
        for (const Point* b : {&s2.left(), &s2.right()})
            if (linf_within_one(*a, *b)) return true;
    return false;
}

bool is_independent_set(const std::vector<Segment>& segments) {
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = i + 1; j < segments.size(); ++j)
            if (jointly_coverable(segments[i], segments[j])) return false;
    return true;
}

CoverReport verify_cover(const std::vector<Segment>& segments, const Cover& cover) {
    CoverReport report;
    report.cardinality = cover.squares.size();
    for (const auto& [seg, sq] : cover.witness) {
        if (seg >= segments.size())
            throw StructuralError("witness names segment " + std::to_string(seg) +
                                  " but instance has " + std::to_string(segments.size()));
        if (sq >= cover.squares.size())
            throw StructuralError("witness of segment " + std::to_string(seg) +
                                  " names square " + std::to_string(sq) + " but cover has " +
                                  std::to_string(cover.squares.size()));
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
        auto it = cover.witness.find(i);
        if (it == cover.witness.end()) {
            report.feasible = false;
            report.detail = "segment " + std::to_string(i) + " has no witness";
            return report;
        }
        if (!covers(cover.squares[it->second], segments[i])) {
            report.feasible = false;
            report.detail = "witnessed square " + std::to_string(it->second) +
                            " does not cover segment " + std::to_string(i);
            return report;
        }
    }
    report.feasible = true;
    return report;
}

}  // namespace segcover
