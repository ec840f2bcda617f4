#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "segcover/rational.hpp"

namespace segcover {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        const int cx = cmp(a.x, b.x);
        if (cx != 0) return cx < 0;
        return cmp(a.y, b.y) < 0;
    }
};

enum class SegmentClass { Horizontal, Vertical, General };

// A line segment with endpoints normalized on construction:
//  - non-vertical: left() has the smaller x,
//  - vertical: left() has the larger y, right() the smaller y.
class Segment {
  public:
    Segment(Point a, Point b);

    const Point& left() const { return left_; }
    const Point& right() const { return right_; }
    SegmentClass klass() const { return class_; }
    bool horizontal() const { return class_ == SegmentClass::Horizontal; }
    bool vertical() const { return class_ == SegmentClass::Vertical; }
    // Exact test of L2 length == 1.
    bool unit_length() const;

    friend bool operator==(const Segment& a, const Segment& b) {
        return a.left_ == b.left_ && a.right_ == b.right_;
    }

  private:
    Point left_;
    Point right_;
    SegmentClass class_;
};

// Closed axis-parallel unit square [x, x+1] x [y, y+1], stored by min corner.
struct UnitSquare {
    Rational x;
    Rational y;

    bool contains(const Point& p) const;

    friend bool operator==(const UnitSquare& a, const UnitSquare& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const UnitSquare& a, const UnitSquare& b) {
        const int cx = cmp(a.x, b.x);
        if (cx != 0) return cx < 0;
        return cmp(a.y, b.y) < 0;
    }
};

// A selected square set plus, for each segment index of the instance it was
// built for, the square chosen as that segment's coverage witness.
struct Cover {
    std::vector<UnitSquare> squares;
    std::map<std::size_t, std::size_t> witness;  // segment index -> square index

    std::size_t size() const { return squares.size(); }
};

struct CoverReport {
    bool feasible = false;
    std::size_t cardinality = 0;
    std::string detail;  // first violation, empty when feasible
};

// True iff t contains an endpoint of s.
bool covers(const UnitSquare& t, const Segment& s);

// True iff some unit square covers both segments, i.e. some endpoint pair is
// at L-infinity distance <= 1.
bool jointly_coverable(const Segment& s1, const Segment& s2);

// True iff no two segments of the set are jointly coverable.
bool is_independent_set(const std::vector<Segment>& segments);

// Checks the witness assignment of `cover` against `segments`.
// Throws StructuralError when a witness index is out of range.
CoverReport verify_cover(const std::vector<Segment>& segments, const Cover& cover);

}  // namespace segcover
