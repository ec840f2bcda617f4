#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "segcover/geometry.hpp"

namespace segcover {

// Dynamic index over a fixed point set supporting closed-rectangle queries
// and point deletion. Backed by unit-grid buckets: a query scans only the
// grid cells its rectangle touches, so constant-size rectangles (everything
// the sweep algorithms ask for) cost O(1 + hits) amortized.
class PointIndex {
  public:
    explicit PointIndex(const std::vector<Point>& points);

    // Appends the indices of live points inside [lo.x, hi.x] x [lo.y, hi.y].
    void query(const Point& lo, const Point& hi, std::vector<std::size_t>& out) const;

    // Removes a point from the index; erasing twice is a no-op.
    void erase(std::size_t idx);

    bool live(std::size_t idx) const { return slot_[idx].bucket != nullptr; }

  private:
    using Cell = std::pair<std::int64_t, std::int64_t>;
    struct Slot {
        std::vector<std::size_t>* bucket = nullptr;
        std::size_t position = 0;
    };

    std::vector<Point> points_;
    std::map<Cell, std::vector<std::size_t>> grid_;
    std::vector<Slot> slot_;
};

}  // namespace segcover
