#include "segcover/point_index.hpp"

namespace segcover {

PointIndex::PointIndex(const std::vector<Point>& points) : points_(points), slot_(points.size()) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const Cell cell{floor_to_int(points_[i].x), floor_to_int(points_[i].y)};
        auto& bucket = grid_[cell];
        bucket.push_back(i);
    }
    // Bucket addresses are stable from here on; record each point's slot.
    for (auto& [cell, bucket] : grid_)
        for (std::size_t pos = 0; pos < bucket.size(); ++pos)
            slot_[bucket[pos]] = Slot{&bucket, pos};
}

void PointIndex::query(const Point& lo, const Point& hi, std::vector<std::size_t>& out) const {
    const std::int64_t cx0 = floor_to_int(lo.x), cx1 = floor_to_int(hi.x);
    const std::int64_t cy0 = floor_to_int(lo.y), cy1 = floor_to_int(hi.y);
    for (std::int64_t cx = cx0; cx <= cx1; ++cx)
        for (std::int64_t cy = cy0; cy <= cy1; ++cy) {
            const auto it = grid_.find(Cell{cx, cy});
            if (it == grid_.end()) continue;
            for (std::size_t idx : it->second) {
                const Point& p = points_[idx];
                if (p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y)
                    out.push_back(idx);
            }
        }
}

void PointIndex::erase(std::size_t idx) {
    Slot& slot = slot_[idx];
    if (slot.bucket == nullptr) return;
    std::vector<std::size_t>& bucket = *slot.bucket;
    const std::size_t pos = slot.position;
    const std::size_t moved = bucket.back();
    bucket[pos] = moved;
    slot_[moved].position = pos;
    bucket.pop_back();
    slot = Slot{};
}

}  // namespace segcover
