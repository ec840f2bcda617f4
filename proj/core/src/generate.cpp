#include "segcover/generate.hpp"

#include <stdexcept>

#include "segcover/errors.hpp"

namespace segcover {

namespace {

constexpr long kDen = 20;  // all random coordinates are multiples of 1/20

// Uniform multiple of 1/20 in [0, extent].
Rational random_coord(SplitMix64& rng, std::int64_t extent) {
    const std::uint64_t steps = static_cast<std::uint64_t>(extent) * kDen + 1;
    return make_rational(static_cast<long>(rng.bounded(steps)), kDen);
}

Point random_point(SplitMix64& rng, std::int64_t w, std::int64_t h) {
    const Rational x = random_coord(rng, w);
    const Rational y = random_coord(rng, h);
    return Point{x, y};
}

}  // namespace

Instance gen_random(ClassTag cls, std::size_t n, std::uint64_t seed, const GenOptions& options) {
    if (options.bbox < 1) throw std::invalid_argument("bbox must be at least 1");
    if (options.height && *options.height < 1)
        throw std::invalid_argument("height must be at least 1");
    Instance instance;
    instance.metadata.generator = to_string(cls);
    instance.metadata.seed = seed;
    SplitMix64 rng(seed);
    const std::int64_t w = options.bbox;
    // The strip class stays strip-confined no matter what height was asked.
    const std::int64_t h = cls == ClassTag::H1US ? 1 : options.height.value_or(w);

    switch (cls) {
        case ClassTag::H1US:
        case ClassTag::H1: {
            const std::int64_t yext = cls == ClassTag::H1US ? 1 : h;
            for (std::size_t i = 0; i < n; ++i) {
                const Rational x = random_coord(rng, std::max<std::int64_t>(w - 1, 0));
                const Rational y = random_coord(rng, yext);
                instance.segments.emplace_back(Point{x, y}, Point{x + 1, y});
            }
            break;
        }
        case ClassTag::HV1: {
            for (std::size_t i = 0; i < n; ++i) {
                const bool horizontal = rng.bounded(2) == 0;
                if (horizontal) {
                    const Rational x = random_coord(rng, std::max<std::int64_t>(w - 1, 0));
                    const Rational y = random_coord(rng, h);
                    instance.segments.emplace_back(Point{x, y}, Point{x + 1, y});
                } else {
                    const Rational x = random_coord(rng, w);
                    const Rational y = random_coord(rng, std::max<std::int64_t>(h - 1, 0));
                    instance.segments.emplace_back(Point{x, y}, Point{x, y + 1});
                }
            }
            break;
        }
        case ClassTag::Arb:
        case ClassTag::Discrete: {
            for (std::size_t i = 0; i < n; ++i) {
                Point p = random_point(rng, w, h);
                Point q = random_point(rng, w, h);
                while (q == p) q = random_point(rng, w, h);
                instance.segments.emplace_back(p, q);
            }
            break;
        }
    }

    if (cls == ClassTag::Discrete) {
        instance.mode = InstanceMode::Discrete;
        const std::size_t m = options.squares.value_or(2 * n);
        for (std::size_t j = 0; j < m; ++j) {
            if (instance.segments.empty()) {
                instance.squares.push_back(UnitSquare{random_coord(rng, w), random_coord(rng, h)});
                continue;
            }
            // Anchor each square to a random endpoint so it covers something.
            const Segment& s = instance.segments[j % n];
            const Point& e = rng.bounded(2) == 0 ? s.left() : s.right();
            const Rational u = random_coord(rng, 1);
            const Rational v = random_coord(rng, 1);
            instance.squares.push_back(UnitSquare{e.x - u, e.y - v});
        }
        // Feasibility patch for m < n: cover anything still uncovered.
        for (std::size_t i = 0; i < instance.segments.size(); ++i) {
            const Segment& s = instance.segments[i];
            bool covered = false;
            for (const UnitSquare& t : instance.squares)
                if (covers(t, s)) {
                    covered = true;
                    break;
                }
            if (!covered) {
                const Point& e = rng.bounded(2) == 0 ? s.left() : s.right();
                instance.squares.push_back(
                    UnitSquare{e.x - random_coord(rng, 1), e.y - random_coord(rng, 1)});
            }
        }
    }
    return instance;
}

Instance vertex_cover_reduction(const GraphInput& graph) {
    Instance instance;
    instance.mode = InstanceMode::Discrete;
    instance.metadata.generator = "vc-reduction";
    const Rational gap = make_rational(11, 10);  // consecutive projections 11/10 apart
    auto vertex_x = [&](std::size_t v) -> Rational { return gap * Rational(static_cast<long>(v)); };
    for (std::size_t v = 0; v < graph.vertex_count; ++v)
        instance.squares.push_back(UnitSquare{vertex_x(v) - make_rational(1, 2), Rational(0)});
    for (const auto& [u, v] : graph.edges)
        instance.segments.emplace_back(Point{vertex_x(u), Rational(0)},
                                       Point{vertex_x(v), Rational(0)});
    return instance;
}

}  // namespace segcover
