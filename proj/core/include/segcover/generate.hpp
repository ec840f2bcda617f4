#pragma once

#include <cstdint>
#include <optional>

#include "segcover/instance.hpp"

namespace segcover {

// Splittable 64-bit PRNG; the sequence is pure integer arithmetic, so
// generated instances are identical on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    SplitMix64 split() { return SplitMix64(next()); }
};

struct GenOptions {
    std::int64_t bbox = 10;                   // coordinates drawn from [0, bbox]
    std::optional<std::int64_t> height;       // y extent override
    std::optional<std::size_t> squares;       // discrete mode: requested square count
};

// Seeded instance generator per problem class. Coordinates are multiples of
// 1/20, so boundary contacts are common and the closed-square semantics get
// exercised. Discrete instances are feasible by construction: every segment
// receives at least one covering square.
Instance gen_random(ClassTag cls, std::size_t n, std::uint64_t seed, const GenOptions& options = {});

// Unit-interval vertex cover reduction: vertex v becomes a square whose
// bottom edge is the unit interval centered at x_v = v * 11/10 on the x-axis,
// edge (u,v) becomes the segment from (x_u, 0) to (x_v, 0). The optimal
// discrete cover size equals the minimum vertex cover size.
Instance vertex_cover_reduction(const GraphInput& graph);

}  // namespace segcover
