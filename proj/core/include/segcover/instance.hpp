#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segcover/geometry.hpp"

namespace segcover {

enum class InstanceMode { Continuous, Discrete };

// Most specific problem class an instance belongs to. Derived from the
// geometry, so a loaded file can never carry an inconsistent tag.
enum class ClassTag { H1US, H1, HV1, Arb, Discrete };

std::string to_string(ClassTag tag);
std::optional<ClassTag> class_tag_from_string(const std::string& name);

struct InstanceMetadata {
    std::string generator;  // empty when unknown
    std::optional<std::uint64_t> seed;
};

struct Instance {
    InstanceMode mode = InstanceMode::Continuous;
    std::vector<Segment> segments;
    std::vector<UnitSquare> squares;  // discrete mode only
    InstanceMetadata metadata;

    ClassTag class_tag() const;
};

// Text format:
//   SEGCOVER 1
//   # generator <name>          (optional metadata comments)
//   # seed <u64>
//   MODE continuous|discrete
//   SEGMENT x1 y1 x2 y2         (decimal or p/q coordinates)
//   SQUARE x y                  (discrete mode; min corner)
// '#' lines are comments; serialize(parse(text)) is byte-identical on
// canonical files.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

struct NamedCover {
    std::string algorithm;
    Cover cover;
};

// Cover format: "COVER <alg> <count>", <count> SQUARE lines, then one
// "ASSIGN seg-idx sq-idx" line per witnessed segment.
NamedCover parse_cover(const std::string& text);
std::string serialize_cover(const NamedCover& cover);

struct GraphInput {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Graph format: "VC n m" then m "E u v" lines, 0-based, simple.
GraphInput parse_graph(const std::string& text);
std::string serialize_graph(const GraphInput& graph);

// FNV-1a digest of the canonical serialization; used in run reports.
std::string instance_digest(const Instance& instance);

}  // namespace segcover
