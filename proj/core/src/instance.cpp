#include "segcover/instance.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "segcover/errors.hpp"

namespace segcover {

std::string to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::H1US: return "h1us";
        case ClassTag::H1: return "h1";
        case ClassTag::HV1: return "hv1";
        case ClassTag::Arb: return "arb";
        case ClassTag::Discrete: return "discrete";
    }
    return "?";
}

std::optional<ClassTag> class_tag_from_string(const std::string& name) {
    if (name == "h1us") return ClassTag::H1US;
    if (name == "h1") return ClassTag::H1;
    if (name == "hv1") return ClassTag::HV1;
    if (name == "arb") return ClassTag::Arb;
    if (name == "discrete") return ClassTag::Discrete;
    return std::nullopt;
}

ClassTag Instance::class_tag() const {
    if (mode == InstanceMode::Discrete) return ClassTag::Discrete;
    bool all_horizontal = true;
    bool all_axis = true;
    bool all_unit = true;
    for (const Segment& s : segments) {
        all_horizontal = all_horizontal && s.horizontal();
        all_axis = all_axis && s.klass() != SegmentClass::General;
        all_unit = all_unit && s.unit_length();
    }
    if (!all_axis || !all_unit) return ClassTag::Arb;
    if (!all_horizontal) return ClassTag::HV1;
    if (segments.empty()) return ClassTag::H1US;
    Rational ymin = segments[0].left().y, ymax = ymin;
    for (const Segment& s : segments) {
        ymin = std::min(ymin, s.left().y);
        ymax = std::max(ymax, s.left().y);
    }
    return ymax - ymin <= 1 ? ClassTag::H1US : ClassTag::H1;
}

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line line;
        line.number = number;
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        lines.push_back(std::move(line));
    }
    return lines;
}

Rational parse_coord(const std::string& tok, std::size_t line, std::size_t column) {
    try {
        return parse_rational(tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line, column);
    }
}

std::size_t parse_index(const std::string& tok, std::size_t line, std::size_t column) {
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected a non-negative integer, got '" + tok + "'", line, column);
    try {
        return static_cast<std::size_t>(std::stoull(tok));
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range: '" + tok + "'", line, column);
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    Instance instance;
    bool saw_header = false;
    bool saw_mode = false;
    for (const Line& line : tokenize(text)) {
        if (line.tokens.empty()) continue;
        const std::string& key = line.tokens[0];
        if (key == "#") {
            if (line.tokens.size() == 3 && line.tokens[1] == "generator" &&
                instance.metadata.generator.empty())
                instance.metadata.generator = line.tokens[2];
            if (line.tokens.size() == 3 && line.tokens[1] == "seed" && !instance.metadata.seed) {
                try {
                    instance.metadata.seed = std::stoull(line.tokens[2]);
                } catch (const std::exception&) {
                    // malformed metadata stays an ordinary comment
                }
            }
            continue;
        }
        if (key.size() > 0 && key[0] == '#') continue;
        if (!saw_header) {
            if (key != "SEGCOVER" || line.tokens.size() != 2 || line.tokens[1] != "1")
                throw ParseError("expected 'SEGCOVER 1' header", line.number, 1);
            saw_header = true;
            continue;
        }
        if (key == "MODE") {
            if (line.tokens.size() != 2) throw ParseError("MODE takes one value", line.number, 1);
            if (line.tokens[1] == "continuous") instance.mode = InstanceMode::Continuous;
            else if (line.tokens[1] == "discrete") instance.mode = InstanceMode::Discrete;
            else throw ParseError("unknown mode '" + line.tokens[1] + "'", line.number, 6);
            saw_mode = true;
            continue;
        }
        if (key == "SEGMENT") {
            if (!saw_mode) throw ParseError("SEGMENT before MODE", line.number, 1);
            if (line.tokens.size() != 5)
                throw ParseError("SEGMENT takes 4 coordinates", line.number, 1);
            const Point p{parse_coord(line.tokens[1], line.number, 2),
                          parse_coord(line.tokens[2], line.number, 3)};
            const Point q{parse_coord(line.tokens[3], line.number, 4),
                          parse_coord(line.tokens[4], line.number, 5)};
            if (p == q) throw ParseError("degenerate segment", line.number, 1);
            instance.segments.emplace_back(p, q);
            continue;
        }
        if (key == "SQUARE") {
            if (!saw_mode) throw ParseError("SQUARE before MODE", line.number, 1);
            if (instance.mode != InstanceMode::Discrete)
                throw ParseError("SQUARE lines require MODE discrete", line.number, 1);
            if (line.tokens.size() != 3) throw ParseError("SQUARE takes 2 coordinates", line.number, 1);
            instance.squares.push_back(UnitSquare{parse_coord(line.tokens[1], line.number, 2),
                                                  parse_coord(line.tokens[2], line.number, 3)});
            continue;
        }
        throw ParseError("unknown directive '" + key + "'", line.number, 1);
    }
    if (!saw_header) throw ParseError("missing 'SEGCOVER 1' header", 1, 1);
    if (!saw_mode) throw ParseError("missing MODE line", 1, 1);
    return instance;
}

std::string serialize_instance(const Instance& instance) {
    std::ostringstream out;
    out << "SEGCOVER 1\n";
    if (!instance.metadata.generator.empty())
        out << "# generator " << instance.metadata.generator << "\n";
    if (instance.metadata.seed) out << "# seed " << *instance.metadata.seed << "\n";
    out << "MODE " << (instance.mode == InstanceMode::Discrete ? "discrete" : "continuous") << "\n";
    for (const Segment& s : instance.segments)
        out << "SEGMENT " << format_rational(s.left().x) << " " << format_rational(s.left().y)
            << " " << format_rational(s.right().x) << " " << format_rational(s.right().y) << "\n";
    for (const UnitSquare& t : instance.squares)
        out << "SQUARE " << format_rational(t.x) << " " << format_rational(t.y) << "\n";
    return out.str();
}

NamedCover parse_cover(const std::string& text) {
    NamedCover result;
    bool saw_header = false;
    std::size_t declared = 0;
    for (const Line& line : tokenize(text)) {
        if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
        const std::string& key = line.tokens[0];
        if (!saw_header) {
            if (key != "COVER" || line.tokens.size() != 3)
                throw ParseError("expected 'COVER <alg> <count>' header", line.number, 1);
            result.algorithm = line.tokens[1];
            declared = parse_index(line.tokens[2], line.number, 3);
            saw_header = true;
            continue;
        }
        if (key == "SQUARE") {
            if (line.tokens.size() != 3) throw ParseError("SQUARE takes 2 coordinates", line.number, 1);
            result.cover.squares.push_back(UnitSquare{parse_coord(line.tokens[1], line.number, 2),
                                                      parse_coord(line.tokens[2], line.number, 3)});
            continue;
        }
        if (key == "ASSIGN") {
            if (line.tokens.size() != 3) throw ParseError("ASSIGN takes 2 indices", line.number, 1);
            const std::size_t seg = parse_index(line.tokens[1], line.number, 2);
            const std::size_t sq = parse_index(line.tokens[2], line.number, 3);
            result.cover.witness[seg] = sq;
            continue;
        }
        throw ParseError("unknown directive '" + key + "'", line.number, 1);
    }
    if (!saw_header) throw ParseError("missing COVER header", 1, 1);
    if (result.cover.squares.size() != declared)
        throw ParseError("cover declares " + std::to_string(declared) + " squares but lists " +
                             std::to_string(result.cover.squares.size()),
                         1, 1);
    return result;
}

std::string serialize_cover(const NamedCover& cover) {
    std::ostringstream out;
    out << "COVER " << cover.algorithm << " " << cover.cover.squares.size() << "\n";
    for (const UnitSquare& t : cover.cover.squares)
        out << "SQUARE " << format_rational(t.x) << " " << format_rational(t.y) << "\n";
    for (const auto& [seg, sq] : cover.cover.witness) out << "ASSIGN " << seg << " " << sq << "\n";
    return out.str();
}

GraphInput parse_graph(const std::string& text) {
    GraphInput graph;
    bool saw_header = false;
    std::size_t declared_edges = 0;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Line& line : tokenize(text)) {
        if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
        const std::string& key = line.tokens[0];
        if (!saw_header) {
            if (key != "VC" || line.tokens.size() != 3)
                throw ParseError("expected 'VC <n> <m>' header", line.number, 1);
            graph.vertex_count = parse_index(line.tokens[1], line.number, 2);
            declared_edges = parse_index(line.tokens[2], line.number, 3);
            saw_header = true;
            continue;
        }
        if (key == "E") {
            if (line.tokens.size() != 3) throw ParseError("E takes 2 vertex ids", line.number, 1);
            std::size_t u = parse_index(line.tokens[1], line.number, 2);
            std::size_t v = parse_index(line.tokens[2], line.number, 3);
            if (u >= graph.vertex_count || v >= graph.vertex_count)
                throw ParseError("vertex id out of range", line.number, 2);
            if (u == v) throw ParseError("self loop", line.number, 2);
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) throw ParseError("duplicate edge", line.number, 1);
            graph.edges.emplace_back(u, v);
            continue;
        }
        throw ParseError("unknown directive '" + key + "'", line.number, 1);
    }
    if (!saw_header) throw ParseError("missing VC header", 1, 1);
    if (graph.edges.size() != declared_edges)
        throw ParseError("graph declares " + std::to_string(declared_edges) + " edges but lists " +
                             std::to_string(graph.edges.size()),
                         1, 1);
    return graph;
}

std::string serialize_graph(const GraphInput& graph) {
    std::ostringstream out;
    out << "VC " << graph.vertex_count << " " << graph.edges.size() << "\n";
    for (const auto& [u, v] : graph.edges) out << "E " << u << " " << v << "\n";
    return out.str();
}

std::string instance_digest(const Instance& instance) {
    const std::string text = serialize_instance(instance);
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << hash;
    return out.str();
}

}  // namespace segcover
